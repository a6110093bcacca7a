#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "newform_weyl/arith/arith_fn.hpp"
#include "newform_weyl/arith/characters.hpp"
#include "newform_weyl/arith/factorization.hpp"
#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/arith/standard.hpp"
#include "newform_weyl/error.hpp"
#include "oracles.hpp"

using namespace nw;
using namespace nw::arith;

namespace {

ArithFn table_fn(std::uint64_t seed) {
  return ArithFn::from_values("t", [seed](std::uint64_t n) {
    std::mt19937_64 rng(seed * 1'000'003 + n);
    const long v = static_cast<long>(rng() % 11) - 5;
    return Rational(n == 1 && v == 0 ? 1 : v);
  });
}

Rational naive_convolve(const ArithFn& f, const ArithFn& g, std::uint64_t n) {
  Rational sum;
  for (auto d : oracle::divisors(n)) sum += f(d) * g(n / d);
  return sum;
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).is_one());
  CHECK(factorize(12) == PrimeFactorization({{2, 2}, {3, 1}}));
  CHECK(factorize(9973) == PrimeFactorization({{9973, 1}}));
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(default_config().factor_bound + 1), DomainError);
}

TEST_CASE("factorize agrees with trial division") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto F = factorize(n);
    CHECK(F.value_u64() == n);
    for (const auto& [p, e] : F.factors()) CHECK(oracle::is_prime(p));
    CHECK(F.divisor_count() == oracle::divisors(n).size());
  }
  // Beyond the sieve: trial-division path.
  for (std::uint64_t n : {1'000'003ULL, 99'999'989ULL, 2ULL * 49'999'991ULL, 97ULL * 97 * 10'007ULL}) {
    CHECK(factorize(n).value_u64() == n);
  }
}

TEST_CASE("a small sieve falls back to trial division") {
  const Sieve small(100);
  for (std::uint64_t n : {1ULL, 97ULL, 101ULL, 10'403ULL, 1'000'000ULL, 999'983ULL}) {
    CHECK(small.factorize(n) == factorize(n));
  }
}

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime(18'446'744'073'709'551'557ULL));
  CHECK_FALSE(is_prime(18'446'744'073'709'551'615ULL));
  CHECK_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("canonical factorization is validated") {
  CHECK_THROWS_AS(PrimeFactorization({{4, 1}}), DomainError);
  CHECK_THROWS_AS(PrimeFactorization({{3, 1}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(PrimeFactorization({{2, 0}}), DomainError);
}

TEST_CASE("divisors in mixed-radix order") {
  const auto ds = factorize(12).divisors();
  std::vector<std::uint64_t> values;
  for (const auto& d : ds) values.push_back(*d.value_u64());
  CHECK(values.front() == 1);
  CHECK(values.back() == 12);
  std::sort(values.begin(), values.end());
  CHECK(values == oracle::divisors(12));
}

TEST_CASE("factorizations beyond 64 bits") {
  const auto big = PrimeFactorization::prime_power(47, 12);
  CHECK_FALSE(big.value_u64().has_value());
  CHECK(big.value() == pow(to_integer(47), 12));
  CHECK(big.divisor_count() == 13);
  CHECK(big.quotient(PrimeFactorization::prime_power(47, 5)) == PrimeFactorization::prime_power(47, 7));
  CHECK_THROWS_AS(big.quotient(factorize(2)), DomainError);
}

TEST_CASE("standard functions against brute force") {
  const auto mu = standard_fn(StandardFn::Mobius);
  const auto phi = standard_fn(StandardFn::Totient);
  const auto s0 = standard_fn(StandardFn::Sigma, 0);
  const auto s1 = standard_fn(StandardFn::Sigma, 1);
  const auto psi = standard_fn(StandardFn::DedekindPsi);
  const auto I = standard_fn(StandardFn::IdentityI);
  const auto u = standard_fn(StandardFn::UnitU);
  for (std::uint64_t n = 1; n <= 600; ++n) {
    CHECK(mu(n) == Rational(oracle::mobius(n)));
    CHECK(phi(n) == Rational(oracle::totient(n)));
    CHECK(s0(n) == Rational(oracle::sigma0(n)));
    CHECK(s1(n) == Rational(oracle::sigma1(n)));
    CHECK(I(n) == Rational(n == 1 ? 1 : 0));
    CHECK(u(n) == Rational(1));
  }
  for (std::uint64_t M = 1; M <= 60; ++M) CHECK(psi(M) == Rational(oracle::index(M)));
  const auto sm1 = standard_fn(StandardFn::Sigma, -1);
  CHECK(sm1(6) == Rational(Integer(12), Integer(6)));
  CHECK_THROWS_AS(standard_fn(StandardFn::Sigma, 65), DomainError);
}

TEST_CASE("standard function examples") {
  CHECK(standard_fn("mobius")(30) == Rational(-1));
  CHECK(standard_fn("primitive_char_count_D")(4) == Rational(1));
  CHECK(standard_fn("sigma0_inverse")(12) == Rational(-2));
  CHECK_THROWS_AS(standard_fn("mangoldt_log_form"), DomainError);
  CHECK_THROWS_AS(standard_fn("nope"), DomainError);
}

TEST_CASE("convolution examples") {
  const auto s0 = standard_fn(StandardFn::Sigma, 0);
  const auto I = standard_fn(StandardFn::IdentityI);
  const auto u = standard_fn(StandardFn::UnitU);
  const auto phi = standard_fn(StandardFn::Totient);
  CHECK(dirichlet_convolve(s0, I, 12) == Rational(6));
  CHECK(dirichlet_convolve(u, u, 12) == Rational(6));
  CHECK(dirichlet_convolve(phi, u, 9) == Rational(9));
}

TEST_CASE("inverse examples") {
  const auto u = standard_fn(StandardFn::UnitU);
  const auto s0 = standard_fn(StandardFn::Sigma, 0);
  const auto I = standard_fn(StandardFn::IdentityI);
  CHECK(dirichlet_inverse(u, 12) == Rational(0));
  CHECK(dirichlet_inverse(u.without_kernel(), 30) == Rational(-1));
  for (std::uint64_t p : {2, 3, 101}) CHECK(dirichlet_inverse(s0, p) == Rational(-2));
  CHECK(dirichlet_inverse(I, 5) == Rational(0));
  CHECK(dirichlet_inverse(I, 1) == Rational(1));
}

TEST_CASE("non-invertible function") {
  const auto f = ArithFn::from_values("zero_at_one", [](std::uint64_t n) { return Rational(n == 1 ? 0 : 1); });
  CHECK_THROWS_AS(dirichlet_inverse(f, 6), NotInvertibleError);
  CHECK_THROWS_AS(f.inverse(), NotInvertibleError);
}

TEST_CASE("convolution matches naive divisor sums") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = table_fn(seed);
    const auto g = table_fn(seed + 100);
    for (std::uint64_t n = 1; n <= 120; ++n) {
      CHECK(dirichlet_convolve(f, g, n) == naive_convolve(f, g, n));
      CHECK(naive_convolve(f, f.inverse(), n) == Rational(n == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("multiplicative flag is declared, not inferred") {
  const auto f = ArithFn::from_values("one", [](std::uint64_t) { return Rational(1); });
  CHECK_FALSE(f.is_multiplicative());
  CHECK(standard_fn(StandardFn::UnitU).is_multiplicative());
  CHECK_FALSE(standard_fn(StandardFn::UnitU).without_kernel().is_multiplicative());
  CHECK(convolution(standard_fn(StandardFn::UnitU), standard_fn(StandardFn::Mobius)).is_multiplicative());
  CHECK(standard_fn(StandardFn::Totient).inverse().is_multiplicative());
}

TEST_CASE("inverse is memoized per function identity") {
  const auto phi = standard_fn(StandardFn::Totient);
  const auto copy = phi;
  CHECK(&phi.inverse() == &copy.inverse());
  CHECK(standard_fn(StandardFn::Totient).identity() == phi.identity());
}

TEST_CASE("sigma0 inverse three ways") {
  const auto table = standard_fn(StandardFn::Sigma0Inverse);
  const auto recursion = standard_fn(StandardFn::Sigma, 0).without_kernel().inverse();
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::int64_t mm = 0;
    for (auto d : oracle::divisors(n)) mm += oracle::mobius(d) * oracle::mobius(n / d);
    CHECK(table(n) == Rational(mm));
    CHECK(recursion(n) == Rational(mm));
  }
}

TEST_CASE("Mangoldt") {
  CHECK(mangoldt(8) == MangoldtValue{true, 2});
  CHECK(mangoldt(12) == MangoldtValue{false, 0});
  CHECK(mangoldt(1) == MangoldtValue{false, 0});
  for (std::uint64_t n = 1; n <= 500; ++n) {
    LogCombination sum;
    for (auto d : oracle::divisors(n)) sum += mangoldt_log(d);
    CHECK(sum == log_of(n));
  }
}

TEST_CASE("primitive characters") {
  const auto D = standard_fn(StandardFn::PrimitiveCharCountD);
  CHECK(primitive_char_count_oracle(1) == 1);
  CHECK(primitive_char_count_oracle(2) == 0);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) CHECK(primitive_char_count_oracle(p) == p - 2);
  for (std::uint64_t K = 1; K <= 120; ++K) {
    const auto conductors = character_conductors(K);
    CHECK(conductors.size() == static_cast<std::size_t>(oracle::totient(K)));
    for (auto c : conductors) CHECK(K % c == 0);
    CHECK(Rational(primitive_char_count_oracle(K)) == D(K));
  }
  CHECK_THROWS_AS(character_conductors(0), DomainError);
  CHECK_THROWS_AS(character_conductors(kCharacterOracleBound + 1), DomainError);
}

TEST_CASE("sieve bound from the environment") {
  setenv("NEWFORM_WEYL_SIEVE_BOUND", "5000", 1);
  CHECK(FactorizationConfig::from_environment().sieve_bound == 5000);
  setenv("NEWFORM_WEYL_SIEVE_BOUND", "garbage", 1);
  CHECK(FactorizationConfig::from_environment().sieve_bound == FactorizationConfig{}.sieve_bound);
  unsetenv("NEWFORM_WEYL_SIEVE_BOUND");
  CHECK(FactorizationConfig::from_environment().sieve_bound == FactorizationConfig{}.sieve_bound);
}

TEST_CASE("primes_up_to") {
  const auto ps = primes_up_to(50);
  CHECK(ps.size() == 15);
  CHECK(ps.back() == 47);
}
