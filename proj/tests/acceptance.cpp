// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "newform_weyl/arith/arith_fn.hpp"
#include "newform_weyl/arith/characters.hpp"
#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/arith/standard.hpp"
#include "newform_weyl/spectral/classify.hpp"
#include "newform_weyl/spectral/coefficients.hpp"
#include "newform_weyl/spectral/dirichlet_series.hpp"
#include "newform_weyl/spectral/invariants.hpp"

using namespace nw;
using arith::ArithFn;
using arith::PrimeFactorization;
using arith::StandardFn;

namespace {

// Pinned bounds and tolerances.
constexpr std::uint64_t kPrimePowerMaxPrime = 50;
constexpr unsigned kPrimePowerMaxExponent = 12;
constexpr std::uint64_t kTransferMax = 10'000;
constexpr std::uint64_t kClassifierMax = 100'000;
constexpr std::uint64_t kCharacterMax = 200;
constexpr std::uint64_t kEulerPrimeBound = 100'000;
constexpr std::uint64_t kDirectSumTerms = 10'000;
constexpr double kEulerTolerance = 1e-6;
constexpr double kDirectSumTolerance = 1e-4;
constexpr std::size_t kRandomInstances = 1000;

struct Outcome {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& where) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = where;
  }
};

int failed_criteria = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  const Outcome outcome = body();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = outcome.failures == 0 && outcome.cases > 0;
  if (!ok) ++failed_criteria;
  std::printf("[%s] %d. %s (%llu cases, %.2f s)", ok ? "PASS" : "FAIL", number, title,
              static_cast<unsigned long long>(outcome.cases), seconds);
  if (!ok) std::printf(" first failure: %s", outcome.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

std::string at(std::uint64_t M) { return "M=" + std::to_string(M); }

Outcome prime_power_closed_forms() {
  Outcome out;
  for (std::uint64_t p : arith::primes_up_to(kPrimePowerMaxPrime)) {
    for (unsigned m = 0; m <= kPrimePowerMaxExponent; ++m) {
      const auto F = PrimeFactorization::prime_power(p, m);
      const std::string where = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
      out.check(spectral::cusp_count(F) == spectral::cusp_count_oracle(F), where + " k");
      out.check(spectral::v(F) == spectral::v_oracle(F), where + " v");
      out.check(spectral::U(F) == spectral::U_oracle(F), where + " U");
      out.check(spectral::L_prime_power(p, m) == spectral::L_oracle(F), where + " L");
      out.check(spectral::U(F) == spectral::c2_new_scaled_oracle(F), where + " -(pi/2)c2new");
      if (const auto M = F.value_u64(); M && *M <= arith::default_config().factor_bound) {
        out.check(spectral::scaled_c2(spectral::newform_coeffs(*M)) == spectral::c2_new_scaled_oracle(F),
                  where + " -(pi/2)c2new from coefficients");
      }
    }
  }
  return out;
}

Outcome transfer_identity() {
  Outcome out;
  std::vector<CoefficientTriple> newform(kTransferMax + 1);
  for (std::uint64_t K = 1; K <= kTransferMax; ++K) newform[K] = spectral::newform_coeffs(K);
  for (std::uint64_t M = 1; M <= kTransferMax; ++M) {
    Rational c1;
    SymbolicCoefficient c2, c3;
    for (std::uint64_t K = 1; K <= M; ++K) {
      if (M % K != 0) continue;
      std::int64_t sigma0 = 0;
      for (std::uint64_t d = 1; d <= M / K; ++d) sigma0 += (M / K) % d == 0;
      c1 += Rational(sigma0) * newform[K].c1;
      c2 += newform[K].c2 * Rational(sigma0);
      c3 += newform[K].c3 * Rational(sigma0);
    }
    const auto full = spectral::full_coeffs(M);
    out.check(full.c1 == c1, at(M) + " c1");
    out.check(full.c2 == c2, at(M) + " c2");
    out.check(full.c3 == c3, at(M) + " c3");
  }
  return out;
}

Outcome classifier_equivalence() {
  Outcome out;
  for (std::uint64_t M = 1; M <= kClassifierMax; ++M) {
    out.check(spectral::classify_cocompact(M, spectral::ClassifyMethod::Theorem).verdict ==
                  spectral::classify_cocompact(M, spectral::ClassifyMethod::Oracle).verdict,
              at(M));
  }
  return out;
}

Outcome corollary_scan() {
  Outcome out;
  for (std::uint64_t M = 1; M <= kClassifierMax; ++M) {
    const auto t = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(M))));
    const bool square = t * t == M;
    const bool two_times_odd = t % 2 == 0 && (t / 2) % 2 == 1;
    const bool predicted_nonzero = square && !two_times_odd;
    const bool nonzero = !spectral::c2_new_scaled_oracle(arith::factorize(M)).is_zero();
    out.check(nonzero == predicted_nonzero, at(M));
  }
  return out;
}

Outcome character_oracle() {
  Outcome out;
  const auto phi = arith::standard_fn(StandardFn::Totient).without_kernel();
  const auto mu = arith::standard_fn(StandardFn::Mobius).without_kernel();
  for (std::uint64_t K = 1; K <= kCharacterMax; ++K) {
    out.check(arith::dirichlet_convolve(phi, mu, K) == Rational(arith::primitive_char_count_oracle(K)),
              "K=" + std::to_string(K));
  }
  return out;
}

Outcome c1_remark() {
  Outcome out;
  const Rational twelfth(Integer(1), Integer(12));
  for (std::uint64_t M = 1; M <= kClassifierMax; ++M) {
    const bool expected = M == 1 || M == 2 || M == 4;
    out.check((spectral::newform_coeffs(M).c1 == twelfth) == expected, at(M));
  }
  return out;
}

Outcome dirichlet_series() {
  Outcome out;
  const double euler = spectral::Lv_partial(3.0, kEulerPrimeBound);
  const double zeta_ratio = spectral::zeta_ratio_partial(3.0, kEulerPrimeBound);
  const double direct = spectral::Lv_direct_sum(3.0, kDirectSumTerms);
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "euler=%.12f zeta-ratio=%.12f", euler, zeta_ratio);
  out.check(std::abs(euler - zeta_ratio) <= kEulerTolerance, buffer);
  std::snprintf(buffer, sizeof buffer, "euler=%.12f direct=%.12f", euler, direct);
  out.check(std::abs(euler - direct) <= kDirectSumTolerance, buffer);
  return out;
}

// Random functions with small rational values; f(1) != 0 so they are invertible.
ArithFn random_fn(std::mt19937_64& rng) {
  const std::uint64_t seed = rng();
  return ArithFn::from_values("r", [seed](std::uint64_t n) {
    std::mt19937_64 local(seed ^ (n * 0x9e3779b97f4a7c15ULL));
    long num = static_cast<long>(local() % 13) - 6;
    if (n == 1 && num == 0) num = 1;
    return Rational(Integer(num), Integer(1 + static_cast<long>(local() % 3)));
  });
}

ArithFn random_multiplicative(std::mt19937_64& rng) {
  const std::uint64_t seed = rng();
  return ArithFn::multiplicative("rm", [seed](std::uint64_t p, unsigned e) {
    std::mt19937_64 local(seed ^ (p * 131 + e));
    return Rational(static_cast<long>(local() % 9) - 4);
  });
}

Outcome group_laws() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  const auto I = arith::standard_fn(StandardFn::IdentityI);
  for (std::size_t i = 0; i < kRandomInstances; ++i) {
    const auto f = random_fn(rng), g = random_fn(rng), h = random_fn(rng);
    const std::uint64_t n = pick(rng);
    const std::string where = "instance " + std::to_string(i) + " n=" + std::to_string(n);
    out.check(arith::dirichlet_convolve(f, g, n) == arith::dirichlet_convolve(g, f, n), where + " commutativity");
    out.check(arith::dirichlet_convolve(arith::convolution(f, g), h, n) ==
                  arith::dirichlet_convolve(f, arith::convolution(g, h), n),
              where + " associativity");
    out.check(arith::dirichlet_convolve(f, I, n) == f(n), where + " identity");
    out.check(arith::dirichlet_convolve(f, f.inverse(), n) == I(n), where + " inverse");
  }
  std::uniform_int_distribution<std::uint64_t> factor(1, 100);
  for (std::size_t i = 0; i < kRandomInstances; ++i) {
    const auto f = random_multiplicative(rng).without_kernel();
    const auto g = random_multiplicative(rng).without_kernel();
    std::uint64_t m = 0, n = 0;
    do {
      m = factor(rng);
      n = factor(rng);
    } while (std::gcd(m, n) != 1);
    const std::string where = "instance " + std::to_string(i) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
    const auto fg = arith::convolution(f, g);
    out.check(fg(m * n) == fg(m) * fg(n), where + " f*g multiplicative");
    const auto f_inv = f.inverse();
    out.check(f_inv(m * n) == f_inv(m) * f_inv(n), where + " f^-1 multiplicative");
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "closed forms = oracles for k, v, U, L, -(pi/2)c2new at p^m, p<=50, m<=12 (exact)",
            prime_power_closed_forms);
  criterion(2, "transfer identity sum sigma0(M/K) c_i^new(K) = c_i(M), i=1,2,3, M<=1e4 (exact)", transfer_identity);
  criterion(3, "theorem-path and oracle-path cocompact verdicts agree, M<=1e5 (exact)", classifier_equivalence);
  criterion(4, "c2new(M) != 0 exactly on {t^2 : t not 2*odd}, M<=1e5 (exact)", corollary_scan);
  criterion(5, "D(K) = (phi*mu)(K) equals primitive-character enumeration, K<=200 (exact)", character_oracle);
  criterion(6, "c1new(M) = 1/12 exactly for M in {1,2,4} and no other M<=1e5", c1_remark);
  criterion(7, "L_v(3): Euler product (p<=1e5) vs same-truncation zeta ratio within 1e-6, vs sum_{n<=1e4} within 1e-4",
            dirichlet_series);
  criterion(8, "group laws and multiplicative closure on >= 1000 random instances each", group_laws);
  std::printf(
      "[INFO] 9. error-term asymptotics need eigenvalue data and are out of scope; criteria 1-8 carry the "
      "coefficient layer\n");
  std::printf("%s: %d of 8 criteria failed\n", failed_criteria == 0 ? "ACCEPTED" : "REJECTED", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
