#include "newform_weyl/spectral/invariants.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/arith/standard.hpp"
#include "newform_weyl/error.hpp"

namespace nw::spectral {

using arith::ArithFn;
using arith::StandardFn;

namespace {

Integer ipow(std::uint64_t p, unsigned e) { return pow(to_integer(p), e); }

Integer as_integer(const Rational& q) {
  if (!q.is_integer()) throw DomainError("expected an integer value, got " + q.str());
  return q.numerator();
}

const ArithFn& totient() {
  static const ArithFn fn = arith::standard_fn(StandardFn::Totient);
  return fn;
}

const ArithFn& primitive_count() {
  static const ArithFn fn = arith::standard_fn(StandardFn::PrimitiveCharCountD);
  return fn;
}

// sigma_0^{-1} by the inverse recursion on sigma_0, not by its kernel table.
const ArithFn& sigma0_inverse() {
  static const ArithFn fn = arith::standard_fn(StandardFn::Sigma, 0).inverse();
  return fn;
}

Integer cusp_kernel(std::uint64_t p, unsigned m) {
  if (m == 0) return 1;
  const unsigned n = m / 2;
  if (m % 2 == 1) return 2 * ipow(p, n);
  return (to_integer(p) + 1) * ipow(p, n - 1);
}

Integer v_kernel(std::uint64_t p, unsigned e) {
  const Integer P = to_integer(p);
  switch (e) {
    case 0:
      return 1;
    case 1:
      return P - 1;
    case 2:
      return P * P - P - 1;
    default:
      return (P * P * P - P * P - P + 1) * ipow(p, e - 3);
  }
}

Integer U_kernel(std::uint64_t p, unsigned m) {
  if (m == 0) return 1;
  if (m % 2 == 1) return 0;
  if (m == 2) return to_integer(p) - 2;
  const Integer pm1 = to_integer(p) - 1;
  return pm1 * pm1 * ipow(p, m / 2 - 2);
}

// sum_{m|d} sum_{q|(m,d/m)} D(q); equals k_d since u*D = phi.
Rational inner_double_sum(const PrimeFactorization& d) {
  Rational sum;
  for (const auto& m : d.divisors()) {
    const auto g = gcd(m, d.quotient(m));
    for (const auto& q : g.divisors()) sum += primitive_count()(q);
  }
  return sum;
}

class LogAMemo {
 public:
  const LogCombination* find(const PrimeFactorization& M) {
    std::lock_guard lock(mutex_);
    const auto it = values_.find(M);
    return it == values_.end() ? nullptr : &it->second;
  }
  const LogCombination& insert(const PrimeFactorization& M, LogCombination value) {
    std::lock_guard lock(mutex_);
    return values_.try_emplace(M, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<PrimeFactorization, LogCombination, arith::PrimeFactorizationHash> values_;
};

LogAMemo& log_a_memo() {
  static LogAMemo memo;
  return memo;
}

}  // namespace

// --- cusps -------------------------------------------------------------------

Integer cusp_count(const PrimeFactorization& M) {
  Integer out = 1;
  for (const auto& [p, e] : M.factors()) out *= cusp_kernel(p, e);
  return out;
}

Integer cusp_count(std::uint64_t M) { return cusp_count(arith::factorize(M)); }

Integer cusp_count_oracle(const PrimeFactorization& M) {
  Rational sum;
  for (const auto& d : M.divisors()) sum += totient()(gcd(d, M.quotient(d)));
  return as_integer(sum);
}

Integer cusp_count_oracle(std::uint64_t M) { return cusp_count_oracle(arith::factorize(M)); }

const ArithFn& cusp_count_fn() {
  static const ArithFn fn =
      ArithFn::multiplicative("k", [](std::uint64_t p, unsigned e) { return Rational(cusp_kernel(p, e)); });
  return fn;
}

// --- index and area ------------------------------------------------------------

IndexAndArea index_and_area(const PrimeFactorization& M) {
  Rational index(M.value());
  for (const auto& pp : M.factors()) index *= Rational(to_integer(pp.prime) + 1, to_integer(pp.prime));
  return {as_integer(index), index / Rational(3)};
}

IndexAndArea index_and_area(std::uint64_t M) { return index_and_area(arith::factorize(M)); }

// --- log A -------------------------------------------------------------------

LogCombination log_A(const PrimeFactorization& M) {
  if (const auto* hit = log_a_memo().find(M)) return *hit;
  std::map<std::uint64_t, Integer> coefficients;
  for (const auto& m : M.divisors()) {
    const auto g = gcd(m, M.quotient(m));
    for (const auto& q : g.divisors()) {
      const Rational weight = primitive_count()(q);
      if (weight.is_zero()) continue;
      const Integer w = as_integer(weight);
      const auto argument = (q * M).quotient(g);
      for (const auto& [p, e] : argument.factors()) coefficients[p] += w * e;
    }
  }
  LogCombination out;
  for (const auto& [p, c] : coefficients) out.add_term(p, Rational(c));
  return log_a_memo().insert(M, std::move(out));
}

LogCombination log_A(std::uint64_t M) { return log_A(arith::factorize(M)); }

// --- v -------------------------------------------------------------------------

Rational v(const PrimeFactorization& M) { return v_fn()(M); }

Rational v(std::uint64_t M) { return v(arith::factorize(M)); }

Rational v_oracle(const PrimeFactorization& M) {
  Rational sum;
  for (const auto& d : M.divisors()) {
    const Rational s = sigma0_inverse()(M.quotient(d));
    if (!s.is_zero()) sum += Rational(index_and_area(d).index) * s;
  }
  return sum;
}

const ArithFn& v_fn() {
  static const ArithFn fn =
      ArithFn::multiplicative("v", [](std::uint64_t p, unsigned e) { return Rational(v_kernel(p, e)); });
  return fn;
}

// --- U -------------------------------------------------------------------------

Rational U(const PrimeFactorization& M) { return U_fn()(M); }

Rational U(std::uint64_t M) { return U(arith::factorize(M)); }

Rational U_oracle(const PrimeFactorization& M) {
  Rational sum;
  for (const auto& d : M.divisors()) {
    const Rational s = sigma0_inverse()(M.quotient(d));
    if (!s.is_zero()) sum += inner_double_sum(d) * s;
  }
  return sum;
}

const ArithFn& U_fn() {
  static const ArithFn fn =
      ArithFn::multiplicative("U", [](std::uint64_t p, unsigned e) { return Rational(U_kernel(p, e)); });
  return fn;
}

Rational c2_new_scaled_oracle(const PrimeFactorization& M) {
  Rational sum;
  for (const auto& d : M.divisors()) {
    const Rational s = sigma0_inverse()(M.quotient(d));
    if (!s.is_zero()) sum += Rational(cusp_count_oracle(d)) * s;
  }
  return sum;
}

// --- L -------------------------------------------------------------------------

LogCombination L_prime_power(std::uint64_t p, unsigned m) {
  if (m == 0) return {};
  const auto D = [p](unsigned j) { return primitive_count().at_prime_power(p, j); };
  const unsigned n = m / 2;
  Rational coefficient;
  if (m % 2 == 1) {
    for (unsigned j = 0; j <= n; ++j) coefficient += D(j);
    coefficient *= Rational(2);
  } else {
    for (unsigned j = 0; j < n; ++j) coefficient += D(j);
    coefficient += Rational(m) * D(n);
  }
  return LogCombination::single(p, coefficient);
}

LogCombination L(const PrimeFactorization& M) {
  Rational u_acc(1);
  LogCombination l_acc;
  for (const auto& [p, e] : M.factors()) {
    const Rational u_factor = U_fn().at_prime_power(p, e);
    l_acc = u_acc * L_prime_power(p, e) + u_factor * l_acc;
    u_acc *= u_factor;
  }
  return l_acc;
}

LogCombination L(std::uint64_t M) { return L(arith::factorize(M)); }

LogCombination L_oracle(const PrimeFactorization& M) {
  LogCombination sum;
  for (const auto& d : M.divisors()) {
    const Rational s = sigma0_inverse()(M.quotient(d));
    if (!s.is_zero()) sum += log_A(d) * s;
  }
  return sum;
}

}  // namespace nw::spectral
