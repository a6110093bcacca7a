#include "newform_weyl/arith/standard.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/error.hpp"

namespace nw::arith {

namespace {

Integer ipow(std::uint64_t p, unsigned e) { return pow(to_integer(p), e); }

ArithFn make(StandardFn which, int alpha) {
  switch (which) {
    case StandardFn::IdentityI:
      return ArithFn::multiplicative("I", [](std::uint64_t, unsigned) { return Rational(0); });
    case StandardFn::UnitU:
      return ArithFn::multiplicative("u", [](std::uint64_t, unsigned) { return Rational(1); });
    case StandardFn::Mobius:
      return ArithFn::multiplicative("mu", [](std::uint64_t, unsigned e) { return Rational(e == 1 ? -1 : 0); });
    case StandardFn::Totient:
      return ArithFn::multiplicative(
          "phi", [](std::uint64_t p, unsigned e) { return Rational(ipow(p, e) - ipow(p, e - 1)); });
    case StandardFn::Sigma:
      return ArithFn::multiplicative("sigma_" + std::to_string(alpha), [alpha](std::uint64_t p, unsigned e) {
        // sum_{i=0..e} p^{i*alpha}
        const Rational base = alpha >= 0 ? Rational(ipow(p, static_cast<unsigned>(alpha)))
                                         : Rational(Integer(1), ipow(p, static_cast<unsigned>(-alpha)));
        Rational term(1);
        Rational sum(1);
        for (unsigned i = 1; i <= e; ++i) {
          term *= base;
          sum += term;
        }
        return sum;
      });
    case StandardFn::Sigma0Inverse:
      return ArithFn::multiplicative("sigma_0^-1", [](std::uint64_t, unsigned e) {
        switch (e) {
          case 1:
            return Rational(-2);
          case 2:
            return Rational(1);
          default:
            return Rational(0);
        }
      });
    case StandardFn::DedekindPsi:
      return ArithFn::multiplicative(
          "psi", [](std::uint64_t p, unsigned e) { return Rational(ipow(p, e) + ipow(p, e - 1)); });
    case StandardFn::PrimitiveCharCountD:
      return ArithFn::multiplicative("D", [](std::uint64_t p, unsigned e) {
        if (e == 1) return Rational(to_integer(p) - 2);
        const Integer pm1 = to_integer(p) - 1;
        return Rational(ipow(p, e - 2) * pm1 * pm1);
      });
    case StandardFn::MangoldtLogForm:
      throw DomainError("Mangoldt's function is log-valued; use mangoldt() or mangoldt_log()");
  }
  throw DomainError("unknown standard function");
}

}  // namespace

ArithFn standard_fn(StandardFn which, int alpha) {
  if (which == StandardFn::MangoldtLogForm) return make(which, alpha);
  if (which == StandardFn::Sigma && std::abs(alpha) > 64) throw DomainError("sigma: |alpha| must be <= 64");
  if (which != StandardFn::Sigma) alpha = 0;
  static std::mutex mutex;
  static std::map<std::pair<StandardFn, int>, ArithFn> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({which, alpha});
  if (it == cache.end()) it = cache.emplace(std::pair{which, alpha}, make(which, alpha)).first;
  return it->second;
}

ArithFn standard_fn(std::string_view name, int alpha) {
  static const std::map<std::string_view, StandardFn> names = {
      {"identity_I", StandardFn::IdentityI},
      {"unit_u", StandardFn::UnitU},
      {"mobius", StandardFn::Mobius},
      {"totient", StandardFn::Totient},
      {"sigma", StandardFn::Sigma},
      {"sigma0_inverse", StandardFn::Sigma0Inverse},
      {"mangoldt_log_form", StandardFn::MangoldtLogForm},
      {"dedekind_psi", StandardFn::DedekindPsi},
      {"primitive_char_count_D", StandardFn::PrimitiveCharCountD},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown arithmetical function '" + std::string(name) + "'");
  return standard_fn(it->second, alpha);
}

MangoldtValue mangoldt(const PrimeFactorization& n) {
  if (n.distinct_primes() != 1) return {false, 0};
  return {true, n.factors().front().prime};
}

MangoldtValue mangoldt(std::uint64_t n) { return mangoldt(factorize(n)); }

LogCombination mangoldt_log(std::uint64_t n) {
  const auto value = mangoldt(n);
  return value.is_prime_power ? LogCombination::single(value.prime, Rational(1)) : LogCombination{};
}

LogCombination log_of(const PrimeFactorization& n) {
  LogCombination out;
  for (const auto& [p, e] : n.factors()) out.add_term(p, Rational(e));
  return out;
}

LogCombination log_of(std::uint64_t n) { return log_of(factorize(n)); }

}  // namespace nw::arith
