#include "newform_weyl/spectral/dirichlet_series.hpp"

#include <cmath>
#include <string>

#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/error.hpp"
#include "newform_weyl/spectral/invariants.hpp"

namespace nw::spectral {

namespace {

void check_s(double s) {
  if (!(s >= kMinDirichletS)) {
    throw ConvergenceError("L_v(s) products need s >= " + std::to_string(kMinDirichletS) + ", got " +
                           std::to_string(s));
  }
}

void check_bound(std::uint64_t prime_bound) {
  if (prime_bound > kMaxPrimeBound) throw DomainError("prime bound above " + std::to_string(kMaxPrimeBound));
}

long double local_factor(std::uint64_t p, long double s) {
  const long double x = std::pow(static_cast<long double>(p), -s);
  return (1.0L - x * x) * (1.0L - x) / (1.0L - static_cast<long double>(p) * x);
}

}  // namespace

double Lv_local_factor(std::uint64_t p, double s) {
  check_s(s);
  return static_cast<double>(local_factor(p, s));
}

double Lv_partial(double s, std::uint64_t prime_bound) {
  check_s(s);
  check_bound(prime_bound);
  long double product = 1.0L;
  for (std::uint64_t p : arith::primes_up_to(prime_bound)) product *= local_factor(p, s);
  return static_cast<double>(product);
}

double zeta_partial(double s, std::uint64_t prime_bound) {
  if (!(s > 1.0)) throw ConvergenceError("zeta Euler product needs s > 1");
  check_bound(prime_bound);
  long double product = 1.0L;
  for (std::uint64_t p : arith::primes_up_to(prime_bound)) {
    product /= 1.0L - std::pow(static_cast<long double>(p), -static_cast<long double>(s));
  }
  return static_cast<double>(product);
}

double zeta_ratio_partial(double s, std::uint64_t prime_bound) {
  check_s(s);
  return zeta_partial(s - 1.0, prime_bound) / (zeta_partial(2.0 * s, prime_bound) * zeta_partial(s, prime_bound));
}

double Lv_direct_sum(double s, std::uint64_t max_n) {
  check_s(s);
  long double sum = 0.0L;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    sum += static_cast<long double>(v(n).to_double()) / std::pow(static_cast<long double>(n), s);
  }
  return static_cast<double>(sum);
}

}  // namespace nw::spectral
