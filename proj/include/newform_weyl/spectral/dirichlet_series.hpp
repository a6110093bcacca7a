#pragma once

#include <cstdint>

// Numerical checks of L_v(s) = sum v(n)/n^s = zeta(s-1) / (zeta(2s) zeta(s)).
// Products run over primes p <= prime_bound (at most 1e6) and need s >= 2.5;
// violations throw DomainError / ConvergenceError.

namespace nw::spectral {

inline constexpr double kMinDirichletS = 2.5;
inline constexpr std::uint64_t kMaxPrimeBound = 1'000'000;

/// sum_{n>=0} v(p^n) x^n = (1 - x^2)(1 - x)/(1 - p x) at x = p^{-s}.
double Lv_local_factor(std::uint64_t p, double s);

/// prod_{p <= prime_bound} Lv_local_factor(p, s).
double Lv_partial(double s, std::uint64_t prime_bound);

/// prod_{p <= prime_bound} (1 - p^{-s})^{-1}; requires s > 1.
double zeta_partial(double s, std::uint64_t prime_bound);

/// zeta(s-1) / (zeta(2s) zeta(s)) with each zeta truncated at the same bound.
double zeta_ratio_partial(double s, std::uint64_t prime_bound);

/// sum_{n <= max_n} v(n) / n^s.
double Lv_direct_sum(double s, std::uint64_t max_n);

}  // namespace nw::spectral
