#pragma once

#include <cstdint>

#include "newform_weyl/arith/arith_fn.hpp"
#include "newform_weyl/arith/factorization.hpp"
#include "newform_weyl/exactnum/log_combination.hpp"
#include "newform_weyl/exactnum/rational.hpp"

// Arithmetic invariants of Gamma_0(M) entering the Weyl-law coefficients,
// each with a closed form and an independent divisor-sum oracle. Every
// function has a PrimeFactorization overload so prime powers beyond 64 bits
// (p^12 with p < 50) can be evaluated.

namespace nw::spectral {

using arith::PrimeFactorization;

// --- cusps -----------------------------------------------------------------

/// k_M from the multiplicative closed form: k_1 = 1, k_p = 2,
/// k_{p^{2n+1}} = 2p^n, k_{p^{2n}} = (p+1)p^{n-1} for n >= 1.
Integer cusp_count(const PrimeFactorization& M);
Integer cusp_count(std::uint64_t M);
/// k_M = sum_{d|M} phi(gcd(d, M/d)).
Integer cusp_count_oracle(const PrimeFactorization& M);
Integer cusp_count_oracle(std::uint64_t M);
const arith::ArithFn& cusp_count_fn();

// --- index and area --------------------------------------------------------

struct IndexAndArea {
  Integer index;          // [SL2(Z) : Gamma_0(M)] = M prod_{p|M} (1 + 1/p)
  Rational area_over_pi;  // |F_M| / pi = index / 3

  friend bool operator==(const IndexAndArea&, const IndexAndArea&) = default;
};

IndexAndArea index_and_area(const PrimeFactorization& M);
IndexAndArea index_and_area(std::uint64_t M);

// --- scattering constant ---------------------------------------------------

/// log A(M) = sum_{m|M} sum_{q|(m,M/m)} D(q) log(qM/(m,M/m)), as prime logs.
/// Memoized by level.
LogCombination log_A(const PrimeFactorization& M);
LogCombination log_A(std::uint64_t M);

// --- c1: v = 12 c1^new -------------------------------------------------------

/// v(p) = p-1, v(p^2) = p^2-p-1, v(p^n) = (p^3-p^2-p+1)p^{n-3} for n >= 3.
Rational v(const PrimeFactorization& M);
Rational v(std::uint64_t M);
/// (psi * sigma_0^{-1})(M) with psi from the index formula.
Rational v_oracle(const PrimeFactorization& M);
const arith::ArithFn& v_fn();

// --- c2: U = -(pi/2) c2^new ----------------------------------------------------

/// U(p^{odd}) = 0, U(p^2) = p-2, U(p^{2n}) = (p-1)^2 p^{n-2} for n >= 2.
Rational U(const PrimeFactorization& M);
Rational U(std::uint64_t M);
/// sum_{d|M} sum_{m|d} sum_{q|(m,d/m)} D(q) sigma_0^{-1}(M/d).
Rational U_oracle(const PrimeFactorization& M);
const arith::ArithFn& U_fn();
/// (k * sigma_0^{-1})(M) with k from the divisor-sum oracle.
Rational c2_new_scaled_oracle(const PrimeFactorization& M);

// --- c3: L = log A * sigma_0^{-1} ----------------------------------------------

/// L(p^{2n+1}) = 2 (sum_{j=0..n} D(p^j)) log p,
/// L(p^{2n}) = (sum_{j=0..n-1} D(p^j) + 2n D(p^n)) log p.
LogCombination L_prime_power(std::uint64_t p, unsigned m);
/// Folds the coprime splitting law L(M1 M2) = U(M1)L(M2) + U(M2)L(M1) over
/// the prime-power factors of M.
LogCombination L(const PrimeFactorization& M);
LogCombination L(std::uint64_t M);
/// sum_{d|M} log A(d) sigma_0^{-1}(M/d).
LogCombination L_oracle(const PrimeFactorization& M);

}  // namespace nw::spectral
