#include "newform_weyl/spectral/coefficients.hpp"

#include "newform_weyl/arith/arith_fn.hpp"
#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/arith/standard.hpp"
#include "newform_weyl/spectral/invariants.hpp"

namespace nw::spectral {

namespace {

CoefficientTriple assemble(std::uint64_t M, CoefficientKind kind, const Rational& twelve_c1,
                           const Rational& cusp_weight, const LogCombination& log_part) {
  CoefficientTriple out;
  out.level = M;
  out.kind = kind;
  out.c1 = twelve_c1 / Rational(12);
  out.c2 = SymbolicCoefficient::rational_over_pi(Rational(-2) * cusp_weight);
  out.c3 = cusp_constant() * cusp_weight - SymbolicCoefficient(true, Rational(), Rational(), log_part);
  return out;
}

}  // namespace

SymbolicCoefficient cusp_constant() {
  return SymbolicCoefficient(true, Rational(2), Rational(1), LogCombination::single(2, Rational(-1)));
}

CoefficientTriple full_coeffs(std::uint64_t M) {
  const auto n = arith::factorize(M);
  return assemble(M, CoefficientKind::Full, Rational(index_and_area(n).index), Rational(cusp_count(n)), log_A(n));
}

CoefficientTriple newform_coeffs(std::uint64_t M) {
  const auto n = arith::factorize(M);
  return assemble(M, CoefficientKind::Newform, v(n), U(n), L(n));
}

CoefficientTriple newform_coeffs_by_convolution(std::uint64_t M) {
  static const arith::ArithFn sigma0_inverse = arith::standard_fn(arith::StandardFn::Sigma, 0).inverse();
  const auto n = arith::factorize(M);
  CoefficientTriple out;
  out.level = M;
  out.kind = CoefficientKind::Newform;
  for (const auto& d : n.divisors()) {
    const Rational s = sigma0_inverse(n.quotient(d));
    if (s.is_zero()) continue;
    const auto full = full_coeffs(*d.value_u64());
    out.c1 += full.c1 * s;
    out.c2 += full.c2 * s;
    out.c3 += full.c3 * s;
  }
  return out;
}

Rational scaled_c2(const CoefficientTriple& coeffs) { return unwrap_over_pi(coeffs.c2, Rational(-1, 2)); }

}  // namespace nw::spectral
