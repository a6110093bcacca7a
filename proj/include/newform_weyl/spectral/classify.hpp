#pragma once

#include <cstdint>
#include <string_view>

namespace nw::spectral {

enum class CocompactReason {
  MoreThanOnePrimeInSquarefreePart,  // "more-than-one-prime-in-n"
  SquarefreePartWithFourExactly,     // "n>1-and-4||M-rule"
  NotCocompact,                      // "not-cocompact"
};

std::string_view to_string(CocompactReason reason);

enum class ClassifyMethod { Theorem, Oracle };

std::string_view to_string(ClassifyMethod method);

/// Whether the newform counting function at level M has the cocompact shape
/// c1*lambda + O(sqrt(lambda)/log sqrt(lambda)), i.e. c2^new = c3^new = 0.
struct CocompactClassification {
  bool verdict = false;
  CocompactReason reason = CocompactReason::NotCocompact;
  bool c2_is_zero = false;
  bool L_is_zero = false;

  friend bool operator==(const CocompactClassification&, const CocompactClassification&) = default;
};

/// Theorem: write M = t^2 n with n squarefree; cocompact iff n has more than
/// one prime factor, or n > 1 and 4 || M. Witnesses come from the same
/// structural rules (U vanishes on p^odd and on 2^2).
/// Oracle: c2^new = 0 and L = 0 decided exactly from the divisor sums
/// (k * sigma_0^{-1})(M) and (log A * sigma_0^{-1})(M).
CocompactClassification classify_cocompact(std::uint64_t M, ClassifyMethod method);

/// c2^new(M) != 0 iff M = t^2 with t not of the form 2t', t' odd.
bool c2_nonzero_criterion(std::uint64_t M);

/// Number of prime-power factors p^e || M with U(p^e) = 0.
unsigned u_vanishing_factor_count(std::uint64_t M);

}  // namespace nw::spectral
