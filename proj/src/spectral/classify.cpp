#include "newform_weyl/spectral/classify.hpp"

#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/spectral/invariants.hpp"
#include "newform_weyl/spectral/level.hpp"

namespace nw::spectral {

std::string_view to_string(CocompactReason reason) {
  switch (reason) {
    case CocompactReason::MoreThanOnePrimeInSquarefreePart:
      return "more-than-one-prime-in-n";
    case CocompactReason::SquarefreePartWithFourExactly:
      return "n>1-and-4||M-rule";
    case CocompactReason::NotCocompact:
      return "not-cocompact";
  }
  return "unknown";
}

std::string_view to_string(ClassifyMethod method) {
  return method == ClassifyMethod::Theorem ? "theorem" : "oracle";
}

namespace {

CocompactReason positive_reason(const Level& level) {
  const auto primes_in_n = arith::factorize(level.squarefree_part).distinct_primes();
  return primes_in_n > 1 ? CocompactReason::MoreThanOnePrimeInSquarefreePart
                         : CocompactReason::SquarefreePartWithFourExactly;
}

CocompactClassification by_theorem(const Level& level) {
  const std::uint64_t n = level.squarefree_part;
  const std::uint64_t M = level.value;
  const bool more_than_one_prime = arith::factorize(n).distinct_primes() > 1;
  const bool four_rule = n > 1 && M % 4 == 0 && (M / 4) % 2 == 1;

  CocompactClassification out;
  out.c2_is_zero = !c2_nonzero_criterion(M);
  out.L_is_zero = M == 1 || u_vanishing_factor_count(M) >= 2;
  if (more_than_one_prime) {
    out.verdict = true;
    out.reason = CocompactReason::MoreThanOnePrimeInSquarefreePart;
  } else if (four_rule) {
    out.verdict = true;
    out.reason = CocompactReason::SquarefreePartWithFourExactly;
  }
  return out;
}

CocompactClassification by_oracle(const Level& level) {
  CocompactClassification out;
  out.c2_is_zero = c2_new_scaled_oracle(level.factorization).is_zero();
  out.L_is_zero = L_oracle(level.factorization).is_zero();
  out.verdict = out.c2_is_zero && out.L_is_zero;
  out.reason = out.verdict ? positive_reason(level) : CocompactReason::NotCocompact;
  return out;
}

}  // namespace

CocompactClassification classify_cocompact(std::uint64_t M, ClassifyMethod method) {
  const Level level = Level::of(M);
  return method == ClassifyMethod::Theorem ? by_theorem(level) : by_oracle(level);
}

bool c2_nonzero_criterion(std::uint64_t M) {
  const Level level = Level::of(M);
  if (level.squarefree_part != 1) return false;
  const std::uint64_t t = level.square_root_part;
  const bool two_times_odd = t % 2 == 0 && (t / 2) % 2 == 1;
  return !two_times_odd;
}

unsigned u_vanishing_factor_count(std::uint64_t M) {
  unsigned count = 0;
  const auto factorization = arith::factorize(M);
  for (const auto& [p, e] : factorization.factors()) {
    if (e % 2 == 1 || (p == 2 && e == 2)) ++count;
  }
  return count;
}

}  // namespace nw::spectral
