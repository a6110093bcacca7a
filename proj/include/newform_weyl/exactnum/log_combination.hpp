#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "newform_weyl/exactnum/rational.hpp"

namespace nw {

/// Formal sum  sum_p m_p * log p  over distinct primes p with rational m_p.
///
/// Keys must be primes; callers build instances from factorizations (see
/// arith::log_of). Zero coefficients are never stored, so by unique
/// factorization the value is zero exactly when the map is empty.
class LogCombination {
 public:
  using Prime = std::uint64_t;

  LogCombination() = default;

  static LogCombination single(Prime p, const Rational& coefficient);

  void add_term(Prime p, const Rational& coefficient);
  Rational coefficient(Prime p) const;
  const std::map<Prime, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LogCombination& operator+=(const LogCombination& rhs);
  LogCombination& operator-=(const LogCombination& rhs);
  LogCombination& operator*=(const Rational& factor);

  friend LogCombination operator+(LogCombination a, const LogCombination& b) { return a += b; }
  friend LogCombination operator-(LogCombination a, const LogCombination& b) { return a -= b; }
  friend LogCombination operator*(LogCombination a, const Rational& q) { return a *= q; }
  friend LogCombination operator*(const Rational& q, LogCombination a) { return a *= q; }
  friend bool operator==(const LogCombination&, const LogCombination&) = default;

  /// e.g. "2*log(2) - 3*log(3)"; "0" when empty.
  std::string str() const;

 private:
  std::map<Prime, Rational> terms_;
};

}  // namespace nw
