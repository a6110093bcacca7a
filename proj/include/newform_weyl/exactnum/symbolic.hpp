#pragma once

#include <string>

#include "newform_weyl/exactnum/log_combination.hpp"
#include "newform_weyl/exactnum/rational.hpp"

namespace nw {

/// Exact value  [1/pi] * (a + b*log(pi) + sum_p m_p*log(p)).
///
/// The 1/pi factor is a flag. log 2 lives in the log-prime part like every
/// other prime. Zero is canonical: all parts empty and the flag cleared, so
/// structural equality is value equality.
class SymbolicCoefficient {
 public:
  SymbolicCoefficient() = default;
  SymbolicCoefficient(bool over_pi, Rational constant, Rational log_pi, LogCombination log_primes);

  static SymbolicCoefficient rational(const Rational& q) { return {false, q, Rational(), {}}; }
  static SymbolicCoefficient rational_over_pi(const Rational& q) { return {true, q, Rational(), {}}; }

  bool over_pi() const { return over_pi_; }
  const Rational& constant() const { return constant_; }
  const Rational& log_pi() const { return log_pi_; }
  const LogCombination& log_primes() const { return log_primes_; }

  bool is_zero() const { return constant_.is_zero() && log_pi_.is_zero() && log_primes_.is_zero(); }

  /// Throws DomainError when both operands are non-zero and disagree on the
  /// 1/pi flag. A zero operand adopts the other's convention.
  SymbolicCoefficient& operator+=(const SymbolicCoefficient& rhs);
  SymbolicCoefficient& operator-=(const SymbolicCoefficient& rhs);
  SymbolicCoefficient& operator*=(const Rational& factor);
  SymbolicCoefficient operator-() const;

  friend SymbolicCoefficient operator+(SymbolicCoefficient a, const SymbolicCoefficient& b) { return a += b; }
  friend SymbolicCoefficient operator-(SymbolicCoefficient a, const SymbolicCoefficient& b) { return a -= b; }
  friend SymbolicCoefficient operator*(SymbolicCoefficient a, const Rational& q) { return a *= q; }
  friend SymbolicCoefficient operator*(const Rational& q, SymbolicCoefficient a) { return a *= q; }
  friend bool operator==(const SymbolicCoefficient&, const SymbolicCoefficient&) = default;

  /// Human-readable form, e.g. "(1/pi)*(2 + log(pi) - log(2))".
  std::string str() const;

 private:
  void canonicalize();

  bool over_pi_ = false;
  Rational constant_;
  Rational log_pi_;
  LogCombination log_primes_;
};

SymbolicCoefficient sym_add(const SymbolicCoefficient& a, const SymbolicCoefficient& b);
SymbolicCoefficient sym_scale(const SymbolicCoefficient& a, const Rational& q);

/// For x = q/pi (no log parts) returns factor * pi * x = factor * q, e.g.
/// unwrap_over_pi(c2, -1/2) gives -(pi/2)*c2. Zero unwraps to zero.
/// Throws DomainError when x is not a rational multiple of 1/pi.
Rational unwrap_over_pi(const SymbolicCoefficient& x, const Rational& factor);

}  // namespace nw
