#include "newform_weyl/exactnum/symbolic.hpp"

#include <utility>

#include "newform_weyl/error.hpp"

namespace nw {

SymbolicCoefficient::SymbolicCoefficient(bool over_pi, Rational constant, Rational log_pi,
                                         LogCombination log_primes)
    : over_pi_(over_pi),
      constant_(std::move(constant)),
      log_pi_(std::move(log_pi)),
      log_primes_(std::move(log_primes)) {
  canonicalize();
}

void SymbolicCoefficient::canonicalize() {
  if (is_zero()) over_pi_ = false;
}

SymbolicCoefficient& SymbolicCoefficient::operator+=(const SymbolicCoefficient& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  if (over_pi_ != rhs.over_pi_) throw DomainError("cannot add coefficients with different 1/pi conventions");
  constant_ += rhs.constant_;
  log_pi_ += rhs.log_pi_;
  log_primes_ += rhs.log_primes_;
  canonicalize();
  return *this;
}

SymbolicCoefficient& SymbolicCoefficient::operator-=(const SymbolicCoefficient& rhs) { return *this += -rhs; }

SymbolicCoefficient& SymbolicCoefficient::operator*=(const Rational& factor) {
  constant_ *= factor;
  log_pi_ *= factor;
  log_primes_ *= factor;
  canonicalize();
  return *this;
}

SymbolicCoefficient SymbolicCoefficient::operator-() const {
  SymbolicCoefficient out = *this;
  out *= Rational(-1);
  return out;
}

namespace {

// Appends "c*symbol" with sign handling; an empty symbol means a bare constant.
void append_term(std::string& out, const Rational& c, const std::string& symbol) {
  if (c.is_zero()) return;
  const bool negative = c.sign() < 0;
  const Rational magnitude = negative ? -c : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (symbol.empty()) {
    out += magnitude.str();
    return;
  }
  if (magnitude != Rational(1)) {
    out += magnitude.is_integer() ? magnitude.str() : "(" + magnitude.str() + ")";
    out += "*";
  }
  out += symbol;
}

}  // namespace

std::string SymbolicCoefficient::str() const {
  if (is_zero()) return "0";
  std::string body;
  append_term(body, constant_, "");
  append_term(body, log_pi_, "log(pi)");
  for (const auto& [p, c] : log_primes_.terms()) append_term(body, c, "log(" + std::to_string(p) + ")");
  if (!over_pi_) return body;
  return "(1/pi)*(" + body + ")";
}

SymbolicCoefficient sym_add(const SymbolicCoefficient& a, const SymbolicCoefficient& b) { return a + b; }

SymbolicCoefficient sym_scale(const SymbolicCoefficient& a, const Rational& q) { return a * q; }

Rational unwrap_over_pi(const SymbolicCoefficient& x, const Rational& factor) {
  if (x.is_zero()) return Rational();
  if (!x.over_pi() || !x.log_pi().is_zero() || !x.log_primes().is_zero()) {
    throw DomainError("not a rational multiple of 1/pi: " + x.str());
  }
  return factor * x.constant();
}

}  // namespace nw
