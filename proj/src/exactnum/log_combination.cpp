#include "newform_weyl/exactnum/log_combination.hpp"

#include "newform_weyl/exactnum/symbolic.hpp"

namespace nw {

LogCombination LogCombination::single(Prime p, const Rational& coefficient) {
  LogCombination out;
  out.add_term(p, coefficient);
  return out;
}

void LogCombination::add_term(Prime p, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational LogCombination::coefficient(Prime p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational() : it->second;
}

LogCombination& LogCombination::operator+=(const LogCombination& rhs) {
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

LogCombination& LogCombination::operator-=(const LogCombination& rhs) {
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

LogCombination& LogCombination::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= factor;
  return *this;
}

std::string LogCombination::str() const {
  return SymbolicCoefficient(false, Rational(), Rational(), *this).str();
}

}  // namespace nw
