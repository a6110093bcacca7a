#include "newform_weyl/exactnum/rational.hpp"

#include <ostream>

#include "newform_weyl/error.hpp"

namespace nw {

Integer pow(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer to_integer(std::uint64_t value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Integer(static_cast<unsigned long>(value));
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return DomainError("malformed rational: '" + std::string(text) + "'"); };
  const auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw bad();
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') throw bad();
    }
    std::string digits(part);
    if (digits[0] == '+') digits.erase(0, 1);
    return Integer(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const Integer num = parse_int(text.substr(0, slash), true);
  const Integer den = parse_int(text.substr(slash + 1), false);
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational out;
  out.q_ = -q_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace nw
