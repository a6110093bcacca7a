#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace nw {

using Integer = mpz_class;

Integer pow(const Integer& base, unsigned exponent);
Integer to_integer(std::uint64_t value);

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      q_ = static_cast<long>(value);
    } else {
      q_ = static_cast<unsigned long>(value);
    }
  }

  Rational(const Integer& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace nw
