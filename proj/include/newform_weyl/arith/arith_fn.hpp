#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "newform_weyl/arith/factorization.hpp"
#include "newform_weyl/exactnum/rational.hpp"

namespace nw::arith {

/// Exact arithmetical function n -> Rational on the positive integers.
///
/// A function built with `multiplicative` carries a prime-power kernel and is
/// evaluated as prod kernel(p, e) over the factorization of n. The flag is
/// declared by the constructor, never inferred. Copies share identity, so the
/// memoized inverse is shared between copies.
class ArithFn {
 public:
  using Evaluator = std::function<Rational(const PrimeFactorization&)>;
  using Kernel = std::function<Rational(std::uint64_t prime, unsigned exponent)>;

  ArithFn(std::string name, Evaluator evaluator);
  static ArithFn multiplicative(std::string name, Kernel kernel);

  /// Tabulated-style helper for functions defined on 64-bit values.
  static ArithFn from_values(std::string name, std::function<Rational(std::uint64_t)> values);

  Rational operator()(std::uint64_t n) const;
  Rational operator()(const PrimeFactorization& n) const;
  Rational at_prime_power(std::uint64_t p, unsigned exponent) const;

  bool is_multiplicative() const;
  /// nullptr for functions without a kernel.
  const Kernel* kernel() const;
  const std::string& name() const;
  const void* identity() const { return impl_.get(); }

  /// Same values, general evaluation path, no kernel or flag.
  ArithFn without_kernel() const;

  /// Dirichlet inverse, memoized per function identity. Multiplicative
  /// functions get a multiplicative inverse built from the prime-power
  /// recursion. Throws NotInvertibleError when f(1) = 0.
  const ArithFn& inverse() const;

 private:
  struct Impl;
  explicit ArithFn(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<Impl> impl_;
};

/// f*g as a function. Kernelled when both inputs are, memoized otherwise.
ArithFn convolution(const ArithFn& f, const ArithFn& g);

/// (f*g)(n) = sum_{d|n} f(d) g(n/d); prime-power-wise when both are multiplicative.
Rational dirichlet_convolve(const ArithFn& f, const ArithFn& g, std::uint64_t n);
Rational dirichlet_convolve(const ArithFn& f, const ArithFn& g, const PrimeFactorization& n);

/// f^{-1}(n); throws NotInvertibleError when f(1) = 0.
Rational dirichlet_inverse(const ArithFn& f, std::uint64_t n);
Rational dirichlet_inverse(const ArithFn& f, const PrimeFactorization& n);

}  // namespace nw::arith
