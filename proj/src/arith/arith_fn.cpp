#include "newform_weyl/arith/arith_fn.hpp"

#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "newform_weyl/arith/sieve.hpp"
#include "newform_weyl/error.hpp"

namespace nw::arith {

namespace {

struct PrimePowerKeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, unsigned>& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.first * 64 + k.second);
  }
};

template <class Key, class Hash>
class Memo {
 public:
  std::optional<Rational> find(const Key& key) const {
    std::lock_guard lock(mutex_);
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Rational& value) {
    std::lock_guard lock(mutex_);
    values_.try_emplace(key, value);
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<Key, Rational, Hash> values_;
};

using FactorizationMemo = Memo<PrimeFactorization, PrimeFactorizationHash>;
using PrimePowerMemo = Memo<std::pair<std::uint64_t, unsigned>, PrimePowerKeyHash>;

ArithFn::Evaluator memoize(ArithFn::Evaluator evaluate) {
  auto memo = std::make_shared<FactorizationMemo>();
  return [evaluate = std::move(evaluate), memo](const PrimeFactorization& n) {
    if (auto hit = memo->find(n)) return *hit;
    Rational value = evaluate(n);
    memo->insert(n, value);
    return value;
  };
}

// g(p^e) = -sum_{i=1..e} f(p^i) g(p^{e-i}), using f(1) = 1.
struct InverseKernel {
  ArithFn::Kernel f;
  std::shared_ptr<PrimePowerMemo> memo;

  Rational operator()(std::uint64_t p, unsigned e) const {
    if (e == 0) return Rational(1);
    if (auto hit = memo->find({p, e})) return *hit;
    Rational sum;
    for (unsigned i = 1; i <= e; ++i) sum += f(p, i) * (*this)(p, e - i);
    Rational value = -sum;
    memo->insert({p, e}, value);
    return value;
  }
};

// g(1) = 1/f(1), g(n) = -(1/f(1)) sum_{d|n, d<n} f(n/d) g(d).
struct InverseEvaluator {
  ArithFn::Evaluator f;
  Rational inverse_at_one;
  std::shared_ptr<FactorizationMemo> memo;

  Rational operator()(const PrimeFactorization& n) const {
    if (n.is_one()) return inverse_at_one;
    if (auto hit = memo->find(n)) return *hit;
    const auto divisors = n.divisors();
    Rational sum;
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
      const Rational fd = f(n.quotient(divisors[i]));
      if (!fd.is_zero()) sum += fd * (*this)(divisors[i]);
    }
    Rational value = -inverse_at_one * sum;
    memo->insert(n, value);
    return value;
  }
};

Rational kernel_product(const ArithFn::Kernel& kernel, const PrimeFactorization& n) {
  Rational out(1);
  for (const auto& [p, e] : n.factors()) {
    out *= kernel(p, e);
    if (out.is_zero()) break;
  }
  return out;
}

Rational divisor_sum(const ArithFn& f, const ArithFn& g, const PrimeFactorization& n) {
  Rational sum;
  for (const auto& d : n.divisors()) {
    const Rational fd = f(d);
    if (!fd.is_zero()) sum += fd * g(n.quotient(d));
  }
  return sum;
}

Rational prime_power_convolution(const ArithFn& f, const ArithFn& g, std::uint64_t p, unsigned e) {
  Rational sum;
  for (unsigned i = 0; i <= e; ++i) sum += f.at_prime_power(p, i) * g.at_prime_power(p, e - i);
  return sum;
}

}  // namespace

struct ArithFn::Impl {
  std::string name;
  Evaluator evaluate;
  std::optional<Kernel> kernel;
  std::once_flag inverse_once;
  std::unique_ptr<ArithFn> inverse;
};

ArithFn::ArithFn(std::string name, Evaluator evaluator) : impl_(std::make_shared<Impl>()) {
  impl_->name = std::move(name);
  impl_->evaluate = std::move(evaluator);
}

ArithFn ArithFn::multiplicative(std::string name, Kernel kernel) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->kernel = kernel;
  impl->evaluate = [kernel = std::move(kernel)](const PrimeFactorization& n) { return kernel_product(kernel, n); };
  return ArithFn(std::move(impl));
}

ArithFn ArithFn::from_values(std::string name, std::function<Rational(std::uint64_t)> values) {
  std::string label = name;
  return ArithFn(std::move(name), [values = std::move(values), label](const PrimeFactorization& n) {
    const auto v = n.value_u64();
    if (!v) throw DomainError(label + ": argument exceeds 64 bits");
    return values(*v);
  });
}

Rational ArithFn::operator()(std::uint64_t n) const { return impl_->evaluate(factorize(n)); }

Rational ArithFn::operator()(const PrimeFactorization& n) const { return impl_->evaluate(n); }

Rational ArithFn::at_prime_power(std::uint64_t p, unsigned exponent) const {
  if (impl_->kernel) return exponent == 0 ? Rational(1) : (*impl_->kernel)(p, exponent);
  return impl_->evaluate(PrimeFactorization::prime_power(p, exponent));
}

bool ArithFn::is_multiplicative() const { return impl_->kernel.has_value(); }

const ArithFn::Kernel* ArithFn::kernel() const { return impl_->kernel ? &*impl_->kernel : nullptr; }

const std::string& ArithFn::name() const { return impl_->name; }

ArithFn ArithFn::without_kernel() const { return ArithFn(impl_->name, impl_->evaluate); }

const ArithFn& ArithFn::inverse() const {
  std::call_once(impl_->inverse_once, [this] {
    const std::string name = impl_->name + "^-1";
    if (impl_->kernel) {
      InverseKernel kernel{*impl_->kernel, std::make_shared<PrimePowerMemo>()};
      impl_->inverse = std::make_unique<ArithFn>(ArithFn::multiplicative(name, std::move(kernel)));
      return;
    }
    const Rational at_one = impl_->evaluate(PrimeFactorization{});
    if (at_one.is_zero()) throw NotInvertibleError(impl_->name + " is not invertible: f(1) = 0");
    InverseEvaluator evaluator{impl_->evaluate, Rational(1) / at_one, std::make_shared<FactorizationMemo>()};
    impl_->inverse = std::make_unique<ArithFn>(name, std::move(evaluator));
  });
  return *impl_->inverse;
}

ArithFn convolution(const ArithFn& f, const ArithFn& g) {
  std::string name = "(" + f.name() + "*" + g.name() + ")";
  if (f.is_multiplicative() && g.is_multiplicative()) {
    return ArithFn::multiplicative(
        std::move(name), [f, g](std::uint64_t p, unsigned e) { return prime_power_convolution(f, g, p, e); });
  }
  return ArithFn(std::move(name), memoize([f, g](const PrimeFactorization& n) { return divisor_sum(f, g, n); }));
}

Rational dirichlet_convolve(const ArithFn& f, const ArithFn& g, const PrimeFactorization& n) {
  if (f.is_multiplicative() && g.is_multiplicative()) {
    Rational out(1);
    for (const auto& [p, e] : n.factors()) out *= prime_power_convolution(f, g, p, e);
    return out;
  }
  return divisor_sum(f, g, n);
}

Rational dirichlet_convolve(const ArithFn& f, const ArithFn& g, std::uint64_t n) {
  return dirichlet_convolve(f, g, factorize(n));
}

Rational dirichlet_inverse(const ArithFn& f, const PrimeFactorization& n) { return f.inverse()(n); }

Rational dirichlet_inverse(const ArithFn& f, std::uint64_t n) { return f.inverse()(factorize(n)); }

}  // namespace nw::arith
