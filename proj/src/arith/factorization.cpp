#include "newform_weyl/arith/factorization.hpp"

#include <algorithm>
#include <string>

#include "newform_weyl/error.hpp"

namespace nw::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization::PrimeFactorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& [p, e] = factors_[i];
    if (e == 0) throw DomainError("prime factorization: zero exponent for " + std::to_string(p));
    if (i > 0 && factors_[i - 1].prime >= p) throw DomainError("prime factorization: primes not strictly increasing");
    if (!is_prime(p)) throw DomainError("prime factorization: " + std::to_string(p) + " is not prime");
  }
}

PrimeFactorization PrimeFactorization::prime_power(std::uint64_t p, unsigned exponent) {
  if (exponent == 0) return {};
  return PrimeFactorization({{p, exponent}});
}

unsigned PrimeFactorization::exponent_of(std::uint64_t p) const {
  const auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                                   [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

bool PrimeFactorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

Integer PrimeFactorization::value() const {
  Integer out = 1;
  for (const auto& [p, e] : factors_) out *= pow(to_integer(p), e);
  return out;
}

std::optional<std::uint64_t> PrimeFactorization::value_u64() const {
  std::uint64_t out = 1;
  for (const auto& [p, e] : factors_) {
    for (unsigned i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(out, p, &out)) return std::nullopt;
    }
  }
  return out;
}

std::uint64_t PrimeFactorization::divisor_count() const {
  std::uint64_t count = 1;
  for (const auto& pp : factors_) count *= pp.exponent + 1;
  return count;
}

std::vector<PrimeFactorization> PrimeFactorization::divisors() const {
  std::vector<PrimeFactorization> out;
  out.reserve(divisor_count());
  std::vector<unsigned> exps(factors_.size(), 0);
  while (true) {
    std::vector<PrimePower> d;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (exps[i] > 0) d.push_back({factors_[i].prime, exps[i]});
    }
    out.push_back(PrimeFactorization(Unchecked{}, std::move(d)));
    std::size_t i = 0;
    while (i < exps.size() && exps[i] == factors_[i].exponent) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }
  return out;
}

bool PrimeFactorization::divides(const PrimeFactorization& n) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const PrimePower& pp) { return n.exponent_of(pp.prime) >= pp.exponent; });
}

PrimeFactorization PrimeFactorization::quotient(const PrimeFactorization& d) const {
  if (!d.divides(*this)) throw DomainError("quotient: divisor does not divide");
  std::vector<PrimePower> out;
  for (const auto& [p, e] : factors_) {
    const unsigned r = e - d.exponent_of(p);
    if (r > 0) out.push_back({p, r});
  }
  return PrimeFactorization(Unchecked{}, std::move(out));
}

PrimeFactorization operator*(const PrimeFactorization& a, const PrimeFactorization& b) {
  std::vector<PrimePower> out;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->prime < j->prime)) {
      out.push_back(*i++);
    } else if (i == a.factors_.end() || j->prime < i->prime) {
      out.push_back(*j++);
    } else {
      out.push_back({i->prime, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  return PrimeFactorization(PrimeFactorization::Unchecked{}, std::move(out));
}

PrimeFactorization gcd(const PrimeFactorization& a, const PrimeFactorization& b) {
  std::vector<PrimePower> out;
  for (const auto& [p, e] : a.factors_) {
    const unsigned m = std::min(e, b.exponent_of(p));
    if (m > 0) out.push_back({p, m});
  }
  return PrimeFactorization(PrimeFactorization::Unchecked{}, std::move(out));
}

std::size_t PrimeFactorizationHash::operator()(const PrimeFactorization& n) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [p, e] : n.factors()) {
    h ^= std::hash<std::uint64_t>{}(p * 131 + e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace nw::arith
