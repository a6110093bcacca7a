#include "newform_weyl/arith/characters.hpp"

#include <numeric>
#include <string>

#include "newform_weyl/error.hpp"

namespace nw::arith {

namespace {

struct Generator {
  std::uint64_t residue;  // generator lifted to Z/K
  std::uint64_t order;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t m) {
  std::uint64_t x = g % m;
  std::uint64_t k = 1;
  while (x != 1 % m) {
    x = mul_mod(x, g, m);
    ++k;
  }
  return k;
}

// x = a mod m1, x = 1 mod m2 with gcd(m1, m2) = 1.
std::uint64_t crt_lift(std::uint64_t a, std::uint64_t m1, std::uint64_t m2) {
  for (std::uint64_t x = a % m1; x < m1 * m2; x += m1) {
    if (x % m2 == 1 % m2) return x;
  }
  throw DomainError("crt_lift: moduli not coprime");
}

std::vector<Generator> unit_group_generators(std::uint64_t modulus) {
  std::vector<Generator> gens;
  std::uint64_t rest = modulus;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    std::uint64_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
      ++e;
    }
    const std::uint64_t cofactor = modulus / q;
    const std::uint64_t phi_q = q / p * (p - 1);
    if (p == 2) {
      if (e >= 2) gens.push_back({crt_lift(q - 1, q, cofactor), 2});
      if (e >= 3) gens.push_back({crt_lift(5, q, cofactor), q / 4});
      continue;
    }
    std::uint64_t g = 2;
    while (std::gcd(g, q) != 1 || multiplicative_order(g, q) != phi_q) ++g;
    gens.push_back({crt_lift(g, q, cofactor), phi_q});
  }
  return gens;
}

}  // namespace

std::vector<std::uint64_t> character_conductors(std::uint64_t modulus) {
  if (modulus == 0 || modulus > kCharacterOracleBound) {
    throw DomainError("character oracle needs 1 <= K <= " + std::to_string(kCharacterOracleBound));
  }
  const auto gens = unit_group_generators(modulus);

  // Discrete logs: every unit x mod K as exponents of the generators.
  std::vector<std::vector<std::uint64_t>> dlog(modulus);
  std::vector<std::uint64_t> exps(gens.size(), 0);
  while (true) {
    std::uint64_t x = 1 % modulus;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::uint64_t k = 0; k < exps[i]; ++k) x = mul_mod(x, gens[i].residue, modulus);
    }
    dlog[x] = exps;
    std::size_t i = 0;
    while (i < exps.size() && exps[i] + 1 == gens[i].order) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }

  std::vector<std::uint64_t> units;
  for (std::uint64_t x = 0; x < modulus; ++x) {
    if (std::gcd(x, modulus) == 1) units.push_back(x);
  }
  if (modulus == 1) units = {0};
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= modulus; ++d) {
    if (modulus % d == 0) divisors.push_back(d);
  }

  // chi(g_i) = exp(2 pi i c_i / ord_i); with L = lcm of the orders,
  // chi(x) = 1 iff sum_i c_i * dlog_i(x) * (L / ord_i) = 0 mod L.
  std::uint64_t lcm = 1;
  for (const auto& g : gens) lcm = std::lcm(lcm, g.order);
  const auto is_trivial_at = [&](const std::vector<std::uint64_t>& chi, std::uint64_t x) {
    std::uint64_t phase = 0;
    const auto& logs = dlog[x];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      phase = (phase + chi[i] * logs[i] % gens[i].order * (lcm / gens[i].order)) % lcm;
    }
    return phase == 0;
  };

  std::vector<std::uint64_t> conductors;
  std::vector<std::uint64_t> chi(gens.size(), 0);
  while (true) {
    // Conductor: least d | K with chi trivial on all units x = 1 mod d.
    for (std::uint64_t d : divisors) {
      bool trivial = true;
      for (std::uint64_t x : units) {
        if (x % d != 1 % d) continue;
        if (!is_trivial_at(chi, x)) {
          trivial = false;
          break;
        }
      }
      if (trivial) {
        conductors.push_back(d);
        break;
      }
    }
    std::size_t i = 0;
    while (i < chi.size() && chi[i] + 1 == gens[i].order) chi[i++] = 0;
    if (i == chi.size()) break;
    ++chi[i];
  }
  return conductors;
}

std::uint64_t primitive_char_count_oracle(std::uint64_t modulus) {
  std::uint64_t count = 0;
  for (std::uint64_t c : character_conductors(modulus)) count += (c == modulus);
  return count;
}

}  // namespace nw::arith
