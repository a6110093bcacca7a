#pragma once

#include <cstdint>
#include <vector>

namespace nw::arith {

inline constexpr std::uint64_t kCharacterOracleBound = 1000;

/// Conductor of every Dirichlet character mod K, one entry per character
/// (phi(K) entries). Characters are enumerated explicitly from generators of
/// (Z/K)^x: a primitive root for each odd prime power, and -1, 5 for powers
/// of two. Throws DomainError for K = 0 or K above kCharacterOracleBound.
std::vector<std::uint64_t> character_conductors(std::uint64_t modulus);

/// Number of characters mod K whose conductor is K.
std::uint64_t primitive_char_count_oracle(std::uint64_t modulus);

}  // namespace nw::arith
