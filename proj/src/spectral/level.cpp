#include "newform_weyl/spectral/level.hpp"

#include "newform_weyl/arith/sieve.hpp"

namespace nw::spectral {

Level Level::of(std::uint64_t M) {
  Level level;
  level.value = M;
  level.factorization = arith::factorize(M);
  for (const auto& [p, e] : level.factorization.factors()) {
    for (unsigned i = 0; i < e / 2; ++i) level.square_root_part *= p;
    if (e % 2 == 1) level.squarefree_part *= p;
  }
  return level;
}

}  // namespace nw::spectral
