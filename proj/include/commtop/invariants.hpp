#pragma once

#include "commtop/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace commtop {

// A finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dm with
// d1 | d2 | ... | dm and every di >= 2.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroupInvariants&) const = default;

  // Builds the canonical form from an arbitrary list of cyclic orders
  // (0 means Z, 1 and -1 are dropped, signs ignored).
  static AbelianGroupInvariants from_cyclic_orders(const std::vector<BigInt>& orders);
  static AbelianGroupInvariants free(std::size_t rank) { return {rank, {}}; }
  static AbelianGroupInvariants finite(const std::vector<BigInt>& factors) {
    return from_cyclic_orders(factors);
  }
};

// "0", "Z^8", "[2,4]", "Z^2 x [2]".
std::string to_string(const AbelianGroupInvariants& a);
std::string torsion_string(const std::vector<BigInt>& factors);

}  // namespace commtop
