#pragma once

#include "commtop/group.hpp"
#include "commtop/invariants.hpp"
#include "commtop/lattice.hpp"

#include <cstdint>
#include <vector>

namespace commtop {

/// Every abelian subgroup of G, trivial and (if abelian) G included, ordered
/// by size and then by element list.
std::vector<Subgroup> abelian_subgroups(const FiniteGroup& g, std::uint64_t budget = kDefaultBudget);

struct Coset {
  std::size_t subgroup = 0;        // index into CosetPoset::subgroups
  Element representative = 0;      // smallest element of the coset
  std::vector<Element> elements;   // sorted
};

/// Left cosets gA of abelian subgroups ordered by inclusion.
struct CosetPoset {
  std::vector<Subgroup> subgroups;
  std::vector<Coset> cosets;                  // sorted by subgroup order, so chains increase in index
  std::vector<std::vector<std::uint32_t>> up;  // up[c] = cosets strictly containing c, ascending
  std::size_t relation_count() const;
};

/// `include_trivial` = false drops the singleton cosets of the trivial subgroup.
CosetPoset coset_poset(const FiniteGroup& g, bool include_trivial = true, std::uint64_t budget = kDefaultBudget);

/// Chains c_0 < ... < c_k of the poset, as k-simplices, for k = 0..max_dim.
std::vector<TupleList> order_complex(const CosetPoset& p, std::size_t max_dim, std::uint64_t budget = kDefaultBudget);

/// Reduced homology of the order complex in degrees 0..top.
std::vector<AbelianGroupInvariants> coset_poset_homology(const FiniteGroup& g, std::size_t top,
                                                         bool include_trivial = true,
                                                         std::uint64_t budget = kDefaultBudget);

}  // namespace commtop
