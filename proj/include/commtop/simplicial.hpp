#pragma once

#include "commtop/group.hpp"
#include "commtop/invariants.hpp"
#include "commtop/lattice.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace commtop {

enum class SimplicialModel {
  commuting_nerve,  // C_k(G): commuting k-tuples, bar faces
  affine,           // E_k(2,G): affinely commutative (k+1)-tuples, homogeneous faces
  nerve,            // B_k(G): all k-tuples, bar faces
};

/// Levels 0..N of a simplicial set of group tuples, with face and
/// degeneracy maps stored as index tables. Levels are sorted lexicographically.
class SimplicialTruncation {
 public:
  SimplicialTruncation(FiniteGroup g, SimplicialModel model, std::vector<TupleList> levels);

  const FiniteGroup& group() const { return group_; }
  SimplicialModel model() const { return model_; }
  std::size_t max_degree() const { return levels_.size() - 1; }
  const TupleList& level(std::size_t k) const { return levels_.at(k); }

  /// face(k, i)[j] = index in level k-1 of d_i of simplex j of level k (1 <= k <= N, 0 <= i <= k).
  std::span<const std::uint32_t> face(std::size_t k, std::size_t i) const { return faces_.at(k).at(i); }
  /// degeneracy(k, i)[j] = index in level k+1 of s_i of simplex j (k < N, 0 <= i <= k).
  std::span<const std::uint32_t> degeneracy(std::size_t k, std::size_t i) const {
    return degeneracies_.at(k).at(i);
  }
  bool is_degenerate(std::size_t k, std::size_t j) const;

 private:
  FiniteGroup group_;
  SimplicialModel model_;
  std::vector<TupleList> levels_;
  std::vector<std::vector<std::vector<std::uint32_t>>> faces_;
  std::vector<std::vector<std::vector<std::uint32_t>>> degeneracies_;
};

// Tuple-level structure maps. `k` is the simplicial degree of the input.
Tuple face(const FiniteGroup& g, SimplicialModel model, std::span<const Element> simplex, std::size_t i);
Tuple degeneracy(SimplicialModel model, std::span<const Element> simplex, std::size_t i);
bool is_degenerate(SimplicialModel model, std::span<const Element> simplex);

/// Successive quotients g_{i-1}^-1 g_i pairwise commute.
bool is_affinely_commutative(const FiniteGroup& g, std::span<const Element> tuple);

SimplicialTruncation build_c(const FiniteGroup& g, std::size_t max_degree, std::uint64_t budget = kDefaultBudget);
SimplicialTruncation build_e(const FiniteGroup& g, std::size_t max_degree, std::uint64_t budget = kDefaultBudget);
/// Full nerve of G (every tuple), the abelian comparison model and the target of the commutator map.
SimplicialTruncation build_nerve(const FiniteGroup& g, std::size_t max_degree,
                                 std::uint64_t budget = kDefaultBudget);

/// (g_0,...,g_k) -> (g_0^-1 g_1, ..., g_{k-1}^-1 g_k). Throws InvalidArgument
/// unless the input is affinely commutative.
Tuple p_map(const FiniteGroup& g, std::span<const Element> e);
/// (g_0,...,g_k) -> ([g_0,g_1], ..., [g_{k-1},g_k]). Same precondition.
Tuple commutator_map(const FiniteGroup& g, std::span<const Element> e);

struct SimplicialCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  // first failing relation, empty when ok
};

/// Exhaustively checks d_i d_j = d_{j-1} d_i and the face/degeneracy relations on all stored levels.
SimplicialCheck check_simplicial_identities(const SimplicialTruncation& s);
/// Checks that `map` (source level k -> target level k) commutes with every
/// face and degeneracy, for levels 0..min(N_source, N_target).
SimplicialCheck check_simplicial_map(const SimplicialTruncation& source, const SimplicialTruncation& target,
                                     const std::function<Tuple(std::span<const Element>)>& map);

/// boundary[k]: chains in degree k -> degree k-1, for k = 0..N (boundary[0] has no rows).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> boundary;
};

/// Sum of (-1)^i d_i. The normalized complex drops degenerate simplices.
/// Throws InvariantViolation if some composite of boundaries is nonzero.
ChainComplex chain_complex(const SimplicialTruncation& s, bool normalized = true);

/// H_k; needs k+1 <= N, else InvalidArgument.
AbelianGroupInvariants homology(const SimplicialTruncation& s, std::size_t k, bool normalized = true);
/// H_0..H_top from one assembled complex; needs top+1 <= N.
std::vector<AbelianGroupInvariants> homology_range(const SimplicialTruncation& s, std::size_t top,
                                                   bool normalized = true);
/// Reduced homology: H_0 loses one free summand.
AbelianGroupInvariants reduce_degree_zero(AbelianGroupInvariants h0);

}  // namespace commtop
