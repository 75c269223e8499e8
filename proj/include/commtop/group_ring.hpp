#pragma once

#include "commtop/group.hpp"
#include "commtop/invariants.hpp"
#include "commtop/lattice.hpp"

namespace commtop {

/// A module presented by generators and relator columns.
struct GroupRingModulePresentation {
  std::size_t generators = 0;
  SparseIntMatrix relations;  // generators x relators
  AbelianGroupInvariants cokernel() const;
};

/// W = augmentation ideal of Z[A] on the basis e_x = x - 1 (x != 1, index
/// order), with relators w - a w for each basis element w and each a in A.
GroupRingModulePresentation coinvariant_presentation(const FiniteGroup& a);
/// W_A as an abelian group.
AbelianGroupInvariants coinvariants(const FiniteGroup& a);

/// Z[A x A] --d3--> Z[A] --d2--> Z, with d2 the augmentation and
/// d3(h1,h2) = [h1] - [h2 h1] + [h2] - [1]. Pairs are indexed h1*|A| + h2.
struct MooreComplex {
  SparseIntMatrix d2, d3;
};
MooreComplex moore_complex(const FiniteGroup& a, std::uint64_t budget = kDefaultBudget);
/// Homology of the Moore complex at Z[A].
AbelianGroupInvariants moore_h2(const FiniteGroup& a, std::uint64_t budget = kDefaultBudget);

/// Builds the finite abelian group with the given invariants, computes
/// moore_h2 of it and throws InvariantViolation unless it returns the input.
/// Free summands are rejected with InvalidArgument.
AbelianGroupInvariants pi2_e2_connected(const AbelianGroupInvariants& pi1, std::uint64_t budget = kDefaultBudget);

}  // namespace commtop
