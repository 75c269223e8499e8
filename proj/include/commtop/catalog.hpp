#pragma once

#include "commtop/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace commtop::catalog {

/// Z/n with elements "1", "a", "a^2", ...
FiniteGroup cyclic(std::size_t n);
/// Dihedral group of the given order (2n); rotations "r^k", reflections "r^k s".
FiniteGroup dihedral(std::size_t order);
/// Generalized quaternion / dicyclic group of the given order (4n).
/// Order 8 uses the names 1, i, -1, -i, j, k, -j, -k.
FiniteGroup dicyclic(std::size_t order);
FiniteGroup symmetric(std::size_t degree);
FiniteGroup alternating4();
/// Z/d1 x Z/d2 x ... with elements written as tuples.
FiniteGroup abelian(const std::vector<std::size_t>& factors);
/// Central product identifying the unique central involutions of H and K.
FiniteGroup central_product_over_involution(const FiniteGroup& h, const FiniteGroup& k);

/// Looks up a catalog name: Z<n>, Z<m>xZ<n>[xZ<p>...], D<2n>, Q8, Q16, S3, S4,
/// A4, and central products "<A>*<B>" over the unique central involutions.
/// Throws ParseError for unknown names.
FiniteGroup group(std::string_view name);

/// Names of the fixed reproducible corpus, in increasing order.
const std::vector<std::string>& names();

}  // namespace commtop::catalog
