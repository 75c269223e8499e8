#include "commtop/group_ring.hpp"

#include "commtop/catalog.hpp"
#include "commtop/error.hpp"

namespace commtop {

AbelianGroupInvariants GroupRingModulePresentation::cokernel() const {
  auto divisors = elementary_divisors(relations);
  auto out = AbelianGroupInvariants::from_cyclic_orders(divisors);
  out.free_rank = generators - divisors.size();
  return out;
}

GroupRingModulePresentation coinvariant_presentation(const FiniteGroup& a) {
  const std::size_t n = a.order();
  GroupRingModulePresentation p;
  p.generators = n - 1;
  p.relations = SparseIntMatrix(n - 1, (n - 1) * n);
  // e_x sits in row x-1; e_1 = 0.
  auto add = [&](std::size_t col, Element x, long sign) {
    if (x != kIdentity) p.relations.add(x - 1, col, sign);
  };
  std::size_t col = 0;
  for (Element b = 1; b < n; ++b)
    for (Element g = 0; g < n; ++g, ++col) {
      // e_b - g e_b, where g e_b = e_{gb} - e_g
      add(col, b, 1);
      add(col, a.mul(g, b), -1);
      add(col, g, 1);
    }
  return p;
}

AbelianGroupInvariants coinvariants(const FiniteGroup& a) { return coinvariant_presentation(a).cokernel(); }

MooreComplex moore_complex(const FiniteGroup& a, std::uint64_t budget) {
  const std::size_t n = a.order();
  check_budget(saturating_pow(n, 2), budget, "moore_complex");
  MooreComplex m{SparseIntMatrix(1, n), SparseIntMatrix(n, n * n)};
  for (std::size_t x = 0; x < n; ++x) m.d2.add(0, x, 1);
  for (Element h1 = 0; h1 < n; ++h1)
    for (Element h2 = 0; h2 < n; ++h2) {
      const std::size_t col = std::size_t(h1) * n + h2;
      m.d3.add(h1, col, 1);
      m.d3.add(a.mul(h2, h1), col, -1);
      m.d3.add(h2, col, 1);
      m.d3.add(kIdentity, col, -1);
    }
  return m;
}

AbelianGroupInvariants moore_h2(const FiniteGroup& a, std::uint64_t budget) {
  auto m = moore_complex(a, budget);
  return homology_at(m.d2, m.d3);
}

AbelianGroupInvariants pi2_e2_connected(const AbelianGroupInvariants& pi1, std::uint64_t budget) {
  if (pi1.free_rank != 0) throw InvalidArgument("pi2_e2_connected: pi1 must be finite, got " + to_string(pi1));
  std::vector<std::size_t> factors;
  BigInt order = 1;
  for (const auto& d : pi1.torsion) {
    order *= d;
    if (order > 100000) throw BudgetExceeded("pi2_e2_connected: |pi1| = " + order.get_str() + " is too large");
    factors.push_back(d.get_ui());
  }
  FiniteGroup a = factors.empty() ? catalog::cyclic(1) : catalog::abelian(factors);
  auto h2 = moore_h2(a, budget);
  if (!(h2 == pi1))
    throw InvariantViolation("pi2_e2_connected: Moore complex H2 = " + to_string(h2) + " but pi1 = " + to_string(pi1));
  return h2;
}

}  // namespace commtop
