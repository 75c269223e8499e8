#include "commtop/coset_poset.hpp"

#include "commtop/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace commtop {

std::vector<Subgroup> abelian_subgroups(const FiniteGroup& g, std::uint64_t budget) {
  check_budget(g.order(), budget, "abelian_subgroups");
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found;
  std::deque<Subgroup> queue{Subgroup::trivial(g)};
  seen.insert(queue.front().elements());
  std::uint64_t work = 0;
  while (!queue.empty()) {
    Subgroup a = queue.front();
    queue.pop_front();
    found.push_back(a);
    for (Element x = 0; x < g.order(); ++x) {
      if (a.contains(x)) continue;
      bool commutes = std::all_of(a.elements().begin(), a.elements().end(), [&](Element y) { return g.commute(x, y); });
      if (!commutes) continue;
      std::vector<Element> gens = a.elements();
      gens.push_back(x);
      Subgroup b = Subgroup::generated(g, gens);
      check_budget(++work, budget, "abelian_subgroups");
      if (seen.insert(b.elements()).second) queue.push_back(b);
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return found;
}

std::size_t CosetPoset::relation_count() const {
  std::size_t n = 0;
  for (const auto& u : up) n += u.size();
  return n;
}

CosetPoset coset_poset(const FiniteGroup& g, bool include_trivial, std::uint64_t budget) {
  CosetPoset p;
  p.subgroups = abelian_subgroups(g, budget);
  if (!include_trivial) p.subgroups.erase(p.subgroups.begin());
  for (std::size_t s = 0; s < p.subgroups.size(); ++s) {
    std::set<std::vector<Element>> seen;
    for (Element x = 0; x < g.order(); ++x) {
      std::vector<Element> coset;
      for (Element a : p.subgroups[s].elements()) coset.push_back(g.mul(x, a));
      std::sort(coset.begin(), coset.end());
      if (!seen.insert(coset).second) continue;
      p.cosets.push_back(Coset{s, coset.front(), std::move(coset)});
    }
  }
  check_budget(saturating_pow(p.cosets.size(), 2), budget, "coset poset relation");
  p.up.resize(p.cosets.size());
  for (std::size_t c = 0; c < p.cosets.size(); ++c)
    for (std::size_t d = c + 1; d < p.cosets.size(); ++d) {
      const auto& small = p.cosets[c].elements;
      const auto& big = p.cosets[d].elements;
      if (small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end()))
        p.up[c].push_back(std::uint32_t(d));
    }
  return p;
}

std::vector<TupleList> order_complex(const CosetPoset& p, std::size_t max_dim, std::uint64_t budget) {
  std::vector<TupleList> levels;
  for (std::size_t k = 0; k <= max_dim; ++k) levels.emplace_back(k + 1);
  std::uint64_t total = 0;
  Tuple chain;
  // Depth-first over chains; each chain is increasing in coset index so output is lexicographic.
  auto extend = [&](auto&& self, std::uint32_t top) -> void {
    chain.push_back(top);
    levels[chain.size() - 1].push_back(chain);
    check_budget(++total, budget, "order complex");
    if (chain.size() <= max_dim)
      for (auto next : p.up[top]) self(self, next);
    chain.pop_back();
  };
  for (std::uint32_t c = 0; c < p.cosets.size(); ++c) extend(extend, c);
  for (auto& level : levels) level.sort_lexicographic();
  return levels;
}

std::vector<AbelianGroupInvariants> coset_poset_homology(const FiniteGroup& g, std::size_t top, bool include_trivial,
                                                         std::uint64_t budget) {
  CosetPoset p = coset_poset(g, include_trivial, budget);
  auto levels = order_complex(p, top + 1, budget);
  // Augmented complex: boundary[0] is the augmentation onto Z.
  std::vector<SparseIntMatrix> boundary;
  SparseIntMatrix aug(1, levels[0].size());
  for (std::size_t j = 0; j < levels[0].size(); ++j) aug.add(0, j, 1);
  boundary.push_back(std::move(aug));
  for (std::size_t k = 1; k <= top + 1; ++k) {
    SparseIntMatrix d(levels[k - 1].size(), levels[k].size());
    Tuple facet;
    for (std::size_t j = 0; j < levels[k].size(); ++j) {
      auto simplex = levels[k][j];
      for (std::size_t i = 0; i <= k; ++i) {
        facet.assign(simplex.begin(), simplex.end());
        facet.erase(facet.begin() + std::ptrdiff_t(i));
        auto row = levels[k - 1].find_sorted(facet);
        if (!row) throw InvariantViolation("order complex is not closed under faces");
        d.add(*row, j, i % 2 ? -1 : 1);
      }
    }
    boundary.push_back(std::move(d));
  }
  std::vector<AbelianGroupInvariants> out;
  for (std::size_t k = 0; k <= top; ++k) out.push_back(homology_at(boundary[k], boundary[k + 1]));
  return out;
}

}  // namespace commtop
