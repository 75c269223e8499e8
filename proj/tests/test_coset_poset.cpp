#include "commtop/catalog.hpp"
#include "commtop/coset_poset.hpp"
#include "commtop/simplicial.hpp"

#include <doctest.h>

#include <set>

using namespace commtop;

namespace {

// Every subset closed under product that is abelian, by brute force over
// subgroups generated by at most two elements (enough for groups of order <= 16
// whose abelian subgroups are all 2-generated).
std::size_t count_abelian_subgroups_brute(const FiniteGroup& g) {
  std::set<std::vector<Element>> found;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a; b < g.order(); ++b) {
      if (!g.commute(a, b)) continue;
      std::vector<Element> gens{a, b};
      found.insert(Subgroup::generated(g, gens).elements());
    }
  return found.size();
}

}  // namespace

TEST_CASE("abelian subgroups") {
  CHECK(abelian_subgroups(catalog::group("Z5")).size() == 2);
  CHECK(abelian_subgroups(catalog::group("S3")).size() == 5);
  CHECK(abelian_subgroups(catalog::group("Q8")).size() == 5);
  for (const char* name : {"D8", "Z2xZ4", "Z6", "D10", "Q16", "D16", "Z4xZ4"})
    CHECK_MESSAGE(abelian_subgroups(catalog::group(name)).size() == count_abelian_subgroups_brute(catalog::group(name)),
                  name);
}

TEST_CASE("S3 coset poset") {
  auto p = coset_poset(catalog::group("S3"));
  CHECK(p.cosets.size() == 17);
  CHECK(p.relation_count() == 24);
  auto h = coset_poset_homology(catalog::group("S3"), 1);
  CHECK(h[0].is_trivial());
  CHECK(h[1] == AbelianGroupInvariants::free(8));
}

TEST_CASE("abelian groups give acyclic order complexes") {
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    if (!g.is_abelian() || g.order() > 16) continue;
    for (const auto& h : coset_poset_homology(g, 3)) CHECK_MESSAGE(h.is_trivial(), name);
  }
}

TEST_CASE("nonabelian groups have some nonzero reduced homology") {
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    if (g.is_abelian() || g.order() > 16) continue;
    auto h = coset_poset_homology(g, 2);
    CHECK_MESSAGE(!(h[0].is_trivial() && h[1].is_trivial() && h[2].is_trivial()), name);
  }
}

TEST_CASE("coset poset agrees with E(2,G)") {
  for (const char* name : {"S3", "D8", "Q8", "Z6", "Z2xZ2"}) {
    auto g = catalog::group(name);
    auto poset = coset_poset_homology(g, 2);
    auto e = homology_range(build_e(g, 3), 2);
    e[0] = reduce_degree_zero(e[0]);
    CHECK_MESSAGE(poset == e, name);
  }
}
