#include "commtop/catalog.hpp"
#include "commtop/error.hpp"
#include "commtop/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace commtop;

namespace {

// Brute-force oracles that avoid the library's subgroup machinery.
std::vector<Element> brute_center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::set<Element> close_under_product(const FiniteGroup& g, std::set<Element> s) {
  s.insert(kIdentity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

std::vector<Element> brute_derived(const FiniteGroup& g) {
  std::set<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  auto s = close_under_product(g, comms);
  return {s.begin(), s.end()};
}

std::size_t sum_of_centralizers(const FiniteGroup& g) {
  std::size_t total = 0;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) total += g.commute(a, b);
  return total;
}

}  // namespace

TEST_CASE("group construction validates the table") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), InvalidArgument);
  // Latin square that is not associative (order 5 loop).
  std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop), InvalidArgument);
  FiniteGroup z2(2, {0, 1, 1, 0});
  CHECK(z2.is_abelian());
}

TEST_CASE("permutation generators close to S3") {
  auto s3 = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.name(kIdentity) == "()");
}

TEST_CASE("center") {
  auto z6 = catalog::group("Z6");
  CHECK(center(z6).order() == 6);
  auto s3 = catalog::group("S3");
  CHECK(center(s3).elements() == std::vector<Element>{kIdentity});
  auto q8 = catalog::group("Q8");
  CHECK(center(q8).order() == 2);
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    CHECK(center(g).elements() == brute_center(g));
  }
}

TEST_CASE("commutator subgroup") {
  auto z6 = catalog::group("Z6");
  auto whole = Subgroup::whole(z6);
  CHECK(commutator_subgroup(z6, whole, whole).order() == 1);
  auto s3 = catalog::group("S3");
  auto d = commutator_subgroup(s3, Subgroup::whole(s3), Subgroup::whole(s3));
  CHECK(d.order() == 3);
  auto q8 = catalog::group("Q8");
  auto dq = commutator_subgroup(q8, Subgroup::whole(q8), Subgroup::whole(q8));
  CHECK(dq.elements() == std::vector<Element>{0, 2});
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    CHECK(commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g)).elements() == brute_derived(g));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(catalog::group("Z6")) == AbelianGroupInvariants::finite({6}));
  CHECK(abelianization(catalog::group("S3")) == AbelianGroupInvariants::finite({2}));
  CHECK(abelianization(catalog::group("Q8")) == AbelianGroupInvariants::finite({2, 2}));
  CHECK(abelianization(catalog::group("S4")) == AbelianGroupInvariants::finite({2}));
  CHECK(abelianization(catalog::group("A4")) == AbelianGroupInvariants::finite({3}));
  CHECK(abelianization(catalog::group("Z2xZ4")) == AbelianGroupInvariants::finite({2, 4}));
  CHECK(abelianization(catalog::group("Z2xZ6")) == AbelianGroupInvariants::finite({2, 6}));
  CHECK(abelianization(catalog::group("D8")) == AbelianGroupInvariants::finite({2, 2}));
  CHECK(abelianization(catalog::group("D6")) == AbelianGroupInvariants::finite({2}));
}

TEST_CASE("commuting tuples") {
  auto s3 = catalog::group("S3");
  CHECK(commuting_tuples(s3, 0).size() == 1);
  CHECK(commuting_tuples(s3, 1).size() == 6);
  CHECK(commuting_tuples(s3, 2).size() == 18);
  CHECK(commuting_tuples(catalog::group("Q8"), 2).size() == 40);
  CHECK_THROWS_AS(commuting_tuples(s3, 5, 1000), BudgetExceeded);

  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    if (g.order() > 24) continue;
    CHECK(commuting_tuples(g, 2).size() == sum_of_centralizers(g));
  }
}

TEST_CASE("commuting tuples are lexicographic and closed under permutation and inversion") {
  for (const char* name : {"S3", "Q8", "D8", "A4", "Z2xZ4"}) {
    auto g = catalog::group(name);
    for (std::size_t n = 0; n <= 3; ++n) {
      auto tuples = commuting_tuples(g, n);
      for (std::size_t i = 1; i < tuples.size(); ++i)
        REQUIRE(std::ranges::lexicographical_compare(tuples[i - 1], tuples[i]));
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        Tuple t = tuples.tuple(i);
        Tuple inv = t;
        for (auto& x : inv) x = g.inv(x);
        REQUIRE(tuples.find_sorted(inv));
        std::ranges::sort(t);
        do {
          REQUIRE(tuples.find_sorted(t));
        } while (std::ranges::next_permutation(t).found);
      }
    }
  }
}

TEST_CASE("almost commuting tuples") {
  auto q8 = catalog::group("Q8");
  auto s3 = catalog::group("S3");
  CHECK(almost_commuting_tuples(s3, Subgroup::trivial(s3), 2).size() == commuting_tuples(s3, 2).size());
  CHECK(almost_commuting_tuples(q8, center(q8), 2).size() == 64);
  auto d8 = catalog::group("D8");
  auto z = center(d8);
  std::size_t brute = 0;
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b)
      for (Element c = 0; c < 8; ++c)
        brute += z.contains(d8.commutator(a, b)) && z.contains(d8.commutator(a, c)) && z.contains(d8.commutator(b, c));
  CHECK(almost_commuting_tuples(d8, z, 3).size() == brute);
  CHECK_THROWS_AS(almost_commuting_tuples(s3, Subgroup::whole(s3), 2), InvalidArgument);
}

TEST_CASE("central products") {
  auto z4 = catalog::group("Z4");
  auto z2 = catalog::group("Z2");
  auto trivial = central_product(z4, z2, {{0, 0}});
  CHECK(trivial.group.order() == 8);
  auto cp = central_product(z4, z4, {{0, 0}, {2, 2}});
  CHECK(cp.group.order() == 8);
  CHECK(cp.group.is_abelian());
  auto q8 = catalog::group("Q8");
  auto cq = central_product(q8, z4, {{0, 0}, {2, 2}});
  CHECK(cq.group.order() == 16);
  CHECK(center(cq.group).order() == 4);
  CHECK_THROWS_AS(central_product(catalog::group("S3"), z2, {{0, 0}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(central_product(z4, z4, {{0, 0}, {1, 2}}), InvalidArgument);
}

TEST_CASE("central product pullback bijection") {
  auto z4 = catalog::group("Z4");
  auto z2 = catalog::group("Z2");
  auto q8 = catalog::group("Q8");
  auto cp1 = central_product(z4, z4, {{0, 0}, {2, 2}});
  auto cp2 = central_product(z2, q8, {{0, 0}, {1, 2}});
  for (std::size_t n = 0; n <= 3; ++n) {
    auto a = check_central_product_pullback(z4, z4, cp1, 2, n);
    CHECK_MESSAGE(a.ok, a.failure);
    CHECK(a.source_count == a.target_count * a.fiber_size);
    auto b = check_central_product_pullback(z2, q8, cp2, 2, n);
    CHECK_MESSAGE(b.ok, b.failure);
    CHECK(b.source_count == b.target_count * b.fiber_size);
  }
}

TEST_CASE("realize_triple") {
  auto q8 = catalog::group("Q8");
  auto k = center(q8);
  auto trivial = realize_triple(q8, k, 0, 0);
  REQUIRE(trivial);
  CHECK(*trivial == Tuple{0, 0, 0});
  auto t = realize_triple(q8, k, 2, 2);
  REQUIRE(t);
  CHECK(q8.name((*t)[0]) == "i");
  CHECK(q8.name((*t)[1]) == "i");
  CHECK(q8.name((*t)[2]) == "j");
  for (Element c1 : {0u, 2u})
    for (Element c2 : {0u, 2u}) {
      auto r = realize_triple(q8, k, c1, c2);
      REQUIRE(r);
      CHECK(q8.commutator((*r)[1], (*r)[2]) == c1);
      CHECK(q8.commutator((*r)[0], (*r)[2]) == c2);
      CHECK(q8.commutator((*r)[0], (*r)[1]) == kIdentity);
    }
  auto z4 = catalog::group("Z4");
  CHECK_FALSE(realize_triple(z4, Subgroup::whole(z4), 2, 0));
}

TEST_CASE("catalog corpus") {
  CHECK(catalog::names().size() >= 15);
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    CHECK(g.label() == name);
  }
  CHECK(catalog::group("Q8*Z4").order() == 16);
  CHECK(catalog::group("D16").order() == 16);
  CHECK(catalog::group("S4").order() == 24);
  CHECK_THROWS_AS(catalog::group("X9"), ParseError);
  CHECK_THROWS_AS(catalog::group("D7"), ParseError);
}

TEST_CASE("pullback bijection over every small central involution") {
  std::size_t cases = 0;
  for (const auto& hn : catalog::names()) {
    auto h = catalog::group(hn);
    if (!h.is_abelian() || h.order() > 8) continue;
    for (const auto& kn : catalog::names()) {
      auto k = catalog::group(kn);
      if (k.order() > 8) continue;
      for (Element zh : brute_center(h)) {
        if (h.element_order(zh) != 2) continue;
        for (Element zk : brute_center(k)) {
          if (k.element_order(zk) != 2) continue;
          auto cp = central_product(h, k, {{kIdentity, kIdentity}, {zh, zk}});
          CHECK(cp.group.order() * 2 == h.order() * k.order());
          for (std::size_t n = 1; n <= 3; ++n) {
            auto r = check_central_product_pullback(h, k, cp, 2, n);
            CHECK_MESSAGE(r.ok, hn << " x " << kn << ", n = " << n << ": " << r.failure);
          }
          ++cases;
        }
      }
    }
  }
  CHECK(cases > 20);
}
