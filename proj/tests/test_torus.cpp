#include "commtop/error.hpp"
#include "commtop/torus.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace commtop;

namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

RationalVector random_point(std::mt19937& rng, std::size_t k, long denominator) {
  RationalVector t(k);
  for (auto& x : t) x = q(long(rng() % std::uint64_t(denominator)), denominator);
  return t;
}

IntMatrix m(std::vector<std::vector<long long>> rows) { return IntMatrix::from_rows(rows); }

}  // namespace

TEST_CASE("extension validation") {
  FiniteGroup z2(2, {0, 1, 1, 0});
  CHECK_THROWS_WITH_AS(TorusExtension(1, z2, {m({{1}}), m({{2}})}), doctest::Contains("invertible"), InvalidArgument);
  FiniteGroup z4 = extension_catalog::extension("NT_SU2").finite();
  // rho(w) = -1 but rho(w^2) = -1 breaks the homomorphism property.
  CHECK_THROWS_WITH_AS(TorusExtension(1, z4, {m({{1}}), m({{-1}}), m({{-1}}), m({{-1}})}),
                       doctest::Contains("not a homomorphism at"), InvalidArgument);
  // Z generator acting nontrivially.
  CHECK_THROWS_AS(TorusExtension(1, z2, {m({{1}}), m({{-1}})}, {{{q(1, 2)}, 1}}), InvalidArgument);
  // Torus point not fixed by the action: 1/3 is moved by inversion.
  CHECK_THROWS_AS(TorusExtension(1, z4, {m({{1}}), m({{-1}}), m({{1}}), m({{-1}})}, {{{q(1, 3)}, 2}}),
                  InvalidArgument);
}

TEST_CASE("products, inverses and the O(2) commutator") {
  auto o2 = extension_catalog::extension("O2");
  auto x = o2.element({q(1, 3)}, 1);
  CHECK(o2.multiply(o2.identity(), x) == x);
  CHECK(o2.multiply(x, o2.inverse(x)) == o2.identity());
  auto tau = o2.lift(1);
  for (long n = 0; n < 12; ++n) {
    auto t = o2.torus({q(n, 12)});
    CHECK(o2.commutator(tau, t) == o2.torus({q(2 * n, 12)}));
  }
  CHECK(o2.commutator(o2.torus({q(1, 5)}), o2.torus({q(2, 7)})) == o2.identity());
  auto other = extension_catalog::extension("O2");
  CHECK_THROWS_AS(o2.multiply(x, other.identity()), InvalidArgument);
}

TEST_CASE("central quotient of N(T) in SU(2)") {
  auto n = extension_catalog::extension("NT_SU2");
  CHECK(n.central_subgroup().size() == 2);
  auto w = n.lift(1);
  auto w2 = n.multiply(w, w);
  // w^2 is identified with the torus point 1/2, and w has order 4.
  CHECK(n.torus_part(w2) == RationalVector{q(1, 2)});
  CHECK(n.multiply(w2, w2) == n.identity());
  CHECK(n.element({q(1, 2)}, 2) == n.identity());
}

TEST_CASE("psi_star examples") {
  auto o2 = extension_catalog::extension("O2");
  CHECK(psi_star(o2, 0) == IntMatrix(1, 1));
  CHECK(psi_star(o2, 1) == m({{2}}));
  auto swap = extension_catalog::extension("Z2_swap");
  CHECK(psi_star(swap, 1) == m({{1, -1}, {-1, 1}}));
}

TEST_CASE("psi_star agrees with the implemented bracket") {
  for (const auto& name : extension_catalog::names()) {
    auto e = extension_catalog::extension(name);
    const std::size_t k = e.rank();
    auto points = e.elements_with_denominator(12);
    for (Element g = 0; g < e.finite().order(); ++g) {
      IntMatrix l = psi_star(e, g);
      for (const auto& p : points) {
        if (p.f != kIdentity) continue;
        auto expected = l.apply(std::span<const Rational>(p.t));
        REQUIRE(expected.size() == k);
        REQUIRE(e.commutator(e.lift(g), e.torus(p.t)) == e.torus(expected));
      }
    }
  }
}

TEST_CASE("commutator lattices") {
  auto triv = extension_catalog::extension("trivial");
  auto lt = commutator_lattices(triv);
  CHECK(lt.sum.rank() == 0);
  CHECK(lt.subtorus.rank() == 0);

  auto o2 = commutator_lattices(extension_catalog::extension("O2"));
  CHECK(to_string(o2.sum) == "2Z");
  CHECK(to_string(o2.subtorus) == "Z");

  auto diag = commutator_lattices(extension_catalog::extension("Z2_diag"));
  CHECK(diag.sum == Lattice(2, m({{2}, {0}})));
  CHECK(diag.subtorus == Lattice(2, m({{1}, {0}})));

  auto nt = commutator_lattices(extension_catalog::extension("NT_SU2"));
  CHECK(nt.subtorus == Lattice::whole(1));
}

TEST_CASE("pi1 split") {
  auto t = pi1_split(extension_catalog::extension("trivial"));
  CHECK(t.sub.rank() == 0);
  CHECK(t.complement == Lattice::whole(2));
  auto o2 = pi1_split(extension_catalog::extension("O2"));
  CHECK(o2.sub == Lattice::whole(1));
  CHECK(o2.complement.rank() == 0);
  auto d = pi1_split(extension_catalog::extension("Z2_diag"));
  CHECK(d.sub == Lattice(2, m({{1}, {0}})));
  CHECK(d.complement == Lattice(2, m({{0}, {1}})));
}

TEST_CASE("lattice properties on catalog and random extensions") {
  std::vector<TorusExtension> all;
  for (const auto& name : extension_catalog::names()) all.push_back(extension_catalog::extension(name));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) all.push_back(extension_catalog::random_extension(seed));
  for (const auto& e : all) {
    auto l = commutator_lattices(e);
    CHECK(l.subtorus.contains(l.sum));
    CHECK(l.subtorus.rank() == l.sum.rank());
    // Sum is unchanged by q -> q^-1.
    std::vector<Lattice> direct;
    for (Element g = 0; g < e.finite().order(); ++g)
      direct.emplace_back(e.rank(), IntMatrix::identity(e.rank()) - e.action(g));
    CHECK(lattice_sum(direct) == l.sum);
    auto split = pi1_split(e);
    CHECK(abs(determinant(IntMatrix::hstack(split.sub.basis(), split.complement.basis()))) == 1);
  }
}

TEST_CASE("random extensions are reproducible and valid") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto a = extension_catalog::random_extension(seed);
    auto b = extension_catalog::random_extension(seed);
    CHECK(a.label() == b.label());
    CHECK(a.rank() <= 3);
    CHECK(a.finite().order() <= 8);
    for (Element g = 0; g < a.finite().order(); ++g) CHECK(a.action(g) == b.action(g));
  }
}

TEST_CASE("commutator identity (2)") {
  std::vector<TorusExtension> all;
  for (const auto& name : extension_catalog::names()) all.push_back(extension_catalog::extension(name));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) all.push_back(extension_catalog::random_extension(seed));
  std::mt19937 rng(17);
  for (const auto& e : all) {
    for (int sample = 0; sample < 200; ++sample) {
      Element p = Element(rng() % e.finite().order()), r = Element(rng() % e.finite().order());
      auto s = random_point(rng, e.rank(), 30), t = random_point(rng, e.rank(), 30);
      REQUIRE_MESSAGE(commutator_identity_holds(e, p, r, s, t), e.label());
    }
  }
}

TEST_CASE("commutators of denominator-N elements stay on the subtorus") {
  for (const auto& name : extension_catalog::names()) {
    auto e = extension_catalog::extension(name);
    if (e.rank() > 2) continue;
    auto sub = commutator_lattices(e).subtorus;
    const std::size_t n = 4;
    const std::size_t bound = n * e.finite().order();
    auto elements = e.elements_with_denominator(n);
    std::set<RationalVector> torus_points;
    std::vector<ExtElement> generated;
    for (const auto& x : elements)
      for (const auto& y : elements) generated.push_back(e.commutator(e.canonical(x), e.canonical(y)));
    // Close under products (finite: all denominators divide bound).
    std::vector<ExtElement> closure{e.identity()};
    auto known = [&](const ExtElement& z) { return std::find(closure.begin(), closure.end(), z) != closure.end(); };
    for (const auto& c : generated)
      if (!known(c)) closure.push_back(c);
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        auto z = e.multiply(closure[i], closure[j]);
        if (!known(z)) closure.push_back(z);
      }
    for (const auto& z : closure) {
      auto t = e.torus_part(z);
      if (!t) continue;
      CHECK_MESSAGE(in_subtorus(sub, *t), name);
      for (const auto& x : *t) CHECK(BigInt(bound) % x.get_den() == 0);
    }
  }
}

TEST_CASE("single commutator cover") {
  auto triv = single_commutator_cover(extension_catalog::extension("trivial"), 5);
  CHECK(triv.covered);
  CHECK(triv.target_count == 1);

  auto e = extension_catalog::extension("O2");
  auto o2 = single_commutator_cover(e, 12);
  CHECK(o2.covered);
  CHECK(o2.target_count == 12);
  for (const auto& w : o2.witnesses) CHECK(e.commutator(w.x, w.y) == w.target);

  auto nt = single_commutator_cover(extension_catalog::extension("NT_SU2"), 12);
  CHECK(nt.covered);
  CHECK(nt.search_denominator == 48);

  CHECK_THROWS_AS(single_commutator_cover(extension_catalog::extension("S3_perm"), 12, 0, 1000), BudgetExceeded);
}
