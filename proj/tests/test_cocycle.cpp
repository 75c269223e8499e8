#include "commtop/cocycle.hpp"
#include "commtop/error.hpp"

#include <doctest.h>

#include <random>

using namespace commtop;

namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

PatchCocycle identity_cocycle(std::size_t k) {
  auto one = PLPath::constant(RationalVector(k, 0));
  return {one, one, one};
}

RationalVector ints(std::vector<long> v) {
  RationalVector out;
  for (long x : v) out.push_back(x);
  return out;
}

// Oracle: -psi_star(q) applied to the loop class, from the matrix directly.
RationalVector expected_qx(const TorusExtension& e, Element g, const RationalVector& cls) {
  IntMatrix l = IntMatrix::identity(e.rank()) - e.action(e.finite().inv(g));
  auto v = l.apply(std::span<const Rational>(cls));
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("PL paths") {
  PLPath p({{0, ints({0})}, {q(1, 2), ints({2})}, {1, ints({1})}}, 0);
  CHECK(p.lift_at(q(1, 4)) == ints({1}));
  CHECK(p.lift_at(q(3, 4)) == RationalVector{q(3, 2)});
  CHECK(p.is_closed());
  CHECK(p.reversed().reversed() == p);
  CHECK_THROWS_AS(PLPath({{0, ints({0})}, {0, ints({1})}, {1, ints({0})}}, 0), InvalidArgument);
  CHECK_THROWS_AS(PLPath({{q(1, 2), ints({0})}, {1, ints({1})}}, 0), InvalidArgument);
}

TEST_CASE("validate") {
  auto o2 = extension_catalog::extension("O2");
  CHECK(validate(o2, identity_cocycle(1)).ok);
  auto c = identity_cocycle(1);
  c.a12 = PLPath::linear(RationalVector{q(1, 3)}, ints({0}));
  auto d = validate(o2, c);
  CHECK_FALSE(d.ok);
  CHECK(d.first_failure().find("front") != std::string::npos);
  CHECK(d.first_failure().find("cocycle equation") != std::string::npos);
}

TEST_CASE("invert") {
  auto o2 = extension_catalog::extension("O2");
  auto id = identity_cocycle(1);
  auto inv = invert(o2, id);
  CHECK(inv.a12 == id.a12);
  auto alpha = build_alpha_cocycle(o2, 0, 1, {{1}, {0}, 1});
  auto twice = invert(o2, invert(o2, alpha));
  CHECK(twice.a12 == alpha.a12);
  CHECK(twice.a13 == alpha.a13);
  CHECK(twice.a23 == alpha.a23);
  CHECK(validate(o2, invert(o2, alpha)).ok);
  auto bad = id;
  bad.a12 = PLPath::constant(ints({0}), 1);
  bad.a13 = PLPath::constant(ints({0}), 1);
  // [tau, 1/4] != 1 breaks commutativity at the front.
  bad.a23 = PLPath::constant(RationalVector{q(1, 4)});
  bad.a12 = PLPath::constant(RationalVector{q(3, 4)}, 1);
  CHECK_THROWS_AS(invert(o2, bad), InvalidArgument);
}

TEST_CASE("clutching") {
  auto o2 = extension_catalog::extension("O2");
  auto c = clutch(o2, identity_cocycle(1));
  CHECK(c.winding == ints({0}));
  CHECK(c.identity_component);
  auto bad = identity_cocycle(1);
  bad.a13 = PLPath::linear(ints({0}), RationalVector{q(1, 3)});
  CHECK_THROWS_AS(clutch(o2, bad), InvariantViolation);
}

TEST_CASE("the O(2) alpha construction") {
  auto o2 = extension_catalog::extension("O2");
  auto alpha = build_alpha_cocycle(o2, 0, 1, {{1}, {0}, 1});
  CHECK(validate(o2, alpha).ok);
  auto forward = clutch(o2, alpha);
  CHECK(forward.winding == ints({0}));
  CHECK(forward.loop.is_closed());
  auto backward = clutch(o2, invert(o2, alpha));
  REQUIRE(backward.winding.size() == 1);
  CHECK(abs(backward.winding[0]) == 2);
  CHECK(backward.identity_component);
  CHECK(backward.loop.end()[0] - backward.loop.start()[0] == backward.winding[0]);
}

TEST_CASE("the half-length circle winds once") {
  auto o2 = extension_catalog::extension("O2");
  auto alpha = build_alpha_cocycle(o2, 0, 1, {{1}, {0}, q(1, 2)});
  CHECK(validate(o2, alpha).ok);
  CHECK(clutch(o2, alpha).winding == ints({0}));
  auto w = clutch(o2, invert(o2, alpha)).winding;
  REQUIRE(w.size() == 1);
  CHECK(abs(w[0]) == 1);
}

TEST_CASE("alpha on the diagonal model") {
  auto e = extension_catalog::extension("Z2_diag");
  auto alpha = build_alpha_cocycle(e, 0, 1, {{1, 0}, {0, 0}, 1});
  CHECK(validate(e, alpha).ok);
  auto w = clutch(e, invert(e, alpha)).winding;
  REQUIRE(w.size() == 2);
  CHECK(abs(w[0]) == 2);
  CHECK(w[1] == 0);
  // A circle along the fixed direction commutes with q and never winds.
  auto fixed = build_alpha_cocycle(e, 0, 1, {{0, 1}, {0, 0}, 1});
  CHECK(clutch(e, invert(e, fixed)).winding == ints({0, 0}));
}

TEST_CASE("alpha rejects non-commuting endpoints") {
  auto o2 = extension_catalog::extension("O2");
  try {
    build_alpha_cocycle(o2, 0, 1, {{1}, {0}, q(1, 3)});
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& ex) {
    CHECK(std::string(ex.what()).find("x(end)") != std::string::npos);
  }
}

TEST_CASE("qx windings lie in the image of psi") {
  std::mt19937_64 rng(7);
  std::vector<TorusExtension> exts;
  for (const auto& name : extension_catalog::names()) exts.push_back(extension_catalog::extension(name));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) exts.push_back(extension_catalog::random_extension(seed));
  for (const auto& e : exts) {
    const std::size_t k = e.rank();
    auto lat = commutator_lattices(e);
    for (int trial = 0; trial < 20; ++trial) {
      Element g = rng() % e.finite().order();
      std::vector<PLPoint> pts;
      RationalVector cls(k);
      for (auto& c : cls) c = static_cast<long>(rng() % 7) - 3;
      pts.push_back({0, RationalVector(k, 0)});
      const int inner = 1 + rng() % 3;
      for (int j = 1; j <= inner; ++j) {
        RationalVector v(k);
        for (auto& c : v) c = q(static_cast<long>(rng() % 41) - 20, 1 + rng() % 6);
        pts.push_back({q(j, inner + 1), v});
      }
      pts.push_back({1, cls});
      PLLoop x(pts, kIdentity);
      auto r = build_qx_cocycle(e, g, x);
      CHECK(r.triple_points_affine);
      CHECK(validate(e, r.cocycle).ok);
      REQUIRE(r.clutch.identity_component);
      CHECK(r.clutch.winding == expected_qx(e, g, cls));
      std::vector<BigInt> w;
      for (const auto& c : r.clutch.winding) {
        REQUIRE(c.get_den() == 1);
        w.push_back(c.get_num());
      }
      CHECK(lat.sum.contains(w));
    }
  }
}

TEST_CASE("qx rejects loops that are not torus loops at the identity") {
  auto o2 = extension_catalog::extension("O2");
  CHECK_THROWS_AS(build_qx_cocycle(o2, 1, PLPath::linear(ints({0}), RationalVector{q(1, 2)})), InvalidArgument);
  CHECK_THROWS_AS(build_qx_cocycle(o2, 1, PLPath::linear(ints({0}), ints({1}), 1)), InvalidArgument);
  CHECK_THROWS_AS(build_qx_cocycle(o2, 1, PLPath::constant(RationalVector{q(1, 2)})), InvalidArgument);
}

TEST_CASE("loops outside the identity component are marked") {
  auto o2 = extension_catalog::extension("O2");
  auto tau = PLPath::constant(ints({0}), 1);
  auto one = PLPath::constant(ints({0}));
  auto r = clutch(o2, {tau, tau, one});
  CHECK_FALSE(r.identity_component);
  CHECK(r.marker == "not in identity-component loop");
  CHECK(r.winding.empty());
}

TEST_CASE("clutching classes of a cocycle and its inverse sum into the psi lattice") {
  std::size_t alphas = 0;
  for (const auto& name : extension_catalog::names()) {
    auto e = extension_catalog::extension(name);
    const std::size_t k = e.rank();
    auto lat = commutator_lattices(e);
    auto in_sum = [&](const ClutchResult& a, const ClutchResult& b) {
      std::vector<BigInt> v;
      for (std::size_t i = 0; i < k; ++i) {
        Rational s = a.winding[i] + b.winding[i];
        if (s.get_den() != 1) return false;
        v.push_back(s.get_num());
      }
      return lat.sum.contains(v);
    };
    for (Element p = 0; p < e.finite().order(); ++p)
      for (Element g = 0; g < e.finite().order(); ++g)
        for (std::size_t axis = 0; axis < k; ++axis) {
          CircleData circle{std::vector<BigInt>(k, 0), std::vector<BigInt>(k, 0), 1};
          circle.u[axis] = 1;
          PatchCocycle alpha = identity_cocycle(k);
          try {
            alpha = build_alpha_cocycle(e, p, g, circle);
          } catch (const InvalidArgument&) {
            continue;
          }
          REQUIRE(validate(e, alpha).ok);
          auto inv = invert(e, alpha);
          CHECK(validate(e, inv).ok);
          auto a = clutch(e, alpha), b = clutch(e, inv);
          if (!a.identity_component || !b.identity_component) continue;
          ++alphas;
          CHECK_MESSAGE(in_sum(a, b), name << " p=" << e.finite().name(p) << " q=" << e.finite().name(g));
        }
    for (Element g = 0; g < e.finite().order(); ++g) {
      RationalVector cls(k, 0);
      cls[0] = 1;
      auto r = build_qx_cocycle(e, g, PLPath::linear(RationalVector(k, 0), cls));
      auto b = clutch(e, invert(e, r.cocycle));
      CHECK(in_sum(r.clutch, b));
    }
  }
  CHECK(alphas > 0);
}
