#include "commtop/catalog.hpp"
#include "commtop/commands.hpp"
#include "commtop/coset_poset.hpp"
#include "commtop/error.hpp"
#include "commtop/group_ring.hpp"
#include "commtop/simplicial.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace commtop {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<FiniteGroup> catalog_up_to(std::size_t order) {
  std::vector<FiniteGroup> out;
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    if (g.order() <= order) out.push_back(g);
  }
  return out;
}

Element named(const FiniteGroup& g, std::string_view name) {
  auto e = g.find(name);
  if (!e) throw InvalidArgument(g.label() + " has no element " + std::string(name));
  return *e;
}

std::vector<AbelianGroupInvariants> reduced_e2g(const FiniteGroup& g, std::size_t top, std::uint64_t budget) {
  auto h = homology_range(build_e(g, top + 1, budget), top);
  h[0] = reduce_degree_zero(h[0]);
  return h;
}

std::string list_string(const std::vector<AbelianGroupInvariants>& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? ", " : "") + to_string(h[i]);
  return s + "]";
}

bool all_trivial(const std::vector<AbelianGroupInvariants>& h) {
  return std::all_of(h.begin(), h.end(), [](const auto& a) { return a.is_trivial(); });
}

Outcome coinvariants_lemma(std::uint64_t) {
  Outcome o;
  auto groups = catalog_up_to(24);
  for (const auto& g : groups) {
    auto w = coinvariants(g), ab = abelianization(g);
    if (!(w == ab)) o.fail(g.label() + ": W_A = " + to_string(w) + ", abelianization " + to_string(ab));
  }
  if (groups.size() < 15) o.fail("only " + std::to_string(groups.size()) + " catalog groups");
  if (o.pass) o.detail = std::to_string(groups.size()) + " groups of order <= 24";
  return o;
}

Outcome moore_theorem(std::uint64_t budget) {
  Outcome o;
  std::size_t abelian = 0, total = 0;
  for (const auto& g : catalog_up_to(16)) {
    ++total;
    auto h = moore_h2(g, budget);
    if (g.is_abelian()) {
      ++abelian;
      if (!(h == abelian_invariants(g))) o.fail(g.label() + ": H_2 = " + to_string(h));
    }
    auto w = coinvariants(g);
    if (!(h == w)) o.fail(g.label() + ": H_2 = " + to_string(h) + ", coinvariants " + to_string(w));
  }
  if (o.pass) o.detail = std::to_string(total) + " groups, " + std::to_string(abelian) + " abelian";
  return o;
}

Outcome pi2_instances(std::uint64_t budget) {
  Outcome o;
  std::vector<AbelianGroupInvariants> cases;
  for (long n = 2; n <= 6; ++n) cases.push_back(AbelianGroupInvariants::finite({BigInt(n)}));
  cases.push_back(AbelianGroupInvariants::finite({BigInt(2), BigInt(2)}));
  std::string seen;
  for (const auto& pi1 : cases) {
    try {
      auto pi2 = pi2_e2_connected(pi1, budget);
      if (!(pi2 == pi1)) o.fail(to_string(pi1) + " -> " + to_string(pi2));
      seen += (seen.empty() ? "" : " ") + to_string(pi2);
    } catch (const InvariantViolation& e) {
      o.fail(e.what());
    }
  }
  if (o.pass) o.detail = "pi_2 = " + seen;
  return o;
}

Outcome coset_equivalence(std::uint64_t budget) {
  Outcome o;
  for (const char* name : {"S3", "D8", "Q8", "Z6", "Z2xZ2"}) {
    auto g = catalog::group(name);
    auto e = reduced_e2g(g, 2, budget);
    auto c = coset_poset_homology(g, 2, true, budget);
    if (e != c) o.fail(std::string(name) + ": E(2,G) " + list_string(e) + ", coset poset " + list_string(c));
    if (std::string_view(name) == "S3") {
      auto z8 = AbelianGroupInvariants::free(8);
      if (!(e[1] == z8 && c[1] == z8)) o.fail("S3: reduced H_1 is not Z^8");
    }
  }
  if (o.pass) o.detail = "5 groups agree in degrees 0..2; S3 gives Z^8 in degree 1";
  return o;
}

Outcome abelian_acyclic(std::uint64_t budget) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : catalog_up_to(16)) {
    ++checked;
    auto e = reduced_e2g(g, 2, budget);
    auto c = coset_poset_homology(g, 2, true, budget);
    if (g.is_abelian() != all_trivial(e)) o.fail(g.label() + ": E(2,G) gives " + list_string(e));
    if (g.is_abelian() != all_trivial(c)) o.fail(g.label() + ": coset poset gives " + list_string(c));
  }
  if (o.pass) o.detail = std::to_string(checked) + " groups, both models";
  return o;
}

Outcome psi_suite(std::uint64_t budget) {
  Outcome o;
  auto o2 = extension_catalog::extension("O2");
  auto m = psi_star(o2, named(o2.finite(), "tau"));
  if (to_string(m) != "[[2]]") o.fail("O2: psi_*(tau) = " + to_string(m));
  auto lat = commutator_lattices(o2);
  IntMatrix two(1, 1);
  two(0, 0) = 2;
  if (!(lat.sum == Lattice(1, two))) o.fail("O2: sum = " + to_string(lat.sum));
  if (!(lat.subtorus == Lattice::whole(1))) o.fail("O2: subtorus = " + to_string(lat.subtorus));
  auto nt = extension_catalog::extension("NT_SU2");
  if (!(commutator_lattices(nt).subtorus == Lattice::whole(1)))
    o.fail("NT_SU2: subtorus = " + to_string(commutator_lattices(nt).subtorus));
  auto cover = single_commutator_cover(nt, 12, 0, budget);
  if (!cover.covered)
    o.fail("NT_SU2: " + std::to_string(cover.missing.size()) + " of " + std::to_string(cover.target_count) +
           " points not found within budget");
  if (o.pass)
    o.detail = "O2 psi = (2), sum 2Z, subtorus Z; NT_SU2 subtorus Z, " + std::to_string(cover.found_count) +
               " single commutators at N = 12";
  return o;
}

RationalVector random_point(std::mt19937_64& rng, std::size_t k) {
  RationalVector v(k);
  for (auto& x : v) {
    long d = 1 + static_cast<long>(rng() % 12);
    x = Rational(static_cast<long>(rng() % d), d);
    x.canonicalize();
  }
  return v;
}

Outcome commutator_identity(std::uint64_t) {
  Outcome o;
  std::mt19937_64 rng(20261018);
  std::size_t samples = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto e = extension_catalog::random_extension(seed);
    for (int i = 0; i < 1000; ++i, ++samples) {
      Element p = rng() % e.finite().order(), q = rng() % e.finite().order();
      auto s = random_point(rng, e.rank()), t = random_point(rng, e.rank());
      if (!commutator_identity_holds(e, p, q, s, t))
        o.fail(e.label() + ": fails at p = " + e.finite().name(p) + ", q = " + e.finite().name(q) + ", s = " +
               vector_to_string(s) + ", t = " + vector_to_string(t));
    }
  }
  if (o.pass) o.detail = std::to_string(samples) + " samples over 10 random extensions";
  return o;
}

Outcome psi_coherence(std::uint64_t budget) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : extension_catalog::names()) {
    auto e = extension_catalog::extension(name);
    auto points = e.elements_with_denominator(12, budget);
    for (Element q = 0; q < e.finite().order(); ++q) {
      IntMatrix m = psi_star(e, q);
      for (const auto& x : points) {
        if (x.f != kIdentity) continue;
        ++checked;
        auto lhs = e.commutator(e.lift(q), e.torus(x.t));
        auto rhs = e.torus(m.apply(std::span<const Rational>(x.t)));
        if (!(lhs == rhs))
          o.fail(name + ": [" + e.finite().name(q) + ", " + vector_to_string(x.t) + "] = " +
                 to_string(lhs, e.finite()));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " brackets over " +
                         std::to_string(extension_catalog::names().size()) + " extensions";
  return o;
}

Outcome cocycle_suite(std::uint64_t) {
  Outcome o;
  auto o2 = extension_catalog::extension("O2");
  auto alpha = build_alpha_cocycle(o2, kIdentity, named(o2.finite(), "tau"), {{BigInt(1)}, {BigInt(0)}, 1});
  auto diag = validate(o2, alpha);
  if (!diag.ok) o.fail("alpha: " + diag.first_failure());
  auto w = clutch(o2, alpha).winding;
  if (w != RationalVector{0}) o.fail("winding of alpha is " + vector_to_string(w));
  auto wi = clutch(o2, invert(o2, alpha)).winding;
  if (wi.size() != 1 || abs(wi[0]) != 2) o.fail("winding of the inverse is " + vector_to_string(wi));

  std::mt19937_64 rng(4);
  std::size_t loops = 0;
  for (const auto& name : extension_catalog::names()) {
    auto e = extension_catalog::extension(name);
    const std::size_t k = e.rank();
    for (Element q = 0; q < e.finite().order(); ++q) {
      Lattice image(k, psi_star(e, q));
      for (int trial = 0; trial < 20; ++trial, ++loops) {
        std::vector<PLPoint> pts{{0, RationalVector(k, 0)}};
        std::vector<BigInt> cls(k);
        RationalVector end(k);
        for (std::size_t i = 0; i < k; ++i) {
          cls[i] = static_cast<long>(rng() % 9) - 4;
          end[i] = Rational(cls[i]);
        }
        const long inner = 1 + static_cast<long>(rng() % 3);
        for (long j = 1; j <= inner; ++j) {
          RationalVector v(k);
          for (auto& c : v) {
            c = Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6));
            c.canonicalize();
          }
          Rational time(j, inner + 1);
          time.canonicalize();
          pts.push_back({time, v});
        }
        pts.push_back({1, end});
        auto r = build_qx_cocycle(e, q, PLLoop(pts, kIdentity));
        if (!r.clutch.identity_component) {
          o.fail(name + ": qx loop outside the identity component");
          continue;
        }
        std::vector<BigInt> wv;
        bool integral = true;
        for (const auto& c : r.clutch.winding) {
          integral = integral && c.get_den() == 1;
          wv.push_back(c.get_num());
        }
        if (!integral || !image.contains(wv))
          o.fail(name + ", q = " + e.finite().name(q) + ": winding " + vector_to_string(r.clutch.winding) +
                 " outside im psi_*(q) = " + to_string(image));
      }
    }
  }
  if (o.pass)
    o.detail = "alpha windings 0 and " + vector_to_string(wi) + "; " + std::to_string(loops) +
               " qx loops in im psi_*(q)";
  return o;
}

Outcome pullback(std::uint64_t budget) {
  Outcome o;
  auto z4 = catalog::group("Z4"), z2 = catalog::group("Z2"), q8 = catalog::group("Q8");
  Element z4c = named(z4, "a^2");
  auto cp1 = central_product(z4, z4, {{kIdentity, kIdentity}, {z4c, z4c}});
  auto cp2 = central_product(z2, q8, {{kIdentity, kIdentity}, {named(z2, "a"), named(q8, "-1")}});
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& [h, k, cp, label] :
         {std::tuple{&z4, &z4, &cp1, "Z4 x_Z2 Z4"}, std::tuple{&z2, &q8, &cp2, "Z2 x_Z2 Q8"}}) {
      auto r = check_central_product_pullback(*h, *k, *cp, 2, n, budget);
      ++checked;
      if (!r.ok) o.fail(std::string(label) + ", n = " + std::to_string(n) + ": " + r.failure);
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " bijections, n = 1..3";
  return o;
}

Outcome simpliciality(std::uint64_t budget) {
  Outcome o;
  std::size_t groups = 0, triples = 0;
  for (const auto& g : catalog_up_to(12)) {
    ++groups;
    auto e = build_e(g, 3, budget);
    auto c = build_c(g, 3, budget);
    auto b = build_nerve(g, 3, budget);
    auto pc = check_simplicial_map(e, c, [&](std::span<const Element> t) { return p_map(g, t); });
    if (!pc.ok) o.fail(g.label() + ": p: " + pc.failure);
    auto cc = check_simplicial_map(e, b, [&](std::span<const Element> t) { return commutator_map(g, t); });
    if (!cc.ok) o.fail(g.label() + ": commutator map: " + cc.failure);
    const auto& e2 = e.level(2);
    for (std::size_t i = 0; i < e2.size(); ++i, ++triples) {
      auto t = e2[i];
      if (g.mul(g.commutator(t[0], t[1]), g.commutator(t[1], t[2])) != g.commutator(t[0], t[2]))
        o.fail(g.label() + ": [g0,g1][g1,g2] != [g0,g2] at (" + g.name(t[0]) + "," + g.name(t[1]) + "," +
               g.name(t[2]) + ")");
    }
  }
  if (o.pass)
    o.detail = std::to_string(groups) + " groups up to level 3, " + std::to_string(triples) + " triples";
  return o;
}

Outcome realization(std::uint64_t budget) {
  Outcome o;
  auto q8 = catalog::group("Q8");
  auto k = center(q8);
  for (Element c1 : k.elements())
    for (Element c2 : k.elements()) {
      auto t = realize_triple(q8, k, c1, c2, budget);
      if (!t) {
        o.fail("no triple for (" + q8.name(c1) + ", " + q8.name(c2) + ")");
        continue;
      }
      const auto& x = *t;
      if (q8.commutator(x[1], x[2]) != c1 || q8.commutator(x[0], x[2]) != c2 || q8.commutator(x[0], x[1]) != kIdentity)
        o.fail("triple for (" + q8.name(c1) + ", " + q8.name(c2) + ") has the wrong commutators");
    }
  if (o.pass) o.detail = "all 4 pairs realized";
  return o;
}

struct Criterion {
  const char* name;
  const char* ref;
  Outcome (*run)(std::uint64_t);
};

const Criterion kCriteria[kCriterionCount] = {
    {"coinvariants equal the abelianization", "coinvariants lemma", coinvariants_lemma},
    {"Moore-complex H_2", "Moore complex proposition: H_2 is A for abelian A and the coinvariants in general",
     moore_theorem},
    {"pi_2 of E(2,G) for connected G", "main theorem, part 2: SO(3), PSU(n), pi_1 = Z/2 x Z/2", pi2_instances},
    {"E(2,G) agrees with the coset poset", "E(2,G) is homotopy equivalent to the coset poset of abelian subgroups",
     coset_equivalence},
    {"abelian iff acyclic", "E(2,G) is contractible iff G is abelian", abelian_acyclic},
    {"psi lattices", "commutator subtorus: multiplication by 2 for O(2), T = [N(T),N(T)]_0 for SU(2)", psi_suite},
    {"commutator identity", "commutator expansion lemma for extensions of F by T", commutator_identity},
    {"psi coherence", "[q, t] = psi_*(q) t on the torus", psi_coherence},
    {"cocycle suite", "inverse cocycle and its clutching function; null-homotopic phi_alpha", cocycle_suite},
    {"central-product pullback", "C_n of a central product is a pullback", pullback},
    {"simpliciality of p and the commutator map", "p and the commutator map are simplicial", simpliciality},
    {"almost-commuting realization", "almost commuting triples in a finite model", realization},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t budget) {
  if (id < 1 || id > kCriterionCount) throw InvalidArgument("criterion id out of range");
  const Criterion& c = kCriteria[id - 1];
  CriterionResult r{id, c.name, c.ref, false, {}, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.run(budget);
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> verify_all(std::uint64_t budget, unsigned threads) {
  std::vector<CriterionResult> out(kCriterionCount);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, kCriterionCount);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < kCriterionCount; i = next++) out[i] = run_criterion(i + 1, budget);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace commtop
