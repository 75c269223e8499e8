#include "commtop/torus.hpp"

#include "commtop/catalog.hpp"
#include "commtop/error.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <random>

namespace commtop {

namespace {

std::atomic<std::uint64_t> next_extension_id{1};

RationalVector reduce(RationalVector t) {
  for (auto& x : t) x = frac(x);
  return t;
}

std::string vector_string(const RationalVector& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += format_rational(t[i]);
  }
  return s + ")";
}

bool vector_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct ExtLess {
  bool operator()(const ExtElement& a, const ExtElement& b) const { return ext_less(a, b); }
};

}  // namespace

std::string to_string(const ExtElement& x, const FiniteGroup& f) {
  return "(" + vector_string(x.t) + ", " + f.name(x.f) + ")";
}

bool ext_less(const ExtElement& a, const ExtElement& b) {
  if (a.t != b.t) return vector_less(a.t, b.t);
  return a.f < b.f;
}

TorusExtension::TorusExtension(std::size_t rank, FiniteGroup finite, std::vector<IntMatrix> action,
                               std::vector<std::pair<RationalVector, Element>> quotient, std::string label) {
  auto d = std::make_shared<Data>(Data{rank, std::move(finite), std::move(action), std::move(quotient), {},
                                       std::move(label), next_extension_id++});
  const FiniteGroup& f = d->finite;

  if (d->action.size() != f.order())
    throw InvalidArgument("action lists " + std::to_string(d->action.size()) + " matrices for a group of order " +
                          std::to_string(f.order()));
  for (Element x = 0; x < f.order(); ++x) {
    const IntMatrix& m = d->action[x];
    if (m.rows() != rank || m.cols() != rank)
      throw InvalidArgument("ρ(" + f.name(x) + ") is not " + std::to_string(rank) + "x" + std::to_string(rank));
    if (abs(determinant(m)) != 1) throw InvalidArgument("ρ(" + f.name(x) + ") is not invertible over Z");
  }
  if (!(d->action[kIdentity] == IntMatrix::identity(rank))) throw InvalidArgument("ρ(1) is not the identity");
  for (Element x = 0; x < f.order(); ++x)
    for (Element y = 0; y < f.order(); ++y)
      if (!(d->action[f.mul(x, y)] == d->action[x] * d->action[y]))
        throw InvalidArgument("ρ not a homomorphism at (" + f.name(x) + "," + f.name(y) + ")");

  // Central quotient: validate generators, then close up in the split extension.
  for (auto& [t, z] : d->quotient) {
    if (t.size() != rank) throw InvalidArgument("quotient generator torus part has wrong length");
    if (z >= f.order()) throw InvalidArgument("quotient generator names an unknown element");
    t = reduce(t);
    const std::string where = "quotient generator (" + vector_string(t) + ", " + f.name(z) + ")";
    if (!(d->action[z] == IntMatrix::identity(rank))) throw InvalidArgument(where + " is not central: ρ(f) != I");
    for (Element g = 0; g < f.order(); ++g) {
      if (!f.commute(z, g)) throw InvalidArgument(where + " is not central: f is not central in F");
      auto moved = d->action[g].apply(std::span<const Rational>(t));
      for (std::size_t i = 0; i < rank; ++i)
        if (Rational(moved[i] - t[i]).get_den() != 1)
          throw InvalidArgument(where + " is not central: not fixed by ρ(" + f.name(g) + ")");
    }
  }
  d_ = d;
  std::vector<ExtElement> central{ExtElement{RationalVector(rank, 0), kIdentity, d->id}};
  std::deque<ExtElement> queue{central.front()};
  while (!queue.empty()) {
    ExtElement x = queue.front();
    queue.pop_front();
    for (const auto& [t, z] : d->quotient) {
      ExtElement y = split_multiply(x, ExtElement{t, z, d->id});
      if (std::find(central.begin(), central.end(), y) != central.end()) continue;
      if (central.size() >= 100000) throw InvalidArgument("central quotient subgroup is too large or infinite");
      central.push_back(y);
      queue.push_back(y);
    }
  }
  std::sort(central.begin(), central.end(), ext_less);
  d->central = std::move(central);
}

TorusExtension TorusExtension::from_generator_action(std::size_t rank, FiniteGroup finite,
                                                     const std::vector<std::pair<Element, IntMatrix>>& generator_images,
                                                     std::vector<std::pair<RationalVector, Element>> quotient,
                                                     std::string label) {
  const FiniteGroup& f = finite;
  std::vector<std::optional<IntMatrix>> image(f.order());
  image[kIdentity] = IntMatrix::identity(rank);
  for (const auto& [g, m] : generator_images) {
    if (g >= f.order()) throw InvalidArgument("action generator is not an element of F");
    if (m.rows() != rank || m.cols() != rank)
      throw InvalidArgument("ρ(" + f.name(g) + ") is not " + std::to_string(rank) + "x" + std::to_string(rank));
  }
  std::deque<Element> queue{kIdentity};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& [g, m] : generator_images) {
      Element y = f.mul(x, g);
      IntMatrix candidate = *image[x] * m;
      if (!image[y]) {
        image[y] = candidate;
        queue.push_back(y);
      } else if (!(*image[y] == candidate)) {
        throw InvalidArgument("ρ not a homomorphism at (" + f.name(x) + "," + f.name(g) + ")");
      }
    }
  }
  std::vector<IntMatrix> action;
  for (Element x = 0; x < f.order(); ++x) {
    if (!image[x]) throw InvalidArgument("action generators do not generate " + f.label());
    action.push_back(*image[x]);
  }
  return TorusExtension(rank, std::move(finite), std::move(action), std::move(quotient), std::move(label));
}

void TorusExtension::check_owner(const ExtElement& a) const {
  if (a.owner != d_->id) throw InvalidArgument("element belongs to a different extension");
  if (a.t.size() != d_->rank || a.f >= d_->finite.order()) throw InvalidArgument("malformed extension element");
}

ExtElement TorusExtension::split_multiply(const ExtElement& a, const ExtElement& b) const {
  RationalVector t = d_->action[a.f].apply(std::span<const Rational>(b.t));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = frac(a.t[i] + t[i]);
  return ExtElement{std::move(t), d_->finite.mul(a.f, b.f), d_->id};
}

ExtElement TorusExtension::identity() const { return ExtElement{RationalVector(rank(), 0), kIdentity, d_->id}; }

ExtElement TorusExtension::element(RationalVector t, Element f) const {
  if (t.size() != rank()) throw InvalidArgument("torus vector has length " + std::to_string(t.size()) +
                                                ", extension rank is " + std::to_string(rank()));
  if (f >= finite().order()) throw InvalidArgument("unknown F element");
  return canonical(ExtElement{reduce(std::move(t)), f, d_->id});
}

ExtElement TorusExtension::canonical(const ExtElement& a) const {
  check_owner(a);
  ExtElement best = ExtElement{reduce(a.t), a.f, d_->id};
  for (std::size_t i = 1; i < d_->central.size(); ++i) {
    ExtElement c = split_multiply(a, d_->central[i]);
    if (ext_less(c, best)) best = std::move(c);
  }
  return best;
}

ExtElement TorusExtension::multiply(const ExtElement& a, const ExtElement& b) const {
  check_owner(a);
  check_owner(b);
  return canonical(split_multiply(a, b));
}

ExtElement TorusExtension::inverse(const ExtElement& a) const {
  check_owner(a);
  Element finv = finite().inv(a.f);
  RationalVector t = action(finv).apply(std::span<const Rational>(a.t));
  for (auto& x : t) x = frac(-x);
  return canonical(ExtElement{std::move(t), finv, d_->id});
}

ExtElement TorusExtension::commutator(const ExtElement& a, const ExtElement& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

std::optional<RationalVector> TorusExtension::torus_part(const ExtElement& a) const {
  check_owner(a);
  std::optional<RationalVector> best;
  for (const auto& z : d_->central) {
    ExtElement c = split_multiply(a, z);
    if (c.f == kIdentity && (!best || vector_less(c.t, *best))) best = c.t;
  }
  return best;
}

std::vector<ExtElement> TorusExtension::elements_with_denominator(std::size_t m, std::uint64_t budget) const {
  if (m == 0) throw InvalidArgument("denominator must be positive");
  const std::uint64_t points = saturating_pow(m, rank());
  check_budget(points * finite().order(), budget, "elements with denominator " + std::to_string(m));
  std::vector<ExtElement> out;
  for (Element f = 0; f < finite().order(); ++f)
    for (std::uint64_t code = 0; code < points; ++code) {
      RationalVector t(rank());
      std::uint64_t rest = code;
      for (std::size_t i = rank(); i-- > 0;) {
        t[i] = Rational(long(rest % m), long(m));
        t[i].canonicalize();
        rest /= m;
      }
      out.push_back(ExtElement{std::move(t), f, d_->id});
    }
  return out;
}

IntMatrix psi_star(const TorusExtension& e, Element q) {
  return IntMatrix::identity(e.rank()) - e.action(e.finite().inv(q));
}

CommutatorLattices commutator_lattices(const TorusExtension& e) {
  std::vector<Lattice> images;
  for (Element q = 0; q < e.finite().order(); ++q) images.emplace_back(e.rank(), psi_star(e, q));
  Lattice sum = images.empty() ? Lattice(e.rank()) : lattice_sum(images);
  return {sum, saturate(sum)};
}

Pi1Split pi1_split(const TorusExtension& e) {
  Lattice sub = commutator_lattices(e).subtorus;
  return {sub, complement(sub)};
}

bool in_subtorus(const Lattice& sub, const RationalVector& t) {
  if (t.size() != sub.ambient()) throw InvalidArgument("point and lattice have different ranks");
  Lattice sat = saturate(sub);
  IntMatrix basis = IntMatrix::hstack(sat.basis(), complement(sat).basis());
  IntMatrix inv = inverse_unimodular(basis);
  auto coords = inv.apply(std::span<const Rational>(t));
  for (std::size_t i = sat.rank(); i < coords.size(); ++i)
    if (coords[i].get_den() != 1) return false;
  return true;
}

SingleCommutatorCover single_commutator_cover(const TorusExtension& e, std::size_t n, std::size_t m,
                                              std::uint64_t budget) {
  if (n == 0) throw InvalidArgument("denominator N must be positive");
  if (m == 0) m = n * e.finite().order();
  SingleCommutatorCover out;
  out.denominator = n;
  out.search_denominator = m;

  const Lattice sub = commutator_lattices(e).subtorus;
  const std::size_t r = sub.rank();
  const std::uint64_t grid = saturating_pow(n, r);
  check_budget(grid, budget, "single commutator targets");
  std::map<ExtElement, std::size_t, ExtLess> target_index;
  std::vector<ExtElement> targets;
  for (std::uint64_t code = 0; code < grid; ++code) {
    std::vector<BigInt> u(r);
    std::uint64_t rest = code;
    for (std::size_t i = r; i-- > 0;) {
      u[i] = BigInt(static_cast<unsigned long>(rest % n));
      rest /= n;
    }
    auto lattice_point = sub.basis().apply(std::span<const BigInt>(u));
    RationalVector t(e.rank());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = Rational(lattice_point[i], BigInt(static_cast<unsigned long>(n)));
      t[i].canonicalize();
    }
    ExtElement z = e.torus(std::move(t));
    if (target_index.emplace(z, targets.size()).second) targets.push_back(z);
  }
  out.target_count = targets.size();

  const auto candidates = e.elements_with_denominator(m, budget);
  check_budget(saturating_pow(candidates.size(), 2), budget, "single commutator search pairs");
  std::vector<std::optional<CommutatorWitness>> found(targets.size());
  for (const auto& x : candidates) {
    if (out.found_count == targets.size()) break;
    const ExtElement xc = e.canonical(x);
    const ExtElement xinv = e.inverse(xc);
    for (const auto& y : candidates) {
      ++out.pairs_examined;
      const ExtElement yc = e.canonical(y);
      ExtElement c = e.multiply(e.multiply(xinv, e.inverse(yc)), e.multiply(xc, yc));
      auto it = target_index.find(c);
      if (it == target_index.end() || found[it->second]) continue;
      found[it->second] = CommutatorWitness{c, xc, yc};
      if (++out.found_count == targets.size()) break;
    }
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (found[i])
      out.witnesses.push_back(*found[i]);
    else
      out.missing.push_back(targets[i]);
  }
  out.covered = out.missing.empty();
  return out;
}

bool commutator_identity_holds(const TorusExtension& e, Element p, Element q, const RationalVector& s,
                               const RationalVector& t) {
  const FiniteGroup& f = e.finite();
  auto psi = [&](Element g, const RationalVector& u) { return e.commutator(e.lift(g), e.torus(u)); };
  ExtElement lhs = e.commutator(e.multiply(e.lift(p), e.torus(s)), e.multiply(e.lift(q), e.torus(t)));
  RationalVector minus_s = s;
  for (auto& x : minus_s) x = -x;
  ExtElement rhs = e.commutator(e.lift(p), e.lift(q));
  rhs = e.multiply(rhs, psi(f.commutator(p, q), s));
  rhs = e.multiply(rhs, psi(f.mul(f.mul(f.inv(q), p), q), t));
  rhs = e.multiply(rhs, psi(q, minus_s));
  return lhs == rhs;
}

namespace extension_catalog {

namespace {

FiniteGroup named_cyclic(std::size_t n, const std::string& generator) {
  FiniteGroup z = catalog::cyclic(n);
  std::vector<std::string> names{"1"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? generator : generator + "^" + std::to_string(k));
  return FiniteGroup(n, {z.table().begin(), z.table().end()}, names, "Z" + std::to_string(n));
}

Element must_find(const FiniteGroup& g, std::string_view name) {
  auto e = g.find(name);
  if (!e) throw InvalidArgument("no element named " + std::string(name) + " in " + g.label());
  return *e;
}

TorusExtension cyclic_action(std::size_t n, const std::string& gen, std::vector<std::vector<long long>> rows,
                             const std::string& label,
                             std::vector<std::pair<RationalVector, Element>> quotient = {}) {
  FiniteGroup f = named_cyclic(n, gen);
  IntMatrix m = IntMatrix::from_rows(rows);
  return TorusExtension::from_generator_action(m.rows(), f, {{must_find(f, gen), m}}, std::move(quotient), label);
}

}  // namespace

TorusExtension extension(std::string_view name) {
  if (name == "O2") return cyclic_action(2, "tau", {{-1}}, "O2");
  if (name == "NT_SU2") {
    FiniteGroup f = named_cyclic(4, "w");
    return TorusExtension::from_generator_action(1, f, {{must_find(f, "w"), IntMatrix::from_rows({{-1}})}},
                                                 {{RationalVector{Rational(1, 2)}, must_find(f, "w^2")}}, "NT_SU2");
  }
  if (name == "Z2_diag") return cyclic_action(2, "q", {{-1, 0}, {0, 1}}, "Z2_diag");
  if (name == "Z2_swap") return cyclic_action(2, "q", {{0, 1}, {1, 0}}, "Z2_swap");
  if (name == "Z4_rot") return cyclic_action(4, "q", {{0, -1}, {1, 0}}, "Z4_rot");
  if (name == "Z3_rot") return cyclic_action(3, "q", {{0, -1}, {1, -1}}, "Z3_rot");
  if (name == "Z6_rot") return cyclic_action(6, "q", {{1, -1}, {1, 0}}, "Z6_rot");
  if (name == "trivial") return cyclic_action(2, "q", {{1, 0}, {0, 1}}, "trivial");
  if (name == "S3_perm") {
    FiniteGroup f = catalog::symmetric(3);
    // M(r, p(r)) = 1 makes p -> M a homomorphism for left-to-right composition.
    auto matrix = [&](std::vector<int> p) {
      IntMatrix m(3, 3);
      for (int r = 0; r < 3; ++r) m(r, p[r]) = 1;
      return m;
    };
    return TorusExtension::from_generator_action(
        3, f, {{must_find(f, "(0 1)"), matrix({1, 0, 2})}, {must_find(f, "(0 1 2)"), matrix({1, 2, 0})}}, {},
        "S3_perm");
  }
  if (name == "D8_sq") {
    FiniteGroup f = catalog::dihedral(8);
    return TorusExtension::from_generator_action(2, f,
                                                 {{must_find(f, "r"), IntMatrix::from_rows({{0, -1}, {1, 0}})},
                                                  {must_find(f, "s"), IntMatrix::from_rows({{1, 0}, {0, -1}})}},
                                                 {}, "D8_sq");
  }
  throw ParseError("unknown catalog extension \"" + std::string(name) + "\"");
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> list{"O2",     "NT_SU2", "Z2_diag", "Z2_swap", "Z4_rot",
                                             "Z3_rot", "Z6_rot", "S3_perm", "D8_sq",   "trivial"};
  return list;
}

namespace {

// Signed permutation matrix: column i is sign[i] * e_{perm[i]}.
IntMatrix signed_permutation(const std::vector<int>& perm, const std::vector<int>& sign) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(std::size_t(perm[i]), i) = sign[i];
  return m;
}

std::vector<Element> greedy_generators(const FiniteGroup& f) {
  std::vector<Element> gens;
  Subgroup h = Subgroup::trivial(f);
  for (Element x = 0; x < f.order() && h.order() < f.order(); ++x) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = Subgroup::generated(f, gens);
  }
  return gens;
}

}  // namespace

TorusExtension random_extension(std::uint64_t seed) {
  static const std::vector<std::string> groups{"Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D8", "Q8", "Z8", "Z2xZ4"};
  std::mt19937_64 rng(seed);
  FiniteGroup f = catalog::group(groups[rng() % groups.size()]);
  const auto gens = greedy_generators(f);

  for (int attempt = 0; attempt < 4000; ++attempt) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<std::pair<Element, IntMatrix>> images;
    bool nontrivial = false;
    for (Element g : gens) {
      std::vector<int> perm(k), sign(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& s : sign) s = rng() % 2 ? 1 : -1;
      IntMatrix m = signed_permutation(perm, sign);
      nontrivial = nontrivial || !(m == IntMatrix::identity(k));
      images.emplace_back(g, m);
    }
    if (!nontrivial) continue;
    try {
      TorusExtension base = TorusExtension::from_generator_action(k, f, images);
      // Conjugate by a random unimodular change of basis.
      IntMatrix p = IntMatrix::identity(k);
      for (std::size_t step = 0; step < 2 * k; ++step) {
        std::size_t a = rng() % k, b = rng() % k;
        if (a != b) p.add_row_multiple(a, b, long(rng() % 5) - 2);
      }
      IntMatrix pinv = inverse_unimodular(p);
      std::vector<IntMatrix> action;
      for (Element x = 0; x < f.order(); ++x) action.push_back(p * base.action(x) * pinv);
      return TorusExtension(k, f, std::move(action), {},
                            "random-" + std::to_string(seed) + ":" + f.label() + ":k" + std::to_string(k));
    } catch (const InvalidArgument&) {
      continue;
    }
  }
  throw InvalidArgument("random_extension: no nontrivial action found for seed " + std::to_string(seed));
}

}  // namespace extension_catalog

}  // namespace commtop
