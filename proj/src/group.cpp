#include "commtop/group.hpp"

#include "commtop/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace commtop {

namespace {

std::string cycle_notation(const std::vector<std::uint32_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names,
                         std::string label) {
  if (order == 0) throw InvalidArgument("group order must be positive");
  if (table.size() != order * order)
    throw InvalidArgument("table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(order * order));
  for (auto v : table)
    if (v >= order) throw InvalidArgument("table entry " + std::to_string(v) + " out of range");
  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
  for (std::size_t a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw InvalidArgument("element 0 is not the identity at " + std::to_string(a));
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[at(a, b)]++) throw InvalidArgument("row " + std::to_string(a) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[at(b, a)]++) throw InvalidArgument("column " + std::to_string(a) + " is not a permutation");
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw InvalidArgument("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
  };
  if (order <= 64) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(order);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  auto d = std::make_shared<Data>();
  d->order = order;
  d->inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (at(a, b) == 0) d->inverse[a] = Element(b);
  if (names.empty()) {
    names.reserve(order);
    for (std::size_t a = 0; a < order; ++a) names.push_back(a == 0 ? "1" : "g" + std::to_string(a));
  }
  if (names.size() != order) throw InvalidArgument("names list does not match group order");
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != order) throw InvalidArgument("element names are not distinct");
  d->table = std::move(table);
  d->names = std::move(names);
  d->label = std::move(label);
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           const std::vector<std::vector<std::uint32_t>>& generators,
                                           const std::vector<std::string>& generator_names, std::string label) {
  using Perm = std::vector<std::uint32_t>;
  if (!generator_names.empty() && generator_names.size() != generators.size())
    throw InvalidArgument("generator name count does not match generator count");
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidArgument("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]++) throw InvalidArgument("generator is not a permutation of 0.." +
                                                         std::to_string(degree - 1));
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  // Words as (generator, exponent) runs, rendered "r^2*s".
  std::vector<std::vector<std::pair<std::size_t, int>>> words{{}};
  std::map<Perm, Element> index{{id, 0}};
  // Words compose left to right: (p*q)(i) = q(p(i)).
  auto compose = [&](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Perm next = compose(elems[head], generators[gi]);
      if (index.count(next)) continue;
      index.emplace(next, Element(elems.size()));
      auto w = words[head];
      if (!w.empty() && w.back().first == gi) ++w.back().second;
      else w.emplace_back(gi, 1);
      words.push_back(std::move(w));
      elems.push_back(std::move(next));
      if (elems.size() > 100000) throw BudgetExceeded("permutation group closure exceeds 100000 elements");
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> names;
  if (generator_names.empty()) {
    for (const auto& p : elems) names.push_back(cycle_notation(p));
  } else {
    for (const auto& w : words) {
      std::string s;
      for (const auto& [gi, e] : w) {
        if (!s.empty()) s += "*";
        s += generator_names[gi];
        if (e > 1) s += "^" + std::to_string(e);
      }
      names.push_back(s.empty() ? "1" : s);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(names), std::move(label));
}

Element FiniteGroup::power(Element a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Element r = kIdentity;
  for (long long i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != kIdentity; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (Element a = 0; a < order(); ++a)
    if (d_->names[a] == name) return a;
  return std::nullopt;
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return FiniteGroup(std::shared_ptr<const Data>(std::move(d)));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), mask_(parent_.order(), false) {
  for (auto e : elements_) mask_[e] = true;
}

Subgroup Subgroup::generated(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{kIdentity};
  in[kIdentity] = true;
  for (auto s : generators)
    if (s >= g.order()) throw InvalidArgument("generator index out of range");
  // Finite group: closure under right multiplication by generators suffices.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto s : generators) {
      Element x = g.mul(elems[head], s);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(g, std::move(elems));
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto e : elements)
    if (e >= g.order()) throw InvalidArgument("subgroup element out of range");
  Subgroup s(g, std::move(elements));
  if (!s.contains(kIdentity)) throw InvalidArgument("subgroup does not contain the identity");
  for (auto a : s.elements_) {
    if (!s.contains(g.inv(a))) throw InvalidArgument("subgroup not closed under inverse at " + g.name(a));
    for (auto b : s.elements_)
      if (!s.contains(g.mul(a, b)))
        throw InvalidArgument("subgroup not closed under product at (" + g.name(a) + "," + g.name(b) + ")");
  }
  return s;
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g, std::move(all));
}

bool Subgroup::is_abelian() const {
  for (auto a : elements_)
    for (auto b : elements_)
      if (!parent_.commute(a, b)) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (Element g = 0; g < parent_.order(); ++g)
    for (auto a : elements_)
      if (!contains(parent_.mul(parent_.mul(parent_.inv(g), a), g))) return false;
  return true;
}

bool Subgroup::is_central() const {
  for (auto a : elements_)
    for (Element g = 0; g < parent_.order(); ++g)
      if (!parent_.commute(a, g)) return false;
  return true;
}

// ---------------------------------------------------------------------------

void TupleList::push_back(std::span<const Element> t) {
  if (t.size() != width_) throw InvalidArgument("tuple width mismatch");
  if (width_ == 0) {
    ++empty_count_;
    return;
  }
  data_.insert(data_.end(), t.begin(), t.end());
}

std::optional<std::size_t> TupleList::find_sorted(std::span<const Element> t) const {
  if (width_ == 0) return empty_count_ ? std::optional<std::size_t>(0) : std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto m = (*this)[mid];
    if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(t.begin(), t.end(), (*this)[lo].begin())) return lo;
  return std::nullopt;
}

void TupleList::sort_lexicographic() {
  if (width_ == 0) return;
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto x = (*this)[a], y = (*this)[b];
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<Element> sorted;
  sorted.reserve(data_.size());
  for (auto i : order) {
    auto t = (*this)[i];
    sorted.insert(sorted.end(), t.begin(), t.end());
  }
  data_ = std::move(sorted);
}

// ---------------------------------------------------------------------------

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.commute(a, b);
    if (central) z.push_back(a);
  }
  return Subgroup::from_elements(g, std::move(z));
}

Subgroup centralizer(const FiniteGroup& g, Element a) {
  std::vector<Element> c;
  for (Element b = 0; b < g.order(); ++b)
    if (g.commute(a, b)) c.push_back(b);
  return Subgroup::from_elements(g, std::move(c));
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::set<Element> gens;
  for (auto a : h.elements())
    for (auto b : k.elements()) gens.insert(g.commutator(a, b));
  std::vector<Element> v(gens.begin(), gens.end());
  return Subgroup::generated(g, v);
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& normal) {
  if (!normal.is_normal()) throw InvalidArgument("quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  std::vector<Element> map(n, Element(-1));
  std::vector<Element> reps;
  for (Element a = 0; a < n; ++a) {
    if (map[a] != Element(-1)) continue;
    Element id = Element(reps.size());
    reps.push_back(a);
    for (auto z : normal.elements()) map[g.mul(a, z)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = map[g.mul(reps[i], reps[j])];
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(r == kIdentity ? "1" : g.name(r) + "N");
  return {FiniteGroup(m, std::move(table), std::move(names), g.label() + "/N"), std::move(map)};
}

AbelianGroupInvariants abelian_invariants(const FiniteGroup& a) {
  if (!a.is_abelian()) throw InvalidArgument("abelian_invariants on a nonabelian group");
  std::size_t n = a.order();
  std::vector<std::size_t> primes;
  for (std::size_t p = 2, m = n; m > 1; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  // For each prime p, count(j) = #{x : x^(p^j) = 1} = p^(sum_i min(j, e_i)).
  // The jump count(j)/count(j-1) = p^(#{i : e_i >= j}).
  std::vector<std::vector<std::size_t>> exponents;  // per prime, descending
  for (auto p : primes) {
    std::size_t ppart = 1;
    while (n % (ppart * p) == 0) ppart *= p;
    std::vector<std::size_t> at_least;  // at_least[j-1] = #{i: e_i >= j}
    std::size_t prev = 1, pj = 1;
    while (prev < ppart) {
      pj *= p;
      std::size_t count = 0;
      for (Element x = 0; x < n; ++x)
        if (a.power(x, static_cast<long long>(pj)) == kIdentity) ++count;
      std::size_t ratio = count / prev, r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least.push_back(r);
      prev = count;
    }
    std::vector<std::size_t> e;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      std::size_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (std::size_t c = next; c < at_least[j]; ++c) e.push_back(j + 1);
    }
    std::sort(e.rbegin(), e.rend());
    exponents.push_back(std::move(e));
  }
  std::size_t factors = 0;
  for (const auto& e : exponents) factors = std::max(factors, e.size());
  std::vector<BigInt> out(factors, BigInt(1));  // out[0] is the largest
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t i = 0; i < exponents[pi].size(); ++i) {
      BigInt pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), primes[pi], exponents[pi][i]);
      out[i] *= pe;
    }
  std::reverse(out.begin(), out.end());
  return AbelianGroupInvariants{0, std::move(out)};
}

AbelianGroupInvariants abelianization(const FiniteGroup& g) {
  auto all = Subgroup::whole(g);
  auto derived = commutator_subgroup(g, all, all);
  return abelian_invariants(quotient(g, derived).group);
}

namespace {

template <class Accept>
TupleList enumerate_tuples(const FiniteGroup& g, std::size_t n, std::uint64_t budget, std::string_view what,
                           Accept accept) {
  check_budget(saturating_pow(g.order(), n), budget, what);
  TupleList out(n);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  Tuple t(n, 0);
  // Depth-first in lexicographic order; entry i only needs checking against 0..i-1.
  std::size_t depth = 0;
  t[0] = 0;
  const Element order = Element(g.order());
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < depth && ok; ++j) ok = accept(t[j], t[depth]);
    if (ok) {
      if (depth + 1 == n) {
        out.push_back(t);
      } else {
        ++depth;
        t[depth] = 0;
        continue;
      }
    }
    // advance
    while (true) {
      if (++t[depth] < order) break;
      if (depth == 0) return out;
      --depth;
    }
  }
}

}  // namespace

TupleList commuting_tuples(const FiniteGroup& g, std::size_t n, std::uint64_t budget) {
  return enumerate_tuples(g, n, budget, "commuting_tuples", [&](Element a, Element b) { return g.commute(a, b); });
}

TupleList almost_commuting_tuples(const FiniteGroup& g, const Subgroup& k, std::size_t n, std::uint64_t budget) {
  if (!k.is_central()) throw InvalidArgument("almost_commuting_tuples: K is not central");
  return enumerate_tuples(g, n, budget, "almost_commuting_tuples",
                          [&](Element a, Element b) { return k.contains(g.commutator(a, b)); });
}

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k) {
  const std::size_t nh = h.order(), nk = k.order(), n = nh * nk;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element x = h.mul(Element(a / nk), Element(b / nk));
      Element y = k.mul(Element(a % nk), Element(b % nk));
      table[a * n + b] = Element(x * nk + y);
    }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a)
    names.push_back(a == 0 ? "1" : "(" + h.name(Element(a / nk)) + "," + k.name(Element(a % nk)) + ")");
  return FiniteGroup(n, std::move(table), std::move(names), h.label() + "x" + k.label());
}

CentralProduct central_product(const FiniteGroup& h, const FiniteGroup& k,
                               const std::vector<std::pair<Element, Element>>& identification) {
  std::vector<Element> zh, zk;
  std::map<Element, Element> phi;
  for (auto [a, b] : identification) {
    if (a >= h.order() || b >= k.order()) throw InvalidArgument("central_product: element out of range");
    if (!phi.emplace(a, b).second) throw InvalidArgument("central_product: identification is not a function");
    zh.push_back(a);
    zk.push_back(b);
  }
  if (!phi.count(kIdentity) || phi.at(kIdentity) != kIdentity)
    throw InvalidArgument("central_product: identification must map 1 to 1");
  auto sh = Subgroup::from_elements(h, zh);
  auto sk = Subgroup::from_elements(k, zk);
  if (sh.order() != zh.size() || sk.order() != zk.size())
    throw InvalidArgument("central_product: identification is not a bijection");
  if (!sh.is_central()) throw InvalidArgument("central_product: Z is not central in H");
  if (!sk.is_central()) throw InvalidArgument("central_product: Z is not central in K");
  for (auto a : zh)
    for (auto b : zh)
      if (phi.at(h.mul(a, b)) != k.mul(phi.at(a), phi.at(b)))
        throw InvalidArgument("central_product: identification is not a homomorphism");

  auto prod = direct_product(h, k);
  const std::size_t nk = k.order();
  std::vector<Element> anti;
  for (auto [a, b] : phi) anti.push_back(Element(a * nk + k.inv(b)));
  auto z = Subgroup::from_elements(prod, anti);
  auto q = quotient(prod, z);
  // Rename cosets after their representative in H x K.
  std::vector<std::string> pretty(q.group.order());
  std::vector<bool> named(q.group.order(), false);
  for (Element a = 0; a < prod.order(); ++a) {
    Element c = q.map[a];
    if (!named[c]) {
      named[c] = true;
      pretty[c] = prod.name(a);
    }
  }
  std::vector<Element> table(q.group.table().begin(), q.group.table().end());
  FiniteGroup group(q.group.order(), std::move(table), std::move(pretty), h.label() + "*" + k.label());
  return {std::move(group), std::move(q.map), nk};
}

std::optional<Tuple> realize_triple(const FiniteGroup& g, const Subgroup& k, Element c1, Element c2,
                                    std::uint64_t budget) {
  if (!k.is_central()) throw InvalidArgument("realize_triple: K is not central");
  if (!k.contains(c1) || !k.contains(c2)) throw InvalidArgument("realize_triple: c1, c2 must lie in K");
  check_budget(saturating_pow(g.order(), 3), budget, "realize_triple");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      if (!g.commute(a, b)) continue;
      for (Element c = 0; c < g.order(); ++c)
        if (g.commutator(b, c) == c1 && g.commutator(a, c) == c2) return Tuple{a, b, c};
    }
  return std::nullopt;
}

PullbackCheck check_central_product_pullback(const FiniteGroup& h, const FiniteGroup& k, const CentralProduct& cp,
                                             std::size_t z_order, std::size_t n, std::uint64_t budget) {
  if (!h.is_abelian()) throw InvalidArgument("central product pullback: H must be abelian");
  PullbackCheck out;
  TupleList ck = commuting_tuples(k, n, budget);
  TupleList target = commuting_tuples(cp.group, n, budget);
  const std::uint64_t h_tuples = saturating_pow(h.order(), n);
  check_budget(h_tuples * ck.size(), budget, "central product pullback");
  out.source_count = std::size_t(h_tuples) * ck.size();
  out.target_count = target.size();
  out.fiber_size = std::size_t(saturating_pow(z_order, n));

  std::vector<std::size_t> fibers(target.size(), 0);
  Tuple hs(n), image(n);
  for (std::uint64_t code = 0; code < h_tuples; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      hs[i] = Element(rest % h.order());
      rest /= h.order();
    }
    for (std::size_t j = 0; j < ck.size(); ++j) {
      for (std::size_t i = 0; i < n; ++i) image[i] = cp.project(hs[i], ck[j][i]);
      auto idx = target.find_sorted(image);
      if (!idx) {
        if (out.ok) {
          out.ok = false;
          out.failure = "image of a source tuple is not a commuting tuple";
        }
        continue;
      }
      ++fibers[*idx];
    }
  }
  for (std::size_t t = 0; t < fibers.size() && out.ok; ++t)
    if (fibers[t] != out.fiber_size) {
      out.ok = false;
      out.failure = "fiber over target tuple " + std::to_string(t) + " has size " + std::to_string(fibers[t]) +
                    ", expected " + std::to_string(out.fiber_size);
    }
  return out;
}

}  // namespace commtop
