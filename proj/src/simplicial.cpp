#include "commtop/simplicial.hpp"

#include "commtop/error.hpp"

#include <algorithm>

namespace commtop {

namespace {

std::string tuple_string(const FiniteGroup& g, std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += g.name(t[i]);
  }
  return s + ")";
}

// Degree of a stored simplex: E tuples carry one extra entry.
std::size_t width_for(SimplicialModel model, std::size_t k) { return model == SimplicialModel::affine ? k + 1 : k; }

std::uint32_t locate(const TupleList& level, std::span<const Element> t, const FiniteGroup& g, const char* what) {
  auto idx = level.find_sorted(t);
  if (!idx) throw InvariantViolation(std::string(what) + " " + tuple_string(g, t) + " is missing from its level");
  return static_cast<std::uint32_t>(*idx);
}

}  // namespace

Tuple face(const FiniteGroup& g, SimplicialModel model, std::span<const Element> simplex, std::size_t i) {
  Tuple out;
  if (model == SimplicialModel::affine) {
    if (i >= simplex.size()) throw InvalidArgument("face index out of range");
    out.assign(simplex.begin(), simplex.end());
    out.erase(out.begin() + std::ptrdiff_t(i));
    return out;
  }
  const std::size_t k = simplex.size();
  if (i > k || k == 0) throw InvalidArgument("face index out of range");
  if (i == 0) return Tuple(simplex.begin() + 1, simplex.end());
  if (i == k) return Tuple(simplex.begin(), simplex.end() - 1);
  out.assign(simplex.begin(), simplex.begin() + std::ptrdiff_t(i - 1));
  out.push_back(g.mul(simplex[i - 1], simplex[i]));
  out.insert(out.end(), simplex.begin() + std::ptrdiff_t(i + 1), simplex.end());
  return out;
}

Tuple degeneracy(SimplicialModel model, std::span<const Element> simplex, std::size_t i) {
  Tuple out(simplex.begin(), simplex.end());
  if (model == SimplicialModel::affine) {
    if (i >= simplex.size()) throw InvalidArgument("degeneracy index out of range");
    out.insert(out.begin() + std::ptrdiff_t(i), simplex[i]);
  } else {
    if (i > simplex.size()) throw InvalidArgument("degeneracy index out of range");
    out.insert(out.begin() + std::ptrdiff_t(i), kIdentity);
  }
  return out;
}

bool is_degenerate(SimplicialModel model, std::span<const Element> simplex) {
  if (model == SimplicialModel::affine) {
    for (std::size_t i = 1; i < simplex.size(); ++i)
      if (simplex[i] == simplex[i - 1]) return true;
    return false;
  }
  return std::find(simplex.begin(), simplex.end(), kIdentity) != simplex.end();
}

bool is_affinely_commutative(const FiniteGroup& g, std::span<const Element> tuple) {
  std::vector<Element> q;
  for (std::size_t i = 1; i < tuple.size(); ++i) q.push_back(g.mul(g.inv(tuple[i - 1]), tuple[i]));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (!g.commute(q[i], q[j])) return false;
  return true;
}

SimplicialTruncation::SimplicialTruncation(FiniteGroup g, SimplicialModel model, std::vector<TupleList> levels)
    : group_(std::move(g)), model_(model), levels_(std::move(levels)) {
  if (levels_.empty()) throw InvalidArgument("a truncation needs at least level 0");
  const std::size_t n = levels_.size() - 1;
  faces_.resize(n + 1);
  degeneracies_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (levels_[k].width() != width_for(model_, k)) throw InvalidArgument("level width does not match its degree");
    if (k >= 1) {
      faces_[k].resize(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        auto& table = faces_[k][i];
        table.reserve(levels_[k].size());
        for (std::size_t j = 0; j < levels_[k].size(); ++j)
          table.push_back(locate(levels_[k - 1], commtop::face(group_, model_, levels_[k][j], i), group_, "face"));
      }
    }
    if (k < n) {
      degeneracies_[k].resize(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        auto& table = degeneracies_[k][i];
        table.reserve(levels_[k].size());
        for (std::size_t j = 0; j < levels_[k].size(); ++j)
          table.push_back(locate(levels_[k + 1], commtop::degeneracy(model_, levels_[k][j], i), group_, "degeneracy"));
      }
    }
  }
}

bool SimplicialTruncation::is_degenerate(std::size_t k, std::size_t j) const {
  return commtop::is_degenerate(model_, levels_.at(k)[j]);
}

SimplicialTruncation build_c(const FiniteGroup& g, std::size_t max_degree, std::uint64_t budget) {
  std::vector<TupleList> levels;
  for (std::size_t k = 0; k <= max_degree; ++k) levels.push_back(commuting_tuples(g, k, budget));
  return SimplicialTruncation(g, SimplicialModel::commuting_nerve, std::move(levels));
}

SimplicialTruncation build_e(const FiniteGroup& g, std::size_t max_degree, std::uint64_t budget) {
  std::vector<TupleList> levels;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    check_budget(saturating_pow(g.order(), k + 1), budget, "build_e level " + std::to_string(k));
    // E_k = G x C_k through successive quotients.
    TupleList c = commuting_tuples(g, k, budget);
    TupleList level(k + 1);
    Tuple t(k + 1);
    for (Element g0 = 0; g0 < g.order(); ++g0)
      for (std::size_t j = 0; j < c.size(); ++j) {
        t[0] = g0;
        for (std::size_t i = 0; i < k; ++i) t[i + 1] = g.mul(t[i], c[j][i]);
        level.push_back(t);
      }
    level.sort_lexicographic();
    levels.push_back(std::move(level));
  }
  return SimplicialTruncation(g, SimplicialModel::affine, std::move(levels));
}

SimplicialTruncation build_nerve(const FiniteGroup& g, std::size_t max_degree, std::uint64_t budget) {
  std::vector<TupleList> levels;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    check_budget(saturating_pow(g.order(), k), budget, "build_nerve level " + std::to_string(k));
    TupleList level(k);
    Tuple t(k, 0);
    std::uint64_t count = saturating_pow(g.order(), k);
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t rest = n;
      for (std::size_t i = k; i-- > 0;) {
        t[i] = Element(rest % g.order());
        rest /= g.order();
      }
      level.push_back(t);
    }
    levels.push_back(std::move(level));
  }
  return SimplicialTruncation(g, SimplicialModel::nerve, std::move(levels));
}

Tuple p_map(const FiniteGroup& g, std::span<const Element> e) {
  if (!is_affinely_commutative(g, e)) throw InvalidArgument("p_map: " + tuple_string(g, e) + " is not affinely commutative");
  Tuple out;
  for (std::size_t i = 1; i < e.size(); ++i) out.push_back(g.mul(g.inv(e[i - 1]), e[i]));
  return out;
}

Tuple commutator_map(const FiniteGroup& g, std::span<const Element> e) {
  if (!is_affinely_commutative(g, e))
    throw InvalidArgument("commutator_map: " + tuple_string(g, e) + " is not affinely commutative");
  Tuple out;
  for (std::size_t i = 1; i < e.size(); ++i) out.push_back(g.commutator(e[i - 1], e[i]));
  return out;
}

SimplicialCheck check_simplicial_identities(const SimplicialTruncation& s) {
  SimplicialCheck out;
  const std::size_t n = s.max_degree();
  auto fail = [&](std::string what, std::size_t k, std::size_t x) {
    if (out.ok) {
      out.ok = false;
      out.failure = what + " fails at level " + std::to_string(k) + " on " + tuple_string(s.group(), s.level(k)[x]);
    }
  };
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        auto dj = s.face(k, j), di = s.face(k, i);
        auto di_low = s.face(k - 1, i), dj1_low = s.face(k - 1, j - 1);
        for (std::size_t x = 0; x < s.level(k).size(); ++x, ++out.checked)
          if (di_low[dj[x]] != dj1_low[di[x]])
            fail("d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) + "d" +
                     std::to_string(i),
                 k, x);
      }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t size = s.level(k).size();
    for (std::size_t j = 0; j <= k; ++j) {
      auto sj = s.degeneracy(k, j);
      if (k + 2 <= n)
        for (std::size_t i = 0; i <= j; ++i) {
          auto si = s.degeneracy(k, i);
          auto si_up = s.degeneracy(k + 1, i), sj1_up = s.degeneracy(k + 1, j + 1);
          for (std::size_t x = 0; x < size; ++x, ++out.checked)
            if (si_up[sj[x]] != sj1_up[si[x]]) fail("s" + std::to_string(i) + "s" + std::to_string(j), k, x);
        }
      for (std::size_t i = 0; i <= k + 1; ++i) {
        auto di = s.face(k + 1, i);
        for (std::size_t x = 0; x < size; ++x, ++out.checked) {
          std::uint32_t lhs = di[sj[x]];
          std::uint32_t rhs;
          if (i < j)
            rhs = s.degeneracy(k - 1, j - 1)[s.face(k, i)[x]];
          else if (i == j || i == j + 1)
            rhs = std::uint32_t(x);
          else
            rhs = s.degeneracy(k - 1, j)[s.face(k, i - 1)[x]];
          if (lhs != rhs) fail("d" + std::to_string(i) + "s" + std::to_string(j), k, x);
        }
      }
    }
  }
  return out;
}

SimplicialCheck check_simplicial_map(const SimplicialTruncation& source, const SimplicialTruncation& target,
                                     const std::function<Tuple(std::span<const Element>)>& map) {
  SimplicialCheck out;
  const std::size_t n = std::min(source.max_degree(), target.max_degree());
  auto fail = [&](const std::string& what, std::size_t k, std::span<const Element> x) {
    if (out.ok) {
      out.ok = false;
      out.failure = what + " at level " + std::to_string(k) + " on " + tuple_string(source.group(), x);
    }
  };
  for (std::size_t k = 0; k <= n; ++k) {
    const TupleList& level = source.level(k);
    for (std::size_t x = 0; x < level.size(); ++x) {
      Tuple image = map(level[x]);
      auto y = target.level(k).find_sorted(image);
      ++out.checked;
      if (!y) {
        fail("image outside the target level", k, level[x]);
        continue;
      }
      for (std::size_t i = 0; k >= 1 && i <= k; ++i, ++out.checked) {
        Tuple lhs = map(source.level(k - 1)[source.face(k, i)[x]]);
        if (!std::ranges::equal(lhs, target.level(k - 1)[target.face(k, i)[*y]]))
          fail("map does not commute with d" + std::to_string(i), k, level[x]);
      }
      for (std::size_t i = 0; k < n && i <= k; ++i, ++out.checked) {
        Tuple lhs = map(source.level(k + 1)[source.degeneracy(k, i)[x]]);
        if (!std::ranges::equal(lhs, target.level(k + 1)[target.degeneracy(k, i)[*y]]))
          fail("map does not commute with s" + std::to_string(i), k, level[x]);
      }
    }
  }
  return out;
}

ChainComplex chain_complex(const SimplicialTruncation& s, bool normalized) {
  const std::size_t n = s.max_degree();
  ChainComplex cx;
  std::vector<std::vector<std::int64_t>> column_of(n + 1);  // simplex index -> basis index, -1 if dropped
  for (std::size_t k = 0; k <= n; ++k) {
    auto& map = column_of[k];
    map.assign(s.level(k).size(), -1);
    std::int64_t next = 0;
    for (std::size_t j = 0; j < map.size(); ++j)
      if (!normalized || !s.is_degenerate(k, j)) map[j] = next++;
    cx.ranks.push_back(std::size_t(next));
  }
  cx.boundary.emplace_back(0, cx.ranks[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    SparseIntMatrix d(cx.ranks[k - 1], cx.ranks[k]);
    for (std::size_t i = 0; i <= k; ++i) {
      auto table = s.face(k, i);
      const BigInt sign = i % 2 ? -1 : 1;
      for (std::size_t j = 0; j < table.size(); ++j) {
        std::int64_t col = column_of[k][j];
        std::int64_t row = column_of[k - 1][table[j]];
        if (col >= 0 && row >= 0) d.add(std::size_t(row), std::size_t(col), sign);
      }
    }
    cx.boundary.push_back(std::move(d));
  }
  for (std::size_t k = 2; k <= n; ++k)
    if (!(cx.boundary[k - 1] * cx.boundary[k]).is_zero())
      throw InvariantViolation("boundary composite d" + std::to_string(k - 1) + " d" + std::to_string(k) +
                               " is not zero");
  return cx;
}

std::vector<AbelianGroupInvariants> homology_range(const SimplicialTruncation& s, std::size_t top, bool normalized) {
  if (top + 1 > s.max_degree())
    throw InvalidArgument("homology in degree " + std::to_string(top) + " needs truncation depth " +
                          std::to_string(top + 1) + ", have " + std::to_string(s.max_degree()));
  ChainComplex cx = chain_complex(s, normalized);
  std::vector<AbelianGroupInvariants> out;
  for (std::size_t k = 0; k <= top; ++k) out.push_back(homology_at(cx.boundary[k], cx.boundary[k + 1]));
  return out;
}

AbelianGroupInvariants homology(const SimplicialTruncation& s, std::size_t k, bool normalized) {
  return homology_range(s, k, normalized).back();
}

AbelianGroupInvariants reduce_degree_zero(AbelianGroupInvariants h0) {
  if (h0.free_rank == 0) throw InvalidArgument("reduced H0 of an empty complex");
  --h0.free_rank;
  return h0;
}

}  // namespace commtop
