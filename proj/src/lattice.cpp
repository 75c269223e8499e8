#include "commtop/lattice.hpp"

#include "commtop/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace commtop {

namespace {

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt fmod_big(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = BigInt(static_cast<long>(rows[r][c]));
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidArgument("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t last) const {
  IntMatrix m(rows_, last - first);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = first; c < last; ++c) m(r, c - first) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
    }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum dimension mismatch");
  IntMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix difference dimension mismatch");
  IntMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::vector<Rational> IntMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += Rational((*this)(r, c)) * v[c];
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw InvalidArgument("hstack row mismatch");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(source, c) != 0) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, source) != 0) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += m(r, c).get_str();
    }
    s += "]";
  }
  return s + "]";
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidArgument("matrix is singular");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = a[r][n + c];
      if (x.get_den() != 1) throw InvalidArgument("matrix is not unimodular");
      out(r, c) = x.get_num();
    }
  return out;
}

// ---------------------------------------------------------------------------
// Smith and Hermite normal forms

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> diag;
  for (std::size_t i = 0; i < rank; ++i) diag.push_back(d(i, i));
  return diag;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  IntMatrix& a = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  auto smallest = [&](std::size_t t, bool whole, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    BigInt best;
    auto consider = [&](std::size_t r, std::size_t c) {
      if (a(r, c) == 0) return;
      BigInt x = abs(a(r, c));
      if (!found || x < best) {
        found = true;
        best = x;
        pr = r;
        pc = c;
      }
    };
    if (whole) {
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) consider(r, c);
    } else {
      // Only column t and row t can hold leftovers.
      for (std::size_t r = t; r < rows; ++r) consider(r, t);
      for (std::size_t c = t + 1; c < cols; ++c) consider(t, c);
    }
    return found;
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!smallest(t, true, pr, pc)) break;
    while (true) {
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        BigInt q = fdiv(a(r, t), a(t, t));
        a.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        BigInt q = fdiv(a(t, c), a(t, t));
        a.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) {
        smallest(t, false, pr, pc);
        continue;
      }
      // Enforce divisibility: fold an offending row into row t and retry.
      bool folded = false;
      for (std::size_t r = t + 1; r < rows && !folded; ++r)
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) != 0 && fmod_big(a(r, c), a(t, t)) != 0) {
            a.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            folded = true;
            break;
          }
        }
      if (!folded) break;
      pr = t;
      pc = t;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pc; j < cols; ++j)
        if (a(i, j) != 0 && (best == cols || abs(a(i, j)) < abs(a(i, best)))) best = j;
      if (best == cols) break;
      a.swap_cols(pc, best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        a.add_col_multiple(j, pc, -fdiv(a(i, j), a(i, pc)));
        if (a(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (pc >= cols || a(i, pc) == 0) continue;
    if (a(i, pc) < 0) a.negate_col(pc);
    for (std::size_t j = 0; j < pc; ++j) a.add_col_multiple(j, pc, -fdiv(a(i, j), a(i, pc)));
    ++pc;
  }
  return a.columns(0, pc);
}

// ---------------------------------------------------------------------------
// Sparse matrices and elimination

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
  SparseIntMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) s.columns_[c].emplace_back(std::uint32_t(r), m(r, c));
  return s;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  return m;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const BigInt& value) {
  if (r >= rows_ || c >= cols()) throw InvalidArgument("sparse entry out of range");
  if (value == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), std::uint32_t(r),
                             [](const Entry& e, std::uint32_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, Entry(std::uint32_t(r), value));
  }
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const {
  if (cols() != other.rows()) throw InvalidArgument("sparse product dimension mismatch");
  SparseIntMatrix p(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) {
    std::map<std::uint32_t, BigInt> acc;
    for (const auto& [k, v] : other.columns_[j])
      for (const auto& [r, w] : columns_[k]) acc[r] += v * w;
    for (auto& [r, x] : acc)
      if (x != 0) p.columns_[j].emplace_back(r, std::move(x));
  }
  return p;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

namespace {

// Row-major working copy with a column index, for elimination.
class Eliminator {
 public:
  using Row = std::vector<std::pair<std::uint32_t, BigInt>>;  // (col, value), sorted

  explicit Eliminator(const SparseIntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.column(c)) {
        rows_[r].emplace_back(std::uint32_t(c), v);
        cols_[c].push_back(r);
      }
  }

  std::vector<BigInt> run() {
    unit_phase();
    general_phase();
    return std::move(divisors_);
  }

 private:
  const BigInt* entry(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  }

  static void index_insert(std::vector<std::uint32_t>& v, std::uint32_t r) {
    v.insert(std::lower_bound(v.begin(), v.end(), r), r);
  }
  static void index_erase(std::vector<std::uint32_t>& v, std::uint32_t r) {
    auto it = std::lower_bound(v.begin(), v.end(), r);
    if (it != v.end() && *it == r) v.erase(it);
  }

  // row[target] -= factor * row[source]
  void row_axpy(std::uint32_t target, const BigInt& factor, std::uint32_t source) {
    const Row& src = rows_[source];
    Row& dst = rows_[target];
    Row merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        merged.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        merged.emplace_back(src[j].first, -factor * src[j].second);
        index_insert(cols_[src[j].first], target);
        ++j;
      } else {
        BigInt x = dst[i].second - factor * src[j].second;
        if (x != 0)
          merged.emplace_back(dst[i].first, std::move(x));
        else
          index_erase(cols_[dst[i].first], target);
        ++i;
        ++j;
      }
    }
    dst = std::move(merged);
  }

  void drop_row(std::uint32_t r) {
    for (const auto& [c, v] : rows_[r]) index_erase(cols_[c], r);
    rows_[r].clear();
  }

  void set_entry(std::uint32_t r, std::uint32_t c, BigInt value) {
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
    if (value == 0) {
      if (it != row.end() && it->first == c) {
        row.erase(it);
        index_erase(cols_[c], r);
      }
    } else if (it != row.end() && it->first == c) {
      it->second = std::move(value);
    } else {
      row.insert(it, {c, std::move(value)});
      index_insert(cols_[c], r);
    }
  }

  // Unit pivots never introduce denominators and leave no remainders, so
  // each one retires a row and a column outright.
  void unit_phase() {
    std::vector<std::uint32_t> order(cols_.size());
    while (true) {
      std::iota(order.begin(), order.end(), 0u);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return cols_[a].size() < cols_[b].size(); });
      bool progress = false;
      for (auto c : order) {
        if (cols_[c].empty()) continue;
        std::uint32_t pivot = 0;
        bool found = false;
        for (auto r : cols_[c]) {
          const BigInt* x = entry(r, c);
          if (abs(*x) != 1) continue;
          if (!found || rows_[r].size() < rows_[pivot].size()) {
            pivot = r;
            found = true;
          }
        }
        if (!found) continue;
        eliminate_unit(pivot, c);
        progress = true;
      }
      if (!progress) return;
    }
  }

  void eliminate_unit(std::uint32_t r, std::uint32_t c) {
    BigInt p = *entry(r, c);
    std::vector<std::uint32_t> others = cols_[c];
    for (auto o : others) {
      if (o == r) continue;
      BigInt f = *entry(o, c) * p;  // p = ±1, so a/p = a*p
      row_axpy(o, f, r);
    }
    drop_row(r);
    divisors_.push_back(1);
  }

  void general_phase() {
    while (true) {
      // Smallest |entry|, then smallest Markowitz cost, then lowest (row, col).
      bool found = false;
      std::uint32_t pr = 0, pc = 0;
      BigInt best;
      std::size_t best_cost = 0;
      for (std::uint32_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) {
          BigInt x = abs(v);
          std::size_t cost = (rows_[r].size() - 1) * (cols_[c].size() - 1);
          if (!found || x < best || (x == best && cost < best_cost)) {
            found = true;
            best = std::move(x);
            best_cost = cost;
            pr = r;
            pc = c;
          }
        }
      if (!found) return;
      BigInt p = *entry(pr, pc);
      bool clean = true;
      std::vector<std::uint32_t> others = cols_[pc];
      for (auto o : others) {
        if (o == pr) continue;
        BigInt q = fdiv(*entry(o, pc), p);
        if (q != 0) row_axpy(o, q, pr);
        if (entry(o, pc)) clean = false;
      }
      if (!clean) continue;
      // Column pc now holds only the pivot; column operations on row pr act on nothing else.
      Row row = rows_[pr];
      for (const auto& [c, v] : row) {
        if (c == pc) continue;
        BigInt rem = fmod_big(v, p);
        if (rem != 0) clean = false;
        set_entry(pr, c, std::move(rem));
      }
      if (!clean) continue;
      drop_row(pr);
      divisors_.push_back(abs(p));
    }
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> cols_;
  std::vector<BigInt> divisors_;
};

}  // namespace

std::vector<BigInt> elementary_divisors(const SparseIntMatrix& m) { return Eliminator(m).run(); }

std::size_t rank(const SparseIntMatrix& m) { return elementary_divisors(m).size(); }

AbelianGroupInvariants homology_at(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw InvalidArgument("homology_at: d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                          std::to_string(d_in.rows()) + " rows");
  if (!(d_out * d_in).is_zero()) throw InvalidArgument("homology_at: d_out * d_in is not zero");
  const std::size_t rank_out = rank(d_out);
  auto divisors = elementary_divisors(d_in);
  auto out = AbelianGroupInvariants::from_cyclic_orders(divisors);
  out.free_rank = d_out.cols() - rank_out - divisors.size();
  return out;
}

AbelianGroupInvariants homology_at(const IntMatrix& d_out, const IntMatrix& d_in) {
  return homology_at(SparseIntMatrix::from_dense(d_out), SparseIntMatrix::from_dense(d_in));
}

// ---------------------------------------------------------------------------
// Lattices

Lattice::Lattice(std::size_t ambient, const IntMatrix& generators) : ambient_(ambient) {
  if (generators.rows() != ambient)
    throw InvalidArgument("lattice generators have " + std::to_string(generators.rows()) +
                          " rows, ambient rank is " + std::to_string(ambient));
  basis_ = hermite_normal_form(generators);
}

bool Lattice::contains(std::span<const BigInt> v) const {
  if (v.size() != ambient_) throw InvalidArgument("vector length does not match ambient rank");
  IntMatrix col(ambient_, 1);
  for (std::size_t i = 0; i < ambient_; ++i) col(i, 0) = v[i];
  return hermite_normal_form(IntMatrix::hstack(basis_, col)) == basis_;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw InvalidArgument("lattices have different ambient ranks");
  return hermite_normal_form(IntMatrix::hstack(basis_, other.basis_)) == basis_;
}

bool Lattice::is_primitive() const { return index_in_saturation() == 1; }

BigInt Lattice::index_in_saturation() const {
  BigInt index = 1;
  for (const auto& d : smith_normal_form(basis_).diagonal()) index *= d;
  return index;
}

std::string to_string(const Lattice& l) {
  if (l.rank() == 0) return "{0}";
  if (l.rank() == l.ambient() && l.basis() == IntMatrix::identity(l.ambient()))
    return l.ambient() == 1 ? "Z" : "Z^" + std::to_string(l.ambient());
  if (l.ambient() == 1) return l.basis()(0, 0).get_str() + "Z";
  std::string s = "span{";
  for (std::size_t c = 0; c < l.rank(); ++c) {
    if (c) s += ",";
    s += "(";
    for (std::size_t r = 0; r < l.ambient(); ++r) {
      if (r) s += ",";
      s += l.basis()(r, c).get_str();
    }
    s += ")";
  }
  return s + "}";
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  auto snf = smith_normal_form(l.basis());
  IntMatrix uinv = inverse_unimodular(snf.u);
  return Lattice(l.ambient(), uinv.columns(0, snf.rank));
}

Lattice lattice_sum(std::span<const Lattice> lattices) {
  if (lattices.empty()) return Lattice(0);
  const std::size_t k = lattices[0].ambient();
  IntMatrix gens(k, 0);
  for (const auto& l : lattices) {
    if (l.ambient() != k) throw InvalidArgument("lattice_sum: ambient ranks differ");
    gens = IntMatrix::hstack(gens, l.basis());
  }
  return Lattice(k, gens);
}

Lattice complement(const Lattice& l) {
  if (!l.is_primitive()) throw InvalidArgument("complement: lattice " + to_string(l) + " is not primitive");
  if (l.rank() == 0) return Lattice::whole(l.ambient());
  auto snf = smith_normal_form(l.basis());
  IntMatrix uinv = inverse_unimodular(snf.u);
  return Lattice(l.ambient(), uinv.columns(snf.rank, l.ambient()));
}

}  // namespace commtop
