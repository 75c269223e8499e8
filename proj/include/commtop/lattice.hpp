#pragma once

#include "commtop/invariants.hpp"
#include "commtop/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace commtop {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> column(std::size_t c) const;
  IntMatrix columns(std::size_t first, std::size_t last) const;  // [first, last)
  IntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  std::vector<BigInt> apply(std::span<const BigInt> v) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  /// Horizontal concatenation; row counts must agree.
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);  // row_t += f*row_s
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);  // col_t += f*col_s
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

std::string to_string(const IntMatrix& m);  // "[[1,-1],[-1,1]]"

/// Exact determinant (fraction-free elimination). Square input only.
BigInt determinant(const IntMatrix& m);
/// Inverse of a unimodular matrix. Throws InvalidArgument if not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix u, d, v;  // u * m * v == d
  std::size_t rank = 0;
  std::vector<BigInt> diagonal() const;  // nonzero diagonal entries, d1 | d2 | ...
};

/// Smith normal form with unimodular transforms. Pivot rule: smallest
/// absolute nonzero entry, ties broken by lowest row then lowest column.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Column-style Hermite normal form: a canonical basis of the column
/// lattice, lower echelon, positive pivots, entries left of each pivot
/// reduced into [0, pivot). Zero columns are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Column-major sparse integer matrix, used for boundary maps.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, BigInt>;  // (row, value)

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static SparseIntMatrix from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  /// Adds `value` to entry (r, c); the column is kept sorted and free of zeros.
  void add(std::size_t r, std::size_t c, const BigInt& value);
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  /// this * other, exactly.
  SparseIntMatrix operator*(const SparseIntMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Nonzero diagonal of a diagonalization of m by unimodular row and column
/// operations (absolute values, unnormalized). Its length is rank(m) and
/// coker(m) = Z^{rows-rank} + sum Z/d_i. Sparse elimination with unit
/// pivots first, ordered to limit fill; deterministic.
std::vector<BigInt> elementary_divisors(const SparseIntMatrix& m);
std::size_t rank(const SparseIntMatrix& m);

/// ker(d_out) / im(d_in). Requires d_out.cols() == d_in.rows() and
/// d_out * d_in == 0; throws InvalidArgument otherwise.
AbelianGroupInvariants homology_at(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in);
AbelianGroupInvariants homology_at(const IntMatrix& d_out, const IntMatrix& d_in);

/// Sublattice of Z^k spanned by generator columns, held in Hermite normal form.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient = 0) : ambient_(ambient), basis_(ambient, 0) {}
  Lattice(std::size_t ambient, const IntMatrix& generators);
  static Lattice whole(std::size_t ambient) { return Lattice(ambient, IntMatrix::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  bool contains(std::span<const BigInt> v) const;
  bool contains(const Lattice& other) const;
  bool is_primitive() const;
  /// [saturate(L) : L], i.e. the product of the elementary divisors.
  BigInt index_in_saturation() const;
  bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_;
  IntMatrix basis_;
};

std::string to_string(const Lattice& l);  // "{0}", "Z^k", or "span[[2,0],[0,1]]" (basis columns)

/// (L tensor Q) intersected with Z^k.
Lattice saturate(const Lattice& l);
Lattice lattice_sum(std::span<const Lattice> lattices);
/// A primitive C with L + C = Z^k and L ∩ C = 0. Throws InvalidArgument if L
/// is not primitive.
Lattice complement(const Lattice& l);

}  // namespace commtop
