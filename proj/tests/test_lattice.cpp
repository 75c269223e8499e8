#include "commtop/error.hpp"
#include "commtop/lattice.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace commtop;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 3 * int(n); ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a != b) u.add_row_multiple(a, b, coef(rng));
  }
  return u;
}

// Rank over Q by plain fraction Gaussian elimination.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

BigInt gcd_of_entries(const IntMatrix& m) {
  BigInt g = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g = gcd(g, m(r, c));
  return g;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.d == IntMatrix::identity(3));

  auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  auto snf = smith_normal_form(m);
  CHECK(snf.d == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(snf.u * m * snf.v == snf.d);

  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.d.is_zero());
  CHECK(zero.rank == 0);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(0, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m = random_matrix(rng, rows, cols, 9);
    auto snf = smith_normal_form(m);
    REQUIRE(snf.u * m * snf.v == snf.d);
    REQUIRE(abs(determinant(snf.u)) == 1);
    REQUIRE(abs(determinant(snf.v)) == 1);
    REQUIRE(is_diagonal(snf.d));
    auto diag = snf.diagonal();
    REQUIRE(diag.size() == rational_rank(m));
    for (std::size_t i = 0; i < diag.size(); ++i) {
      REQUIRE(diag[i] > 0);
      if (i + 1 < diag.size()) REQUIRE(diag[i + 1] % diag[i] == 0);
    }
    if (!diag.empty()) REQUIRE(diag[0] == gcd_of_entries(m));
    if (rows == cols && rows > 0) {
      BigInt prod = 1;
      for (auto& d : diag) prod *= d;
      REQUIRE((diag.size() == rows ? prod : BigInt(0)) == abs(determinant(m)));
    }
  }
}

TEST_CASE("sparse elementary divisors agree with dense SNF") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dim(0, 10);
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng), trial % 2 ? 2 : 9);
    auto sparse = AbelianGroupInvariants::from_cyclic_orders(elementary_divisors(SparseIntMatrix::from_dense(m)));
    auto dense = AbelianGroupInvariants::from_cyclic_orders(smith_normal_form(m).diagonal());
    REQUIRE(sparse == dense);
    REQUIRE(rank(SparseIntMatrix::from_dense(m)) == rational_rank(m));
  }
}

TEST_CASE("homology_at examples") {
  CHECK(homology_at(IntMatrix(0, 4), IntMatrix(4, 0)) == AbelianGroupInvariants::free(4));
  IntMatrix aug(1, 5);
  for (std::size_t c = 0; c < 5; ++c) aug(0, c) = 1;
  CHECK(homology_at(aug, IntMatrix(5, 0)) == AbelianGroupInvariants::free(4));
  // Z --3--> Z --0--> 0
  CHECK(homology_at(IntMatrix(0, 1), IntMatrix::from_rows({{3}})) == AbelianGroupInvariants::finite({3}));
}

TEST_CASE("homology_at rejects bad input") {
  CHECK_THROWS_AS(homology_at(IntMatrix(1, 2), IntMatrix(3, 1)), InvalidArgument);
  CHECK_THROWS_AS(homology_at(IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})), InvalidArgument);
}

TEST_CASE("homology_at agrees with a rational rank plus torsion oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = dim(rng);
    std::size_t a = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    IntMatrix u = random_unimodular(rng, n);
    IntMatrix uinv = inverse_unimodular(u);
    IntMatrix d_in = u.columns(0, a) * random_matrix(rng, a, dim(rng), 4);
    IntMatrix d_out = random_matrix(rng, dim(rng), n - a, 4) * uinv.transpose().columns(a, n).transpose();
    REQUIRE((d_out * d_in).is_zero());
    auto h = homology_at(d_out, d_in);
    std::size_t free = n - rational_rank(d_out) - rational_rank(d_in);
    auto torsion = AbelianGroupInvariants::from_cyclic_orders(smith_normal_form(d_in).diagonal()).torsion;
    CHECK(h.free_rank == free);
    CHECK(h.torsion == torsion);
  }
}

TEST_CASE("hermite normal form is canonical") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 4, 6);
    IntMatrix h = hermite_normal_form(m);
    IntMatrix mixed = m * random_unimodular(rng, 4);
    CHECK(hermite_normal_form(mixed) == h);
    CHECK(hermite_normal_form(h) == h);
  }
}

TEST_CASE("saturation and sums") {
  Lattice two(1, IntMatrix::from_rows({{2}}));
  CHECK(saturate(two) == Lattice::whole(1));
  CHECK(to_string(two) == "2Z");
  CHECK(two.index_in_saturation() == 2);

  Lattice diag(2, IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(saturate(diag) == Lattice::whole(2));

  Lattice prim(2, IntMatrix::from_rows({{1}, {1}}));
  CHECK(saturate(prim) == prim);

  std::vector<Lattice> zeros{Lattice(2), Lattice(2)};
  CHECK(lattice_sum(zeros).rank() == 0);
  std::vector<Lattice> coprime{Lattice(1, IntMatrix::from_rows({{2}})), Lattice(1, IntMatrix::from_rows({{3}}))};
  CHECK(lattice_sum(coprime) == Lattice::whole(1));
}

TEST_CASE("saturation properties on random lattices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 1 + trial % 4;
    Lattice l(k, random_matrix(rng, k, 1 + trial % 3, 5));
    Lattice s = saturate(l);
    CHECK(s.rank() == l.rank());
    CHECK(saturate(s) == s);
    CHECK(s.contains(l));
    CHECK(s.is_primitive());
  }
}

TEST_CASE("complement gives a direct sum decomposition") {
  Lattice e1(2, IntMatrix::from_rows({{1}, {0}}));
  Lattice c = complement(e1);
  CHECK(abs(determinant(IntMatrix::hstack(e1.basis(), c.basis()))) == 1);
  CHECK_THROWS_AS(complement(Lattice(1, IntMatrix::from_rows({{2}}))), InvalidArgument);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 1 + trial % 4;
    Lattice l = saturate(Lattice(k, random_matrix(rng, k, trial % 3, 5)));
    Lattice comp = complement(l);
    IntMatrix stacked = IntMatrix::hstack(l.basis(), comp.basis());
    REQUIRE(stacked.rows() == stacked.cols());
    CHECK(abs(determinant(stacked)) == 1);
  }
}
