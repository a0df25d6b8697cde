#include <doctest.h>

#include <random>

#include "snf.hpp"

using namespace gkt;

namespace {

ZMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int max_abs) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  ZMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
  return m;
}

void check_snf_contract(const ZMatrix& m) {
  SnfDecomposition s = snf(m);
  REQUIRE(s.u.rows() == m.rows());
  REQUIRE(s.v.rows() == m.cols());
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(s.u.determinant()) == 1);
  CHECK(abs(s.v.determinant()) == 1);
  auto diag = s.diagonal();
  bool seen_zero = false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] == 0) seen_zero = true;
    if (seen_zero) CHECK(diag[i] == 0);
    if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] != 0)
      CHECK(diag[i + 1] % diag[i] == 0);
  }
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("snf of the identity is the identity") {
  SnfDecomposition s = snf(ZMatrix::identity(3));
  CHECK(s.d == ZMatrix::identity(3));
}

TEST_CASE("snf of [[2,-1],[1,2]] is diag(1,5)") {
  ZMatrix m = ZMatrix::from_rows({{2, -1}, {1, 2}});
  SnfDecomposition s = snf(m);
  CHECK(s.diagonal() == std::vector<Int>{1, 5});
  CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
  ZMatrix m = ZMatrix::from_rows({{2, 4}, {6, 8}});
  SnfDecomposition s = snf(m);
  CHECK(s.diagonal() == std::vector<Int>{2, 4});
  CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("snf conventions for empty shapes") {
  SnfDecomposition s = snf(ZMatrix(0, 0));
  CHECK(s.d == ZMatrix(0, 0));
  CHECK(s.u == ZMatrix(0, 0));
  CHECK(s.v == ZMatrix(0, 0));

  SnfDecomposition s2 = snf(ZMatrix(0, 3));
  CHECK(s2.d == ZMatrix(0, 3));
  CHECK(s2.v == ZMatrix::identity(3));

  SnfDecomposition s3 = snf(ZMatrix(3, 0));
  CHECK(s3.d == ZMatrix(3, 0));
  CHECK(s3.u == ZMatrix::identity(3));
}

TEST_CASE("snf is deterministic") {
  ZMatrix m = ZMatrix::from_rows({{4, 6, 2}, {6, 4, 8}, {2, 8, 4}});
  SnfDecomposition a = snf(m);
  SnfDecomposition b = snf(m);
  CHECK(a.u == b.u);
  CHECK(a.d == b.d);
  CHECK(a.v == b.v);
}

TEST_CASE("hnf examples") {
  CHECK(hnf(ZMatrix::from_rows({{4}, {0}})) == ZMatrix::from_rows({{4}, {0}}));
  CHECK(hnf(ZMatrix::from_rows({{2, 6}, {0, 0}})) == ZMatrix::from_rows({{2, 0}, {0, 0}}));
  CHECK(hnf(ZMatrix(0, 0)) == ZMatrix(0, 0));
}

TEST_CASE("hnf transform is unimodular and reproduces H") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ZMatrix m = random_matrix(rng, 5, 9);
    HnfResult r = hnf_with_transform(m);
    CHECK(m * r.w == r.h);
    CHECK(abs(r.w.determinant()) == 1);
    for (const auto& [pi, pj] : r.pivots) {
      CHECK(r.h.at(pi, pj) > 0);
      for (std::size_t jj = 0; jj < pj; ++jj) {
        CHECK(r.h.at(pi, jj) >= 0);
        CHECK(r.h.at(pi, jj) < r.h.at(pi, pj));
      }
    }
  }
}

TEST_CASE("hnf column span equals the input column span") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    ZMatrix m = random_matrix(rng, 4, 6);
    HnfResult hm = hnf_with_transform(m);
    HnfResult hh = hnf_with_transform(hm.h);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      CHECK(in_column_span(hh, m.column(j)));
      CHECK(in_column_span(hm, hm.h.column(j)));
    }
  }
}

TEST_CASE("kernel basis examples") {
  ZMatrix k = kernel_basis(ZMatrix::from_rows({{1, -1}}));
  REQUIRE(k.cols() == 1);
  CHECK(abs(k.at(0, 0)) == 1);
  CHECK(k.at(0, 0) == k.at(1, 0));

  CHECK(kernel_basis(ZMatrix::identity(4)).cols() == 0);

  ZMatrix z = kernel_basis(ZMatrix::from_rows({{0}}));
  REQUIRE(z.cols() == 1);
  CHECK(abs(z.at(0, 0)) == 1);
}

TEST_CASE("kernel columns solve M x = 0 and span the solution lattice") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    ZMatrix m = random_matrix(rng, 5, 5);
    ZMatrix k = kernel_basis(m);
    CHECK(k.cols() == m.cols() - rank(m));
    CHECK((m * k).is_zero());
    if (k.cols() == 0) continue;
    // the basis is primitive, so it spans every integer solution of M x = 0
    for (const Int& d : snf(k).diagonal()) CHECK(d == 1);
    // random integer combinations of the basis stay inside its span
    ZMatrix combo(k.rows(), 1);
    for (std::size_t j = 0; j < k.cols(); ++j) {
      Int c = coeff(rng);
      for (std::size_t i = 0; i < k.rows(); ++i) combo.at(i, 0) += c * k.at(i, j);
    }
    CHECK(rank(k.hstack(combo)) == rank(k));
  }
}

TEST_CASE("rank examples and transpose invariance") {
  CHECK(rank(ZMatrix::from_rows({{1, 0}, {0, 5}})) == 2);
  CHECK(rank(ZMatrix(2, 3)) == 0);
  CHECK(rank(ZMatrix::from_rows({{1, 2}, {2, 4}})) == 1);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    ZMatrix m = random_matrix(rng, 5, 8);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("snf contract on random matrices") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) check_snf_contract(random_matrix(rng, 6, 12));
}

TEST_CASE("snf stays exact far beyond 64-bit entries") {
  Int huge("1000000000000000000000000000000");  // 10^30
  ZMatrix m(2, 2);
  m.at(0, 0) = huge;
  m.at(0, 1) = huge + 1;
  m.at(1, 0) = 3;
  m.at(1, 1) = huge - 7;
  check_snf_contract(m);
  SnfDecomposition s = snf(m);
  Int prod = 1;
  for (const Int& d : s.diagonal()) prod *= d;
  CHECK(prod == abs(m.determinant()));
}

TEST_CASE("determinant matches snf diagonal up to sign") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::size_t n = dim(rng);
    ZMatrix m(n, n);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    Int prod = 1;
    for (const Int& d : snf(m).diagonal()) prod *= d;
    CHECK(abs(m.determinant()) == prod);
  }
}
