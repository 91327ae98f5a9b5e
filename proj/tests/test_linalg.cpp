#include <doctest.h>

#include "gkmlab/linalg.hpp"
#include "support.hpp"

using namespace gkmtest;

TEST_CASE("nullspace dimensions") {
  std::vector<Vec> id3{V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})};
  CHECK(nullspace(id3, 3).dim == 0);
  std::vector<Vec> zero{Vec(5), Vec(5)};
  CHECK(nullspace(zero, 5).dim == 5);
  std::vector<Vec> rows{V({1, 2, 3}), V({2, 4, 6})};
  auto ns = nullspace(rows, 3);
  CHECK(ns.dim == 2);
  for (const auto& b : ns.basis)
    for (const auto& r : rows) CHECK(dot(r, b) == 0);
}

TEST_CASE("rref is reduced") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(to_sparse(random_vec(rng, 6, 3)));
    auto e = rref(rows, 6);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      auto dense = to_dense(e.rows[i], 6);
      CHECK(dense[e.pivots[i]] == 1);
      for (std::size_t j = 0; j < e.pivots.size(); ++j)
        if (j != i) CHECK(dense[e.pivots[j]] == 0);
    }
    CHECK(e.rank() + static_cast<int>(e.free_columns().size()) == 6);
    CHECK(nullspace(e).dim == 6 - e.rank());
  }
}

TEST_CASE("solve sets free variables to zero") {
  std::vector<SparseRow> rows{to_sparse(V({1, 1, 0})), to_sparse(V({0, 0, 1}))};
  auto x = solve(rows, V({3, 2}), 3);
  REQUIRE(x);
  CHECK(*x == V({3, 0, 2}));
  std::vector<SparseRow> bad{to_sparse(V({1, 1})), to_sparse(V({2, 2}))};
  CHECK(!solve(bad, V({1, 3}), 2));
}

TEST_CASE("matrix inverse and determinant") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 5;
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = random_vec(rng, 1, 4)[0];
    auto inv = A.inverse();
    CHECK(inv.has_value() == (A.determinant() != 0));
    if (inv) CHECK(A * *inv == Matrix::identity(n));
  }
  Matrix B(2, 2);
  B.at(0, 0) = 1;
  B.at(0, 1) = 2;
  B.at(1, 0) = 3;
  B.at(1, 1) = 4;
  CHECK(B.determinant() == -2);
  CHECK(rank_of(std::vector<Vec>{V({1, 2}), V({2, 4}), V({0, 0})}) == 1);
}
