#include <doctest.h>

#include <random>

#include "strandalg/exactla.hpp"

using namespace strandalg;

namespace {

// Plain elimination mod p on long long entries.
int oracle_rank_mod(std::vector<std::vector<long long>> a, long long p) {
  int r = 0;
  const int R = static_cast<int>(a.size()), C = R ? static_cast<int>(a[0].size()) : 0;
  for (auto& row : a) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  auto power = [&](long long b, long long e) {
    long long res = 1;
    b %= p;
    while (e) {
      if (e & 1) res = static_cast<long long>((__int128)res * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    return res;
  };
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i) {
      if (a[i][c]) piv = i;
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    const long long inv = power(a[r][c], p - 2);
    for (int i = 0; i < R; ++i) {
      if (i == r || !a[i][c]) continue;
      const long long f = static_cast<long long>((__int128)a[i][c] * inv % p);
      for (int k = 0; k < C; ++k) a[i][k] = ((a[i][k] - static_cast<long long>((__int128)f * a[r][k] % p)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<long long>> random_low_rank(std::mt19937& rng, int R, int C, int k) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::vector<std::vector<long long>> L(R, std::vector<long long>(k)), Rm(k, std::vector<long long>(C));
  for (auto& row : L) {
    for (auto& x : row) x = e(rng);
  }
  for (auto& row : Rm) {
    for (auto& x : row) x = e(rng);
  }
  std::vector<std::vector<long long>> m(R, std::vector<long long>(C, 0));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) {
      for (int t = 0; t < k; ++t) m[i][j] += L[i][t] * Rm[t][j];
    }
  }
  return m;
}

Matrix to_matrix(const std::vector<std::vector<long long>>& a, int C) {
  Matrix m(static_cast<int>(a.size()), C);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < C; ++j) m.at(i, j) = static_cast<long>(a[i][j]);
  }
  return m;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("f3") == FieldSpec::prime(3));
  CHECK(FieldSpec::parse("f7").name() == "F7");
  CHECK_THROWS(FieldSpec::parse("f4"));
  CHECK_THROWS(FieldSpec::parse("r"));
  CHECK_FALSE(FieldSpec::integers().is_field());
  CHECK(FieldSpec::prime(3).reduce(-1) == 2);
  CHECK(FieldSpec::prime(5).reduce(mpq_class(1, 2)) == 3);
}

TEST_CASE("rank agrees with an independent elimination over Q, F2 and F3") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 90), rk(0, 12);
    const int R = dim(rng), C = dim(rng), k = rk(rng);
    const auto a = random_low_rank(rng, R, C, k);
    const Matrix m = to_matrix(a, C);
    const SparseMatrix s = SparseMatrix::from_dense(m);
    // a large prime stands in for Q on these small integer matrices
    const int q_rank = oracle_rank_mod(a, 1000000007LL);
    CHECK(rank(m, FieldSpec::rationals()) == q_rank);
    CHECK(rank_sparse(s, FieldSpec::rationals()) == q_rank);
    for (long p : {2L, 3L}) {
      const int want = oracle_rank_mod(a, p);
      CHECK(rank(m, FieldSpec::prime(p)) == want);
      CHECK(rank_dense(m, FieldSpec::prime(p)) == want);
      CHECK(rank_sparse(s, FieldSpec::prime(p)) == want);
    }
  }
  CHECK_THROWS(rank(Matrix::identity(2), FieldSpec::integers()));
}

TEST_CASE("rank depends on the characteristic") {
  const Matrix m = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rank(m, FieldSpec::rationals()) == 3);
  CHECK(rank(m, FieldSpec::prime(2)) == 2);
  CHECK(rank(m, FieldSpec::prime(3)) == 3);
}

TEST_CASE("kernels, images, quotients and solving") {
  std::mt19937 rng(5);
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_low_rank(rng, 7, 9, 3);
      const Matrix m = to_matrix(a, 9).reduced(f);
      const Matrix K = kernel_basis(m, f);
      CHECK(K.cols() + rank(m, f) == 9);
      CHECK((m * K).reduced(f).is_zero());
      CHECK(rank(K, f) == K.cols());
      const Matrix Im = image_basis(m, f);
      CHECK(Im.cols() == rank(m, f));
      const Quotient q = quotient_basis(Matrix::identity(7), Im, f);
      CHECK(q.dim() == 7 - Im.cols());
      CHECK((q.projection * q.reps).reduced(f) == Matrix::identity(q.dim()));
      CHECK((q.projection * Im).reduced(f).is_zero());
      const auto b = m.column(4);
      const auto x = solve(m, b, f);
      REQUIRE(x.has_value());
      auto mx = m.apply(*x);
      for (std::size_t i = 0; i < mx.size(); ++i) CHECK(f.reduce(mx[i] - b[i]) == 0);
    }
  }
  const Matrix e1 = Matrix::from_columns({{1, 0}}, 2);
  CHECK_FALSE(solve(e1, {0, 1}, FieldSpec::rationals()).has_value());
  CHECK_THROWS(quotient_basis(e1, Matrix::from_columns({{0, 1}}, 2), FieldSpec::rationals()));
}

TEST_CASE("Smith normal form") {
  const auto d = snf(Matrix::from_rows({{2, 4}, {6, 8}}));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);
  const auto z = snf(Matrix::from_rows({{1, -1}, {-1, 1}}));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == 1);
  CHECK(snf(Matrix(3, 2)).empty());
  const auto t = snf(Matrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 0}}));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == 1);
  CHECK(t[1] == 6);
}
