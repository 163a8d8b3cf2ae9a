#include "cbgon/error.hpp"
#include "cbgon/field.hpp"
#include "cbgon/matrix.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace cbgon;

TEST_CASE("scalar inverses") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar(f7, 3).inverse() == Scalar(f7, 5));
  CHECK((Scalar(f7, 3) * Scalar(f7, 5)).is_one());
  CHECK(Scalar(Field::rational(), 1).inverse() == Scalar(Field::rational(), 1));
  CHECK(Scalar(Field::rational(), 2, 3).inverse() == Scalar(Field::rational(), 3, 2));
  CHECK_THROWS_AS(Scalar(f7, 0).inverse(), Error);
  try {
    Scalar(Field::rational()).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInverse);
  }
}

TEST_CASE("field construction and canonical values") {
  CHECK_THROWS_AS(Field::prime(91), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
  CHECK(Scalar(Field::prime(7), -1).residue() == 6);
  const Scalar q(Field::rational(), 4, -6);
  CHECK(q.rational().get_num() == -2);
  CHECK(q.rational().get_den() == 3);
  CHECK(Scalar::parse(Field::rational(), "-4/6") == q);
  CHECK(Scalar::parse(Field::prime(7), "3/2") == Scalar(Field::prime(7), 5));
  CHECK_THROWS_AS(Scalar(Field::prime(7), 1) + Scalar(Field::prime(11), 1), Error);
  CHECK_THROWS_AS(Scalar(Field::prime(7), 1) + Scalar(Field::rational(), 1), Error);
}

TEST_CASE("F_p arithmetic agrees with integer arithmetic reduced mod p") {
  std::mt19937_64 rng(11);
  for (long long p : {2LL, 7LL, 101LL, 65521LL, 2147483647LL}) {
    const Field f = Field::prime(static_cast<std::uint32_t>(p));
    for (int i = 0; i < 10000; ++i) {
      const long long a = static_cast<long long>(rng() % 4000000) - 2000000;
      const long long b = static_cast<long long>(rng() % 4000000) - 2000000;
      const long long c = static_cast<long long>(rng() % 4000000) - 2000000;
      const Scalar sa(f, a), sb(f, b), sc(f, c);
      const __int128 prod = static_cast<__int128>(a) * b + c;
      const long long expect = static_cast<long long>(((prod % p) + p) % p);
      REQUIRE((sa * sb + sc).residue() == expect);
      REQUIRE((sa - sb).residue() == oracle::mod(a - b, p));
    }
  }
}

TEST_CASE("rank examples") {
  const Field q = Field::rational();
  CHECK(rank(Matrix::identity(q, 3)) == 3);
  CHECK(rank(Matrix(q, 4, 6)) == 0);
  CHECK(rank(Matrix::from_integers(q, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);
  CHECK(rank(Matrix::from_integers(Field::prime(2), {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);
}

TEST_CASE("kernel examples") {
  const Field q = Field::rational();
  CHECK(kernel(Matrix::identity(q, 3)).empty());
  const auto k = kernel(Matrix::from_integers(q, {{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(!k[0][0].is_zero());
  const Matrix m = Matrix::from_integers(q, {{1, 2, 3}, {2, 4, 6}});
  const auto k2 = kernel(m);
  CHECK(k2.size() == 2);
  for (const auto& v : k2) {
    for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("rank matches span-counting oracle on random small matrices") {
  std::mt19937_64 rng(5);
  for (long long p : {2LL, 3LL, 5LL}) {
    const Field f = Field::prime(static_cast<std::uint32_t>(p));
    for (int i = 0; i < 300; ++i) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
      std::vector<std::vector<long long>> entries(rows, std::vector<long long>(cols));
      for (auto& r : entries) {
        for (auto& x : r) x = static_cast<long long>(rng() % p);
      }
      const Matrix m = Matrix::from_integers(f, entries);
      REQUIRE(rank(m) == oracle::span_rank(entries, p));
      REQUIRE(rank(m.transpose()) == rank(m));
      REQUIRE(kernel(m).size() + rank(m) == cols);
    }
  }
}

TEST_CASE("rational rank agrees with reduction modulo a large prime for small integer matrices") {
  // For matrices with tiny entries the rank over QQ equals the rank mod a
  // prime far above any minor, so the textbook F_p oracle applies.
  std::mt19937_64 rng(9);
  const long long p = 1000003;
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    std::vector<std::vector<long long>> entries(rows, std::vector<long long>(cols));
    const std::size_t r = rng() % 4;
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(r)), b(r, std::vector<long long>(cols));
    for (auto& row : a) for (auto& x : row) x = static_cast<long long>(rng() % 5) - 2;
    for (auto& row : b) for (auto& x : row) x = static_cast<long long>(rng() % 5) - 2;
    for (std::size_t x = 0; x < rows; ++x) {
      for (std::size_t y = 0; y < cols; ++y) {
        for (std::size_t z = 0; z < r; ++z) entries[x][y] += a[x][z] * b[z][y];
      }
    }
    std::vector<oracle::Row> reduced;
    for (const auto& row : entries) {
      oracle::Row w;
      for (long long x : row) w.push_back(oracle::mod(x, p));
      reduced.push_back(w);
    }
    REQUIRE(rank(Matrix::from_integers(Field::rational(), entries)) == oracle::gauss_rank(reduced, p));
  }
}

TEST_CASE("row space") {
  const Field f = Field::prime(7);
  RowSpace s(f, 3);
  const Vector a{Scalar(f, 1), Scalar(f, 2), Scalar(f, 3)};
  const Vector b{Scalar(f, 2), Scalar(f, 4), Scalar(f, 6)};
  const Vector c{Scalar(f, 0), Scalar(f, 1), Scalar(f, 0)};
  CHECK(s.insert(a));
  CHECK(!s.insert(b));
  CHECK(s.contains(b));
  CHECK(!s.contains(c));
  CHECK(s.insert(c));
  CHECK(s.rank() == 2);
}

TEST_CASE("echelon form") {
  const auto e = row_reduce(Matrix::from_integers(Field::rational(), {{0, 2, 4}, {1, 1, 1}, {1, 2, 3}}));
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
  REQUIRE(e.rows.size() == 2);
  CHECK(e.rows[0][0].is_one());
  CHECK(e.rows[0][1].is_zero());
  CHECK(e.rows[1][2] == Scalar(Field::rational(), 2));
}
