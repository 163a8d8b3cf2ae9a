#include "cbgon/error.hpp"
#include "cbgon/generators.hpp"
#include "cbgon/scan.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace cbgon;

namespace {

// Smallest failing subset size in degree m by trying every subset, smallest first.
std::optional<std::size_t> exhaustive_min_failing(const std::vector<oracle::Row>& pts, unsigned m, std::size_t n,
                                                  long long p, std::size_t limit) {
  const std::size_t count = pts.size();
  for (std::size_t size = 1; size <= std::min(limit, count); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::vector<oracle::Row> sub;
      for (std::size_t i : idx) sub.push_back(pts[i]);
      if (oracle::evaluation_rank(sub, m, n, p) < size) return size;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == count - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("scan parameters") {
  const Field f = Field::prime(101);
  const auto grid = random_grid_ci(f, {2, 2, 4}, 1);
  const auto z = FiniteSubscheme::reduced(f, 3, grid.points);
  const auto r0 = cbconj_scan(z, {2, 2, 4}, 0);
  CHECK(r0.k == 0);
  CHECK(r0.m == 2);
  CHECK(r0.bound == 4);
  CHECK(r0.pass);
  const auto r1 = cbconj_scan(z, {2, 2, 4}, 1);
  CHECK(r1.m == 3);
  CHECK(r1.bound == 8);
  CHECK(r1.pass);
  CHECK_THROWS_AS(cbconj_scan(z, {2, 2, 4}, 2), Error);
  CHECK_THROWS_AS(cbconj_scan(z, {2, 4, 2}, 0), Error);
  ScanOptions tiny;
  tiny.max_points = 10;
  CHECK_THROWS_AS(cbconj_scan(z, {2, 2, 4}, 0, tiny), Error);
}

TEST_CASE("scan agrees with exhaustive subset search") {
  const Field f = Field::prime(101);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto grid = random_grid_ci(f, {2, 2, 4}, seed);
    const auto pts = residues(grid.points);
    const auto z = FiniteSubscheme::reduced(f, 3, grid.points);
    for (unsigned e = 0; e <= 1; ++e) {
      const auto r = cbconj_scan(z, {2, 2, 4}, e);
      const auto expect = exhaustive_min_failing(pts, e + 2, 3, 101, 16);
      REQUIRE(r.min_failing_degree == expect);
      REQUIRE(r.witness.size() == *expect);
      std::vector<oracle::Row> w;
      for (std::size_t i : r.witness) w.push_back(pts[i]);
      CHECK(oracle::evaluation_rank(w, e + 2, 3, 101) < w.size());
      // Every proper subset of the witness is independent.
      for (std::size_t drop = 0; drop < w.size(); ++drop) {
        auto rest = w;
        rest.erase(rest.begin() + static_cast<long>(drop));
        CHECK(oracle::evaluation_rank(rest, e + 2, 3, 101) == rest.size());
      }
    }
  }
}

TEST_CASE("constants: full (2,2,2) grid") {
  const Field f = Field::prime(101);
  const auto grid = random_grid_ci(f, {2, 2, 2}, 4);
  const auto r = cbconj_scan(FiniteSubscheme::reduced(f, 3, grid.points), {2, 2, 2}, 0);
  CHECK(r.m == 0);
  CHECK(r.bound == 2);
  REQUIRE(r.min_failing_degree);
  CHECK(*r.min_failing_degree == 2);
  CHECK(r.pass);
}

TEST_CASE("failure persists under supersets") {
  Rng rng(31);
  const Field f = Field::prime(101);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto grid = random_grid_ci(f, {2, 2, 4}, 10 + seed);
    const auto z = FiniteSubscheme::reduced(f, 3, grid.points);
    const auto r = cbconj_scan(z, {2, 2, 4}, 0);
    REQUIRE(r.min_failing_degree);
    for (int t = 0; t < 50; ++t) {
      std::vector<std::size_t> super = r.witness;
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (std::find(super.begin(), super.end(), i) == super.end() && rng.below(2)) super.push_back(i);
      }
      std::sort(super.begin(), super.end());
      const auto sub = z.subset(super);
      REQUIRE(rank(evaluation_rows(sub, r.m)) < sub.size());
    }
  }
}

TEST_CASE("scan result does not depend on the worker count") {
  const Field f = Field::prime(101);
  const auto grid = random_grid_ci(f, {2, 2, 4}, 7);
  const auto z = FiniteSubscheme::reduced(f, 3, grid.points);
  for (unsigned e = 0; e <= 1; ++e) {
    ScanOptions one, four;
    four.workers = 4;
    const auto a = cbconj_scan(z, {2, 2, 4}, e, one);
    const auto b = cbconj_scan(z, {2, 2, 4}, e, four);
    CHECK(a.min_failing_degree == b.min_failing_degree);
    CHECK(a.witness == b.witness);
    CHECK(a.subsets_visited == b.subsets_visited);
  }
}
