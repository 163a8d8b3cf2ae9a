// Independent reference computations used by the unit tests. These work on
// plain integers mod small primes and share no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Row = std::vector<long long>;

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline long long power(long long a, long long e, long long p) {
  long long r = 1;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Rank by counting the vectors in the row span: |span| = p^rank.
inline std::size_t span_rank(const std::vector<Row>& rows, long long p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::set<Row> span{Row(cols, 0)};
  for (const auto& r : rows) {
    std::set<Row> next;
    for (const auto& v : span) {
      for (long long c = 0; c < p; ++c) {
        Row w(cols);
        for (std::size_t j = 0; j < cols; ++j) w[j] = mod(v[j] + c * r[j], p);
        next.insert(w);
      }
    }
    span = std::move(next);
  }
  std::size_t rank = 0;
  for (std::size_t s = span.size(); s > 1; s /= static_cast<std::size_t>(p)) ++rank;
  return rank;
}

// Textbook elimination over F_p (no pivot tricks), for larger matrices.
inline std::size_t gauss_rank(std::vector<Row> rows, long long p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const long long inv = power(rows[rank][c], p - 2, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const long long f = mod(rows[r][c] * inv, p);
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = mod(rows[r][j] - f * rows[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

// Exponent vectors of degree d in n+1 variables, any order.
inline std::vector<std::vector<unsigned>> exponents(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n + 1, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      e[n] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

inline long long monomial_value(const std::vector<unsigned>& e, const Row& x, long long p) {
  long long v = 1;
  for (std::size_t i = 0; i < e.size(); ++i) v = v * power(x[i], e[i], p) % p;
  return v;
}

// Rank of the evaluation map of degree-d forms at reduced points.
inline std::size_t evaluation_rank(const std::vector<Row>& points, unsigned d, std::size_t n, long long p) {
  const auto basis = exponents(n, d);
  std::vector<Row> rows;
  for (const auto& x : points) {
    Row r;
    for (const auto& e : basis) r.push_back(monomial_value(e, x, p));
    rows.push_back(r);
  }
  return gauss_rank(rows, p);
}

// All points of P^n(F_p), normalized so the first nonzero coordinate is 1.
inline std::vector<Row> projective_points(std::size_t n, long long p) {
  std::set<Row> out;
  Row v(n + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n + 1) {
      auto it = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
      if (it == v.end()) return;
      const long long inv = power(*it, p - 2, p);
      Row w(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j] * inv % p;
      out.insert(w);
      return;
    }
    for (long long c = 0; c < p; ++c) {
      v[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

// Cayley-Bacharach by brute force over every degree-d form: each form
// vanishing at all points but one also vanishes at the last one.
inline bool brute_force_cb(const std::vector<Row>& points, unsigned d, std::size_t n, long long p) {
  const auto basis = exponents(n, d);
  std::vector<Row> values;
  for (const auto& x : points) {
    Row r;
    for (const auto& e : basis) r.push_back(monomial_value(e, x, p));
    values.push_back(r);
  }
  Row coeffs(basis.size(), 0);
  for (;;) {
    std::size_t zeros = 0;
    for (const auto& r : values) {
      long long s = 0;
      for (std::size_t j = 0; j < r.size(); ++j) s = (s + r[j] * coeffs[j]) % p;
      if (s == 0) ++zeros;
    }
    if (zeros + 1 == points.size()) return false;
    std::size_t j = 0;
    while (j < coeffs.size() && ++coeffs[j] == p) coeffs[j++] = 0;
    if (j == coeffs.size()) return true;
  }
}

}  // namespace oracle
