#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they are used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "shadowcover/linalg.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Integer matrix from rationals by clearing denominators row by row.
inline IntMatrix to_integer_rows(const std::vector<shadowcover::RatVector>& rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    mpz_class l = 1;
    for (const auto& e : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.denominator().get_mpz_t());
    std::vector<mpz_class> row;
    for (const auto& e : r) row.push_back(e.numerator() * (l / e.denominator()));
    out.push_back(std::move(row));
  }
  return out;
}

// Fraction-free (Bareiss) elimination rank.
inline std::size_t bareiss_rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<shadowcover::RatVector>& rows) {
  return bareiss_rank(to_integer_rows(rows));
}

// Whether the point set has every point weakly on the negative side of
// a . x <= b, checked with plain GMP rationals.
inline bool all_below(const std::vector<shadowcover::RatVector>& points, const shadowcover::RatVector& a,
                      const shadowcover::Rational& b) {
  for (const auto& p : points) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i].to_mpq() * a[i].to_mpq();
    if (s > b.to_mpq()) return false;
  }
  return true;
}

// Union-find keyed by element index.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Invokes visit on every subset of {0..n-1} with size in [lo, hi].
inline void for_each_subset(std::size_t n, std::size_t lo, std::size_t hi,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() >= lo && cur.size() <= hi) visit(cur);
    if (cur.size() == hi) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Minimal dependent subsets (circuits) of a vector list, by brute force.
inline std::vector<std::vector<std::size_t>> circuits(const std::vector<shadowcover::RatVector>& vs,
                                                      std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(vs.size(), 1, max_size, [&](const std::vector<std::size_t>& s) {
    std::vector<shadowcover::RatVector> sub;
    for (auto i : s) sub.push_back(vs[i]);
    if (rank(sub) != s.size() - 1) return;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<shadowcover::RatVector> smaller;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) smaller.push_back(vs[s[j]]);
      if (rank(smaller) != smaller.size()) return;
    }
    out.push_back(s);
  });
  return out;
}

// Unique (up to scale) dependency of a circuit, by plain mpq Gaussian
// elimination on the matrix with the vectors as columns. Empty if the
// nullspace is not one-dimensional.
inline std::vector<mpq_class> circuit_dependency(const std::vector<shadowcover::RatVector>& vs) {
  const std::size_t m = vs.size(), n = vs.empty() ? 0 : vs[0].size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = vs[j][i].to_mpq();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r + 1 != m) return {};
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<mpq_class> x(m);
  x[free_col] = 1;
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = -a[i][free_col] / a[i][pivot_col[i]];
  return x;
}

// Whether the vectors form a simplicial family: a circuit whose dependency
// has entries of one sign.
inline bool is_simplicial_family(const std::vector<shadowcover::RatVector>& vs) {
  if (vs.size() < 2 || rank(vs) + 1 != vs.size()) return false;
  const auto x = circuit_dependency(vs);
  if (x.empty()) return false;
  bool pos = true, neg = true;
  for (const auto& e : x) {
    pos = pos && e > 0;
    neg = neg && e < 0;
  }
  return pos || neg;
}

}  // namespace oracle
