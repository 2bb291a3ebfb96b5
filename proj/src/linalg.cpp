#include "shadowcover/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace shadowcover {

RatVector RatVector::unit(std::size_t dim, std::size_t axis) {
  RatVector v(dim);
  v[axis] = 1;
  return v;
}

bool RatVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

RatVector& RatVector::operator+=(const RatVector& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("RatVector: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("RatVector: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

std::strong_ordering operator<=>(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

RatVector primitive(const RatVector& v) {
  if (v.is_zero()) return v;
  mpz_class den_lcm = 1;
  for (const auto& e : v) {
    if (!e.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.denominator().get_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(v.size());
  mpz_class g = 0;
  for (const auto& e : v) {
    mpz_class s = e.numerator() * (den_lcm / e.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    scaled.push_back(std::move(s));
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto& s : scaled) out.emplace_back(mpq_class(s / g));
  return RatVector(std::move(out));
}

RatVector canonical_direction(const RatVector& v) {
  RatVector p = primitive(v);
  for (const auto& e : p) {
    if (e.sign() != 0) {
      if (e.sign() < 0) p = -p;
      break;
    }
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows, RatVector(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows, std::size_t cols)
    : rows_(std::move(rows)), cols_(rows_.empty() ? cols : rows_.front().size()) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
  }
}

RatMatrix::RatMatrix(std::initializer_list<RatVector> rows) : RatMatrix(std::vector<RatVector>(rows)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns, std::size_t dim) {
  RatMatrix m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw std::invalid_argument("from_columns: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = columns[j][i];
  }
  return m;
}

void RatMatrix::append_row(RatVector row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
  rows_.push_back(std::move(row));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t[j][i] = rows_[i][j];
  return t;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  RatVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a[i], x);
  return y;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? ", " : "") << m[i];
  return os << ']';
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = m[r][c].reciprocal();
    for (std::size_t j = c; j < m.cols(); ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::size_t rank(std::span<const RatVector> rows) {
  if (rows.empty()) return 0;
  return rank(RatMatrix(std::vector<RatVector>(rows.begin(), rows.end())));
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> row_space_basis(std::span<const RatVector> rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(RatMatrix(std::vector<RatVector>(rows.begin(), rows.end())), &pivots);
  return {r.row_vectors().begin(), r.row_vectors().begin() + static_cast<std::ptrdiff_t>(pivots.size())};
}

std::vector<RatVector> orthogonal_complement(std::span<const RatVector> rows, std::size_t dim) {
  if (rows.empty()) {
    std::vector<RatVector> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(RatVector::unit(dim, i));
    return all;
  }
  return nullspace(RatMatrix(std::vector<RatVector>(rows.begin(), rows.end())));
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational();
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rational inv = m[c][c].reciprocal();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::domain_error("inverse: matrix not square");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(std::move(aug), &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug[i][j] = m[i][j];
    aug[i][m.cols()] = b[i];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r[i][m.cols()];
  return x;
}

RatMatrix orthogonal_projector(const RatMatrix& basis) {
  if (rank(basis) != basis.rows()) throw std::domain_error("orthogonal_projector: dependent basis rows");
  const RatMatrix bt = basis.transpose();
  return bt * inverse(basis * bt) * basis;
}

RatVector cross_product(std::span<const RatVector> rows, std::size_t dim) {
  if (dim == 0 || rows.size() + 1 != dim) throw std::invalid_argument("cross_product: need dim-1 vectors");
  RatVector c(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    RatMatrix minor(dim - 1, dim - 1);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      for (std::size_t k = 0, col = 0; k < dim; ++k) {
        if (k != j) minor[i][col++] = rows[i][k];
      }
    }
    // Cofactor expansion of det([rows; x]) along the last row.
    const Rational det = determinant(std::move(minor));
    c[j] = ((dim - 1 + j) % 2 == 0) ? det : -det;
  }
  return c;
}

RatVector IncrementalBasis::reduce(RatVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (!f.is_zero()) v -= f * rows_[i];
  }
  return v;
}

bool IncrementalBasis::insert(const RatVector& v) {
  RatVector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  r *= r[p].reciprocal();
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace shadowcover
