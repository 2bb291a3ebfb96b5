#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "shadowcover/rational.hpp"

namespace shadowcover {

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim) {}
  RatVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static RatVector unit(std::size_t dim, std::size_t axis);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_zero() const;

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const std::vector<Rational>& entries() const { return entries_; }

  RatVector& operator+=(const RatVector& rhs);
  RatVector& operator-=(const RatVector& rhs);
  RatVector& operator*=(const Rational& s);

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, RatVector v) { return v *= s; }
  friend RatVector operator-(RatVector v) { return v *= Rational(-1); }

  friend bool operator==(const RatVector&, const RatVector&) = default;
  // Lexicographic.
  friend std::strong_ordering operator<=>(const RatVector& a, const RatVector& b);

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RatVector& a, const RatVector& b);

// Positive multiple of v with integer entries whose gcd is 1 ("content
// reduced"). The zero vector is returned unchanged.
RatVector primitive(const RatVector& v);

// primitive(v) flipped, if needed, so that its first nonzero entry is positive.
RatVector canonical_direction(const RatVector& v);

std::ostream& operator<<(std::ostream& os, const RatVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  // Every row must have the same dimension; `cols` fixes the column count
  // for an empty row list.
  explicit RatMatrix(std::vector<RatVector> rows, std::size_t cols = 0);
  RatMatrix(std::initializer_list<RatVector> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t dim);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  RatVector& operator[](std::size_t i) { return rows_[i]; }
  const RatVector& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<RatVector>& row_vectors() const { return rows_; }

  void append_row(RatVector row);

  RatMatrix transpose() const;
  RatVector column(std::size_t j) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& x);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::vector<RatVector> rows_;
  std::size_t cols_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

// Reduced row echelon form; `pivots` receives the pivot column of each
// nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);
std::size_t rank(std::span<const RatVector> rows);

// Basis of {x : Mx = 0}. Each basis vector has a single free variable set to 1
// (read off the reduced row echelon form), so the output is deterministic.
std::vector<RatVector> nullspace(const RatMatrix& m);

// Nonzero rows of the reduced row echelon form of `rows`: a canonical basis
// of their span.
std::vector<RatVector> row_space_basis(std::span<const RatVector> rows);

// Basis of the orthogonal complement of span(rows) inside Q^dim.
std::vector<RatVector> orthogonal_complement(std::span<const RatVector> rows, std::size_t dim);

Rational determinant(RatMatrix m);

// Throws std::domain_error when m is singular or not square.
RatMatrix inverse(const RatMatrix& m);

// Solves Mx = b when a solution exists.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

// Matrix of the orthogonal projection onto the row space of `basis`,
// B^T (B B^T)^{-1} B. Throws std::domain_error if the rows are dependent.
RatMatrix orthogonal_projector(const RatMatrix& basis);

// Generalized cross product of n-1 vectors in Q^n: orthogonal to each of
// them, with Euclidean length equal to the volume of the parallelotope
// they span. For n == 1 this is the vector (1).
RatVector cross_product(std::span<const RatVector> rows, std::size_t dim);

// Row echelon basis grown one vector at a time, for cheap incremental
// independence tests.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

  // Adds v if it is independent of the stored rows; returns whether it was.
  bool insert(const RatVector& v);
  bool in_span(const RatVector& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  RatVector reduce(RatVector v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;  // rows_[i][pivots_[i]] == 1
  std::vector<std::size_t> pivots_;
};

}  // namespace shadowcover
