#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shadowcover/polytope.hpp"

namespace shadowcover {

// Nonzero directions in Q^n, no two of them positive multiples of each
// other (antipodal pairs are fine). Each direction also has a canonical
// form: primitive integer vector whose first nonzero entry is positive.
class DirectionSet {
 public:
  // Every direction must be a nonzero vector of length dim with no positive
  // multiple elsewhere in the list; std::invalid_argument otherwise.
  DirectionSet(std::size_t dim, std::vector<RatVector> directions);

  // Outward facet normals of P in facet order (relative to the affine hull
  // for lower-dimensional P).
  static DirectionSet facet_normals(const Polytope& p);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return directions_.size(); }
  const std::vector<RatVector>& directions() const { return directions_; }
  const RatVector& operator[](std::size_t i) const { return directions_[i]; }
  const RatVector& canonical(std::size_t i) const { return canonical_[i]; }
  // True when the direction points opposite to its canonical form.
  bool flipped(std::size_t i) const { return flipped_[i]; }

 private:
  std::size_t dim_;
  std::vector<RatVector> directions_;
  std::vector<RatVector> canonical_;
  std::vector<bool> flipped_;
};

// Directions u_i (indices into a DirectionSet, ascending) with
// sum c_i u_i = 0 for positive integers c_i without common factor, spanning a
// space of dimension size - 1.
struct SimplicialFamily {
  std::vector<std::size_t> members;
  std::vector<Rational> coefficients;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const SimplicialFamily&, const SimplicialFamily&) = default;
};

// Family over the whole input (members 0..m-1) if the vectors are
// simplicial: rank m - 1 and a strictly positive dependency.
std::optional<SimplicialFamily> is_simplicial(std::span<const RatVector> vectors);

bool verify_family(const DirectionSet& a, const SimplicialFamily& family);

// All simplicial families of size min_size .. n+1, sorted by size and then
// by member indices. Subsets whose proper prefixes are dependent are
// pruned, since every proper subset of a family is independent.
std::vector<SimplicialFamily> enumerate_simplicial(const DirectionSet& a, std::size_t min_size);

// The first family in the enumerate_simplicial order, without building the
// full list.
std::optional<SimplicialFamily> first_simplicial(const DirectionSet& a, std::size_t min_size);

// Number of subsets with size in [lo, hi] of a set of n elements, saturating
// at UINT64_MAX.
std::uint64_t subset_count(std::size_t n, std::size_t lo, std::size_t hi);

struct ReliabilityVerdict {
  std::size_t d = 0;
  bool reliable = false;
  std::optional<SimplicialFamily> certificate;  // smallest family of size >= d + 2
};

// A polytope is d-reliable iff its facet normals contain no simplicial
// family of size d + 2 or more. Throws std::invalid_argument unless
// 1 <= d <= n - 1.
ReliabilityVerdict is_reliable(const Polytope& p, std::size_t d);
ReliabilityVerdict is_reliable(const DirectionSet& normals, std::size_t d);

// Independent test for parallelotopes: 2n facets in antipodal pairs with
// independent directions, opposite facets being translates of each other.
// Throws std::invalid_argument for lower-dimensional P.
bool parallelotope_check(const Polytope& p);

}  // namespace shadowcover
