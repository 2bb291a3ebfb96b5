#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shadowcover/linalg.hpp"

namespace shadowcover {

// A facet (relative to the affine hull) given by normal . x <= offset. The
// normal is a primitive integer vector parallel to the affine hull, pointing
// outward; incident lists the vertices on the facet.
struct Facet {
  RatVector normal;
  Rational offset;
  std::vector<std::size_t> incident;
};

// A d-dimensional linear subspace of Q^n given by d independent basis rows.
// Coordinates of a point x of the subspace are the c with x = basis^T c.
class Subspace {
 public:
  explicit Subspace(RatMatrix basis);

  // span{e_i : i in axes} inside Q^ambient.
  static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> axes);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  // (B B^T)^{-1} B: maps x in Q^n to the coordinates of its orthogonal
  // projection.
  const RatMatrix& coordinate_map() const { return coord_map_; }
  RatVector coordinates(const RatVector& x) const { return coord_map_ * x; }
  RatVector lift(const RatVector& coords) const;

  bool contains(const RatVector& x) const;

 private:
  RatMatrix basis_;
  RatMatrix coord_map_;
};

// Convex polytope in Q^n stored by its extreme points, with the facet list
// derived once at construction. Lower-dimensional polytopes are allowed;
// their facets are relative facets inside the affine hull, and a single
// point has no facets.
class Polytope {
 public:
  // Builds the convex hull of a nonempty point list (duplicates and
  // non-extreme points are dropped). Facets are enumerated by brute force
  // over affinely independent point subsets, which costs about
  // C(V, k) * V for V points spanning a k-dimensional affine hull; intended
  // for ambient dimension <= 6 and a few dozen points.
  static Polytope hull(std::vector<RatVector> points);

  std::size_t dim() const { return dim_; }
  std::size_t affine_dim() const { return direction_basis_.size(); }
  bool full_dimensional() const { return affine_dim() == dim_; }

  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  // Canonical basis (reduced row echelon rows) of the linear space parallel
  // to the affine hull.
  const std::vector<RatVector>& direction_basis() const { return direction_basis_; }

  // Number of input points discarded as duplicates or non-extreme.
  std::size_t discarded_points() const { return discarded_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<RatVector> direction_basis_;
  std::size_t discarded_ = 0;
};

inline Polytope hull_from_vertices(std::vector<RatVector> points) { return Polytope::hull(std::move(points)); }

// max over x in P of u . x
Rational support(const Polytope& p, const RatVector& u);

// Shadow of P on the subspace, in the subspace's coordinates.
Polytope project(const Polytope& p, const Subspace& xi);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope translate(const Polytope& p, const RatVector& t);
Polytope scale(const Polytope& p, const Rational& factor);

// Embeds each factor (given in its subspace's coordinates) and returns the
// Minkowski sum. Throws std::invalid_argument unless the subspace bases are
// jointly independent.
Polytope direct_sum(std::span<const std::pair<Subspace, Polytope>> factors);
Polytope direct_sum(const Polytope& p, const Polytope& q, const Subspace& xi, const Subspace& eta);

// Area vector of each facet of a full-dimensional polytope: outward normal
// direction, Euclidean length equal to the facet's (n-1)-volume.
std::vector<RatVector> facet_area_vectors(const Polytope& p);

// True iff the facet area vectors sum to zero. Throws std::invalid_argument
// for lower-dimensional input.
bool vector_area_check(const Polytope& p);

// Center c if the vertex set equals its reflection through c.
std::optional<RatVector> is_centrally_symmetric(const Polytope& p);

// Appends zero coordinates to every vertex.
Polytope embed(const Polytope& p, std::size_t target_dim);

// Image under a square nonsingular matrix; throws std::domain_error if
// psi is singular.
Polytope apply_linear(const Polytope& p, const RatMatrix& psi);

// P expressed in coordinates of its own affine hull: first vertex at the
// origin, axes given by direction_basis(). The result is full-dimensional in
// Q^affine_dim.
Polytope affine_coordinates(const Polytope& p);

// Triangulation of P into affine_dim-simplices (vertex index lists) by
// recursively coning from the first vertex.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p);

}  // namespace shadowcover
