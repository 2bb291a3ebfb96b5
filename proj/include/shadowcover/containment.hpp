#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shadowcover/polytope.hpp"

namespace shadowcover {

// Nonnegative multipliers on facets (a_i, b_i) of the container with
// sum lambda_i a_i = 0 and sum lambda_i (b_i - h_K(a_i)) < 0: no translate of
// K satisfies every facet inequality.
struct FarkasCertificate {
  std::vector<std::pair<std::size_t, Rational>> multipliers;  // (facet index, lambda > 0)
};

struct ContainmentVerdict {
  bool fits = false;
  std::optional<RatVector> witness;  // v with K + v inside L
  std::optional<FarkasCertificate> certificate;
  // Set when K's affine hull is not parallel to a subspace of L's; no
  // Farkas certificate is produced in that case.
  bool hull_mismatch = false;
};

// Decides whether K + v is contained in L for some v, by an LP over v with
// one constraint h_K(a) + a.v <= b per facet (a, b) of L. Lower-dimensional
// L is handled inside its affine hull.
ContainmentVerdict translate_fit(const Polytope& k, const Polytope& l);

bool verify_witness(const Polytope& k, const Polytope& l, const RatVector& v);
bool verify_certificate(const Polytope& k, const Polytope& l, const FarkasCertificate& cert);
// Re-checks whichever of witness/certificate the verdict carries.
bool verify_verdict(const Polytope& k, const Polytope& l, const ContainmentVerdict& verdict);

struct ScaleResult {
  Rational alpha;
  RatVector translation;  // alpha * K + translation lies in L
};

// Largest alpha >= 0 such that a translate of alpha * K fits in L. Throws
// std::logic_error if the LP is unbounded (K a single point).
ScaleResult max_scale(const Polytope& k, const Polytope& l);

// translate_fit of the two shadows on xi, in xi-coordinates.
ContainmentVerdict shadow_fit(const Polytope& k, const Polytope& l, const Subspace& xi);

// Deterministic source of random d-dimensional subspaces: integer basis
// matrices with entries uniform in [-entry_bound, entry_bound], redrawn until
// they have rank d. Trial i depends only on (seed, i).
class SubspaceSampler {
 public:
  SubspaceSampler(std::uint64_t seed, std::size_t d, long long entry_bound = 10);

  Subspace draw(std::size_t ambient_dim, std::size_t trial) const;

  std::uint64_t seed() const { return seed_; }
  std::size_t d() const { return d_; }
  long long entry_bound() const { return entry_bound_; }

 private:
  std::uint64_t seed_;
  std::size_t d_;
  long long entry_bound_;
};

// Statistical evidence only: passing every sampled subspace does not prove
// that every d-shadow of L covers the corresponding shadow of K.
struct ShadowCoverReport {
  std::uint64_t seed = 0;
  std::size_t d = 0;
  long long entry_bound = 0;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::optional<std::size_t> first_failure_trial;
  std::optional<Subspace> first_failure;

  bool all_pass() const { return passes == trials; }
};

ShadowCoverReport sampled_shadow_cover(const Polytope& k, const Polytope& l, std::size_t d,
                                       const SubspaceSampler& sampler, std::size_t trials);

struct ProductVerdict {
  ContainmentVerdict verdict;
  bool orthogonal = false;
  // Component whose shadow test failed; the verdict's certificate then
  // refers to the facets of that component's factor.
  std::optional<std::size_t> failing_component;
};

// Containment of K in C = factor_1 (+) ... (+) factor_m, decided one
// component at a time. Each factor is given in the coordinates of its
// subspace, and the subspaces must form a direct sum of Q^n. Non-orthogonal
// decompositions are first mapped by the linear map sending the joint basis
// to the standard basis; the witness is mapped back. Throws
// std::invalid_argument if the components do not form a direct sum.
ProductVerdict product_containment(const Polytope& k, std::span<const std::pair<Subspace, Polytope>> components);

}  // namespace shadowcover
