#pragma once

#include <optional>
#include <string>

#include "shadowcover/containment.hpp"
#include "shadowcover/reliability.hpp"

namespace shadowcover {

// A body S and scale alpha > 1 such that no translate of alpha S fits in L
// (proved exactly) while every sampled d-shadow of alpha S fits in the
// matching shadow of L (evidence only).
struct CounterexampleBundle {
  Polytope l;
  std::size_t d = 0;
  SimplicialFamily family;  // members index L's facets
  Polytope s;
  Rational alpha;
  Rational alpha_min;  // smallest sampled shadow scale of S in L
  Rational margin;
  std::size_t alpha_trials = 0;
  FarkasCertificate noncontainment;  // over L's facets, supported on the family
  ShadowCoverReport shadow_report;   // alpha S vs L on the alpha-search subspaces
};

// Hull of the vertex centroids of the family facets of L. Each such point
// lies in the relative interior of its facet, so h_S(u_i) = h_L(u_i) on the
// family; this is checked. Throws std::invalid_argument if the family has
// fewer than d + 2 members or is not a simplicial family of L's facet
// normals.
Polytope build_s(const Polytope& l, const SimplicialFamily& family, std::size_t d);

// lambda_i = c_i on the family facets. Valid for alpha S vs L whenever
// alpha > 1, since sum c_i (h_L(u_i) - alpha h_S(u_i)) = (1 - alpha) sum c_i h_L(u_i)
// and sum c_i h_L(u_i) > 0 for full-dimensional L.
FarkasCertificate family_certificate(const SimplicialFamily& family);

struct AlphaSearch {
  Rational alpha;
  Rational alpha_min;
  std::size_t argmin_trial = 0;   // best sampled trial before refinement
  RatMatrix argmin_basis;         // basis of the subspace attaining alpha_min
  std::size_t evaluations = 0;    // shadow scale LPs solved, sampling included
};

// alpha = 1 + margin (alpha_min - 1), where alpha_min is the smallest
// max_scale(S_xi, L_xi) found. The sampled minimum is pushed down by a
// deterministic local search from the best few samples: integer steps on
// the basis entries, then halving the step by doubling the basis.
// Sampling plus search stands in for a compactness argument, so the result
// is not certified for unvisited subspaces. Throws std::runtime_error if
// alpha_min <= 1 and std::invalid_argument unless 0 < margin < 1.
AlphaSearch find_alpha(const Polytope& l, const Polytope& s, std::size_t d, const SubspaceSampler& sampler,
                       std::size_t trials, const Rational& margin);

// Full pipeline. Uses the smallest simplicial family of size >= d + 2 among
// L's facet normals unless one is given; throws std::invalid_argument if L
// is d-reliable.
CounterexampleBundle build_counterexample(const Polytope& l, std::size_t d, const SubspaceSampler& sampler,
                                          std::size_t trials, const Rational& margin,
                                          std::optional<SimplicialFamily> family = std::nullopt);

struct BundleCheck {
  // Exact half.
  ContainmentVerdict full_verdict;   // translate_fit(alpha S, L)
  bool family_certificate_ok = false;
  std::optional<FarkasCertificate> restricted_certificate;  // LP over the family facets only
  bool stored_certificate_ok = false;
  // Statistical half.
  ShadowCoverReport statistical;

  bool exact_pass() const {
    return !full_verdict.fits && family_certificate_ok && restricted_certificate.has_value() && stored_certificate_ok;
  }
  bool statistical_pass() const { return statistical.all_pass(); }
  bool pass() const { return exact_pass() && statistical_pass(); }
  std::string summary() const;
};

// Re-derives both halves from the bundle contents: exact non-containment of
// alpha S in L, and sampled shadow containment on fresh subspaces.
BundleCheck verify_bundle(const CounterexampleBundle& b, const SubspaceSampler& fresh, std::size_t trials);

}  // namespace shadowcover
