#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shadowcover/polytope.hpp"
#include "shadowcover/reliability.hpp"

namespace shadowcover {

struct NormalComponent {
  Subspace span;                     // span of the member directions
  std::vector<std::size_t> members;  // ascending indices into the DirectionSet
};

// Finest partition of the directions whose group spans form a direct sum:
// the connected components of the linear matroid. Computed from the
// fundamental circuits of a greedy basis (a non-basis direction joins every
// basis direction that appears in its expansion). Components are ordered by
// smallest member; span bases are in reduced row echelon form, so equal
// subspaces compare equal. Throws std::invalid_argument if the directions do
// not span the ambient space.
std::vector<NormalComponent> normal_components(const DirectionSet& a);

using FactorList = std::vector<std::pair<Subspace, Polytope>>;

struct DecompositionReport {
  std::vector<NormalComponent> components;
  // Factor i lives in eta_i, the orthogonal complement of the other
  // components' spans, and is given in eta_i's basis coordinates, so
  // direct_sum(*factors) reproduces P exactly.
  std::optional<FactorList> factors;

  std::size_t ambient_dim = 0;
  std::size_t max_component_dim() const;
  bool is_d_decomposable(std::size_t d) const { return max_component_dim() <= d; }
};

DecompositionReport decompose(const DirectionSet& normals);
// Includes the factors. Throws std::invalid_argument if P is not
// full-dimensional.
DecompositionReport decompose(const Polytope& p);

bool is_decomposable(const Polytope& p, std::size_t d, DecompositionReport* report = nullptr);

// Splits P along the components and verifies exactly that the sums of the
// factor vertices are the vertices of P. Throws std::runtime_error if that
// check fails.
FactorList extract_factors(const Polytope& p, const std::vector<NormalComponent>& components);

struct CrossCheckEntry {
  std::string label;
  bool reliable = false;
  bool decomposable = false;
  std::optional<SimplicialFamily> family;  // certificate when not 2-reliable
  bool agrees() const { return reliable == decomposable; }
};

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;
  std::vector<std::size_t> violations;  // indices of disagreeing entries
  bool ok() const { return violations.empty(); }
};

// Compares 2-reliability with 2-decomposability on centrally symmetric
// full-dimensional polytopes of dimension >= 3; any other member throws
// std::invalid_argument.
CrossCheckReport cross_check_reliable_decomposable(std::span<const std::pair<std::string, Polytope>> corpus);

}  // namespace shadowcover
