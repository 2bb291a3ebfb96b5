#include "shadowcover/decomposability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace shadowcover {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<NormalComponent> normal_components(const DirectionSet& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> basis_idx;
  IncrementalBasis greedy(n);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (greedy.insert(a[i])) basis_idx.push_back(i);
  if (basis_idx.size() != n) throw std::invalid_argument("normal_components: directions do not span the ambient space");

  std::vector<std::size_t> parent(a.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<RatVector> basis_vecs;
  for (auto i : basis_idx) basis_vecs.push_back(a[i]);
  const RatMatrix b = RatMatrix::from_columns(basis_vecs, n);
  const RatMatrix b_inv = inverse(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::binary_search(basis_idx.begin(), basis_idx.end(), i)) continue;
    const RatVector coef = b_inv * a[i];
    for (std::size_t k = 0; k < n; ++k)
      if (!coef[k].is_zero()) parent[find_root(parent, i)] = find_root(parent, basis_idx[k]);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;  // keyed by smallest member
  std::map<std::size_t, std::size_t> root_to_first;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t r = find_root(parent, i);
    const auto [it, inserted] = root_to_first.emplace(r, i);
    groups[it->second].push_back(i);
  }
  std::vector<NormalComponent> out;
  for (auto& [first, members] : groups) {
    std::vector<RatVector> vs;
    for (auto i : members) vs.push_back(a[i]);
    out.push_back({Subspace(RatMatrix(row_space_basis(vs), n)), std::move(members)});
  }
  std::size_t total = 0;
  for (const auto& c : out) total += c.span.dim();
  if (total != n) throw std::logic_error("normal_components: component dimensions do not add up");
  return out;
}

std::size_t DecompositionReport::max_component_dim() const {
  std::size_t m = 0;
  for (const auto& c : components) m = std::max(m, c.span.dim());
  return m;
}

DecompositionReport decompose(const DirectionSet& normals) {
  DecompositionReport r;
  r.ambient_dim = normals.dim();
  r.components = normal_components(normals);
  return r;
}

DecompositionReport decompose(const Polytope& p) {
  if (!p.full_dimensional()) throw std::invalid_argument("decompose: polytope is not full-dimensional");
  DecompositionReport r = decompose(DirectionSet::facet_normals(p));
  r.factors = extract_factors(p, r.components);
  return r;
}

bool is_decomposable(const Polytope& p, std::size_t d, DecompositionReport* report) {
  DecompositionReport r = decompose(p);
  const bool yes = r.is_d_decomposable(d);
  if (report) *report = std::move(r);
  return yes;
}

FactorList extract_factors(const Polytope& p, const std::vector<NormalComponent>& components) {
  const std::size_t n = p.dim();
  std::vector<Subspace> etas;
  std::vector<RatVector> joint;
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::vector<RatVector> others;
    for (std::size_t j = 0; j < components.size(); ++j)
      if (j != i)
        for (const auto& r : components[j].span.basis().row_vectors()) others.push_back(r);
    auto eta = orthogonal_complement(others, n);
    if (eta.size() != components[i].span.dim())
      throw std::invalid_argument("extract_factors: components do not form a direct sum");
    for (const auto& r : eta) joint.push_back(r);
    etas.emplace_back(RatMatrix(std::move(eta), n));
  }
  if (joint.size() != n) throw std::invalid_argument("extract_factors: components do not form a direct sum");
  // Oblique coordinates: x = sum_i eta_i^T c_i.
  const RatMatrix to_coords = inverse(RatMatrix::from_columns(joint, n));

  std::vector<std::vector<RatVector>> blocks(components.size());
  for (const auto& x : p.vertices()) {
    const RatVector c = to_coords * x;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < etas.size(); ++i) {
      RatVector part(etas[i].dim());
      for (std::size_t j = 0; j < part.size(); ++j) part[j] = c[offset + j];
      offset += part.size();
      blocks[i].push_back(std::move(part));
    }
  }
  FactorList out;
  std::size_t product = 1;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    Polytope f = Polytope::hull(std::move(blocks[i]));
    product *= f.vertices().size();
    if (product > p.vertices().size()) throw std::runtime_error("extract_factors: reconstruction has too many vertices");
    out.emplace_back(etas[i], std::move(f));
  }

  // Every sum of factor vertices must be a vertex of P and vice versa.
  std::vector<RatVector> sums{RatVector(n)};
  for (const auto& [eta, f] : out) {
    std::vector<RatVector> next;
    for (const auto& s : sums)
      for (const auto& v : f.vertices()) next.push_back(s + eta.lift(v));
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  if (sums != p.vertices()) throw std::runtime_error("extract_factors: factors do not reconstruct the polytope");
  return out;
}

CrossCheckReport cross_check_reliable_decomposable(std::span<const std::pair<std::string, Polytope>> corpus) {
  CrossCheckReport rep;
  for (const auto& [label, p] : corpus) {
    if (p.dim() < 3 || !p.full_dimensional())
      throw std::invalid_argument("cross_check_reliable_decomposable: " + label + " is not a full-dimensional body in dimension >= 3");
    if (!is_centrally_symmetric(p))
      throw std::invalid_argument("cross_check_reliable_decomposable: " + label + " is not centrally symmetric");
    CrossCheckEntry e;
    e.label = label;
    const auto rel = is_reliable(p, 2);
    e.reliable = rel.reliable;
    e.family = rel.certificate;
    e.decomposable = decompose(DirectionSet::facet_normals(p)).is_d_decomposable(2);
    if (!e.agrees()) rep.violations.push_back(rep.entries.size());
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace shadowcover
