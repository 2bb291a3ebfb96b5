#include "shadowcover/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace shadowcover {
namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long long>(i));
  return f;
}

}  // namespace

Subspace::Subspace(RatMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0 || basis_.rows() > basis_.cols()) {
    throw std::invalid_argument("Subspace: need 1 <= d <= n basis rows");
  }
  if (rank(basis_) != basis_.rows()) throw std::invalid_argument("Subspace: basis rows are dependent");
  coord_map_ = inverse(basis_ * basis_.transpose()) * basis_;
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> axes) {
  RatMatrix b;
  for (auto a : axes) b.append_row(RatVector::unit(ambient, a));
  return Subspace(std::move(b));
}

RatVector Subspace::lift(const RatVector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("Subspace::lift: dimension mismatch");
  RatVector x(ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!coords[i].is_zero()) x += coords[i] * basis_[i];
  }
  return x;
}

bool Subspace::contains(const RatVector& x) const {
  RatMatrix m = basis_;
  m.append_row(x);
  return rank(m) == dim();
}

Polytope Polytope::hull(std::vector<RatVector> points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point list");
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("hull: points of different dimension");
  }
  const std::size_t input_count = points.size();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out;
  out.dim_ = n;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  out.direction_basis_ = row_space_basis(diffs);
  const std::size_t k = out.direction_basis_.size();
  if (k == 0) {
    out.vertices_ = {points[0]};
    out.discarded_ = input_count - 1;
    return out;
  }

  const auto complement = orthogonal_complement(out.direction_basis_, n);
  std::map<RatVector, Rational> found;  // outward normal -> offset
  const std::size_t count = points.size();

  auto known = [&](const RatVector& a, const RatVector& p) {
    const auto it = found.find(a);
    return it != found.end() && dot(a, p) == it->second;
  };

  for_each_combination(count, k, [&](const std::vector<std::size_t>& subset) {
    RatMatrix m(std::vector<RatVector>{}, n);
    const RatVector& base = points[subset[0]];
    for (std::size_t j = 1; j < subset.size(); ++j) m.append_row(points[subset[j]] - base);
    for (const auto& w : complement) m.append_row(w);
    const auto ns = nullspace(m);
    if (ns.size() != 1) return;
    RatVector a = primitive(ns[0]);
    if (known(a, base) || known(-a, base)) return;
    const Rational b = dot(a, base);
    bool above = false, below = false;
    for (const auto& p : points) {
      const int s = (dot(a, p) - b).sign();
      above |= s > 0;
      below |= s < 0;
      if (above && below) return;
    }
    if (above) {
      found.emplace(-a, -b);
    } else {
      found.emplace(std::move(a), b);
    }
  });

  // Extreme points are those whose incident facet normals span the
  // direction space.
  std::vector<std::vector<std::size_t>> point_facets(count);
  std::vector<Facet> facets;
  for (const auto& [normal, offset] : found) {
    Facet f{normal, offset, {}};
    for (std::size_t i = 0; i < count; ++i) {
      if (dot(normal, points[i]) == offset) {
        f.incident.push_back(i);
        point_facets[i].push_back(facets.size());
      }
    }
    facets.push_back(std::move(f));
  }
  std::vector<std::size_t> remap(count, SIZE_MAX);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<RatVector> normals;
    for (auto f : point_facets[i]) normals.push_back(facets[f].normal);
    if (normals.size() >= k && rank(normals) == k) {
      remap[i] = out.vertices_.size();
      out.vertices_.push_back(points[i]);
    }
  }
  for (auto& f : facets) {
    std::vector<std::size_t> inc;
    for (auto i : f.incident) {
      if (remap[i] != SIZE_MAX) inc.push_back(remap[i]);
    }
    f.incident = std::move(inc);
  }
  out.facets_ = std::move(facets);
  out.discarded_ = input_count - out.vertices_.size();
  return out;
}

Rational support(const Polytope& p, const RatVector& u) {
  if (u.size() != p.dim()) throw std::invalid_argument("support: dimension mismatch");
  const auto& vs = p.vertices();
  Rational best = dot(u, vs.front());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational v = dot(u, vs[i]);
    if (v > best) best = std::move(v);
  }
  return best;
}

Polytope project(const Polytope& p, const Subspace& xi) {
  if (xi.ambient_dim() != p.dim()) throw std::invalid_argument("project: dimension mismatch");
  std::vector<RatVector> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(xi.coordinates(v));
  return Polytope::hull(std::move(pts));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<RatVector> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return Polytope::hull(std::move(pts));
}

Polytope translate(const Polytope& p, const RatVector& t) {
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return Polytope::hull(std::move(pts));
}

Polytope scale(const Polytope& p, const Rational& factor) {
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(factor * v);
  return Polytope::hull(std::move(pts));
}

Polytope direct_sum(std::span<const std::pair<Subspace, Polytope>> factors) {
  if (factors.empty()) throw std::invalid_argument("direct_sum: no factors");
  const std::size_t n = factors.front().first.ambient_dim();
  std::vector<RatVector> stacked;
  std::size_t total = 0;
  for (const auto& [sub, body] : factors) {
    if (sub.ambient_dim() != n) throw std::invalid_argument("direct_sum: ambient dimension mismatch");
    if (body.dim() != sub.dim()) throw std::invalid_argument("direct_sum: factor not in subspace coordinates");
    total += sub.dim();
    for (const auto& r : sub.basis().row_vectors()) stacked.push_back(r);
  }
  if (rank(stacked) != total) throw std::invalid_argument("direct_sum: subspaces are not independent");

  std::vector<RatVector> sums{RatVector(n)};
  for (const auto& [sub, body] : factors) {
    std::vector<RatVector> next;
    next.reserve(sums.size() * body.vertices().size());
    for (const auto& v : body.vertices()) {
      const RatVector lifted = sub.lift(v);
      for (const auto& s : sums) next.push_back(s + lifted);
    }
    sums = std::move(next);
  }
  return Polytope::hull(std::move(sums));
}

Polytope direct_sum(const Polytope& p, const Polytope& q, const Subspace& xi, const Subspace& eta) {
  const std::pair<Subspace, Polytope> factors[] = {{xi, p}, {eta, q}};
  return direct_sum(factors);
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p) {
  if (p.affine_dim() == 0) return {{0}};
  std::vector<std::vector<std::size_t>> simplices;
  const auto& vs = p.vertices();
  for (const auto& f : p.facets()) {
    if (std::find(f.incident.begin(), f.incident.end(), 0) != f.incident.end()) continue;
    std::vector<RatVector> pts;
    for (auto i : f.incident) pts.push_back(vs[i]);
    const Polytope face = Polytope::hull(pts);
    std::vector<std::size_t> back;
    for (const auto& v : face.vertices()) {
      back.push_back(static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()));
    }
    for (const auto& s : triangulate(face)) {
      std::vector<std::size_t> simplex{0};
      for (auto i : s) simplex.push_back(back[i]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

std::vector<RatVector> facet_area_vectors(const Polytope& p) {
  if (!p.full_dimensional()) throw std::invalid_argument("facet_area_vectors: polytope is not full-dimensional");
  const std::size_t n = p.dim();
  const Rational inv_fact = factorial(n - 1).reciprocal();
  std::vector<RatVector> out;
  for (const auto& f : p.facets()) {
    std::vector<RatVector> pts;
    for (auto i : f.incident) pts.push_back(p.vertices()[i]);
    const Polytope face = Polytope::hull(pts);
    RatVector area(n);
    for (const auto& s : triangulate(face)) {
      std::vector<RatVector> edges;
      for (std::size_t j = 1; j < s.size(); ++j) edges.push_back(face.vertices()[s[j]] - face.vertices()[s[0]]);
      RatVector c = cross_product(edges, n);
      if (dot(c, f.normal).sign() < 0) c = -c;
      area += c;
    }
    out.push_back(inv_fact * area);
  }
  return out;
}

bool vector_area_check(const Polytope& p) {
  RatVector total(p.dim());
  for (const auto& a : facet_area_vectors(p)) total += a;
  return total.is_zero();
}

std::optional<RatVector> is_centrally_symmetric(const Polytope& p) {
  const auto& vs = p.vertices();
  RatVector c(p.dim());
  for (const auto& v : vs) c += v;
  c *= Rational(static_cast<long long>(vs.size())).reciprocal();
  std::vector<RatVector> reflected;
  reflected.reserve(vs.size());
  const RatVector twice = Rational(2) * c;
  for (const auto& v : vs) reflected.push_back(twice - v);
  std::sort(reflected.begin(), reflected.end());
  if (reflected != vs) return std::nullopt;
  return c;
}

Polytope embed(const Polytope& p, std::size_t target_dim) {
  if (target_dim < p.dim()) throw std::invalid_argument("embed: target dimension smaller than ambient");
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) {
    std::vector<Rational> e(v.begin(), v.end());
    e.resize(target_dim);
    pts.emplace_back(std::move(e));
  }
  return Polytope::hull(std::move(pts));
}

Polytope apply_linear(const Polytope& p, const RatMatrix& psi) {
  if (psi.rows() != p.dim() || psi.cols() != p.dim()) throw std::invalid_argument("apply_linear: dimension mismatch");
  if (determinant(psi).is_zero()) throw std::domain_error("apply_linear: singular transformation");
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(psi * v);
  return Polytope::hull(std::move(pts));
}

Polytope affine_coordinates(const Polytope& p) {
  const auto& base = p.vertices().front();
  if (p.affine_dim() == 0) return Polytope::hull({RatVector()});
  const Subspace dir{RatMatrix(p.direction_basis())};
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(dir.coordinates(v - base));
  return Polytope::hull(std::move(pts));
}

}  // namespace shadowcover
