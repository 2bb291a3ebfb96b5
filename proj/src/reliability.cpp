#include "shadowcover/reliability.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace shadowcover {

DirectionSet::DirectionSet(std::size_t dim, std::vector<RatVector> directions)
    : dim_(dim), directions_(std::move(directions)) {
  for (const auto& u : directions_) {
    if (u.size() != dim_) throw std::invalid_argument("DirectionSet: direction has wrong length");
    if (u.is_zero()) throw std::invalid_argument("DirectionSet: zero direction");
    const RatVector canon = canonical_direction(u);
    // The first nonzero entries of u and canon agree in sign iff not flipped.
    std::size_t j = 0;
    while (u[j].is_zero()) ++j;
    const bool flip = u[j].sign() < 0;
    for (std::size_t i = 0; i < canonical_.size(); ++i)
      if (canonical_[i] == canon && flipped_[i] == flip)
        throw std::invalid_argument("DirectionSet: positively proportional directions");
    canonical_.push_back(canon);
    flipped_.push_back(flip);
  }
}

DirectionSet DirectionSet::facet_normals(const Polytope& p) {
  std::vector<RatVector> normals;
  for (const auto& f : p.facets()) normals.push_back(f.normal);
  return DirectionSet(p.dim(), std::move(normals));
}

std::optional<SimplicialFamily> is_simplicial(std::span<const RatVector> vectors) {
  if (vectors.size() < 2) return std::nullopt;
  const std::size_t n = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != n || v.is_zero()) return std::nullopt;
  const auto ns = nullspace(RatMatrix::from_columns(vectors, n));
  if (ns.size() != 1) return std::nullopt;
  RatVector c = ns[0];
  if (c[0].sign() < 0) c = -c;
  for (const auto& e : c)
    if (e.sign() <= 0) return std::nullopt;
  SimplicialFamily fam;
  const RatVector prim = primitive(c);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    fam.members.push_back(i);
    fam.coefficients.push_back(prim[i]);
  }
  return fam;
}

bool verify_family(const DirectionSet& a, const SimplicialFamily& family) {
  const std::size_t m = family.members.size();
  if (m < 2 || family.coefficients.size() != m) return false;
  if (!std::is_sorted(family.members.begin(), family.members.end()) ||
      std::adjacent_find(family.members.begin(), family.members.end()) != family.members.end())
    return false;
  RatVector sum(a.dim());
  std::vector<RatVector> vs;
  for (std::size_t i = 0; i < m; ++i) {
    if (family.members[i] >= a.size() || family.coefficients[i].sign() <= 0) return false;
    vs.push_back(a[family.members[i]]);
    sum += family.coefficients[i] * vs.back();
  }
  return sum.is_zero() && rank(vs) == m - 1;
}

namespace {

// Depth-first search over index subsets of one fixed size in lexicographic
// order. Stops early when visit returns true.
class FamilySearch {
 public:
  FamilySearch(const DirectionSet& a, std::size_t size) : a_(a), size_(size) {}

  template <typename Visit>
  bool run(Visit&& visit) {
    chosen_.clear();
    return descend(0, IncrementalBasis(a_.dim()), visit);
  }

 private:
  template <typename Visit>
  bool descend(std::size_t start, const IncrementalBasis& basis, Visit& visit) {
    const std::size_t need = size_ - chosen_.size();
    for (std::size_t i = start; i + need <= a_.size(); ++i) {
      chosen_.push_back(i);
      if (need == 1) {
        // Last member must lie in the span of the (independent) others.
        if (basis.in_span(a_[i]) && report(visit)) return true;
      } else {
        IncrementalBasis next = basis;
        if (next.insert(a_[i]) && descend(i + 1, next, visit)) return true;
      }
      chosen_.pop_back();
    }
    return false;
  }

  template <typename Visit>
  bool report(Visit& visit) {
    std::vector<RatVector> vs;
    for (auto i : chosen_) vs.push_back(a_[i]);
    auto fam = is_simplicial(vs);
    if (!fam) return false;
    fam->members = chosen_;
    return visit(std::move(*fam));
  }

  const DirectionSet& a_;
  std::size_t size_;
  std::vector<std::size_t> chosen_;
};

std::size_t max_family_size(const DirectionSet& a) { return std::min(a.dim() + 1, a.size()); }

}  // namespace

std::vector<SimplicialFamily> enumerate_simplicial(const DirectionSet& a, std::size_t min_size) {
  if (min_size < 2) throw std::invalid_argument("enumerate_simplicial: min_size must be at least 2");
  std::vector<SimplicialFamily> out;
  for (std::size_t m = min_size; m <= max_family_size(a); ++m) {
    FamilySearch(a, m).run([&](SimplicialFamily f) {
      out.push_back(std::move(f));
      return false;
    });
  }
  return out;
}

std::optional<SimplicialFamily> first_simplicial(const DirectionSet& a, std::size_t min_size) {
  if (min_size < 2) throw std::invalid_argument("first_simplicial: min_size must be at least 2");
  std::optional<SimplicialFamily> found;
  for (std::size_t m = min_size; m <= max_family_size(a) && !found; ++m) {
    FamilySearch(a, m).run([&](SimplicialFamily f) {
      found = std::move(f);
      return true;
    });
  }
  return found;
}

std::uint64_t subset_count(std::size_t n, std::size_t lo, std::size_t hi) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t k = lo; k <= std::min(hi, n); ++k) {
    // C(n, k) via the multiplicative formula with 128-bit intermediates.
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      c = c * (n - k + i) / i;
      if (c > kMax) return kMax;
    }
    if (total > kMax - static_cast<std::uint64_t>(c)) return kMax;
    total += static_cast<std::uint64_t>(c);
  }
  return total;
}

ReliabilityVerdict is_reliable(const DirectionSet& normals, std::size_t d) {
  if (d < 1 || d + 1 > normals.dim()) throw std::invalid_argument("is_reliable: d must lie in [1, n-1]");
  ReliabilityVerdict v;
  v.d = d;
  v.certificate = first_simplicial(normals, d + 2);
  v.reliable = !v.certificate;
  return v;
}

ReliabilityVerdict is_reliable(const Polytope& p, std::size_t d) {
  return is_reliable(DirectionSet::facet_normals(p), d);
}

bool parallelotope_check(const Polytope& p) {
  if (!p.full_dimensional()) throw std::invalid_argument("parallelotope_check: polytope is not full-dimensional");
  const std::size_t n = p.dim();
  const auto& facets = p.facets();
  if (facets.size() != 2 * n) return false;

  auto facet_points = [&](const Facet& f) {
    std::vector<RatVector> pts;
    for (auto i : f.incident) pts.push_back(p.vertices()[i]);
    std::sort(pts.begin(), pts.end());
    return pts;
  };

  std::vector<RatVector> representatives;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const RatVector opposite = -facets[i].normal;
    std::size_t j = 0;
    while (j < facets.size() && facets[j].normal != opposite) ++j;
    if (j == facets.size()) return false;
    if (i > j) continue;
    representatives.push_back(facets[i].normal);
    // Translation preserves the lexicographic order, so sorted vertex lists
    // of translated facets differ by a constant vector.
    const auto a = facet_points(facets[i]), b = facet_points(facets[j]);
    if (a.size() != b.size()) return false;
    const RatVector shift = b[0] - a[0];
    for (std::size_t k = 1; k < a.size(); ++k)
      if (b[k] - a[k] != shift) return false;
  }
  return representatives.size() == n && rank(representatives) == n;
}

}  // namespace shadowcover
