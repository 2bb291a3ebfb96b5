#include "shadowcover/containment.hpp"

#include <random>
#include <stdexcept>

#include "shadowcover/lp.hpp"
#include "shadowcover/random.hpp"

namespace shadowcover {

namespace {

void require_same_dim(const Polytope& k, const Polytope& l, const char* who) {
  if (k.dim() != l.dim()) throw std::invalid_argument(std::string(who) + ": ambient dimensions differ");
}

// K's affine hull must be parallel to a subspace of L's for any translate
// to fit.
bool hull_parallel(const Polytope& k, const std::vector<RatVector>& l_complement) {
  for (const auto& r : k.direction_basis())
    for (const auto& w : l_complement)
      if (!dot(w, r).is_zero()) return false;
  return true;
}

// Caratheodory reduction: while the columns (a_i, b_i - h_K(a_i)) in the
// support are dependent, move along a nullspace vector until a multiplier
// hits zero. The combination is unchanged, so the certificate stays valid,
// and the result uses independent columns only. Scaled to primitive
// integers at the end.
FarkasCertificate reduce_certificate(const Polytope& k, const Polytope& l, FarkasCertificate cert) {
  const std::size_t n = l.dim();
  for (;;) {
    std::vector<RatVector> cols;
    for (const auto& [idx, lambda] : cert.multipliers) {
      const Facet& f = l.facets()[idx];
      std::vector<Rational> c(f.normal.begin(), f.normal.end());
      c.push_back(f.offset - support(k, f.normal));
      cols.emplace_back(std::move(c));
    }
    const auto ns = nullspace(RatMatrix::from_columns(cols, n + 1));
    if (ns.empty()) break;
    RatVector mu = ns[0];
    bool has_positive = false;
    for (const auto& e : mu) has_positive = has_positive || e.sign() > 0;
    if (!has_positive) mu = -mu;
    std::optional<Rational> step;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mu[i].sign() > 0) {
        const Rational t = cert.multipliers[i].second / mu[i];
        if (!step || t < *step) step = t;
      }
    FarkasCertificate next;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const Rational lambda = cert.multipliers[i].second - *step * mu[i];
      if (lambda.sign() > 0) next.multipliers.emplace_back(cert.multipliers[i].first, lambda);
    }
    cert = std::move(next);
  }
  RatVector lambdas(cert.multipliers.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) lambdas[i] = cert.multipliers[i].second;
  lambdas = primitive(lambdas);
  for (std::size_t i = 0; i < lambdas.size(); ++i) cert.multipliers[i].second = lambdas[i];
  return cert;
}

}  // namespace

ContainmentVerdict translate_fit(const Polytope& k, const Polytope& l) {
  require_same_dim(k, l, "translate_fit");
  const std::size_t n = l.dim();
  const auto& dirs = l.direction_basis();
  ContainmentVerdict out;
  if (!hull_parallel(k, orthogonal_complement(dirs, n))) {
    out.hull_mismatch = true;
    return out;
  }
  // v = v0 + D^T t keeps K + v inside aff(L).
  const RatVector v0 = l.vertices()[0] - k.vertices()[0];
  if (dirs.empty()) {
    out.fits = true;
    out.witness = v0;
    return out;
  }

  LPProblem lp{RatVector(dirs.size()), {}, {}};
  for (const auto& f : l.facets()) {
    RatVector a(dirs.size());
    for (std::size_t j = 0; j < dirs.size(); ++j) a[j] = dot(dirs[j], f.normal);
    lp.constraints.push_back({std::move(a), f.offset - support(k, f.normal) - dot(f.normal, v0)});
  }
  const LPOutcome res = solve_lp(lp);
  if (const auto* opt = std::get_if<LPOptimal>(&res)) {
    RatVector v = v0;
    for (std::size_t j = 0; j < dirs.size(); ++j) v += opt->point[j] * dirs[j];
    out.fits = true;
    out.witness = std::move(v);
  } else if (const auto* inf = std::get_if<LPInfeasible>(&res)) {
    FarkasCertificate cert;
    for (std::size_t i = 0; i < inf->multipliers.size(); ++i)
      if (inf->multipliers[i].sign() > 0) cert.multipliers.emplace_back(i, inf->multipliers[i]);
    out.certificate = reduce_certificate(k, l, std::move(cert));
  } else {
    throw std::logic_error("translate_fit: feasibility LP reported unbounded");
  }
  return out;
}

bool verify_witness(const Polytope& k, const Polytope& l, const RatVector& v) {
  if (k.dim() != l.dim() || v.size() != l.dim()) return false;
  for (const auto& f : l.facets())
    if (support(k, f.normal) + dot(f.normal, v) > f.offset) return false;
  const auto comp = orthogonal_complement(l.direction_basis(), l.dim());
  const RatVector& anchor = l.vertices()[0];
  for (const auto& x : k.vertices()) {
    const RatVector off = x + v - anchor;
    for (const auto& w : comp)
      if (!dot(w, off).is_zero()) return false;
  }
  return true;
}

bool verify_certificate(const Polytope& k, const Polytope& l, const FarkasCertificate& cert) {
  if (k.dim() != l.dim() || cert.multipliers.empty()) return false;
  RatVector combo(l.dim());
  Rational slack = 0;
  for (const auto& [idx, lambda] : cert.multipliers) {
    if (idx >= l.facets().size() || lambda.sign() <= 0) return false;
    const Facet& f = l.facets()[idx];
    combo += lambda * f.normal;
    slack += lambda * (f.offset - support(k, f.normal));
  }
  return combo.is_zero() && slack.sign() < 0;
}

bool verify_verdict(const Polytope& k, const Polytope& l, const ContainmentVerdict& verdict) {
  if (verdict.fits) return verdict.witness && verify_witness(k, l, *verdict.witness);
  if (verdict.hull_mismatch) return !hull_parallel(k, orthogonal_complement(l.direction_basis(), l.dim()));
  return verdict.certificate && verify_certificate(k, l, *verdict.certificate);
}

ScaleResult max_scale(const Polytope& k, const Polytope& l) {
  require_same_dim(k, l, "max_scale");
  const std::size_t n = l.dim();
  const auto& dirs = l.direction_basis();
  const RatVector& pk = k.vertices()[0];
  const RatVector& pl = l.vertices()[0];
  if (!hull_parallel(k, orthogonal_complement(dirs, n))) return {Rational(0), pl};

  // Variables (alpha, t); alpha K + v with v = p_L - alpha p_K + D^T t.
  const std::size_t m = dirs.size() + 1;
  LPProblem lp{RatVector::unit(m, 0), {}, std::vector<bool>(m, false)};
  lp.nonneg[0] = true;
  for (const auto& f : l.facets()) {
    RatVector a(m);
    a[0] = support(k, f.normal) - dot(f.normal, pk);
    for (std::size_t j = 0; j < dirs.size(); ++j) a[j + 1] = dot(dirs[j], f.normal);
    lp.constraints.push_back({std::move(a), f.offset - dot(f.normal, pl)});
  }
  const LPOutcome res = solve_lp(lp);
  const auto* opt = std::get_if<LPOptimal>(&res);
  if (!opt) throw std::logic_error("max_scale: scale is unbounded");
  const Rational alpha = opt->point[0];
  RatVector v = pl - alpha * pk;
  for (std::size_t j = 0; j < dirs.size(); ++j) v += opt->point[j + 1] * dirs[j];
  return {alpha, std::move(v)};
}

ContainmentVerdict shadow_fit(const Polytope& k, const Polytope& l, const Subspace& xi) {
  require_same_dim(k, l, "shadow_fit");
  if (xi.ambient_dim() != l.dim()) throw std::invalid_argument("shadow_fit: subspace ambient dimension mismatch");
  return translate_fit(project(k, xi), project(l, xi));
}

SubspaceSampler::SubspaceSampler(std::uint64_t seed, std::size_t d, long long entry_bound)
    : seed_(seed), d_(d), entry_bound_(entry_bound) {
  if (d == 0) throw std::invalid_argument("SubspaceSampler: d must be positive");
  if (entry_bound < 1) throw std::invalid_argument("SubspaceSampler: entry bound must be positive");
}

Subspace SubspaceSampler::draw(std::size_t ambient_dim, std::size_t trial) const {
  if (d_ > ambient_dim) throw std::invalid_argument("SubspaceSampler: d exceeds ambient dimension");
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  std::mt19937_64 gen(seq);
  for (;;) {
    RatMatrix b(d_, ambient_dim);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) b[i][j] = uniform_int(gen, -entry_bound_, entry_bound_);
    if (rank(b) == d_) return Subspace(std::move(b));
  }
}

ShadowCoverReport sampled_shadow_cover(const Polytope& k, const Polytope& l, std::size_t d,
                                       const SubspaceSampler& sampler, std::size_t trials) {
  require_same_dim(k, l, "sampled_shadow_cover");
  if (d != sampler.d()) throw std::invalid_argument("sampled_shadow_cover: sampler dimension differs from d");
  ShadowCoverReport rep;
  rep.seed = sampler.seed();
  rep.d = d;
  rep.entry_bound = sampler.entry_bound();
  rep.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    const Subspace xi = sampler.draw(l.dim(), i);
    if (shadow_fit(k, l, xi).fits) {
      ++rep.passes;
    } else if (!rep.first_failure_trial) {
      rep.first_failure_trial = i;
      rep.first_failure = xi;
    }
  }
  return rep;
}

ProductVerdict product_containment(const Polytope& k, std::span<const std::pair<Subspace, Polytope>> components) {
  const std::size_t n = k.dim();
  std::vector<RatVector> all_rows;
  for (const auto& [xi, factor] : components) {
    if (xi.ambient_dim() != n) throw std::invalid_argument("product_containment: subspace ambient dimension mismatch");
    if (factor.dim() != xi.dim()) throw std::invalid_argument("product_containment: factor dimension mismatch");
    for (const auto& r : xi.basis().row_vectors()) all_rows.push_back(r);
  }
  if (all_rows.size() != n || rank(all_rows) != n)
    throw std::invalid_argument("product_containment: subspaces do not form a direct sum of the ambient space");

  bool orthogonal = true;
  for (std::size_t i = 0; i < components.size() && orthogonal; ++i)
    for (std::size_t j = i + 1; j < components.size() && orthogonal; ++j)
      for (const auto& a : components[i].first.basis().row_vectors())
        for (const auto& b : components[j].first.basis().row_vectors())
          if (!dot(a, b).is_zero()) orthogonal = false;

  ProductVerdict out;
  out.orthogonal = orthogonal;
  if (orthogonal) {
    RatVector v(n);
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& [xi, factor] = components[i];
      ContainmentVerdict part = translate_fit(project(k, xi), factor);
      if (!part.fits) {
        out.verdict = std::move(part);
        out.failing_component = i;
        return out;
      }
      v += xi.lift(*part.witness);
    }
    out.verdict.fits = true;
    out.verdict.witness = std::move(v);
    return out;
  }

  // psi sends the joint basis to the standard basis, making the
  // decomposition orthogonal.
  const RatMatrix e = RatMatrix::from_columns(all_rows, n);
  const RatMatrix psi = inverse(e);
  std::vector<std::pair<Subspace, Polytope>> mapped;
  std::size_t offset = 0;
  for (const auto& [xi, factor] : components) {
    std::vector<std::size_t> axes(xi.dim());
    for (std::size_t j = 0; j < axes.size(); ++j) axes[j] = offset + j;
    offset += xi.dim();
    mapped.emplace_back(Subspace::coordinate(n, axes), factor);
  }
  ProductVerdict inner = product_containment(apply_linear(k, psi), mapped);
  out.verdict = std::move(inner.verdict);
  out.failing_component = inner.failing_component;
  if (out.verdict.witness) out.verdict.witness = e * *out.verdict.witness;
  return out;
}

}  // namespace shadowcover
