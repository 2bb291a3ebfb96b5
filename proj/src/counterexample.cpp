#include "shadowcover/counterexample.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "shadowcover/lp.hpp"

namespace shadowcover {

Polytope build_s(const Polytope& l, const SimplicialFamily& family, std::size_t d) {
  if (family.size() < d + 2) throw std::invalid_argument("build_s: family has fewer than d + 2 members");
  const auto normals = DirectionSet::facet_normals(l);
  for (auto i : family.members)
    if (i >= normals.size()) throw std::invalid_argument("build_s: family member is not a facet of L");
  if (!verify_family(normals, family)) throw std::invalid_argument("build_s: not a simplicial family of L's normals");

  std::vector<RatVector> points;
  for (auto i : family.members) {
    const Facet& f = l.facets()[i];
    RatVector c(l.dim());
    for (auto v : f.incident) c += l.vertices()[v];
    c *= Rational(1, static_cast<long long>(f.incident.size()));
    points.push_back(std::move(c));
  }
  Polytope s = Polytope::hull(std::move(points));
  for (auto i : family.members)
    if (support(s, l.facets()[i].normal) != l.facets()[i].offset)
      throw std::logic_error("build_s: S does not touch a family facet");
  return s;
}

FarkasCertificate family_certificate(const SimplicialFamily& family) {
  FarkasCertificate c;
  for (std::size_t k = 0; k < family.size(); ++k) c.multipliers.emplace_back(family.members[k], family.coefficients[k]);
  return c;
}

namespace {

constexpr std::size_t kRefineStarts = 3;
constexpr std::size_t kRefineBudget = 150;  // per start
constexpr int kRefineRounds = 3;

}  // namespace

AlphaSearch find_alpha(const Polytope& l, const Polytope& s, std::size_t d, const SubspaceSampler& sampler,
                       std::size_t trials, const Rational& margin) {
  if (margin.sign() <= 0 || margin >= Rational(1)) throw std::invalid_argument("find_alpha: margin must lie in (0, 1)");
  if (trials == 0) throw std::invalid_argument("find_alpha: need at least one trial");
  if (d != sampler.d()) throw std::invalid_argument("find_alpha: sampler dimension differs from d");
  AlphaSearch out;
  auto scale_at = [&](const Subspace& xi) {
    ++out.evaluations;
    return max_scale(project(s, xi), project(l, xi)).alpha;
  };
  std::vector<std::pair<Rational, std::size_t>> sampled;
  for (std::size_t t = 0; t < trials; ++t) sampled.emplace_back(scale_at(sampler.draw(l.dim(), t)), t);
  std::stable_sort(sampled.begin(), sampled.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  out.alpha_min = sampled.front().first;
  out.argmin_trial = sampled.front().second;
  out.argmin_basis = sampler.draw(l.dim(), out.argmin_trial).basis();

  for (std::size_t k = 0; k < std::min(kRefineStarts, sampled.size()); ++k) {
    RatMatrix b = sampler.draw(l.dim(), sampled[k].second).basis();
    Rational best = sampled[k].first;
    std::size_t spent = 0;
    for (int round = 0; round < kRefineRounds && spent < kRefineBudget; ++round) {
      if (round > 0)
        for (std::size_t i = 0; i < b.rows(); ++i) b[i] *= Rational(2);
      bool improved = true;
      while (improved && spent < kRefineBudget) {
        improved = false;
        for (std::size_t i = 0; i < b.rows() && spent < kRefineBudget; ++i)
          for (std::size_t j = 0; j < b.cols() && spent < kRefineBudget; ++j)
            for (long long step : {1, -1}) {
              RatMatrix c = b;
              c[i][j] += Rational(step);
              if (rank(c) < d) continue;
              ++spent;
              const Rational a = scale_at(Subspace(c));
              if (a < best) {
                best = a;
                b = std::move(c);
                improved = true;
                break;
              }
            }
      }
    }
    if (best < out.alpha_min) {
      out.alpha_min = best;
      out.argmin_basis = b;
    }
  }
  if (out.alpha_min <= Rational(1)) {
    std::ostringstream msg;
    msg << "find_alpha: no scale above 1 (alpha_min = " << out.alpha_min << ")";
    throw std::runtime_error(msg.str());
  }
  out.alpha = Rational(1) + margin * (out.alpha_min - Rational(1));
  return out;
}

CounterexampleBundle build_counterexample(const Polytope& l, std::size_t d, const SubspaceSampler& sampler,
                                          std::size_t trials, const Rational& margin,
                                          std::optional<SimplicialFamily> family) {
  if (!family) {
    const auto verdict = is_reliable(l, d);
    if (verdict.reliable) throw std::invalid_argument("build_counterexample: polytope is d-reliable");
    family = verdict.certificate;
  }
  CounterexampleBundle b{l, d, *family, build_s(l, *family, d), {}, {}, margin, trials, {}, {}};
  const AlphaSearch a = find_alpha(l, b.s, d, sampler, trials, margin);
  b.alpha = a.alpha;
  b.alpha_min = a.alpha_min;
  b.noncontainment = family_certificate(b.family);
  b.shadow_report = sampled_shadow_cover(scale(b.s, b.alpha), l, d, sampler, trials);
  return b;
}

namespace {

// Feasibility of h_K(u_i) + u_i . v <= b_i over the family facets alone.
std::optional<FarkasCertificate> restricted_certificate(const Polytope& k, const Polytope& l,
                                                        const SimplicialFamily& family) {
  LPProblem lp{RatVector(l.dim()), {}, {}};
  for (auto i : family.members) {
    const Facet& f = l.facets()[i];
    lp.constraints.push_back({f.normal, f.offset - support(k, f.normal)});
  }
  const LPOutcome res = solve_lp(lp);
  const auto* inf = std::get_if<LPInfeasible>(&res);
  if (!inf) return std::nullopt;
  FarkasCertificate c;
  for (std::size_t j = 0; j < family.size(); ++j)
    if (inf->multipliers[j].sign() > 0) c.multipliers.emplace_back(family.members[j], inf->multipliers[j]);
  return c;
}

}  // namespace

BundleCheck verify_bundle(const CounterexampleBundle& b, const SubspaceSampler& fresh, std::size_t trials) {
  BundleCheck out;
  const Polytope k = scale(b.s, b.alpha);
  out.full_verdict = translate_fit(k, b.l);
  out.family_certificate_ok = verify_certificate(k, b.l, family_certificate(b.family));
  out.restricted_certificate = restricted_certificate(k, b.l, b.family);
  if (out.restricted_certificate && !verify_certificate(k, b.l, *out.restricted_certificate))
    throw std::logic_error("verify_bundle: restricted certificate failed to verify");
  bool on_family = true;
  for (const auto& [idx, lambda] : b.noncontainment.multipliers)
    on_family = on_family && std::find(b.family.members.begin(), b.family.members.end(), idx) != b.family.members.end();
  out.stored_certificate_ok = on_family && verify_certificate(k, b.l, b.noncontainment);
  out.statistical = sampled_shadow_cover(k, b.l, b.d, fresh, trials);
  return out;
}

std::string BundleCheck::summary() const {
  std::ostringstream os;
  os << "exact: " << (exact_pass() ? "PASS" : "FAIL");
  if (full_verdict.fits) os << " (alpha S fits with v = " << *full_verdict.witness << ")";
  os << "; statistical: " << (statistical_pass() ? "PASS" : "FAIL") << " (" << statistical.passes << "/"
     << statistical.trials << " sampled shadows fit";
  if (statistical.first_failure_trial) os << ", first failure at trial " << *statistical.first_failure_trial;
  os << ")";
  return os.str();
}

}  // namespace shadowcover
