#include "shadowcover/lp.hpp"

#include <stdexcept>

namespace shadowcover {
namespace {

// Dense simplex tableau: rows[i] . y = rhs[i] with basis[i] the basic column
// of row i, and `reduced` the reduced costs of the current (maximization)
// objective.
class Tableau {
 public:
  enum class Result { optimal, unbounded };

  Tableau(std::size_t num_cols) : num_cols_(num_cols), allowed_(num_cols, true) {}

  void add_row(std::vector<Rational> row, Rational rhs, std::size_t basic) {
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    basis_.push_back(basic);
  }

  void forbid(std::size_t col) { allowed_[col] = false; }

  // Maximizes cost . y from the current basic feasible solution.
  Result maximize(const std::vector<Rational>& cost) {
    reduced_ = cost;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!rows_[i][j].is_zero()) reduced_[j] -= cb * rows_[i][j];
      }
    }
    while (true) {
      std::size_t entering = num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (allowed_[j] && reduced_[j].sign() > 0) {
          entering = j;
          break;
        }
      }
      if (entering == num_cols_) return Result::optimal;

      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering].sign() <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) {
        unbounded_col_ = entering;
        return Result::unbounded;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = rows_[r][c].reciprocal();
    for (auto& e : rows_[r]) {
      if (!e.is_zero()) e *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!rows_[r][j].is_zero()) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (!reduced_.empty() && !reduced_[c].is_zero()) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!rows_[r][j].is_zero()) reduced_[j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Pivots basic columns in [first, last) out of the basis where possible
  // and deletes rows that cannot be pivoted (redundant equations).
  void evict_columns(std::size_t first, std::size_t last) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first || basis_[i] >= last) {
        ++i;
        continue;
      }
      std::size_t col = num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if ((j < first || j >= last) && !rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == num_cols_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> y(num_cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rhs_[i];
    return y;
  }

  // Direction in y-space along which the objective grows without bound.
  std::vector<Rational> unbounded_direction() const {
    std::vector<Rational> d(num_cols_);
    d[unbounded_col_] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) d[basis_[i]] = -rows_[i][unbounded_col_];
    return d;
  }

  const std::vector<Rational>& reduced_costs() const { return reduced_; }

 private:
  std::size_t num_cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<Rational> reduced_;
  std::size_t unbounded_col_ = 0;
};

}  // namespace

std::vector<LinearConstraint> LPProblem::expanded_rows() const {
  std::vector<LinearConstraint> rows = constraints;
  for (std::size_t j = 0; j < num_vars(); ++j) {
    if (is_nonneg(j)) rows.push_back({-RatVector::unit(num_vars(), j), Rational()});
  }
  return rows;
}

LPOutcome solve_lp(const LPProblem& problem) {
  const std::size_t n = problem.num_vars();
  const std::size_t m = problem.constraints.size();
  for (const auto& c : problem.constraints) {
    if (c.a.size() != n) throw std::invalid_argument("solve_lp: constraint dimension mismatch");
  }
  if (!problem.nonneg.empty() && problem.nonneg.size() != n) {
    throw std::invalid_argument("solve_lp: nonneg flag count mismatch");
  }

  // Column layout: x_j (or x_j^+), then x_j^- for free variables, then one
  // slack per row, then one artificial per row with negative right-hand side.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) pos_col[j] = cols++;
  for (std::size_t j = 0; j < n; ++j) {
    if (!problem.is_nonneg(j)) neg_col[j] = cols++;
  }
  const std::size_t slack0 = cols;
  cols += m;
  const std::size_t art0 = cols;
  std::size_t num_art = 0;
  for (const auto& c : problem.constraints) num_art += c.b.sign() < 0;
  cols += num_art;

  Tableau tab(cols);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    const bool flip = c.b.sign() < 0;
    std::vector<Rational> row(cols);
    for (std::size_t j = 0; j < n; ++j) {
      row[pos_col[j]] = flip ? -c.a[j] : c.a[j];
      if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = flip ? c.a[j] : -c.a[j];
    }
    row[slack0 + i] = flip ? -1 : 1;
    if (flip) {
      row[next_art] = 1;
      tab.add_row(std::move(row), -c.b, next_art++);
    } else {
      tab.add_row(std::move(row), c.b, slack0 + i);
    }
  }

  if (num_art > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1;
    tab.maximize(phase1);
    const auto y = tab.solution();
    Rational infeasibility;
    for (std::size_t j = art0; j < cols; ++j) infeasibility += y[j];
    if (infeasibility.sign() > 0) {
      // Minimization reduced costs of the slack and nonnegative structural
      // columns are exactly the Farkas multipliers.
      const auto& reduced = tab.reduced_costs();
      LPInfeasible cert;
      for (std::size_t i = 0; i < m; ++i) cert.multipliers.push_back(-reduced[slack0 + i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (problem.is_nonneg(j)) cert.multipliers.push_back(-reduced[pos_col[j]]);
      }
      LPOutcome out = std::move(cert);
      if (!verify_outcome(problem, out)) throw std::logic_error("solve_lp: Farkas certificate failed verification");
      return out;
    }
    tab.evict_columns(art0, cols);
    for (std::size_t j = art0; j < cols; ++j) tab.forbid(j);
  }

  std::vector<Rational> phase2(cols);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[pos_col[j]] = problem.objective[j];
    if (neg_col[j] != SIZE_MAX) phase2[neg_col[j]] = -problem.objective[j];
  }
  const auto result = tab.maximize(phase2);

  auto to_x = [&](const std::vector<Rational>& y) {
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = y[pos_col[j]];
      if (neg_col[j] != SIZE_MAX) x[j] -= y[neg_col[j]];
    }
    return x;
  };

  LPOutcome out;
  const RatVector point = to_x(tab.solution());
  if (result == Tableau::Result::optimal) {
    Rational value = dot(problem.objective, point);
    out = LPOptimal{point, std::move(value)};
  } else {
    out = LPUnbounded{point, to_x(tab.unbounded_direction())};
  }
  if (!verify_outcome(problem, out)) throw std::logic_error("solve_lp: outcome failed verification");
  return out;
}

bool verify_outcome(const LPProblem& problem, const LPOutcome& outcome) {
  const auto rows = problem.expanded_rows();
  const std::size_t n = problem.num_vars();
  auto feasible = [&](const RatVector& x) {
    if (x.size() != n) return false;
    for (const auto& r : rows) {
      if (dot(r.a, x) > r.b) return false;
    }
    return true;
  };

  if (const auto* opt = std::get_if<LPOptimal>(&outcome)) {
    return feasible(opt->point) && dot(problem.objective, opt->point) == opt->value;
  }
  if (const auto* unb = std::get_if<LPUnbounded>(&outcome)) {
    if (!feasible(unb->point) || unb->ray.size() != n) return false;
    for (const auto& r : rows) {
      if (dot(r.a, unb->ray).sign() > 0) return false;
    }
    return dot(problem.objective, unb->ray).sign() > 0;
  }
  const auto& inf = std::get<LPInfeasible>(outcome);
  if (inf.multipliers.size() != rows.size()) return false;
  RatVector combo(n);
  Rational rhs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& l = inf.multipliers[i];
    if (l.sign() < 0) return false;
    if (l.is_zero()) continue;
    combo += l * rows[i].a;
    rhs += l * rows[i].b;
  }
  return combo.is_zero() && rhs.sign() < 0;
}

}  // namespace shadowcover
