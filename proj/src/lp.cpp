#include "fwcg/lp.hpp"

#include <cmath>
#include <numeric>
#include <vector>

// Dense tableau, two phases.
//
// Phase 1 appends one artificial variable per row (rows are pre-scaled so
// b >= 0, making the artificial basis feasible) and minimizes their sum;
// a positive phase-1 optimum certifies infeasibility. Surviving basic
// artificials are pivoted out, or their rows dropped when the row is zero
// across the structural columns (redundant constraint). Phase 2 then runs
// on the structural columns only, so an unbounded entering column j with
// tableau column t <= 0 yields the ray r_j = 1, r_{B(i)} = -t_i, which
// satisfies A r = 0, r >= 0, c^T r < 0 exactly in the original variables.
//
// Pivot selection is Bland's rule throughout: entering = lowest-index
// column with negative reduced cost, leaving = lowest-index basic variable
// among the minimum-ratio rows. This excludes cycling, so the pivot count
// is bounded by the number of bases, C(n+m, m); exceeding that bound is an
// internal error.

namespace fwcg::lp {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kFeasTol = 1e-9;

double basis_count_bound(int n_total, int m) {
  double bound = 1.0;
  for (int i = 1; i <= m; ++i) {
    bound *= static_cast<double>(n_total - m + i) / static_cast<double>(i);
    if (bound > 1e15) return 1e15;
  }
  return bound;
}

struct Tableau {
  // rows m, columns: n_cols structural/artificial + rhs.
  Matrix body;          // m x (n_cols + 1)
  std::vector<int> basis;  // basic column per row
  int n_cols = 0;

  double& rhs(int i) { return body(i, n_cols); }

  void pivot(int row, int col) {
    const double piv = body(row, col);
    if (std::abs(piv) < kPivotTol) {
      throw SimplexNumericalError("pivot below 1e-11; tableau is numerically degenerate");
    }
    body.row(row) /= piv;
    for (int i = 0; i < body.rows(); ++i) {
      if (i == row) continue;
      const double factor = body(i, col);
      if (factor != 0.0) body.row(i) -= factor * body.row(row);
    }
    basis[static_cast<std::size_t>(row)] = col;
  }
};

// Reduced costs for the current basis: z_j = c_j - c_B^T B^{-1} A_j, using
// the tableau body (already B^{-1} A).
Vector reduced_costs(const Tableau& t, const Vector& cost, int active_cols) {
  Vector z = cost.head(active_cols);
  for (int i = 0; i < t.body.rows(); ++i) {
    const double cb = cost[t.basis[static_cast<std::size_t>(i)]];
    if (cb != 0.0) z -= cb * t.body.row(i).head(active_cols).transpose();
  }
  return z;
}

enum class IterateStatus { Optimal, Unbounded };

// Runs simplex iterations on `t` for the given cost vector, restricted to
// columns [0, active_cols). On Unbounded, fills `entering` and leaves the
// tableau at the certificate basis.
IterateStatus iterate(Tableau& t, const Vector& cost, int active_cols,
                      double pivot_budget, int* entering_out) {
  double pivots = 0.0;
  for (;;) {
    const Vector z = reduced_costs(t, cost, active_cols);
    int entering = -1;
    for (int j = 0; j < active_cols; ++j) {
      if (z[j] < -kReducedCostTol) {
        entering = j;
        break;  // Bland: lowest index
      }
    }
    if (entering < 0) return IterateStatus::Optimal;

    int leave_row = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < t.body.rows(); ++i) {
      const double a = t.body(i, entering);
      if (a > kPivotTol) {
        const double ratio = t.rhs(i) / a;
        if (leave_row < 0 || ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 &&
             t.basis[static_cast<std::size_t>(i)] <
                 t.basis[static_cast<std::size_t>(leave_row)])) {
          leave_row = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave_row < 0) {
      *entering_out = entering;
      return IterateStatus::Unbounded;
    }
    t.pivot(leave_row, entering);
    if (++pivots > pivot_budget) {
      throw SimplexNumericalError("pivot count exceeded the basis bound; Bland's rule violated");
    }
  }
}

}  // namespace

LpResult solve_lp(const StandardFormLp& lp) {
  const int m = static_cast<int>(lp.A.rows());
  const int n = static_cast<int>(lp.A.cols());
  if (m < 1 || n < 1 || lp.b.size() != m || lp.c.size() != n) {
    throw std::invalid_argument("solve_lp: inconsistent dimensions");
  }
  if (!lp.A.allFinite() || !lp.b.allFinite() || !lp.c.allFinite()) {
    throw std::invalid_argument("solve_lp: non-finite entries");
  }

  const double pivot_budget = basis_count_bound(n + m, m) + 16.0;

  Tableau t;
  t.n_cols = n + m;
  t.body.setZero(m, t.n_cols + 1);
  t.body.block(0, 0, m, n) = lp.A;
  for (int i = 0; i < m; ++i) {
    if (lp.b[i] < 0.0) t.body.row(i).head(n) *= -1.0;
    t.rhs(i) = std::abs(lp.b[i]);
    t.body(i, n + i) = 1.0;
    t.basis.push_back(n + i);
  }

  // Phase 1: minimize the artificial sum.
  Vector phase1_cost = Vector::Zero(t.n_cols);
  phase1_cost.tail(m).setOnes();
  int entering = -1;
  iterate(t, phase1_cost, t.n_cols, pivot_budget, &entering);

  double artificial_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] >= n) artificial_sum += t.rhs(i);
  }
  if (artificial_sum > kFeasTol) {
    LpResult r;
    r.status = LpStatus::Infeasible;
    return r;
  }

  // Drive leftover basic artificials out; drop redundant rows.
  for (int i = static_cast<int>(t.body.rows()) - 1; i >= 0; --i) {
    if (t.basis[static_cast<std::size_t>(i)] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t.body(i, j)) > kPivotTol) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      const int last = static_cast<int>(t.body.rows()) - 1;
      if (i != last) {
        t.body.row(i) = t.body.row(last);
        t.basis[static_cast<std::size_t>(i)] = t.basis[static_cast<std::size_t>(last)];
      }
      t.body.conservativeResize(last, Eigen::NoChange);
      t.basis.pop_back();
    }
  }

  // Phase 2 over the structural columns.
  Vector phase2_cost = Vector::Zero(t.n_cols);
  phase2_cost.head(n) = lp.c;
  const IterateStatus st = iterate(t, phase2_cost, n, pivot_budget, &entering);

  LpResult r;
  if (st == IterateStatus::Unbounded) {
    Vector ray = Vector::Zero(n);
    ray[entering] = 1.0;
    for (int i = 0; i < t.body.rows(); ++i) {
      const int bi = t.basis[static_cast<std::size_t>(i)];
      if (bi < n) ray[bi] = std::max(0.0, -t.body(i, entering));
    }
    r.status = LpStatus::Unbounded;
    r.ray = ray;
    return r;
  }

  Vector x = Vector::Zero(n);
  for (int i = 0; i < t.body.rows(); ++i) {
    const int bi = t.basis[static_cast<std::size_t>(i)];
    if (bi < n) x[bi] = t.rhs(i);
  }
  r.status = LpStatus::Optimal;
  r.x = x;
  r.value = lp.c.dot(x);
  return r;
}

}  // namespace fwcg::lp
