#ifndef FWCG_LP_HPP
#define FWCG_LP_HPP

#include "fwcg/types.hpp"

namespace fwcg::lp {

// min c^T x  s.t.  A x = b, x >= 0.
struct StandardFormLp {
  Matrix A;  // m x n
  Vector b;  // m
  Vector c;  // n
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

// Optimal carries x with A x = b, x >= -1e-9 and value = c^T x.
// Unbounded carries a ray r with A r = 0, r >= 0, c^T r < 0.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vector x;
  double value = 0.0;
  Vector ray;
};

// Pivot magnitudes below this are treated as numerically unusable.
inline constexpr double kPivotTol = 1e-11;

class SimplexNumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LpResult solve_lp(const StandardFormLp& lp);

}  // namespace fwcg::lp

#endif  // FWCG_LP_HPP
