#ifndef FWCG_SETS_HPP
#define FWCG_SETS_HPP

#include "fwcg/rng.hpp"
#include "fwcg/types.hpp"

#include <vector>

namespace fwcg {

enum class SetKind {
  HalfspaceSimplex,   // { x >= 0 : x_1 + ... + x_n >= 1 }
  ProductSet,         // { x >= 0 : x_1 * ... * x_n >= 1 }
  Polyhedron,         // { x >= 0 : A x >= b }, A > 0 entrywise, b > 0
  MonotoneNonnegCone, // { x : x_1 >= x_2 >= ... >= x_n >= 0 }
  NonnegOrthant,      // { x : x >= 0 }
};

const char* set_kind_name(SetKind kind);

// Result of minimizing c^T p over a feasible set. Either the minimum is
// attained at `point`, or `direction` is a unit recession direction with
// c^T direction < 0 certifying that no minimizer exists. The ProductSet
// non-attainment case (some c_i = 0, infimum approached but never reached)
// is also reported as Unbounded; there the certificate satisfies
// c^T direction = 0.
struct OracleOutcome {
  bool attained = false;
  Vector point;       // minimizer, when attained
  double value = 0.0; // c^T (point - x) for lo_oracle, c^T point for the kind-specific oracles
  Vector direction;   // unit certificate direction, when not attained

  static OracleOutcome make_attained(Vector p, double value);
  static OracleOutcome make_unbounded(Vector d);
};

// Closed convex feasible sets with finitely generated recession cones.
class FeasibleSet {
 public:
  static FeasibleSet halfspace_simplex(int n);
  static FeasibleSet product_set(int n);
  static FeasibleSet polyhedron(Matrix A, Vector b);
  static FeasibleSet monotone_nonneg_cone(int n);
  static FeasibleSet nonneg_orthant(int n);

  SetKind kind() const { return kind_; }
  int dimension() const { return n_; }
  const Matrix& constraint_matrix() const;
  const Vector& constraint_rhs() const;

  // Membership up to an absolute residual tolerance.
  bool contains(const Vector& x, double tol = kFeasibilityTol) const;

  // Finite generating set of the recession cone, unit-normalized.
  std::vector<Vector> recession_generators() const;

  // min_p c^T (p - x); Attained value is reported relative to x.
  OracleOutcome lo_oracle(const Vector& c, const Vector& x) const;

  // A fixed feasible point, used as the default start for reference runs
  // and as the base point of recession-membership checks.
  Vector feasible_anchor() const;

  // Random feasible point in the test region [0, 10]^n intersected with
  // the set (rejection sampling; sorted draw for the monotone cone).
  Vector sample(Rng& rng) const;

 private:
  FeasibleSet(SetKind kind, int n) : kind_(kind), n_(n) {}

  SetKind kind_;
  int n_;
  Matrix A_;  // Polyhedron only
  Vector b_;
};

// Kind-specific oracles; `value` is the absolute optimum c^T p.
OracleOutcome halfspace_simplex_oracle(const Vector& c);
OracleOutcome product_set_oracle(const Vector& c);
OracleOutcome polyhedron_oracle(const Matrix& A, const Vector& b, const Vector& c);
OracleOutcome cone_oracle(SetKind kind, const Vector& c);

}  // namespace fwcg

#endif  // FWCG_SETS_HPP
