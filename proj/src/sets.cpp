#include "fwcg/sets.hpp"

#include "fwcg/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fwcg {

namespace {

void require_positive_dim(int n) {
  if (n < 1) throw std::invalid_argument("set dimension must be >= 1");
}

int first_negative(const Vector& c) {
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (c[i] < 0.0) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

const char* set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::HalfspaceSimplex: return "halfspace_simplex";
    case SetKind::ProductSet: return "product_set";
    case SetKind::Polyhedron: return "polyhedron";
    case SetKind::MonotoneNonnegCone: return "monotone_cone";
    case SetKind::NonnegOrthant: return "orthant";
  }
  return "?";
}

OracleOutcome OracleOutcome::make_attained(Vector p, double value) {
  OracleOutcome o;
  o.attained = true;
  o.point = std::move(p);
  o.value = value;
  return o;
}

OracleOutcome OracleOutcome::make_unbounded(Vector d) {
  OracleOutcome o;
  o.attained = false;
  o.direction = d / d.norm();
  return o;
}

FeasibleSet FeasibleSet::halfspace_simplex(int n) {
  require_positive_dim(n);
  return FeasibleSet(SetKind::HalfspaceSimplex, n);
}

FeasibleSet FeasibleSet::product_set(int n) {
  require_positive_dim(n);
  return FeasibleSet(SetKind::ProductSet, n);
}

FeasibleSet FeasibleSet::polyhedron(Matrix A, Vector b) {
  if (A.rows() < 1 || A.cols() < 1 || b.size() != A.rows()) {
    throw std::invalid_argument("polyhedron: inconsistent A/b dimensions");
  }
  if ((A.array() <= 0.0).any()) {
    throw std::invalid_argument("polyhedron: A must have strictly positive entries");
  }
  if ((b.array() <= 0.0).any()) {
    throw std::invalid_argument("polyhedron: b must be strictly positive");
  }
  FeasibleSet s(SetKind::Polyhedron, static_cast<int>(A.cols()));
  s.A_ = std::move(A);
  s.b_ = std::move(b);
  return s;
}

FeasibleSet FeasibleSet::monotone_nonneg_cone(int n) {
  require_positive_dim(n);
  return FeasibleSet(SetKind::MonotoneNonnegCone, n);
}

FeasibleSet FeasibleSet::nonneg_orthant(int n) {
  require_positive_dim(n);
  return FeasibleSet(SetKind::NonnegOrthant, n);
}

const Matrix& FeasibleSet::constraint_matrix() const {
  if (kind_ != SetKind::Polyhedron) {
    throw std::logic_error("constraint_matrix: set is not a polyhedron");
  }
  return A_;
}

const Vector& FeasibleSet::constraint_rhs() const {
  if (kind_ != SetKind::Polyhedron) {
    throw std::logic_error("constraint_rhs: set is not a polyhedron");
  }
  return b_;
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
  if (x.size() != n_) return false;
  switch (kind_) {
    case SetKind::HalfspaceSimplex:
      return x.minCoeff() >= -tol && x.sum() >= 1.0 - tol;
    case SetKind::ProductSet:
      return x.minCoeff() >= -tol && x.prod() >= 1.0 - tol;
    case SetKind::Polyhedron:
      return x.minCoeff() >= -tol && ((A_ * x - b_).minCoeff() >= -tol);
    case SetKind::MonotoneNonnegCone: {
      for (int i = 0; i + 1 < n_; ++i) {
        if (x[i] - x[i + 1] < -tol) return false;
      }
      return x[n_ - 1] >= -tol;
    }
    case SetKind::NonnegOrthant:
      return x.minCoeff() >= -tol;
  }
  return false;
}

std::vector<Vector> FeasibleSet::recession_generators() const {
  std::vector<Vector> gens;
  gens.reserve(static_cast<std::size_t>(n_));
  if (kind_ == SetKind::MonotoneNonnegCone) {
    // g_i = (e_1 + ... + e_i) / sqrt(i); these span the extreme rays.
    for (int i = 1; i <= n_; ++i) {
      Vector g = Vector::Zero(n_);
      g.head(i).setConstant(1.0 / std::sqrt(static_cast<double>(i)));
      gens.push_back(std::move(g));
    }
  } else {
    // Recession cone of all four remaining kinds is the nonnegative orthant.
    for (int i = 0; i < n_; ++i) {
      Vector g = Vector::Zero(n_);
      g[i] = 1.0;
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

OracleOutcome halfspace_simplex_oracle(const Vector& c) {
  const int neg = first_negative(c);
  if (neg >= 0) {
    Vector d = Vector::Zero(c.size());
    d[neg] = 1.0;
    return OracleOutcome::make_unbounded(std::move(d));
  }
  // All candidates are the unit vertices e_i; a ray along a zero-cost
  // coordinate never improves the value. Lowest index wins ties.
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < c.size(); ++i) {
    if (c[i] < c[best]) best = i;
  }
  Vector p = Vector::Zero(c.size());
  p[best] = 1.0;
  return OracleOutcome::make_attained(std::move(p), c[best]);
}

OracleOutcome product_set_oracle(const Vector& c) {
  const Eigen::Index n = c.size();
  const int neg = first_negative(c);
  int violating = neg;
  if (violating < 0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (c[i] == 0.0) {
        violating = static_cast<int>(i);
        break;
      }
    }
  }
  if (violating >= 0) {
    // c_i < 0: truly unbounded along e_i. c_i = 0: the infimum is not
    // attained (push mass onto the free coordinate); same variant.
    Vector d = Vector::Zero(n);
    d[violating] = 1.0;
    return OracleOutcome::make_unbounded(std::move(d));
  }
  // KKT on the surface prod p = 1: p_i = g / c_i with g the geometric mean
  // of c, optimal value n * g.
  const double g = std::exp(c.array().log().mean());
  Vector p = g / c.array();
  return OracleOutcome::make_attained(std::move(p), static_cast<double>(n) * g);
}

OracleOutcome polyhedron_oracle(const Matrix& A, const Vector& b, const Vector& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (c.size() != n) throw std::invalid_argument("polyhedron_oracle: dimension mismatch");

  // Standard form with surplus variables: A p - s = b, (p, s) >= 0.
  lp::StandardFormLp std_lp;
  std_lp.A.setZero(m, n + m);
  std_lp.A.block(0, 0, m, n) = A;
  std_lp.A.block(0, n, m, m) = -Matrix::Identity(m, m);
  std_lp.b = b;
  std_lp.c = Vector::Zero(n + m);
  std_lp.c.head(n) = c;

  const lp::LpResult res = lp::solve_lp(std_lp);
  switch (res.status) {
    case lp::LpStatus::Optimal:
      return OracleOutcome::make_attained(res.x.head(n), res.value);
    case lp::LpStatus::Unbounded: {
      // The p-part of the ray is a recession direction of {p >= 0, Ap >= b}:
      // it is nonnegative and A r >= 0 follows from A r = s_r >= 0.
      Vector r = res.ray.head(n);
      if (r.norm() == 0.0) {
        throw lp::SimplexNumericalError("unbounded ray has zero structural part");
      }
      return OracleOutcome::make_unbounded(std::move(r));
    }
    case lp::LpStatus::Infeasible:
      throw std::runtime_error("polyhedron_oracle: infeasible constraint set (configuration error)");
  }
  throw std::logic_error("polyhedron_oracle: unreachable");
}

OracleOutcome cone_oracle(SetKind kind, const Vector& c) {
  const Eigen::Index n = c.size();
  if (kind == SetKind::NonnegOrthant) {
    const int neg = first_negative(c);
    if (neg >= 0) {
      Vector d = Vector::Zero(n);
      d[neg] = 1.0;
      return OracleOutcome::make_unbounded(std::move(d));
    }
    return OracleOutcome::make_attained(Vector::Zero(n), 0.0);
  }
  if (kind != SetKind::MonotoneNonnegCone) {
    throw std::invalid_argument("cone_oracle: kind must be a cone");
  }
  // c is in the dual cone iff every prefix sum is >= 0 (the generators are
  // the prefix indicator vectors); then the apex attains the minimum 0.
  double prefix = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    prefix += c[i];
    if (prefix < 0.0) {
      Vector d = Vector::Zero(n);
      d.head(i + 1).setOnes();
      return OracleOutcome::make_unbounded(std::move(d));
    }
  }
  return OracleOutcome::make_attained(Vector::Zero(n), 0.0);
}

OracleOutcome FeasibleSet::lo_oracle(const Vector& c, const Vector& x) const {
  if (c.size() != n_ || x.size() != n_) {
    throw std::invalid_argument("lo_oracle: dimension mismatch");
  }
  OracleOutcome out;
  switch (kind_) {
    case SetKind::HalfspaceSimplex:
      out = halfspace_simplex_oracle(c);
      break;
    case SetKind::ProductSet:
      out = product_set_oracle(c);
      break;
    case SetKind::Polyhedron:
      out = polyhedron_oracle(A_, b_, c);
      break;
    case SetKind::MonotoneNonnegCone:
    case SetKind::NonnegOrthant:
      out = cone_oracle(kind_, c);
      break;
  }
  if (out.attained) out.value -= c.dot(x);
  return out;
}

Vector FeasibleSet::feasible_anchor() const {
  switch (kind_) {
    case SetKind::HalfspaceSimplex:
    case SetKind::ProductSet:
    case SetKind::MonotoneNonnegCone:
    case SetKind::NonnegOrthant:
      return Vector::Ones(n_);
    case SetKind::Polyhedron: {
      const Vector row_scale = A_ * Vector::Ones(n_);
      double t = 0.0;
      for (Eigen::Index i = 0; i < b_.size(); ++i) {
        t = std::max(t, b_[i] / row_scale[i]);
      }
      return Vector::Constant(n_, std::max(t, 1.0));
    }
  }
  throw std::logic_error("feasible_anchor: unreachable");
}

Vector FeasibleSet::sample(Rng& rng) const {
  if (kind_ == SetKind::MonotoneNonnegCone) {
    Vector x = rng.uniform_vector(n_, 0.0, 10.0);
    std::sort(x.data(), x.data() + x.size(), std::greater<double>());
    return x;
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vector x = rng.uniform_vector(n_, 0.0, 10.0);
    if (contains(x)) return x;
  }
  throw std::runtime_error("sample: no feasible point found in [0,10]^n after 10000 draws");
}

}  // namespace fwcg
