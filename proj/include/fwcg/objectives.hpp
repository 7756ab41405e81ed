#ifndef FWCG_OBJECTIVES_HPP
#define FWCG_OBJECTIVES_HPP

#include "fwcg/types.hpp"

#include <functional>
#include <string>

namespace fwcg {

// Smooth objective with its analytic constants. lipschitz_L bounds the
// gradient's Lipschitz modulus on the nonnegative orthant; when
// strong_convexity_M > 0 the secant lower bound with modulus M holds there.
struct ObjectiveModel {
  std::string name;
  int dimension = 0;
  std::function<double(const Vector&)> evaluate;
  std::function<Vector(const Vector&)> gradient;
  double lipschitz_L = 0.0;
  double strong_convexity_M = 0.0;
  bool convex = false;
};

// f(x) = a^T x + x^T Q x with a > 0 and Q >= 0 entrywise.
// Gradient a + (Q + Q^T) x; L = ||Q + Q^T||_2; M = max(0, lambda_min(Q + Q^T)).
ObjectiveModel quadratic(const Vector& a, const Matrix& Q);

// f(x) = a^T x + alpha x^T x + beta e^T x / sqrt(1 + beta x^T x), e = ones.
// Requires 2*alpha > 3*beta^{3/2}*sqrt(n); L/M = 2*alpha +/- 3*beta^{3/2}*sqrt(n).
ObjectiveModel regularized_norm(const Vector& a, double alpha, double beta, int n);

// f(x) = a^T x + sqrt(1 + beta x^T x); L = beta, convex but not strongly so.
ObjectiveModel sqrt_quadratic(const Vector& a, double beta);

// f(x) = ln(e^{x_1} + ... + e^{x_n}), evaluated with a max shift; L = 1.
ObjectiveModel log_sum_exp(int n);

// General a + G construction: f(x) = a^T x + G(x)^T x over the orthant cone,
// with G Lipschitz (lip_G) and x -> G'(x) x Lipschitz (lip_Gx).
struct GFormSpec {
  Vector a;  // strictly positive
  std::function<Vector(const Vector&)> G;
  std::function<Matrix(const Vector&)> G_jacobian;
  double lip_G = 0.0;   // (C1) constant
  double lip_Gx = 0.0;  // (C2) constant
};

// Gradient assembled as a + G(x) + G'(x)^T x; L = lip_G + lip_Gx.
ObjectiveModel from_g_form(const GFormSpec& spec, const std::string& name);

// Central differences per coordinate; h <= 0 selects 1e-6 * max(1, ||x||).
Vector finite_difference_gradient(const std::function<double(const Vector&)>& f,
                                  const Vector& x, double h = 0.0);

}  // namespace fwcg

#endif  // FWCG_OBJECTIVES_HPP
