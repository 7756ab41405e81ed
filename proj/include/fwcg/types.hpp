#ifndef FWCG_TYPES_HPP
#define FWCG_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fwcg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Absolute tolerance on constraint residuals for set membership.
inline constexpr double kFeasibilityTol = 1e-9;

// Strict-positivity margin separating int(C_inf)* from its boundary at
// double precision.
inline constexpr double kDualMargin = 1e-10;

class OracleUnboundedError : public std::runtime_error {
 public:
  explicit OracleUnboundedError(Vector direction)
      : std::runtime_error("linear subproblem has no minimizer"),
        direction_(std::move(direction)) {}

  const Vector& direction() const { return direction_; }

 private:
  Vector direction_;
};

inline void require_same_dim(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

}  // namespace fwcg

#endif  // FWCG_TYPES_HPP
