#ifndef FWCG_RNG_HPP
#define FWCG_RNG_HPP

#include "fwcg/types.hpp"

#include <cstdint>
#include <random>

namespace fwcg {

// Seeded generator with portable draw helpers. std::mt19937_64 output is
// specified exactly, unlike std::uniform_real_distribution, so everything
// derived here is reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  Vector uniform_vector(Eigen::Index n, double lo, double hi) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  // Standard normal via Box-Muller; used for random directions.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  Vector unit_direction(Eigen::Index n) {
    Vector v(n);
    double norm = 0.0;
    while (norm == 0.0) {
      for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
      norm = v.norm();
    }
    return v / norm;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fwcg

#endif  // FWCG_RNG_HPP
