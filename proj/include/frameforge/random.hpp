#pragma once

#include <cstdint>
#include <random>

#include "frameforge/linalg.hpp"

namespace frameforge {

/// Seeded source for every randomized step in the library. Draws are
/// deterministic for a given seed on a given standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  /// Derives an independent stream, e.g. one per check in a parallel run.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Entries i.i.d. standard complex Gaussian.
ComplexMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

ComplexVector random_unit_vector(Rng& rng, Eigen::Index dim);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal absorbed into Q.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

/// Square matrix with prescribed singular values and Haar singular vectors.
ComplexMatrix random_with_singular_values(Rng& rng, const RealVector& sigma);

}  // namespace frameforge
