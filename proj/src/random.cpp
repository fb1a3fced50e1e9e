#include "frameforge/random.hpp"

#include <cmath>

namespace frameforge {

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  }
  return m;
}

ComplexVector random_unit_vector(Rng& rng, Eigen::Index dim) {
  ComplexVector v = gaussian_matrix(rng, dim, 1).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  if (n == 0) return ComplexMatrix(0, 0);
  const ComplexMatrix a = gaussian_matrix(rng, n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

ComplexMatrix random_with_singular_values(Rng& rng, const RealVector& sigma) {
  const Eigen::Index n = sigma.size();
  const ComplexMatrix left = random_unitary(rng, n);
  const ComplexMatrix right = random_unitary(rng, n);
  return left * sigma.cast<Complex>().asDiagonal() * right.adjoint();
}

}  // namespace frameforge
