#pragma once

// Reference computations that avoid the library's own code paths.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline long double harmonic(std::size_t n) {
  long double s = 0.0L;
  for (std::size_t k = n; k >= 1; --k) s += 1.0L / static_cast<long double>(k);
  return s;
}

inline long double zeta2_partial(std::size_t n) {
  long double s = 0.0L;
  for (std::size_t k = n; k >= 1; --k) s += 1.0L / (static_cast<long double>(k) * k);
  return s;
}

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

/// sum_n x_n x_n^* accumulated one rank-one term at a time.
inline Mat frame_operator(const Mat& t) {
  Mat s = Mat::Zero(t.rows(), t.rows());
  for (Eigen::Index n = 0; n < t.cols(); ++n) s += t.col(n) * t.col(n).adjoint();
  return s;
}

/// Largest eigenvalue of a Hermitian PSD matrix by power iteration.
inline double top_eigenvalue(const Mat& h, int iterations = 2000) {
  Vec v = Vec::Ones(h.rows()) + Vec::LinSpaced(h.rows(), 0.0, 1.0) * std::complex<double>(0.0, 0.3);
  v.normalize();
  double lambda = 0.0;
  for (int i = 0; i < iterations; ++i) {
    Vec w = h * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    lambda = std::real(v.dot(w));
    v = w / norm;
  }
  return lambda;
}

/// Optimal frame bounds from power iteration on S and on B I - S.
inline std::pair<double, double> frame_bounds(const Mat& t) {
  const Mat s = frame_operator(t);
  const double b = top_eigenvalue(s);
  const Mat shifted = b * Mat::Identity(s.rows(), s.rows()) - s;
  return {b - top_eigenvalue(shifted), b};
}

/// sum_n |<x, t_n>| term by term.
inline double ell1(const Vec& x, const Mat& t) {
  double s = 0.0;
  for (Eigen::Index n = 0; n < t.cols(); ++n) s += std::abs(t.col(n).dot(x));
  return s;
}

}  // namespace oracle
