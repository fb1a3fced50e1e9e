#pragma once

#include <complex>

#include <Eigen/Dense>

#include "frameforge/error.hpp"

namespace frameforge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerances used to absorb rounding error in identities that are exact in
/// exact arithmetic. rank_tol is relative: the absolute threshold for an
/// operator T is rank_rel * max(1, ||T||).
struct TolerancePolicy {
  double identity_tol = 1e-10;
  double rank_rel = 1e-12;

  double rank_tol(double operator_norm) const {
    return rank_rel * (operator_norm > 1.0 ? operator_norm : 1.0);
  }
};

/// Validates a policy (both tolerances strictly positive and finite).
void validate(const TolerancePolicy& tol);

/// T = left * diag(singular_values) * right^*, singular values descending.
/// Both factors are square (full) unitaries.
struct SpectralFactorization {
  ComplexMatrix left;
  RealVector singular_values;
  ComplexMatrix right;
};

struct PolarDecomposition {
  ComplexMatrix unitary;   // W
  ComplexMatrix positive;  // P = (T^* T)^{1/2}
};

bool all_finite(const ComplexMatrix& m);

/// Throws InvalidInput if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

SpectralFactorization svd(const ComplexMatrix& m);

/// Singular values only, descending.
RealVector singular_values(const ComplexMatrix& m);

/// Largest singular value. Empty input is rejected.
double operator_norm(const ComplexMatrix& t);

/// Smallest singular value of a square matrix.
double invertibility_margin(const ComplexMatrix& t);

/// Polar decomposition T = W P from the SVD. For rank-deficient T the partial
/// isometry is completed to a unitary by pairing the left and right singular
/// vectors of the null space.
PolarDecomposition polar_decompose(const ComplexMatrix& t);

/// Hermitian PSD square root. Eigenvalues in [-identity_tol, 0) are clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix& p, const TolerancePolicy& tol = {});

/// S^{-1/2} for Hermitian positive definite S.
ComplexMatrix pd_inv_sqrt(const ComplexMatrix& s, const TolerancePolicy& tol = {});

/// ||A - B|| in operator norm.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||U^* U - I|| in operator norm.
double unitarity_defect(const ComplexMatrix& u);

/// ||H - H^*|| in operator norm.
double hermitian_defect(const ComplexMatrix& h);

}  // namespace frameforge
