#include "frameforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace frameforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::SingularOperator: return "SingularOperator";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotRieszBasis: return "NotRieszBasis";
    case ErrorCode::NotRieszSequence: return "NotRieszSequence";
    case ErrorCode::NotParseval: return "NotParseval";
    case ErrorCode::InvalidSubspace: return "InvalidSubspace";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::NotIsomorphism: return "NotIsomorphism";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::InvalidBudgets: return "InvalidBudgets";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void validate(const TolerancePolicy& tol) {
  if (!(tol.identity_tol > 0.0) || !std::isfinite(tol.identity_tol) || !(tol.rank_rel > 0.0) ||
      !std::isfinite(tol.rank_rel)) {
    throw Error(ErrorCode::InvalidInput, "tolerances must be positive and finite");
  }
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) throw Error(ErrorCode::InvalidInput, std::string(what) + " has non-finite entries");
}

namespace {

void require_nonempty(const ComplexMatrix& m, const char* what) {
  if (m.size() == 0) throw Error(ErrorCode::InvalidInput, std::string(what) + " is empty");
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::ShapeError, std::string(what) + " must be square, got " + std::to_string(m.rows()) +
                                           "x" + std::to_string(m.cols()));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) { return (h + h.adjoint()) * 0.5; }

void require_hermitian(const ComplexMatrix& h, const TolerancePolicy& tol) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (hermitian_defect(h) > tol.identity_tol * scale) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");
  }
}

}  // namespace

SpectralFactorization svd(const ComplexMatrix& m) {
  require_nonempty(m, "matrix");
  require_finite(m, "matrix");
  Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

RealVector singular_values(const ComplexMatrix& m) {
  require_nonempty(m, "matrix");
  require_finite(m, "matrix");
  Eigen::BDCSVD<ComplexMatrix> dec(m);
  return dec.singularValues();
}

double operator_norm(const ComplexMatrix& t) { return singular_values(t)(0); }

double invertibility_margin(const ComplexMatrix& t) {
  require_square(t, "operator");
  const RealVector s = singular_values(t);
  return s(s.size() - 1);
}

PolarDecomposition polar_decompose(const ComplexMatrix& t) {
  require_square(t, "operator");
  // A full SVD of a square matrix already pairs the left and right null-space
  // bases, so left * right^* is unitary even when T is singular.
  const SpectralFactorization f = svd(t);
  PolarDecomposition out;
  out.unitary = f.left * f.right.adjoint();
  out.positive = f.right * f.singular_values.cast<Complex>().asDiagonal() * f.right.adjoint();
  out.positive = hermitian_part(out.positive);
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, const TolerancePolicy& tol) {
  require_square(p, "matrix");
  require_nonempty(p, "matrix");
  require_finite(p, "matrix");
  require_hermitian(p, tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(p));
  RealVector values = eig.eigenvalues();
  const double floor = -tol.identity_tol * std::max(1.0, values.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < floor) {
      throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(values(i)) + " is negative");
    }
    values(i) = std::sqrt(std::max(values(i), 0.0));
  }
  const ComplexMatrix& vecs = eig.eigenvectors();
  return hermitian_part(vecs * values.cast<Complex>().asDiagonal() * vecs.adjoint());
}

ComplexMatrix pd_inv_sqrt(const ComplexMatrix& s, const TolerancePolicy& tol) {
  require_square(s, "matrix");
  require_nonempty(s, "matrix");
  require_finite(s, "matrix");
  require_hermitian(s, tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(s));
  RealVector values = eig.eigenvalues();
  const double top = values.cwiseAbs().maxCoeff();
  if (values(0) <= tol.rank_tol(top)) {
    throw Error(ErrorCode::SingularOperator, "matrix is not positive definite (min eigenvalue " +
                                                 std::to_string(values(0)) + ")");
  }
  values = values.cwiseSqrt().cwiseInverse();
  const ComplexMatrix& vecs = eig.eigenvectors();
  return hermitian_part(vecs * values.cast<Complex>().asDiagonal() * vecs.adjoint());
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeError, "distance: shape mismatch");
  if (a.size() == 0) return 0.0;
  return operator_norm(a - b);
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "matrix");
  return distance(u.adjoint() * u, ComplexMatrix::Identity(u.rows(), u.cols()));
}

double hermitian_defect(const ComplexMatrix& h) {
  require_square(h, "matrix");
  if (h.size() == 0) return 0.0;
  return operator_norm(h - h.adjoint());
}

}  // namespace frameforge
