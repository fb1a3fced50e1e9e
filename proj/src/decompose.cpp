#include "frameforge/decompose.hpp"

#include <cmath>
#include <string>

namespace frameforge {

UnitarySplit unitary_split(const ComplexMatrix& t, const TolerancePolicy& tol) {
  if (t.rows() != t.cols()) throw Error(ErrorCode::ShapeError, "unitary_split: operator must be square");
  const double norm = operator_norm(t);
  if (norm > 1.0 + tol.identity_tol) {
    throw Error(ErrorCode::NormTooLarge, "unitary_split needs ||T|| <= 1, got " + std::to_string(norm));
  }
  const ComplexMatrix scaled = norm > 1.0 ? ComplexMatrix(t / norm) : t;
  const double margin = invertibility_margin(scaled);
  if (!(margin > tol.rank_tol(norm))) {
    throw Error(ErrorCode::NotIsomorphism, "unitary_split needs an invertible operator (margin " +
                                               std::to_string(margin) + ")");
  }

  const Eigen::Index n = t.rows();
  const PolarDecomposition polar = polar_decompose(scaled);
  const ComplexMatrix& p = polar.positive;
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  const ComplexMatrix q = psd_sqrt(identity - p * p, tol);
  const Complex i{0.0, 1.0};
  const ComplexMatrix v_plus = p + i * q;
  const ComplexMatrix v_minus = p - i * q;  // (P + iQ)^*
  return {polar.unitary * v_plus, polar.unitary * v_minus};
}

CasazzaDecomposition casazza_decompose(const ComplexMatrix& t, double epsilon, const TolerancePolicy& tol) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::InvalidEpsilon, "epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  if (t.rows() != t.cols()) throw Error(ErrorCode::ShapeError, "casazza_decompose: operator must be square");
  const Eigen::Index n = t.rows();
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
  const double norm = operator_norm(t);
  if (norm == 0.0) return {0.0, identity, identity, epsilon};

  // W = 3/4 I + (1 - eps)/4 T/||T|| satisfies ||I - W|| < 1, so W is an
  // isomorphism with ||W|| <= 1 and splits into two unitaries.
  const ComplexMatrix w = 0.75 * identity + ((1.0 - epsilon) / 4.0) * (t / norm);
  const UnitarySplit split = unitary_split(w, tol);
  const double a = 2.0 * norm / (1.0 - epsilon);
  return {a, split.u, split.v - 1.5 * identity, epsilon};
}

RieszPair bessel_to_riesz_pair(const Frame& f, double epsilon, const TolerancePolicy& tol) {
  if (f.size() != f.dim()) {
    throw Error(ErrorCode::ShapeError, "bessel_to_riesz_pair needs as many vectors as dimensions (got " +
                                           std::to_string(f.size()) + " in dimension " + std::to_string(f.dim()) +
                                           ")");
  }
  if (f.dim() == 0) throw Error(ErrorCode::InvalidInput, "frame is empty");
  const Eigen::Index n = f.dim();
  const ComplexMatrix& t = f.synthesis();  // T e_n = x_n for the standard basis
  if (t.isZero(0.0)) {
    const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(n, n);
    return {Frame(half), Frame(ComplexMatrix(-half)), 0.5};
  }
  const CasazzaDecomposition dec = casazza_decompose(t, epsilon, tol);
  return {Frame(ComplexMatrix(dec.a * dec.u)), Frame(ComplexMatrix(dec.a * dec.s)), dec.a};
}

}  // namespace frameforge
