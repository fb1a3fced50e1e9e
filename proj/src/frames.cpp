#include "frameforge/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frameforge/random.hpp"

namespace frameforge {

Frame::Frame(ComplexMatrix synthesis) : synthesis_(std::move(synthesis)) {
  require_finite(synthesis_, "frame");
}

Frame::Frame(Eigen::Index dim, const std::vector<ComplexVector>& vectors)
    : synthesis_(dim, static_cast<Eigen::Index>(vectors.size())) {
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) {
      throw Error(ErrorCode::ShapeError, "frame vector " + std::to_string(j) + " has length " +
                                             std::to_string(vectors[j].size()) + ", expected " +
                                             std::to_string(dim));
    }
    synthesis_.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  require_finite(synthesis_, "frame");
}

Frame Frame::standard_basis(Eigen::Index dim) { return Frame(ComplexMatrix::Identity(dim, dim)); }

Frame Frame::concatenated(const Frame& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::ShapeError, "concatenated: dimension mismatch");
  ComplexMatrix m(dim(), size() + other.size());
  m << synthesis_, other.synthesis_;
  return Frame(std::move(m));
}

namespace {

struct ThinSvd {
  ComplexMatrix u;
  RealVector sigma;
  ComplexMatrix v;
};

ThinSvd thin_svd(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

void require_nonempty(const Frame& f) {
  if (f.empty() || f.dim() == 0) throw Error(ErrorCode::InvalidInput, "frame is empty");
}

void require_same_shape(const Frame& a, const Frame& b, const char* what) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw Error(ErrorCode::ShapeError, std::string(what) + ": frames differ in shape (" + std::to_string(a.dim()) +
                                           "x" + std::to_string(a.size()) + " vs " + std::to_string(b.dim()) + "x" +
                                           std::to_string(b.size()) + ")");
  }
}

// Thin SVD of the synthesis matrix after checking the frame condition.
ThinSvd frame_svd(const Frame& f, const TolerancePolicy& tol) {
  require_nonempty(f);
  if (f.size() < f.dim()) {
    throw Error(ErrorCode::NotAFrame, std::to_string(f.size()) + " vectors cannot span dimension " +
                                          std::to_string(f.dim()));
  }
  ThinSvd s = thin_svd(f.synthesis());
  const double upper = s.sigma(0) * s.sigma(0);
  const double lower = s.sigma(s.sigma.size() - 1) * s.sigma(s.sigma.size() - 1);
  if (!(lower > tol.rank_tol(upper))) {
    throw Error(ErrorCode::NotAFrame, "frame operator is singular (lower bound " + std::to_string(lower) + ")");
  }
  return s;
}

}  // namespace

ComplexMatrix synthesis_matrix(const Frame& f) { return f.synthesis(); }

ComplexMatrix frame_operator(const Frame& f) {
  const ComplexMatrix& t = f.synthesis();
  ComplexMatrix s = t * t.adjoint();
  return (s + s.adjoint()) * 0.5;
}

FrameBounds frame_bounds(const Frame& f, const TolerancePolicy& tol) {
  const ThinSvd s = frame_svd(f, tol);
  const double hi = s.sigma(0);
  const double lo = s.sigma(s.sigma.size() - 1);
  return {lo * lo, hi * hi};
}

double bessel_bound(const Frame& f) {
  require_nonempty(f);
  const double top = operator_norm(f.synthesis());
  return top * top;
}

double analysis_energy(const Frame& f, const ComplexVector& x) {
  if (x.size() != f.dim()) throw Error(ErrorCode::ShapeError, "analysis_energy: vector length mismatch");
  return (f.synthesis().adjoint() * x).squaredNorm();
}

Frame canonical_dual(const Frame& f, const TolerancePolicy& tol) {
  // S^{-1} T = U diag(1/sigma) V^* for T = U diag(sigma) V^*; avoids forming S.
  const ThinSvd s = frame_svd(f, tol);
  return Frame(s.u * s.sigma.cwiseInverse().cast<Complex>().asDiagonal() * s.v.adjoint());
}

Frame parseval_normalize(const Frame& f, const TolerancePolicy& tol) {
  // S^{-1/2} T = U V^*, the isometric part of the synthesis operator.
  const ThinSvd s = frame_svd(f, tol);
  return Frame(s.u * s.v.adjoint());
}

ComplexVector reconstruct(const Frame& f, const Frame& dual, const ComplexVector& x) {
  require_same_shape(f, dual, "reconstruct");
  if (x.size() != f.dim()) throw Error(ErrorCode::ShapeError, "reconstruct: vector length mismatch");
  const ComplexVector coeffs = dual.synthesis().adjoint() * x;  // <x, d_n>
  return f.synthesis() * coeffs;
}

RieszCheck is_riesz_basis(const Frame& f, const TolerancePolicy& tol) {
  if (f.empty() || f.dim() == 0 || f.size() != f.dim()) return {false, 0.0};
  const RealVector s = singular_values(f.synthesis());
  const double margin = s(s.size() - 1);
  return {margin > tol.rank_tol(s(0)), margin};
}

Frame dual_basis(const Frame& e, const TolerancePolicy& tol) {
  const RieszCheck check = is_riesz_basis(e, tol);
  if (!check.is_riesz_basis) {
    throw Error(ErrorCode::NotRieszBasis, "dual_basis requires a Riesz basis (margin " +
                                              std::to_string(check.margin) + ")");
  }
  // <e_m, d_n> = (D^* E)(n, m) = delta_mn, so D = (E^{-1})^*.
  return Frame(ComplexMatrix(e.synthesis().fullPivLu().inverse().adjoint()));
}

DilationResult naimark_dilate(const Frame& f, const TolerancePolicy& tol, std::uint64_t seed) {
  require_nonempty(f);
  const Eigen::Index d = f.dim();
  const Eigen::Index n = f.size();
  if (n < d) throw Error(ErrorCode::NotParseval, "fewer vectors than dimensions");
  const double defect = distance(frame_operator(f), ComplexMatrix::Identity(d, d));
  if (defect > tol.identity_tol) {
    throw Error(ErrorCode::NotParseval, "frame operator differs from I by " + std::to_string(defect));
  }

  // The analysis matrix C = T^* has orthonormal columns; extend it to a unitary
  // [C | Q] and take the adjoint, whose first d rows are T again.
  const ComplexMatrix c = f.synthesis().adjoint();
  ComplexMatrix basis(n, n);
  basis.topRows(d) = f.synthesis();
  if (n > d) {
    Rng rng(seed);
    ComplexMatrix g = gaussian_matrix(rng, n, n - d);
    for (int pass = 0; pass < 2; ++pass) g -= c * (c.adjoint() * g);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n - d);
    q -= c * (c.adjoint() * q);
    Eigen::HouseholderQR<ComplexMatrix> qr2(q);
    q = qr2.householderQ() * ComplexMatrix::Identity(n, n - d);
    basis.bottomRows(n - d) = q.adjoint();
  }
  return {n, d, Frame(std::move(basis))};
}

Frame frame_from_operator(const ComplexMatrix& t, const Frame& e) {
  if (t.rows() != t.cols() || t.cols() != e.dim()) {
    throw Error(ErrorCode::ShapeError, "frame_from_operator: operator must be " + std::to_string(e.dim()) + "x" +
                                           std::to_string(e.dim()));
  }
  return Frame(ComplexMatrix(t * e.synthesis()));
}

double perturbation_energy(const Frame& e, const Frame& x) {
  require_same_shape(e, x, "perturbation_energy");
  return (e.synthesis() - x.synthesis()).squaredNorm();
}

bool riesz_perturbation_check(const Frame& e, const Frame& x, const TolerancePolicy& tol) {
  require_same_shape(e, x, "riesz_perturbation_check");
  if (!is_riesz_basis(e, tol).is_riesz_basis) throw Error(ErrorCode::NotRieszBasis, "reference is not a Riesz basis");
  const double lower = frame_bounds(e, tol).lower;
  return perturbation_energy(e, x) < lower;
}

void require_orthonormal_columns(const ComplexMatrix& basis, const TolerancePolicy& tol) {
  if (basis.cols() == 0) return;
  require_finite(basis, "subspace basis");
  const double defect = distance(basis.adjoint() * basis, ComplexMatrix::Identity(basis.cols(), basis.cols()));
  if (defect > tol.identity_tol) {
    throw Error(ErrorCode::InvalidSubspace, "spanning list is not orthonormal (defect " + std::to_string(defect) + ")");
  }
}

ProjectedEnergy projected_energy_bound(const Frame& f, const ComplexMatrix& subspace, const TolerancePolicy& tol) {
  require_nonempty(f);
  if (subspace.rows() != f.dim()) throw Error(ErrorCode::ShapeError, "subspace lives in a different dimension");
  require_orthonormal_columns(subspace, tol);
  const double b = bessel_bound(f);
  if (subspace.cols() == 0) return {0.0, 0.0};
  // ||P_S x_n|| = ||Q^* x_n|| for orthonormal Q spanning S.
  const double energy = (subspace.adjoint() * f.synthesis()).squaredNorm();
  return {energy, b * static_cast<double>(subspace.cols())};
}

ComplexMatrix orthogonal_complement(const ComplexMatrix& a, const TolerancePolicy& tol) {
  const Eigen::Index d = a.rows();
  if (a.cols() == 0) return ComplexMatrix::Identity(d, d);
  const SpectralFactorization f = svd(a);
  Eigen::Index rank = 0;
  const double cut = tol.rank_tol(f.singular_values(0));
  while (rank < f.singular_values.size() && f.singular_values(rank) > cut) ++rank;
  return f.left.rightCols(d - rank);
}

Frame extend_riesz_sequence(const Frame& z, const TolerancePolicy& tol) {
  const Eigen::Index d = z.dim();
  const Eigen::Index m = z.size();
  if (d == 0) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  if (m > d) throw Error(ErrorCode::NotRieszSequence, "more vectors than dimensions");
  if (m > 0) {
    const ComplexMatrix gram = z.synthesis().adjoint() * z.synthesis();
    const RealVector s = singular_values(gram);
    if (!(s(s.size() - 1) > tol.rank_tol(s(0)))) {
      throw Error(ErrorCode::NotRieszSequence, "vectors are linearly dependent");
    }
  }
  const ComplexMatrix comp = orthogonal_complement(z.synthesis(), tol);
  ComplexMatrix out(d, d);
  out << comp, z.synthesis();
  return Frame(std::move(out));
}

ComplexMatrix cross_gram(const Frame& e, const Frame& d) {
  if (e.dim() != d.dim()) throw Error(ErrorCode::ShapeError, "cross_gram: dimension mismatch");
  return (d.synthesis().adjoint() * e.synthesis()).transpose();
}

}  // namespace frameforge
