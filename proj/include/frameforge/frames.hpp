#pragma once

#include <cstdint>
#include <vector>

#include "frameforge/linalg.hpp"

namespace frameforge {

/// An ordered finite family of vectors in C^dim. Stored as the dim x N
/// synthesis matrix whose column j is vector j.
class Frame {
 public:
  Frame() = default;

  /// Takes ownership of a synthesis matrix. Rejects non-finite entries.
  explicit Frame(ComplexMatrix synthesis);

  /// Builds from a list of vectors, all of length dim.
  Frame(Eigen::Index dim, const std::vector<ComplexVector>& vectors);

  static Frame standard_basis(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return synthesis_.rows(); }
  Eigen::Index size() const noexcept { return synthesis_.cols(); }
  bool empty() const noexcept { return synthesis_.cols() == 0; }

  ComplexVector vector(Eigen::Index j) const { return synthesis_.col(j); }
  const ComplexMatrix& synthesis() const noexcept { return synthesis_; }

  /// Vectors of this frame followed by the vectors of other (same dim).
  Frame concatenated(const Frame& other) const;

 private:
  ComplexMatrix synthesis_;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct RieszCheck {
  bool is_riesz_basis = false;
  double margin = 0.0;
};

/// Orthonormal basis of C^ambient_dim whose first embedding_dim coordinates
/// reproduce the dilated Parseval frame.
struct DilationResult {
  Eigen::Index ambient_dim = 0;
  Eigen::Index embedding_dim = 0;
  Frame basis;
};

struct ProjectedEnergy {
  double energy = 0.0;
  double bound = 0.0;
};

/// Column j equals vector j.
ComplexMatrix synthesis_matrix(const Frame& f);

/// S = sum_n x_n x_n^*.
ComplexMatrix frame_operator(const Frame& f);

/// Optimal bounds: extreme eigenvalues of the frame operator.
FrameBounds frame_bounds(const Frame& f, const TolerancePolicy& tol = {});

/// Best upper (Bessel) bound; defined for any nonempty family.
double bessel_bound(const Frame& f);

/// Sum over n of |<x, x_n>|^2.
double analysis_energy(const Frame& f, const ComplexVector& x);

/// {S^{-1} x_n}.
Frame canonical_dual(const Frame& f, const TolerancePolicy& tol = {});

/// {S^{-1/2} x_n}.
Frame parseval_normalize(const Frame& f, const TolerancePolicy& tol = {});

/// sum_n <x, d_n> x_n.
ComplexVector reconstruct(const Frame& f, const Frame& dual, const ComplexVector& x);

RieszCheck is_riesz_basis(const Frame& f, const TolerancePolicy& tol = {});

/// The unique biorthogonal sequence: <e_m, d_n> = delta_mn.
Frame dual_basis(const Frame& e, const TolerancePolicy& tol = {});

/// Realizes a Parseval frame as the coordinate projection of an orthonormal
/// basis of C^N. The complement rows come from orthonormalizing a seeded
/// random block against the analysis range.
DilationResult naimark_dilate(const Frame& f, const TolerancePolicy& tol = {}, std::uint64_t seed = 0x5eed);

/// {T e_n}.
Frame frame_from_operator(const ComplexMatrix& t, const Frame& e);

/// True when sum ||e_n - x_n||^2 < A, A the lower bound of e.
bool riesz_perturbation_check(const Frame& e, const Frame& x, const TolerancePolicy& tol = {});

/// Sum of ||e_n - x_n||^2.
double perturbation_energy(const Frame& e, const Frame& x);

/// energy = sum ||P_S x_n||^2, bound = B dim(S). `subspace` holds an
/// orthonormal spanning list as columns.
ProjectedEnergy projected_energy_bound(const Frame& f, const ComplexMatrix& subspace, const TolerancePolicy& tol = {});

/// Completes a Riesz sequence to a Riesz basis of C^dim: an orthonormal basis
/// of span(Z)^perp followed by the vectors of Z.
Frame extend_riesz_sequence(const Frame& z, const TolerancePolicy& tol = {});

/// Gram cross-matrix G(m, n) = <e_m, d_n>.
ComplexMatrix cross_gram(const Frame& e, const Frame& d);

/// Throws InvalidSubspace unless the columns are orthonormal within tolerance.
void require_orthonormal_columns(const ComplexMatrix& basis, const TolerancePolicy& tol);

/// Orthonormal basis (columns) of the orthogonal complement of range(a).
ComplexMatrix orthogonal_complement(const ComplexMatrix& a, const TolerancePolicy& tol = {});

}  // namespace frameforge
