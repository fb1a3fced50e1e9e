#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "frameforge/frames.hpp"

namespace frameforge {

/// A finite set M of points in C^dim, stored as columns.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(ComplexMatrix columns);
  PointSet(Eigen::Index dim, const std::vector<ComplexVector>& points);

  Eigen::Index dim() const noexcept { return columns_.rows(); }
  Eigen::Index size() const noexcept { return columns_.cols(); }
  bool empty() const noexcept { return columns_.cols() == 0; }
  ComplexVector point(Eigen::Index i) const { return columns_.col(i); }
  const ComplexMatrix& columns() const noexcept { return columns_; }

  /// Points of both sets (same dim).
  PointSet merged(const PointSet& other) const;

 private:
  ComplexMatrix columns_;
};

/// sum_n |<x, f_n>|.
double ell1_norm(const ComplexVector& x, const Frame& f);

/// sup over M of ell1_norm; 0 for an empty set.
double set_ell1_bound(const PointSet& m, const Frame& f);

struct NormBoundCertificate {
  double lower_bound = 0.0;   // A, lower frame bound of F
  double sup_norm = 0.0;      // sup ||x|| over M
  double worst_slack = 0.0;   // min over M of ell1_norm(x) - sqrt(A) ||x||
};

/// Checks sqrt(A) ||x|| <= ||x||_{1,F} on every point of M.
NormBoundCertificate norm_bound_necessity(const PointSet& m, const Frame& f, const TolerancePolicy& tol = {});

struct FiniteDimCertificate {
  double bound = 0.0;        // sqrt(k) * radius
  double radius = 0.0;       // max ||x||
  Eigen::Index span_dim = 0; // k = dim span(M)
  Frame witness_basis;       // orthonormal; first k vectors span span(M)
};

/// Constructive ell^1 bound for a norm-bounded set in finite dimension.
FiniteDimCertificate finite_dim_certificate(const PointSet& m, const TolerancePolicy& tol = {});

struct SphereWorstCase {
  double value = 0.0;     // sqrt(d)
  ComplexVector witness;  // (1, ..., 1) / sqrt(d)
};

/// sup of the standard-basis ell^1 norm over the unit sphere of C^d.
SphereWorstCase sphere_ell1_worst_case(Eigen::Index d);

/// Next |<x, e_n>| value, or nullopt when a finite stream is exhausted.
using CoefficientStream = std::function<std::optional<double>()>;

/// Infinite stream term(1), term(2), ...
CoefficientStream stream_from_terms(std::function<double(std::size_t)> term);

/// Finite stream over the given values.
CoefficientStream stream_from_values(std::vector<double> values);

enum class GrowthClass { Bounded, LogDivergent, PowerDivergent, Inconclusive };

std::string_view to_string(GrowthClass c) noexcept;

struct LinearFit {
  double alpha = 0.0;  // slope
  double beta = 0.0;   // intercept
  double r_squared = 0.0;
};

/// Classification thresholds applied to the partial-sum series.
struct GrowthThresholds {
  double log_alpha_min = 0.05;
  double r_squared_min = 0.98;
  double power_slope_min = 0.1;
  double bounded_rel = 1e-6;
};

struct Ell1Report {
  std::vector<std::size_t> budgets;
  std::vector<double> partial_sums;
  GrowthClass classification = GrowthClass::Inconclusive;
  LinearFit fit;        // S(N) ~ alpha ln N + beta
  LinearFit power_fit;  // ln S(N) ~ alpha ln N + beta (r_squared 0 when not applicable)
};

std::vector<std::size_t> default_budget_ladder();

/// Accumulates the stream up to each budget and classifies the growth.
Ell1Report ell1_partial_sums(const CoefficientStream& stream, const std::vector<std::size_t>& budgets,
                             const GrowthThresholds& thresholds = {});

/// Least-squares line through (x_i, y_i).
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct ClosureCheck {
  bool ok = true;
  double set_bound = 0.0;                  // sup over M
  double allowance = 0.0;                  // tolerance granted to limit points
  std::vector<double> limit_norms;         // ell1 norm of each limit point
  std::vector<double> approximation_gaps;  // ell1 norm of (limit - nearest point of M)
};

/// Verifies ell1_norm(limit) <= sup_M ell1_norm + allowance for each limit
/// point. With sampled approximants only a tolerance-qualified check is
/// possible; `approximation_tol` is added to identity_tol.
ClosureCheck closure_stability_check(const PointSet& m, const PointSet& limits, const Frame& f,
                                     double approximation_tol = 0.0, const TolerancePolicy& tol = {});

struct UnionSufficiency {
  bool ok_e = false;
  bool ok_r = false;
  double constant_e = 0.0;  // max_k ||dual(E)_k||_{1,G}
  double constant_r = 0.0;  // max_k ||dual(R)_k||_{1,G}
  double constant = 0.0;    // max of the two
};

/// Tonelli constants: ||x||_{1,G} <= constant_e ||x||_{1,E} for every x.
UnionSufficiency union_sufficiency_check(const Frame& e, const Frame& r, const Frame& g,
                                         const TolerancePolicy& tol = {});

/// Block-diagonal Riesz basis of C^{d1 + d2} from bases of the two blocks.
Frame embed_union_basis(const Frame& e, const Frame& r_perp, const TolerancePolicy& tol = {});

}  // namespace frameforge
