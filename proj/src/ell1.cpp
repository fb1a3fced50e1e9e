#include "frameforge/ell1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace frameforge {

PointSet::PointSet(ComplexMatrix columns) : columns_(std::move(columns)) { require_finite(columns_, "point set"); }

PointSet::PointSet(Eigen::Index dim, const std::vector<ComplexVector>& points)
    : columns_(dim, static_cast<Eigen::Index>(points.size())) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) throw Error(ErrorCode::ShapeError, "point " + std::to_string(i) + " has wrong length");
    columns_.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  require_finite(columns_, "point set");
}

PointSet PointSet::merged(const PointSet& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::ShapeError, "merged: dimension mismatch");
  ComplexMatrix m(dim(), size() + other.size());
  m << columns_, other.columns_;
  return PointSet(std::move(m));
}

namespace {

void require_dim(Eigen::Index got, const Frame& f, const char* what) {
  if (got != f.dim()) {
    throw Error(ErrorCode::ShapeError, std::string(what) + ": dimension " + std::to_string(got) +
                                           " does not match frame dimension " + std::to_string(f.dim()));
  }
}

// Column-wise ell^1 norms of F^* X.
RealVector column_ell1(const ComplexMatrix& points, const Frame& f) {
  const ComplexMatrix coeffs = f.synthesis().adjoint() * points;
  return coeffs.cwiseAbs().colwise().sum().transpose();
}

}  // namespace

double ell1_norm(const ComplexVector& x, const Frame& f) {
  require_dim(x.size(), f, "ell1_norm");
  return (f.synthesis().adjoint() * x).cwiseAbs().sum();
}

double set_ell1_bound(const PointSet& m, const Frame& f) {
  if (m.empty()) return 0.0;
  require_dim(m.dim(), f, "set_ell1_bound");
  return column_ell1(m.columns(), f).maxCoeff();
}

NormBoundCertificate norm_bound_necessity(const PointSet& m, const Frame& f, const TolerancePolicy& tol) {
  NormBoundCertificate out;
  out.lower_bound = frame_bounds(f, tol).lower;
  if (m.empty()) return out;
  require_dim(m.dim(), f, "norm_bound_necessity");
  const RealVector l1 = column_ell1(m.columns(), f);
  const double root_a = std::sqrt(out.lower_bound);
  out.worst_slack = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double norm = m.columns().col(i).norm();
    out.sup_norm = std::max(out.sup_norm, norm);
    out.worst_slack = std::min(out.worst_slack, l1(i) - root_a * norm);
  }
  return out;
}

FiniteDimCertificate finite_dim_certificate(const PointSet& m, const TolerancePolicy& tol) {
  const Eigen::Index d = m.dim();
  if (d == 0) throw Error(ErrorCode::InvalidInput, "point set has dimension 0");
  FiniteDimCertificate out;
  if (m.empty()) {
    out.witness_basis = Frame::standard_basis(d);
    return out;
  }
  for (Eigen::Index i = 0; i < m.size(); ++i) out.radius = std::max(out.radius, m.columns().col(i).norm());
  if (out.radius == 0.0) {
    out.witness_basis = Frame::standard_basis(d);
    return out;
  }
  // Left singular vectors of the point matrix: the first k span span(M).
  const SpectralFactorization f = svd(m.columns());
  const double cut = tol.rank_tol(f.singular_values(0));
  Eigen::Index k = 0;
  while (k < f.singular_values.size() && f.singular_values(k) > cut) ++k;
  out.span_dim = k;
  out.bound = std::sqrt(static_cast<double>(k)) * out.radius;
  out.witness_basis = Frame(f.left);
  return out;
}

SphereWorstCase sphere_ell1_worst_case(Eigen::Index d) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "dimension must be at least 1");
  const double root = std::sqrt(static_cast<double>(d));
  return {root, ComplexVector::Constant(d, Complex(1.0 / root, 0.0))};
}

CoefficientStream stream_from_terms(std::function<double(std::size_t)> term) {
  return [term = std::move(term), n = std::size_t{0}]() mutable -> std::optional<double> { return term(++n); };
}

CoefficientStream stream_from_values(std::vector<double> values) {
  return [values = std::move(values), i = std::size_t{0}]() mutable -> std::optional<double> {
    if (i >= values.size()) return std::nullopt;
    return values[i++];
  };
}

std::string_view to_string(GrowthClass c) noexcept {
  switch (c) {
    case GrowthClass::Bounded: return "bounded";
    case GrowthClass::LogDivergent: return "log-divergent";
    case GrowthClass::PowerDivergent: return "power-divergent";
    case GrowthClass::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<std::size_t> default_budget_ladder() { return {100, 1000, 10000, 100000, 1000000}; }

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n == 0) return {};
  if (n == 1) return {0.0, y[0], 0.0};
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) return {0.0, my, 0.0};
  LinearFit fit;
  fit.alpha = sxy / sxx;
  fit.beta = my - fit.alpha * mx;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (fit.alpha * x[i] + fit.beta);
      ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

Ell1Report ell1_partial_sums(const CoefficientStream& stream, const std::vector<std::size_t>& budgets,
                             const GrowthThresholds& thresholds) {
  if (budgets.empty()) throw Error(ErrorCode::InvalidBudgets, "no budgets given");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] == 0 || (i > 0 && budgets[i] <= budgets[i - 1])) {
      throw Error(ErrorCode::InvalidBudgets, "budgets must be positive and strictly increasing");
    }
  }

  Ell1Report report;
  report.budgets = budgets;
  report.partial_sums.reserve(budgets.size());
  // Neumaier-compensated running sum.
  double sum = 0.0, carry = 0.0;
  std::size_t n = 0;
  for (const std::size_t budget : budgets) {
    for (; n < budget; ++n) {
      const std::optional<double> term = stream();
      if (!term) {
        throw Error(ErrorCode::InvalidBudgets, "stream ended after " + std::to_string(n) + " terms, budget " +
                                                   std::to_string(budget));
      }
      const double v = *term;
      if (!std::isfinite(v) || v < 0.0) throw Error(ErrorCode::InvalidInput, "stream terms must be finite and >= 0");
      const double t = sum + v;
      carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    report.partial_sums.push_back(sum + carry);
  }

  // Fits over the upper half of the ladder.
  const std::size_t m = budgets.size();
  std::vector<double> log_n, s, log_s;
  bool positive = true;
  for (std::size_t i = m / 2; i < m; ++i) {
    log_n.push_back(std::log(static_cast<double>(budgets[i])));
    s.push_back(report.partial_sums[i]);
    positive = positive && report.partial_sums[i] > 0.0;
    log_s.push_back(positive ? std::log(report.partial_sums[i]) : 0.0);
  }
  report.fit = fit_line(log_n, s);
  if (positive) {
    report.power_fit = fit_line(log_n, log_s);
  }

  const bool power = report.power_fit.alpha > thresholds.power_slope_min &&
                     report.power_fit.r_squared > thresholds.r_squared_min &&
                     report.power_fit.r_squared > report.fit.r_squared;
  const bool log = report.fit.alpha > thresholds.log_alpha_min && report.fit.r_squared > thresholds.r_squared_min;

  // Increments between consecutive budgets (S(0) = 0), per index of the stream.
  bool bounded = true;
  const double last = report.partial_sums.back();
  for (std::size_t i = m >= 3 ? m - 3 : 0; i < m; ++i) {
    const double prev_sum = i == 0 ? 0.0 : report.partial_sums[i - 1];
    const double prev_budget = i == 0 ? 0.0 : static_cast<double>(budgets[i - 1]);
    const double per_index = (report.partial_sums[i] - prev_sum) / (static_cast<double>(budgets[i]) - prev_budget);
    bounded = bounded && per_index <= thresholds.bounded_rel * last;
  }

  if (power) {
    report.classification = GrowthClass::PowerDivergent;
  } else if (log) {
    report.classification = GrowthClass::LogDivergent;
  } else if (bounded) {
    report.classification = GrowthClass::Bounded;
  } else {
    report.classification = GrowthClass::Inconclusive;
  }
  return report;
}

ClosureCheck closure_stability_check(const PointSet& m, const PointSet& limits, const Frame& f,
                                     double approximation_tol, const TolerancePolicy& tol) {
  if (!m.empty()) require_dim(m.dim(), f, "closure_stability_check");
  if (!limits.empty()) require_dim(limits.dim(), f, "closure_stability_check");
  if (!(approximation_tol >= 0.0)) throw Error(ErrorCode::InvalidInput, "approximation tolerance must be >= 0");
  ClosureCheck out;
  out.set_bound = set_ell1_bound(m, f);
  out.allowance = tol.identity_tol + approximation_tol;
  for (Eigen::Index i = 0; i < limits.size(); ++i) {
    const ComplexVector x = limits.point(i);
    const double norm = ell1_norm(x, f);
    double gap = norm;
    for (Eigen::Index k = 0; k < m.size(); ++k) gap = std::min(gap, ell1_norm(ComplexVector(x - m.point(k)), f));
    out.limit_norms.push_back(norm);
    out.approximation_gaps.push_back(gap);
    out.ok = out.ok && norm <= out.set_bound + out.allowance;
  }
  return out;
}

UnionSufficiency union_sufficiency_check(const Frame& e, const Frame& r, const Frame& g, const TolerancePolicy& tol) {
  if (e.dim() != g.dim() || r.dim() != g.dim()) throw Error(ErrorCode::ShapeError, "bases live in different spaces");
  if (!is_riesz_basis(g, tol).is_riesz_basis) throw Error(ErrorCode::NotRieszBasis, "G is not a Riesz basis");
  const auto max_dual_norm = [&](const Frame& basis) {
    const Frame dual = dual_basis(basis, tol);  // throws NotRieszBasis
    return column_ell1(dual.synthesis(), g).maxCoeff();
  };
  UnionSufficiency out;
  out.constant_e = max_dual_norm(e);
  out.constant_r = max_dual_norm(r);
  out.ok_e = std::isfinite(out.constant_e);
  out.ok_r = std::isfinite(out.constant_r);
  out.constant = std::max(out.constant_e, out.constant_r);
  return out;
}

Frame embed_union_basis(const Frame& e, const Frame& r_perp, const TolerancePolicy& tol) {
  if (e.size() != e.dim() || r_perp.size() != r_perp.dim()) {
    throw Error(ErrorCode::ShapeError, "embed_union_basis: both blocks must be square bases");
  }
  const auto riesz = [&](const Frame& f) { return f.dim() == 0 || is_riesz_basis(f, tol).is_riesz_basis; };
  if (!riesz(e) || !riesz(r_perp)) {
    throw Error(ErrorCode::NotRieszBasis, "embed_union_basis: blocks must be Riesz bases");
  }
  const Eigen::Index d1 = e.dim();
  const Eigen::Index d2 = r_perp.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d1 + d2, d1 + d2);
  out.topLeftCorner(d1, d1) = e.synthesis();
  out.bottomRightCorner(d2, d2) = r_perp.synthesis();
  return Frame(std::move(out));
}

}  // namespace frameforge
