#include "frameforge/acceptance.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>

#include "frameforge/constructions.hpp"
#include "frameforge/decompose.hpp"
#include "frameforge/ell1.hpp"
#include "frameforge/frames.hpp"
#include "frameforge/random.hpp"

namespace frameforge {

namespace {

// Identities pinned tighter than the policy tolerance.
constexpr double kStrict = 1e-12;

// Running maximum that keeps a NaN once one is seen.
class Worst {
 public:
  void add(double x) {
    if (std::isnan(value_)) return;
    if (std::isnan(x) || x > value_) value_ = x;
  }
  double value() const { return value_; }

 private:
  double value_ = -std::numeric_limits<double>::infinity();
};

class Least {
 public:
  void add(double x) {
    if (std::isnan(value_)) return;
    if (std::isnan(x) || x < value_) value_ = x;
  }
  double value() const { return value_; }

 private:
  double value_ = std::numeric_limits<double>::infinity();
};

ComplexMatrix random_riesz_basis(Rng& rng, Eigen::Index d, double lo, double hi) {
  RealVector sigma(d);
  for (Eigen::Index i = 0; i < d; ++i) sigma(i) = rng.uniform(lo, hi);
  return random_with_singular_values(rng, sigma);
}

ComplexMatrix random_orthonormal(Rng& rng, Eigen::Index d, Eigen::Index k) {
  const ComplexMatrix g = gaussian_matrix(rng, d, k);
  return g.householderQr().householderQ() * ComplexMatrix::Identity(d, k);
}

std::vector<Frame> frame_corpus(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Frame> out;
  for (int i = 0; i < 100; ++i) {
    const int d = rng.uniform_int(1, 64);
    const int n = rng.uniform_int(d, 160);
    out.emplace_back(gaussian_matrix(rng, d, n));
  }
  return out;
}

std::vector<Frame> parseval_corpus(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  std::vector<Frame> out;
  for (int i = 0; i < 50; ++i) {
    const int d = rng.uniform_int(1, 32);
    const int n = rng.uniform_int(d, 96);
    out.push_back(parseval_normalize(Frame(gaussian_matrix(rng, d, n)), tol));
  }
  return out;
}

// Contractive isomorphisms: singular values in [0.05, 1], the top one often
// exactly 1.
std::vector<ComplexMatrix> contraction_corpus(Rng& rng, Eigen::Index d) {
  std::vector<ComplexMatrix> out;
  for (int i = 0; i < 100; ++i) {
    RealVector sigma(d);
    for (Eigen::Index j = 0; j < d; ++j) sigma(j) = rng.uniform(0.05, 1.0);
    if (i % 2 == 0) sigma(0) = 1.0;
    out.push_back(random_with_singular_values(rng, sigma));
  }
  return out;
}

// Arbitrary square operators: scaled Gaussians, rank-deficient products and
// the contractions above.
std::vector<ComplexMatrix> operator_corpus(Rng& rng, Eigen::Index d) {
  std::vector<ComplexMatrix> out = contraction_corpus(rng, d);
  for (int i = 0; i < 100; ++i) {
    const double scale = std::pow(10.0, rng.uniform(-3.0, 3.0));
    if (i % 4 == 3 && d > 1) {
      const Eigen::Index r = rng.uniform_int(1, static_cast<int>(d) - 1);
      out.push_back(scale * gaussian_matrix(rng, d, r) * gaussian_matrix(rng, r, d));
    } else {
      out.push_back(scale * gaussian_matrix(rng, d, d));
    }
  }
  return out;
}

std::vector<CheckResult> reconstruction(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(Rng::derive(seed, 100));
  Worst err;
  for (const Frame& f : frame_corpus(seed)) {
    const Frame dual = canonical_dual(f, tol);
    for (int i = 0; i < 10; ++i) {
      const ComplexVector x = gaussian_matrix(rng, f.dim(), 1);
      err.add((reconstruct(f, dual, x) - x).norm() / x.norm());
    }
  }
  return {check_le("max_relative_error", err.value(), tol.identity_tol, "||rec(x) - x|| / ||x||, 100 frames x 10")};
}

std::vector<CheckResult> parseval_normalization(std::uint64_t seed, const TolerancePolicy& tol) {
  Worst err;
  for (const Frame& f : frame_corpus(seed)) {
    const ComplexMatrix s = frame_operator(parseval_normalize(f, tol));
    err.add(distance(s, ComplexMatrix::Identity(f.dim(), f.dim())));
  }
  return {check_le("max_identity_defect", err.value(), tol.identity_tol, "||S(S^{-1/2} F) - I||")};
}

std::vector<CheckResult> unitary_split_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  Worst mean, u_defect, v_defect;
  for (Eigen::Index d : {2, 8, 32}) {
    for (const ComplexMatrix& t : contraction_corpus(rng, d)) {
      const UnitarySplit split = unitary_split(t, tol);
      mean.add(distance(0.5 * (split.u + split.v), t));
      u_defect.add(unitarity_defect(split.u));
      v_defect.add(unitarity_defect(split.v));
    }
  }
  return {check_le("mean_defect", mean.value(), tol.identity_tol, "||(U + V)/2 - T||"),
          check_le("u_unitarity", u_defect.value(), tol.identity_tol, "||U^* U - I||"),
          check_le("v_unitarity", v_defect.value(), tol.identity_tol, "||V^* V - I||")};
}

std::vector<CheckResult> casazza_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  Worst recon, scale, u_defect, s_max;
  Least s_min;
  for (Eigen::Index d : {2, 8, 32}) {
    for (const ComplexMatrix& t : operator_corpus(rng, d)) {
      const double eps = rng.uniform(0.05, 0.95);
      const CasazzaDecomposition c = casazza_decompose(t, eps, tol);
      const double norm = operator_norm(t);
      recon.add(distance(c.a * (c.u + c.s), t) / std::max(1.0, norm));
      scale.add(std::abs(c.a - 2.0 * norm / (1.0 - eps)));
      u_defect.add(unitarity_defect(c.u));
      const RealVector sv = singular_values(c.s);
      s_max.add(sv(0));
      s_min.add(sv(sv.size() - 1));
    }
  }
  const CasazzaDecomposition id = casazza_decompose(ComplexMatrix::Identity(4, 4), 0.5, tol);
  return {check_le("reconstruction", recon.value(), tol.identity_tol, "||a(U + S) - T|| / max(1, ||T||)"),
          check_le("scale_formula", scale.value(), 0.0, "|a - 2||T||/(1 - eps)|"),
          check_le("u_unitarity", u_defect.value(), tol.identity_tol, "||U^* U - I||"),
          check_ge("s_sigma_min", s_min.value(), 0.5 - tol.identity_tol, "smallest singular value of S"),
          check_le("s_sigma_max", s_max.value(), 2.5 + tol.identity_tol, "largest singular value of S"),
          check_le("identity_scale", std::abs(id.a - 4.0), kStrict, "T = I, eps = 1/2: |a - 4|")};
}

std::vector<CheckResult> bessel_riesz_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  std::vector<Frame> inputs;
  for (int i = 0; i < 60; ++i) {
    const int d = rng.uniform_int(1, 32);
    ComplexMatrix t = gaussian_matrix(rng, d, d) / std::sqrt(static_cast<double>(d));
    if (i % 5 == 4) t.col(rng.uniform_int(0, d - 1)).setZero();
    inputs.emplace_back(std::move(t));
  }
  inputs.emplace_back(ComplexMatrix::Zero(5, 5));
  inputs.push_back(empty_hf_operator_model(4, 50));
  inputs.push_back(empty_hf_operator_model(2, 100));

  double failures = 0.0;
  Worst sum, gram;
  for (const Frame& f : inputs) {
    const RieszPair pair = bessel_to_riesz_pair(f, kDefaultEpsilon, tol);
    if (!is_riesz_basis(pair.y, tol).is_riesz_basis) failures += 1.0;
    if (!is_riesz_basis(pair.z, tol).is_riesz_basis) failures += 1.0;
    const ComplexMatrix diff = pair.y.synthesis() + pair.z.synthesis() - f.synthesis();
    sum.add(diff.colwise().norm().maxCoeff());
    const ComplexMatrix& y = pair.y.synthesis();
    gram.add(distance(y.adjoint() * y, pair.a * pair.a * ComplexMatrix::Identity(f.dim(), f.dim())));
  }
  return {check_le("non_riesz_outputs", failures, 0.0, "count over Y and Z"),
          check_le("sum_defect", sum.value(), tol.identity_tol, "max_n ||y_n + z_n - x_n||"),
          check_le("gram_defect", gram.value(), tol.identity_tol, "||Gram(Y) - a^2 I||")};
}

std::vector<CheckResult> naimark_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Worst ortho, proj;
  std::uint64_t salt = 0;
  for (const Frame& f : parseval_corpus(seed, tol)) {
    const DilationResult dil = naimark_dilate(f, tol, Rng::derive(seed, ++salt));
    ortho.add(unitarity_defect(dil.basis.synthesis()));
    proj.add(distance(dil.basis.synthesis().topRows(f.dim()), f.synthesis()));
  }
  return {check_le("orthonormality", ortho.value(), tol.identity_tol, "||B^* B - I||"),
          check_le("projection", proj.value(), tol.identity_tol, "||P_d B - T||")};
}

std::vector<CheckResult> p_convergent_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  const TruncatedFamily fam = p_convergent_frame(1.5, 10, 1, tol);
  const Eigen::Index d = fam.frame.dim();
  const double parseval = distance(frame_operator(fam.frame), ComplexMatrix::Identity(d, d));

  const double zeta4 = std::pow(std::numbers::pi, 4) / 90.0;
  const double bound = std::pow(zeta4, 0.25);
  Rng rng(seed);
  Worst psum;
  for (int i = 0; i < 100; ++i) psum.add(expansion_p_sum(fam.frame, random_unit_vector(rng, d), 1.5));

  long double harmonic = 0.0L;
  for (int n = 1; n <= 10; ++n) harmonic += 1.0L / n;
  double cubes = 0.0;
  for (Eigen::Index j = 0; j < fam.frame.size(); ++j) cubes += std::pow(fam.frame.synthesis().col(j).norm(), 3.0);

  return {check_le("parseval", parseval, kStrict, "||S - I||"),
          check_le("vector_count", std::abs(static_cast<double>(fam.frame.size()) - 385.0), 0.0,
                   "|N - sum_{n<=10} n^2|"),
          check_le("p_sum", psum.value(), bound + tol.identity_tol, "max over 100 unit x; bound zeta(4)^{1/4}"),
          check_le("norm_cubes", std::abs(cubes - static_cast<double>(harmonic)), kStrict, "|sum ||x_n||^3 - H_10|")};
}

std::vector<CheckResult> trace_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Worst defect;
  const auto add = [&](const Frame& f) {
    defect.add(std::abs(f.synthesis().squaredNorm() - static_cast<double>(f.dim())));
  };
  for (const Frame& f : frame_corpus(seed)) add(parseval_normalize(f, tol));
  for (const Frame& f : parseval_corpus(Rng::derive(seed, 1), tol)) add(f);
  add(p_convergent_frame(1.5, 10, 1, tol).frame);

  std::vector<CheckResult> out;
  Rng rng(Rng::derive(seed, 2));
  for (Eigen::Index d : {3, 10, 30}) {
    const Frame f = parseval_normalize(Frame(gaussian_matrix(rng, d, 2 * d)), tol);
    add(f);
    out.push_back(check_ge("trace_d" + std::to_string(d), f.synthesis().squaredNorm(),
                           static_cast<double>(d) - tol.identity_tol, "sum ||x_n||^2 grows with d"));
  }
  out.insert(out.begin(), check_le("trace_defect", defect.value(), tol.identity_tol, "|sum ||x_n||^2 - d|"));
  return out;
}

std::vector<CheckResult> harmonic_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  const ComplexVector y0 = harmonic_vector(100);
  long double zeta_partial = 0.0L;
  for (int n = 1; n <= 100; ++n) zeta_partial += 1.0L / (static_cast<long double>(n) * n);
  const long double pi = std::numbers::pi_v<long double>;
  const double expected = static_cast<double>(6.0L / (pi * pi) * zeta_partial);

  const Ell1Report report = ell1_partial_sums(empty_hf_stream(), default_budget_ladder());
  const double scale = std::sqrt(6.0) / std::numbers::pi;
  const double alpha_err = std::abs(report.fit.alpha - scale) / scale;

  Rng rng(seed);
  const ComplexVector x = gaussian_matrix(rng, 8, 1);
  const DivergentBasis div = divergent_basis_for_vector(x, 256, Rng::derive(seed, 1), tol);
  const RieszCheck riesz = is_riesz_basis(div.family.frame, tol);

  return {check_le("norm_squared", std::abs(y0.squaredNorm() - expected), kStrict, "|‖y0‖^2 - (6/pi^2) H2_100|"),
          check_ge("log_divergent", report.classification == GrowthClass::LogDivergent ? 1.0 : 0.0, 1.0,
                   "classification " + std::string(to_string(report.classification))),
          check_le("alpha_relative_error", alpha_err, 0.15, "|alpha - sqrt6/pi| / (sqrt6/pi)"),
          check_ge("divergent_basis_riesz", riesz.is_riesz_basis ? riesz.margin : 0.0,
                   tol.rank_tol(div.scale), "smallest singular value"),
          check_le("divergent_basis_fixes_x", (div.transport * div.target - div.target).norm(),
                   tol.identity_tol, "||L x - x||")};
}

std::vector<CheckResult> perturbation_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  double violations = 0.0, accepted = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int d = rng.uniform_int(2, 16);
    const ComplexMatrix e = random_riesz_basis(rng, d, 0.5, 2.0);
    const SpectralFactorization f = svd(e);
    const double a = f.singular_values(d - 1) * f.singular_values(d - 1);
    const double t = rng.uniform(0.5, 1.5);
    ComplexMatrix delta;
    if (i % 2 == 0) {
      delta = gaussian_matrix(rng, d, d);
    } else {
      // Aligned with the weakest direction: singular once t reaches 1.
      delta = -f.left.col(d - 1) * f.right.col(d - 1).adjoint();
    }
    delta *= std::sqrt(t * a) / delta.norm();
    const Frame ef(e);
    const Frame xf(ComplexMatrix(e + delta));
    if (riesz_perturbation_check(ef, xf, tol)) {
      accepted += 1.0;
      if (!is_riesz_basis(xf, tol).is_riesz_basis) violations += 1.0;
    }
  }

  Worst excess;
  for (int i = 0; i < 200; ++i) {
    const int d = rng.uniform_int(1, 16);
    const int n = rng.uniform_int(d, 48);
    const int k = rng.uniform_int(1, d);
    const Frame f(gaussian_matrix(rng, d, n));
    const ProjectedEnergy pe = projected_energy_bound(f, random_orthonormal(rng, d, k), tol);
    excess.add(pe.energy - pe.bound);
  }
  return {check_le("perturbation_violations", violations, 0.0,
                   "accepted " + std::to_string(static_cast<int>(accepted)) + " of 200"),
          check_le("projected_energy_excess", excess.value(), tol.identity_tol, "sum ||P_S x_n||^2 - B dim S")};
}

std::vector<CheckResult> ell1_criterion(std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  Worst cert_excess, span_error;
  for (int i = 0; i < 100; ++i) {
    const int d = rng.uniform_int(1, 6);
    const int k = rng.uniform_int(1, d);
    const int m = rng.uniform_int(k, 20);
    const PointSet set(random_orthonormal(rng, d, k) * gaussian_matrix(rng, k, m));
    const FiniteDimCertificate cert = finite_dim_certificate(set, tol);
    span_error.add(std::abs(static_cast<double>(cert.span_dim - k)));
    for (Eigen::Index j = 0; j < set.size(); ++j) {
      cert_excess.add((ell1_norm(set.point(j), cert.witness_basis) - cert.bound) / std::max(1.0, cert.bound));
    }
  }

  Worst sphere;
  for (Eigen::Index d : {1, 4, 100}) {
    const SphereWorstCase w = sphere_ell1_worst_case(d);
    sphere.add(std::abs(w.value * w.value - static_cast<double>(d)) / static_cast<double>(d));
  }

  Least slack;
  for (int i = 0; i < 100; ++i) {
    const int d = rng.uniform_int(1, 8);
    const int n = rng.uniform_int(d, 24);
    const int m = rng.uniform_int(1, 10);
    const Frame f(gaussian_matrix(rng, d, n));
    const PointSet set(gaussian_matrix(rng, d, m));
    slack.add(norm_bound_necessity(set, f, tol).worst_slack);
  }

  Worst tonelli;
  for (int i = 0; i < 50; ++i) {
    const int d = rng.uniform_int(2, 8);
    const Frame e(random_riesz_basis(rng, d, 0.5, 2.0));
    const Frame r(random_riesz_basis(rng, d, 0.5, 2.0));
    const Frame g(random_riesz_basis(rng, d, 0.5, 2.0));
    const UnionSufficiency u = union_sufficiency_check(e, r, g, tol);
    const ComplexVector x = gaussian_matrix(rng, d, 1);
    const double lhs = ell1_norm(x, g);
    const double gap = std::max(lhs - u.constant_e * ell1_norm(x, e), lhs - u.constant_r * ell1_norm(x, r));
    tonelli.add(gap / std::max(1.0, lhs));
  }

  return {check_le("certificate_excess", cert_excess.value(), tol.identity_tol,
                   "(||x||_{1,W} - sqrt(k) r) / max(1, sqrt(k) r)"),
          check_le("certificate_span_dim", span_error.value(), 0.0, "|k_detected - k|"),
          check_le("sphere_square", sphere.value(), kStrict, "|value^2 - d| / d, d in {1, 4, 100}"),
          check_ge("norm_bound_slack", slack.value(), -tol.identity_tol, "min ||x||_{1,F} - sqrt(A) ||x||"),
          check_le("tonelli_gap", tonelli.value(), tol.identity_tol, "||x||_{1,G} - C ||x||_{1,E or R}")};
}

using CriterionFn = std::function<std::vector<CheckResult>(std::uint64_t, const TolerancePolicy&)>;

CriterionFn criterion_fn(int id) {
  switch (id) {
    case 1: return reconstruction;
    case 2: return parseval_normalization;
    case 3: return unitary_split_criterion;
    case 4: return casazza_criterion;
    case 5: return bessel_riesz_criterion;
    case 6: return naimark_criterion;
    case 7: return p_convergent_criterion;
    case 8: return trace_criterion;
    case 9: return harmonic_criterion;
    case 10: return perturbation_criterion;
    case 11: return ell1_criterion;
    default: return {};
  }
}

constexpr int kDeterminismId = 12;

CriterionResult run_one(const CriterionInfo& info, const AcceptanceOptions& options) {
  CriterionResult out{info.id, info.name, info.module, {}, {}};
  try {
    // Criteria 1 and 2 share one corpus and so one seed.
    const std::uint64_t salt = info.id == 2 ? 1 : static_cast<std::uint64_t>(info.id);
    out.checks = criterion_fn(info.id)(Rng::derive(options.seed, salt), options.tol);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<CriterionResult> run_selected(const std::vector<CriterionInfo>& selected, const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  if (options.parallel) {
    std::vector<std::future<CriterionResult>> jobs;
    for (const CriterionInfo& c : selected) {
      jobs.push_back(std::async(std::launch::async, run_one, c, std::cref(options)));
    }
    for (auto& job : jobs) out.push_back(job.get());
  } else {
    for (const CriterionInfo& c : selected) out.push_back(run_one(c, options));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "01_reconstruction", "frames"},
      {2, "02_parseval_normalization", "frames"},
      {3, "03_unitary_split", "decompose"},
      {4, "04_casazza_decomposition", "decompose"},
      {5, "05_bessel_to_riesz_pair", "decompose"},
      {6, "06_naimark_dilation", "frames"},
      {7, "07_p_convergent_frame", "constructions"},
      {8, "08_trace_growth", "frames"},
      {9, "09_harmonic_diagnostics", "ell1"},
      {10, "10_perturbation_projection", "frames"},
      {11, "11_ell1_certificates", "ell1"},
      {12, "12_determinism", "cli-runner"},
  };
  return list;
}

bool criterion_selected(const CriterionInfo& c, const std::string& filter) {
  return filter.empty() || filter == c.module || std::string(c.name).find(filter) != std::string::npos;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionInfo> selected;
  bool determinism = false;
  for (const CriterionInfo& c : acceptance_criteria()) {
    if (!criterion_selected(c, options.filter)) continue;
    if (c.id == kDeterminismId) {
      determinism = true;
    } else {
      selected.push_back(c);
    }
  }
  std::vector<CriterionResult> out = run_selected(selected, options);
  if (determinism) {
    std::vector<CriterionInfo> rerun = selected;
    if (rerun.empty()) {
      for (const CriterionInfo& c : acceptance_criteria()) {
        if (c.id != kDeterminismId) rerun.push_back(c);
      }
    }
    const std::string first = dump_report(acceptance_report(options, selected.empty() ? run_selected(rerun, options) : out));
    const std::string second = dump_report(acceptance_report(options, run_selected(rerun, options)));
    std::size_t mismatch = 0;
    const std::size_t common = std::min(first.size(), second.size());
    while (mismatch < common && first[mismatch] == second[mismatch]) ++mismatch;
    const bool same = first == second;
    const CriterionInfo& info = acceptance_criteria().back();
    out.push_back({info.id, info.name, info.module,
                   {check_le("byte_difference", same ? 0.0 : 1.0, 0.0,
                             same ? std::to_string(first.size()) + " bytes identical"
                                  : "first difference at byte " + std::to_string(mismatch))},
                   {}});
  }
  return out;
}

ReportDocument acceptance_report(const AcceptanceOptions& options, const std::vector<CriterionResult>& results) {
  ReportDocument report;
  report.command = "verify";
  report.config = {{"seed", options.seed},
                   {"filter", options.filter},
                   {"identity_tol", options.tol.identity_tol},
                   {"rank_rel", options.tol.rank_rel}};
  Json criteria = Json::array();
  for (const CriterionResult& c : results) {
    for (const CheckResult& check : c.checks) {
      CheckResult named = check;
      named.name = c.name + "." + check.name;
      report.results.push_back(std::move(named));
    }
    if (!c.error.empty()) {
      report.results.push_back(check_le(c.name + ".error", std::numeric_limits<double>::quiet_NaN(), 0.0, c.error));
    }
    Json entry = {{"name", c.name}, {"module", c.module}, {"pass", c.pass()}};
    if (!c.error.empty()) entry["error"] = c.error;
    criteria.push_back(entry);
  }
  report.payload = {{"criteria", criteria}};
  return report;
}

CheckResult rounding_floor_check(Eigen::Index dim, std::uint64_t seed, const TolerancePolicy& tol) {
  Rng rng(seed);
  const ComplexMatrix t = gaussian_matrix(rng, dim, dim) / std::sqrt(static_cast<double>(dim));
  const CasazzaDecomposition c = casazza_decompose(t, kDefaultEpsilon, tol);
  const double defect = distance(c.a * (c.u + c.s), t) / std::max(1.0, operator_norm(t));
  return check_le("rounding_floor_dim" + std::to_string(dim), defect, tol.identity_tol,
                  "||a(U + S) - T|| / max(1, ||T||)");
}

}  // namespace frameforge
