#include "frameforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frameforge/manifest.hpp"
#include "frameforge/random.hpp"

namespace frameforge {

namespace {

// Dense storage cap: dim * count complex entries (~400 MB).
constexpr double kMaxEntries = 2.5e7;

void require_budget(std::size_t value, const char* name) {
  if (value < 1) throw Error(ErrorCode::InvalidBudgets, std::string(name) + " must be at least 1");
}

void require_entries(double dim, double count) {
  if (count > static_cast<double>(kMaxFamilySize) || dim * count > kMaxEntries) {
    throw Error(ErrorCode::BudgetTooLarge, "family would hold " + std::to_string(count) + " vectors of dimension " +
                                               std::to_string(dim));
  }
}

void require_square_model(std::size_t n) {
  if (n > kMaxSquareModel) {
    throw Error(ErrorCode::BudgetTooLarge, "coordinate model of size " + std::to_string(n) + " exceeds " +
                                               std::to_string(kMaxSquareModel));
  }
}

void require_p(double p) {
  if (!(p > 1.0 && p < 2.0)) throw Error(ErrorCode::InvalidP, "p must lie in (1, 2), got " + std::to_string(p));
}

double k_threshold(double p) { return (2.0 - p) / (4.0 * (p - 1.0)); }

ComplexVector basis_vector(Eigen::Index dim, Eigen::Index i) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(i) = 1.0;
  return v;
}

std::vector<double> abs_coefficients(const Frame& f, const ComplexVector& x) {
  const RealVector c = (f.synthesis().adjoint() * x).cwiseAbs();
  return {c.data(), c.data() + c.size()};
}

double max_column_norm(const ComplexMatrix& m) { return m.colwise().norm().maxCoeff(); }

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::EmptyHf: return "empty_hf";
    case FamilyKind::NbbEmptyHf: return "nbb_empty_hf";
    case FamilyKind::PConvergent: return "p_convergent";
    case FamilyKind::HarmonicVector: return "harmonic_vector";
    case FamilyKind::DivergentBasis: return "divergent_basis";
    case FamilyKind::IntersectionPair: return "intersection_pair";
  }
  return "empty_hf";
}

FamilyKind family_from_string(std::string_view name) {
  for (FamilyKind k : {FamilyKind::EmptyHf, FamilyKind::NbbEmptyHf, FamilyKind::PConvergent,
                       FamilyKind::HarmonicVector, FamilyKind::DivergentBasis, FamilyKind::IntersectionPair}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown family \"" + std::string(name) + "\"");
}

FrameFamilySpec family_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error(ErrorCode::ParseError, "family spec needs a \"family\" string");
  }
  FrameFamilySpec spec;
  spec.family = family_from_string(j["family"].get<std::string>());
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  if (!params.is_object()) throw Error(ErrorCode::ParseError, "\"params\" must be an object");
  const auto count = [&](const char* key, std::size_t fallback) -> std::size_t {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number_integer() || params[key].get<long long>() < 0) {
      throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a nonnegative integer");
    }
    return static_cast<std::size_t>(params[key].get<long long>());
  };
  try {
    spec.p = params.value("p", spec.p);
    if (params.contains("k")) spec.k = params["k"].get<int>();
    spec.n_max = count("n_max", spec.n_max);
    spec.n_max = count("budget", spec.n_max);
    spec.j_max = count("j_max", spec.j_max);
    spec.epsilon = params.value("epsilon", spec.epsilon);
    if (params.contains("x")) spec.x = vector_from_json(params["x"]);
    spec.seed = j.value("seed", spec.seed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return spec;
}

nlohmann::json family_spec_to_json(const FrameFamilySpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  switch (spec.family) {
    case FamilyKind::PConvergent:
      params["p"] = spec.p;
      params["k"] = spec.k ? *spec.k : select_k(spec.p);
      params["n_max"] = spec.n_max;
      break;
    case FamilyKind::HarmonicVector:
      params["n_max"] = spec.n_max;
      break;
    case FamilyKind::DivergentBasis:
      params["budget"] = spec.n_max;
      params["x"] = vector_to_json(spec.x ? *spec.x : basis_vector(1, 0));
      break;
    case FamilyKind::NbbEmptyHf:
    case FamilyKind::IntersectionPair:
      params["epsilon"] = spec.epsilon;
      [[fallthrough]];
    case FamilyKind::EmptyHf:
      params["n_max"] = spec.n_max;
      params["j_max"] = spec.j_max;
      break;
  }
  return {{"family", std::string(to_string(spec.family))}, {"params", params}, {"seed", spec.seed}};
}

int select_k(double p) {
  require_p(p);
  return static_cast<int>(std::floor(k_threshold(p))) + 1;
}

double p_convergent_zeta_bound(double p, int k) {
  require_p(p);
  const double s = 4.0 * k * (p - 1.0) / (2.0 - p);
  if (!(s > 1.0)) throw Error(ErrorCode::InvalidP, "zeta exponent " + std::to_string(s) + " must exceed 1");
  return std::pow(std::riemann_zeta(s), (2.0 - p) / 2.0);
}

double expansion_p_sum(const Frame& f, const ComplexVector& x, double p) {
  if (x.size() != f.dim()) throw Error(ErrorCode::ShapeError, "expansion_p_sum: vector length mismatch");
  const RealVector coeff = (f.synthesis().adjoint() * x).cwiseAbs();
  const RealVector norms = f.synthesis().colwise().norm().transpose();
  double total = 0.0;
  for (Eigen::Index n = 0; n < coeff.size(); ++n) total += std::pow(coeff(n) * norms(n), p);
  return total;
}

TruncatedFamily p_convergent_frame(double p, std::size_t n_max, std::optional<int> k, const TolerancePolicy& tol) {
  require_p(p);
  require_budget(n_max, "n_max");
  const int kk = k ? *k : select_k(p);
  if (kk < 1 || !(kk > k_threshold(p))) {
    throw Error(ErrorCode::InvalidP, "k = " + std::to_string(kk) + " must exceed (2-p)/(4(p-1)) = " +
                                         std::to_string(k_threshold(p)));
  }

  double count = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) count += std::pow(static_cast<double>(n), 2.0 * kk);
  require_entries(static_cast<double>(n_max), count);

  const auto dim = static_cast<Eigen::Index>(n_max);
  ComplexMatrix t = ComplexMatrix::Zero(dim, static_cast<Eigen::Index>(count));
  Eigen::Index col = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double weight = std::pow(nd, -static_cast<double>(kk));
    const auto copies = static_cast<Eigen::Index>(std::pow(nd, 2.0 * kk));
    for (Eigen::Index j = 0; j < copies; ++j) t(static_cast<Eigen::Index>(n - 1), col++) = weight;
  }

  TruncatedFamily out{Frame(std::move(t)), {}, {}};
  out.spec.family = FamilyKind::PConvergent;
  out.spec.p = p;
  out.spec.k = kk;
  out.spec.n_max = n_max;

  const ComplexMatrix s = frame_operator(out.frame);
  out.exact_identities.push_back(
      check_le("parseval", distance(s, ComplexMatrix::Identity(dim, dim)), 1e-12, "||S - I||"));

  const double trace = out.frame.synthesis().squaredNorm();
  out.exact_identities.push_back(check_le("trace", std::abs(trace - static_cast<double>(n_max)),
                                          1e-12 * static_cast<double>(n_max), "|sum ||x_n||^2 - n_max|"));

  double power_sum = 0.0, expected = 0.0;
  const RealVector norms = out.frame.synthesis().colwise().norm().transpose();
  for (Eigen::Index i = 0; i < norms.size(); ++i) power_sum += std::pow(norms(i), 2.0 * p);
  for (std::size_t n = 1; n <= n_max; ++n) expected += std::pow(static_cast<double>(n), -2.0 * kk * (p - 1.0));
  out.exact_identities.push_back(check_le("norm_power_sum", std::abs(power_sum - expected), 1e-12 * expected,
                                          "|sum ||x_n||^{2p} - sum n^{-2k(p-1)}|"));

  // sup over unit x of sum_n c_n |x_n|^p with c_n = n^{(2-2p)k}: Hoelder's
  // inequality is attained, giving (sum c_n^{2/(2-p)})^{(2-p)/2}.
  double holder = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    holder += std::pow(static_cast<double>(n), (2.0 - 2.0 * p) * kk * 2.0 / (2.0 - p));
  }
  holder = std::pow(holder, (2.0 - p) / 2.0);
  out.exact_identities.push_back(check_le("p_sum_bound", holder, p_convergent_zeta_bound(p, kk) + tol.identity_tol,
                                          "sup_{||x||=1} sum ||<x,x_n> x_n||^p <= zeta bound"));
  return out;
}

double harmonic_coefficient(std::size_t j) { return kHarmonicScale / static_cast<double>(j); }

double empty_hf_tight_constant(std::size_t j_max) {
  double sum = 0.0;
  for (std::size_t j = j_max; j >= 1; --j) sum += 1.0 / (static_cast<double>(j) * static_cast<double>(j));
  return kHarmonicScale * kHarmonicScale * sum;
}

TruncatedFamily empty_hf_frame(std::size_t n_max, std::size_t j_max, const TolerancePolicy& tol) {
  require_budget(n_max, "n_max");
  require_budget(j_max, "j_max");
  const double count = static_cast<double>(n_max) * static_cast<double>(j_max);
  require_entries(static_cast<double>(n_max), count);

  const auto dim = static_cast<Eigen::Index>(n_max);
  const auto jm = static_cast<Eigen::Index>(j_max);
  ComplexMatrix t = ComplexMatrix::Zero(dim, dim * jm);
  for (Eigen::Index n = 0; n < dim; ++n) {
    for (Eigen::Index j = 0; j < jm; ++j) t(n, n * jm + j) = harmonic_coefficient(static_cast<std::size_t>(j + 1));
  }

  TruncatedFamily out{Frame(std::move(t)), {}, {}};
  out.spec.family = FamilyKind::EmptyHf;
  out.spec.n_max = n_max;
  out.spec.j_max = j_max;
  const double c = empty_hf_tight_constant(j_max);
  out.exact_identities.push_back(check_le("tight_frame",
                                          distance(frame_operator(out.frame), c * ComplexMatrix::Identity(dim, dim)),
                                          tol.identity_tol, "||S - c I||, c = " + std::to_string(c)));
  return out;
}

CoefficientStream empty_hf_stream() { return stream_from_terms(harmonic_coefficient); }

Frame empty_hf_operator_model(std::size_t n_max, std::size_t j_max) {
  require_budget(n_max, "n_max");
  require_budget(j_max, "j_max");
  const std::size_t total = n_max * j_max;
  require_square_model(total);
  const auto n = static_cast<Eigen::Index>(total);
  const auto jm = static_cast<Eigen::Index>(j_max);
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (Eigen::Index row = 0; row < static_cast<Eigen::Index>(n_max); ++row) {
    for (Eigen::Index j = 0; j < jm; ++j) t(row, row * jm + j) = harmonic_coefficient(static_cast<std::size_t>(j + 1));
  }
  return Frame(std::move(t));
}

TriangleComparison triangle_comparison(const Frame& g, const RieszPair& pair, const ComplexVector& x) {
  return {ell1_norm(x, g), ell1_norm(x, pair.y) + ell1_norm(x, pair.z)};
}

NbbFamily nbb_empty_hf_frame(std::size_t n_max, std::size_t j_max, double epsilon, const TolerancePolicy& tol) {
  NbbFamily out;
  out.model = empty_hf_operator_model(n_max, j_max);
  out.pair = bessel_to_riesz_pair(out.model, epsilon, tol);
  out.family.frame = out.pair.y.concatenated(out.pair.z);
  out.family.spec.family = FamilyKind::NbbEmptyHf;
  out.family.spec.n_max = n_max;
  out.family.spec.j_max = j_max;
  out.family.spec.epsilon = epsilon;
  out.min_norm = out.family.frame.synthesis().colwise().norm().minCoeff();

  const ComplexMatrix& g = out.model.synthesis();
  auto& ids = out.family.exact_identities;
  ids.push_back(check_le("sum_identity", max_column_norm(out.pair.y.synthesis() + out.pair.z.synthesis() - g),
                         tol.identity_tol * std::max(1.0, out.pair.a), "max_n ||y_n + z_n - x_n||"));
  ids.push_back(check_ge("norm_bounded_below", out.min_norm, tol.rank_tol(out.pair.a), "min_n ||w_n||"));
  ids.push_back(check_ge("union_lower_frame_bound", frame_bounds(out.family.frame, tol).lower,
                         tol.rank_tol(out.pair.a * out.pair.a), "A of {y_n} u {z_n}"));
  const TriangleComparison tri = triangle_comparison(out.model, out.pair, basis_vector(g.rows(), 0));
  ids.push_back(check_le("triangle_e1", tri.lhs, tri.rhs + tol.identity_tol, "||e_1||_{1,G} <= ||e_1||_{1,F}"));
  return out;
}

ComplexVector harmonic_vector(std::size_t n_max) {
  require_budget(n_max, "n_max");
  ComplexVector y(static_cast<Eigen::Index>(n_max));
  for (std::size_t n = 1; n <= n_max; ++n) y(static_cast<Eigen::Index>(n - 1)) = harmonic_coefficient(n);
  return y;
}

ComplexMatrix fixing_unitary(const ComplexMatrix& subspace_basis, Eigen::Index dim_total, std::uint64_t seed,
                             const TolerancePolicy& tol) {
  if (subspace_basis.rows() != dim_total) {
    throw Error(ErrorCode::ShapeError, "subspace basis must have " + std::to_string(dim_total) + " rows");
  }
  if (subspace_basis.cols() > dim_total) throw Error(ErrorCode::InvalidSubspace, "too many spanning vectors");
  require_orthonormal_columns(subspace_basis, tol);
  const Eigen::Index k = subspace_basis.cols();
  if (k == dim_total) return ComplexMatrix::Identity(dim_total, dim_total);
  const ComplexMatrix comp = orthogonal_complement(subspace_basis, tol);
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(rng, comp.cols());
  return subspace_basis * subspace_basis.adjoint() + comp * u * comp.adjoint();
}

DivergentBasis divergent_basis_for_vector(const ComplexVector& x, std::size_t budget, std::uint64_t seed,
                                          const TolerancePolicy& tol) {
  require_finite(x, "vector");
  const double norm = x.norm();
  if (norm == 0.0) throw Error(ErrorCode::ZeroVector, "target vector is zero");
  require_budget(budget, "budget");
  require_square_model(budget);
  const auto n = static_cast<Eigen::Index>(budget);
  if (x.size() > n) {
    throw Error(ErrorCode::ShapeError, "budget " + std::to_string(budget) + " is below the dimension of x");
  }

  DivergentBasis out;
  out.target = ComplexVector::Zero(n);
  out.target.head(x.size()) = x;
  const ComplexVector unit = out.target / norm;

  // One-dimensional frame {a_n} on span{x}; rescaled to be Parseval for the
  // dilation, with the scale restored afterwards.
  RealVector a(n);
  for (Eigen::Index i = 0; i < n; ++i) a(i) = harmonic_coefficient(static_cast<std::size_t>(i + 1));
  out.scale = a.norm();
  const Frame line(ComplexMatrix((a / out.scale).cast<Complex>().transpose()));
  const DilationResult dil = naimark_dilate(line, tol, Rng::derive(seed, 1));

  // Model space K written in the coordinates of C^budget: the first model
  // coordinate is the x direction, the rest an orthonormal basis of x^perp.
  ComplexMatrix model(n, n);
  model.col(0) = unit;
  if (n > 1) model.rightCols(n - 1) = orthogonal_complement(unit, tol);
  out.transport = fixing_unitary(unit, n, Rng::derive(seed, 2), tol);
  ComplexMatrix basis = out.scale * (out.transport * (model * dil.basis.synthesis()));

  out.family.frame = Frame(std::move(basis));
  out.family.spec.family = FamilyKind::DivergentBasis;
  out.family.spec.n_max = budget;
  out.family.spec.x = x;
  out.family.spec.seed = seed;
  out.coefficients = abs_coefficients(out.family.frame, out.target);

  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(out.coefficients[static_cast<std::size_t>(i)] - norm * a(i)));
  }
  auto& ids = out.family.exact_identities;
  const RieszCheck riesz = is_riesz_basis(out.family.frame, tol);
  ids.push_back(check_ge("riesz_basis_margin", riesz.margin, tol.rank_tol(out.scale), "sigma_min of the basis"));
  ids.push_back(check_le("fixes_x", (out.transport * out.target - out.target).norm(),
                         tol.identity_tol * std::max(1.0, norm), "||L x - x||"));
  ids.push_back(check_le("coefficients", worst, 1e-12 * std::max(1.0, norm),
                         "max_n | |<x, e_n>| - ||x|| (sqrt6/pi)/n |"));
  return out;
}

std::vector<std::size_t> geometric_budgets(std::size_t n, std::size_t count) {
  std::vector<std::size_t> out;
  if (n == 0 || count == 0) return out;
  for (std::size_t i = 1; i <= count; ++i) {
    const double v = std::pow(static_cast<double>(n), static_cast<double>(i) / static_cast<double>(count));
    auto b = static_cast<std::size_t>(std::llround(v));
    b = std::clamp<std::size_t>(b, 1, n);
    if (out.empty() || b > out.back()) out.push_back(b);
  }
  if (out.back() != n) out.push_back(n);
  return out;
}

IntersectionPair intersection_trivial_pair(std::size_t n_max, std::size_t j_max, std::optional<ComplexVector> probe,
                                           double epsilon, const TolerancePolicy& tol) {
  IntersectionPair out;
  out.model = empty_hf_operator_model(n_max, j_max);
  const Eigen::Index n = out.model.dim();
  const RieszPair pair = bessel_to_riesz_pair(out.model, epsilon, tol);
  out.e = pair.y;
  out.r = pair.z;
  out.probe = probe ? *probe : basis_vector(n, 0);
  if (out.probe.size() != n) throw Error(ErrorCode::ShapeError, "probe must live in the coordinate model C^N");

  const std::vector<std::size_t> budgets = geometric_budgets(static_cast<std::size_t>(n));
  const std::vector<double> left = abs_coefficients(out.model, out.probe);
  const std::vector<double> right_e = abs_coefficients(out.e, out.probe);
  const std::vector<double> right_r = abs_coefficients(out.r, out.probe);
  out.left = ell1_partial_sums(stream_from_values(left), budgets);
  out.right_e = ell1_partial_sums(stream_from_values(right_e), budgets);
  out.right_r = ell1_partial_sums(stream_from_values(right_r), budgets);

  out.checks.push_back(check_le("sum_identity",
                                max_column_norm(out.e.synthesis() + out.r.synthesis() - out.model.synthesis()),
                                tol.identity_tol * std::max(1.0, pair.a), "max_n ||e_n + r_n - x_n||"));
  out.checks.push_back(check_ge("e_riesz_margin", is_riesz_basis(out.e, tol).margin, tol.rank_tol(pair.a)));
  out.checks.push_back(check_ge("r_riesz_margin", is_riesz_basis(out.r, tol).margin, tol.rank_tol(pair.a)));
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    worst = std::min(worst, out.right_e.partial_sums[i] + out.right_r.partial_sums[i] - out.left.partial_sums[i]);
  }
  out.checks.push_back(check_ge("partial_sum_domination", worst, -tol.identity_tol,
                                "min_N (S_E(N) + S_R(N) - S_F(N))"));
  return out;
}

TruncatedFamily build_family(const FrameFamilySpec& spec, const TolerancePolicy& tol) {
  switch (spec.family) {
    case FamilyKind::PConvergent: {
      TruncatedFamily out = p_convergent_frame(spec.p, spec.n_max, spec.k, tol);
      out.spec.seed = spec.seed;
      return out;
    }
    case FamilyKind::EmptyHf: {
      TruncatedFamily out = empty_hf_frame(spec.n_max, spec.j_max, tol);
      out.spec.seed = spec.seed;
      return out;
    }
    case FamilyKind::NbbEmptyHf: {
      NbbFamily nbb = nbb_empty_hf_frame(spec.n_max, spec.j_max, spec.epsilon, tol);
      nbb.family.spec.seed = spec.seed;
      return nbb.family;
    }
    case FamilyKind::HarmonicVector: {
      const ComplexVector y = harmonic_vector(spec.n_max);
      TruncatedFamily out{Frame(ComplexMatrix(y)), spec, {}};
      const double expected = empty_hf_tight_constant(spec.n_max);
      out.exact_identities.push_back(check_le("norm_squared", std::abs(y.squaredNorm() - expected), 1e-12,
                                              "|‖y0‖^2 - (6/pi^2) sum n^-2|"));
      return out;
    }
    case FamilyKind::DivergentBasis: {
      const ComplexVector x = spec.x ? *spec.x : basis_vector(1, 0);
      DivergentBasis div = divergent_basis_for_vector(x, spec.n_max, spec.seed, tol);
      return div.family;
    }
    case FamilyKind::IntersectionPair: {
      IntersectionPair pair = intersection_trivial_pair(spec.n_max, spec.j_max, std::nullopt, spec.epsilon, tol);
      TruncatedFamily out{pair.e.concatenated(pair.r), spec, std::move(pair.checks)};
      return out;
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown family");
}

}  // namespace frameforge
