#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frameforge/check.hpp"
#include "frameforge/decompose.hpp"
#include "frameforge/ell1.hpp"

namespace frameforge {

/// sqrt(6) / pi: normalizes sum_n (c/n)^2 to one.
inline constexpr double kHarmonicScale = 0.77969680123367610790586805027;

enum class FamilyKind { EmptyHf, NbbEmptyHf, PConvergent, HarmonicVector, DivergentBasis, IntersectionPair };

std::string_view to_string(FamilyKind kind) noexcept;
FamilyKind family_from_string(std::string_view name);

/// Parametric description of an infinite family plus its truncation budget.
struct FrameFamilySpec {
  FamilyKind family = FamilyKind::EmptyHf;
  double p = 1.5;                  // p_convergent
  std::optional<int> k;            // p_convergent; defaults to select_k(p)
  std::size_t n_max = 1;           // block count / dimension / budget
  std::size_t j_max = 1;           // inner index budget (empty_hf variants)
  std::optional<ComplexVector> x;  // divergent_basis target; defaults to e_1
  std::uint64_t seed = 0;
  double epsilon = kDefaultEpsilon;
};

/// {"family": "...", "params": {...}, "seed": n}
FrameFamilySpec family_spec_from_json(const nlohmann::json& j);
nlohmann::json family_spec_to_json(const FrameFamilySpec& spec);

struct TruncatedFamily {
  Frame frame;
  FrameFamilySpec spec;
  std::vector<CheckResult> exact_identities;

  bool identities_hold() const { return all_pass(exact_identities); }
};

/// Largest vector count a generator will materialize.
inline constexpr std::size_t kMaxFamilySize = 10'000'000;
/// Largest coordinate model the square decompositions will factor.
inline constexpr std::size_t kMaxSquareModel = 2000;

/// Least integer strictly greater than (2 - p) / (4 (p - 1)).
int select_k(double p);

/// zeta(4k(p-1)/(2-p))^{(2-p)/2}: bound on sum ||<x,x_n> x_n||^p for unit x.
double p_convergent_zeta_bound(double p, int k);

/// Sum over n of ||<x, x_n> x_n||^p (the self-dual expansion of a Parseval frame).
double expansion_p_sum(const Frame& f, const ComplexVector& x, double p);

/// Blocks {n^{-k} e_n} repeated n^{2k} times, n = 1..n_max, in C^{n_max}.
TruncatedFamily p_convergent_frame(double p, std::size_t n_max, std::optional<int> k = std::nullopt,
                                   const TolerancePolicy& tol = {});

/// a_j = (sqrt(6)/pi) / j.
double harmonic_coefficient(std::size_t j);

/// (6/pi^2) sum_{j <= j_max} j^{-2}.
double empty_hf_tight_constant(std::size_t j_max);

/// {a_j e_n : n <= n_max, j <= j_max}, enumerated by n then j.
TruncatedFamily empty_hf_frame(std::size_t n_max, std::size_t j_max, const TolerancePolicy& tol = {});

/// |<e_n, x_{jn}>| over j for fixed n; infinite, independent of n.
CoefficientStream empty_hf_stream();

/// Square coordinate model of the truncated empty_hf family: the N x N
/// matrix (N = n_max j_max) sending standard basis vector (n, j) to a_j e_n.
Frame empty_hf_operator_model(std::size_t n_max, std::size_t j_max);

struct NbbFamily {
  TruncatedFamily family;  // union {y_n} then {z_n}, in C^N
  Frame model;             // the padded empty_hf family in C^N
  RieszPair pair;
  double min_norm = 0.0;
};

/// Norm-bounded-below variant: the union of the two Riesz bases splitting the
/// empty_hf coordinate model.
NbbFamily nbb_empty_hf_frame(std::size_t n_max, std::size_t j_max, double epsilon = kDefaultEpsilon,
                             const TolerancePolicy& tol = {});

struct TriangleComparison {
  double lhs = 0.0;  // ||x||_{1,G}
  double rhs = 0.0;  // ||x||_{1,Y} + ||x||_{1,Z}
};

TriangleComparison triangle_comparison(const Frame& g, const RieszPair& pair, const ComplexVector& x);

/// y0 = (sqrt(6)/pi) sum_{n <= n_max} (1/n) e_n.
ComplexVector harmonic_vector(std::size_t n_max);

struct DivergentBasis {
  TruncatedFamily family;       // the Riesz basis of C^budget
  ComplexVector target;         // x, zero-padded to C^budget
  ComplexMatrix transport;      // L: unitary, L x = x
  std::vector<double> coefficients;  // |<x, basis_n>|
  double scale = 0.0;           // basis vectors are scale * orthonormal
};

/// Riesz basis of C^budget whose coefficients against x are ||x|| a_n with
/// a_n = (sqrt(6)/pi)/n: a one-dimensional frame on span{x}, dilated, then
/// carried into place by a unitary fixing x.
DivergentBasis divergent_basis_for_vector(const ComplexVector& x, std::size_t budget, std::uint64_t seed = 0,
                                          const TolerancePolicy& tol = {});

/// Unitary on C^dim_total acting as the identity on span(columns) and as a
/// seeded Haar unitary on the orthogonal complement.
ComplexMatrix fixing_unitary(const ComplexMatrix& subspace_basis, Eigen::Index dim_total, std::uint64_t seed,
                             const TolerancePolicy& tol = {});

struct IntersectionPair {
  Frame e;
  Frame r;
  Frame model;
  ComplexVector probe;
  Ell1Report left;     // ||probe||_{1,F} partial sums
  Ell1Report right_e;  // ||probe||_{1,E}
  Ell1Report right_r;  // ||probe||_{1,R}
  std::vector<CheckResult> checks;
};

/// Budgets spaced geometrically up to n (strictly increasing, ending at n).
std::vector<std::size_t> geometric_budgets(std::size_t n, std::size_t count = 8);

/// Two Riesz bases whose sum is the empty_hf coordinate model, with ell^1
/// growth diagnostics for a probe vector (default e_1).
IntersectionPair intersection_trivial_pair(std::size_t n_max, std::size_t j_max,
                                           std::optional<ComplexVector> probe = std::nullopt,
                                           double epsilon = kDefaultEpsilon, const TolerancePolicy& tol = {});

/// Dispatches on spec.family and returns the generated frame with its
/// identity verdicts.
TruncatedFamily build_family(const FrameFamilySpec& spec, const TolerancePolicy& tol = {});

}  // namespace frameforge
