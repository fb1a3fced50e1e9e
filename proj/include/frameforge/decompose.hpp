#pragma once

#include "frameforge/frames.hpp"

namespace frameforge {

/// T = (U + V) / 2 with U, V unitary.
struct UnitarySplit {
  ComplexMatrix u;
  ComplexMatrix v;
};

/// T = a (U + S) with U unitary and S a topological isomorphism whose
/// singular values lie in [1/2, 5/2].
struct CasazzaDecomposition {
  double a = 0.0;
  ComplexMatrix u;
  ComplexMatrix s;
  double epsilon = 0.5;
};

/// x_n = y_n + z_n with {y_n} and {z_n} Riesz bases.
struct RieszPair {
  Frame y;
  Frame z;
  double a = 0.0;  // Gram(Y) = a^2 I
};

inline constexpr double kDefaultEpsilon = 0.5;

/// Splits a contractive isomorphism into the mean of two unitaries. With
/// T = W P (polar) and Q = (I - P^2)^{1/2}, returns U = W (P + iQ) and
/// V = W (P - iQ). Inputs with norm in (1, 1 + identity_tol] are rescaled to
/// norm one first.
UnitarySplit unitary_split(const ComplexMatrix& t, const TolerancePolicy& tol = {});

/// Writes an arbitrary square T as a (U + S). For T = 0 returns a = 0,
/// U = S = I.
CasazzaDecomposition casazza_decompose(const ComplexMatrix& t, double epsilon = kDefaultEpsilon,
                                       const TolerancePolicy& tol = {});

/// Splits a square Bessel family (N = dim) into two Riesz bases through the
/// operator T e_n = x_n on the standard basis. The all-zero family maps to
/// y_n = e_n / 2, z_n = -e_n / 2.
RieszPair bessel_to_riesz_pair(const Frame& f, double epsilon = kDefaultEpsilon, const TolerancePolicy& tol = {});

}  // namespace frameforge
