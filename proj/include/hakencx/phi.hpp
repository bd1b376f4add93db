#pragma once

#include "hakencx/complex.hpp"
#include "hakencx/rational.hpp"
#include "hakencx/summary.hpp"

#include <array>

namespace hakencx {

/// phi(X) = -f_0/16 + chi(F^3)/4.
Rational phi(const ManifoldSummary& summary);
Rational phi(const IntervalSummary& summary);
/// Uses counts[0] and chi_sums[3]. The empty f-vector (closed manifold)
/// gives 0; any other length than 4 throws IncompleteSummary.
Rational phi(const FVector& boundary);

/// Coefficients of the general twelve-term form
///   sum r_k f_k + sum s_k chi(F^k) + sum t_k b_k(boundary).
struct PhiCoefficients {
  std::array<Rational, 4> r{};
  std::array<Rational, 4> s{};
  std::array<Rational, 4> t{};

  static PhiCoefficients canonical();
  friend bool operator==(const PhiCoefficients&, const PhiCoefficients&) = default;
};

Rational phi_general(const ManifoldSummary& summary, const PhiCoefficients& coeffs);

struct CharneyDavisReport {
  Rational kappa;
  FVector f_star;
  /// f_1* >= 5 f_0* - 16, equivalent to kappa >= 0.
  bool inequality_5f0 = false;
  /// f_1* >= 4 f_0* - 10, the bound valid for every simplicial 3-sphere.
  bool lower_bound_4f0 = false;
  /// f_0 >= 4 f_3 - 16 on the dual cell complex (f-vector reversed).
  bool dual_inequality = false;
  /// Whether the sphere is flag; kappa >= 0 is only claimed for flag spheres.
  bool flag = false;
};

/// kappa = 1 - f_0/2 + f_1/4 - f_2/8 + f_3/16 for a 3-sphere f-vector.
Rational kappa_from_fvector(const std::array<std::int64_t, 4>& f);

/// Evaluates the Charney-Davis quantity of a simplicial 3-sphere. The
/// sphere check is a surrogate: pure of dimension 3, every triangle in
/// exactly two tetrahedra, connected, chi = 0. Throws NotA3Sphere when it
/// fails, and Error if the Dehn-Sommerville relations used for the
/// equivalence do not hold.
CharneyDavisReport charney_davis(const SimplicialComplex& sphere);

struct BoundValue {
  Rational value;
  bool satisfied = false;
};

/// -f_0/16 + f_3/4 against the bound 1 for Haken 4-cells. Throws
/// PreconditionViolation on negative input.
BoundValue haken_4cell_bound(std::int64_t f0, std::int64_t f3);

}  // namespace hakencx
