#pragma once

#include "hakencx/phi.hpp"
#include "hakencx/rational.hpp"
#include "hakencx/relation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hakencx {

struct LinearConstraint {
  std::map<std::string, Rational> coeffs;
  Relation relation = Relation::Equal;
  Rational rhs;
  /// Generating example and parameter, e.g. "G3xS1_closed[b1=2]".
  std::string provenance;

  Rational lhs_at(const std::map<std::string, Rational>& point) const;
  bool satisfied_by(const std::map<std::string, Rational>& point) const;
  /// "r3 + t0 + 2 t1 = 0".
  std::string to_string() const;
};

struct ConstraintSystem {
  std::vector<std::string> variables;
  std::vector<LinearConstraint> constraints;

  /// Throws PreconditionViolation for an empty constraint or an undeclared
  /// variable.
  void add(LinearConstraint c);
};

/// r0..r3, s0..s3, t0..t3.
std::vector<std::string> coefficient_names();

/// The constraint family read off from the standard Haken 4-manifolds and
/// cuts, one constraint per template and sample, plus the normalization
/// equalities s0 = s1 = s2 = 0 and t2 = t3 = 0. Requires 1 and some g >= 2
/// among the genus samples and two distinct b1 samples.
ConstraintSystem generate_constraints(const std::vector<int>& genus_samples,
                                      const std::vector<int>& b1_samples);

/// Default samples: g in {1, 2, 3}, b1 in {0, 1, 2}.
ConstraintSystem default_constraints();

/// Removes constraints whose provenance is `tag` or starts with `tag[`.
/// Returns how many were removed.
std::size_t drop_constraints(ConstraintSystem& system, const std::string& tag);

struct VariableRange {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool point() const { return lo && hi && *lo == *hi; }
};

struct SolveResult {
  bool feasible = false;
  std::map<std::string, Rational> solution;
  bool unique = false;
  /// Projection of the feasible set onto each variable.
  std::map<std::string, VariableRange> ranges;
  /// For an infeasible system: an irreducible infeasible subset.
  std::vector<LinearConstraint> conflict;
};

/// Exact Gaussian elimination on the equalities, then Fourier-Motzkin
/// projection of the remaining inequalities onto each variable. The reported
/// solution satisfies every constraint; unique is true iff every projection
/// is a single point.
SolveResult solve_unique(const ConstraintSystem& system);

/// Exact feasibility test by the same elimination.
bool feasible(const ConstraintSystem& system);

/// Coefficients as a name -> value map and back.
std::map<std::string, Rational> to_point(const PhiCoefficients& coeffs);
PhiCoefficients from_point(const std::map<std::string, Rational>& point);

}  // namespace hakencx
