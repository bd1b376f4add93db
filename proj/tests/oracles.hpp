#pragma once

// Independent reference implementations used only by the tests.

#include "hakencx/coefficients.hpp"
#include "hakencx/complex.hpp"
#include "hakencx/rational.hpp"
#include "hakencx/summary.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using hakencx::Rational;

/// Flagness from the definition: every clique of the 1-skeleton spans a
/// face. Faces are tested as subsets of facets.
bool brute_force_flag(const hakencx::SimplicialComplex& complex);

/// Number of strictly increasing chains of each length (length k+1 gives
/// the k-simplices of the barycentric subdivision), found by dynamic
/// programming over the transitive face relation.
std::vector<std::int64_t> chain_counts(const hakencx::RegularCellComplex& complex);

/// f_k of the n-cube boundary: 2^(n-k) C(n, k), k < n.
std::vector<std::int64_t> hypercube_fvector(int n);

/// Exact fields of X | G, computed directly from the cut formulas.
struct ExactCut {
  std::int64_t chi_total = 0;
  std::int64_t f0 = 0;
  std::int64_t chiF[4] = {0, 0, 0, 0};
};
ExactCut cut_exact(const hakencx::ManifoldSummary& x, const hakencx::CutData& g);

/// (-f0 + 4 chiF3) / 16.
Rational phi_of(std::int64_t f0, std::int64_t chiF3);

/// Points of the grid {p/q : |p/q| <= bound, 1 <= q <= den} in every
/// variable that satisfy the system. Intended for at most 3 variables.
std::vector<std::vector<Rational>> grid_feasible(const hakencx::ConstraintSystem& system,
                                                 std::int64_t bound, std::int64_t den);

/// Random valid summaries and cut data.
hakencx::ManifoldSummary random_summary(std::mt19937_64& rng, bool with_boundary);
hakencx::CutData random_cut(std::mt19937_64& rng, bool haken, bool closed);

/// The same complex with shuffled cell order and fresh random ids.
hakencx::RegularCellComplex relabel_randomly(const hakencx::RegularCellComplex& complex,
                                             std::mt19937_64& rng);
/// The same complex under a random vertex permutation.
hakencx::SimplicialComplex permute_randomly(const hakencx::SimplicialComplex& complex,
                                            std::mt19937_64& rng);

/// Simplicial duals of the simple catalog cells (the 600-cell when built).
std::vector<hakencx::SimplicialComplex> catalog_duals();

/// A subcomplex with at most 12 vertices: an induced piece of a vertex star
/// for large duals, then a random subset of its facets.
hakencx::SimplicialComplex random_dual_subcomplex(std::mt19937_64& rng,
                                                  const std::vector<hakencx::SimplicialComplex>& duals);

/// A valid (f0*, f1*) pair of a simplicial 3-sphere datum with the derived
/// f2* = 2(f1* - f0*) and f3* = f1* - f0*.
std::array<std::int64_t, 4> random_sphere_fvector(std::mt19937_64& rng);

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace oracle
