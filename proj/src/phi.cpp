#include "hakencx/phi.hpp"

#include "hakencx/errors.hpp"
#include "hakencx/flagness.hpp"

#include <map>
#include <numeric>

namespace hakencx {

namespace {

Rational phi_from(std::int64_t f0, std::int64_t chi_f3) {
  return rational(-f0, 16) + rational(chi_f3, 4);
}

bool connected(const SimplicialComplex& complex) {
  const auto adj = complex.adjacency();
  if (adj.empty()) return true;
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == adj.size();
}

void check_sphere_surrogate(const SimplicialComplex& sphere) {
  if (sphere.dimension() != 3 || !sphere.is_pure()) {
    throw NotA3Sphere("not a pure 3-dimensional complex");
  }
  std::map<Simplex, int> incidence;
  for (const Simplex& tet : sphere.faces(3)) {
    for (std::size_t drop = 0; drop < 4; ++drop) {
      Simplex tri;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j != drop) tri.push_back(tet[j]);
      }
      incidence[tri] += 1;
    }
  }
  for (const Simplex& tri : sphere.faces(2)) {
    if (incidence[tri] != 2) throw NotA3Sphere("a triangle does not lie in exactly two tetrahedra");
  }
  if (!connected(sphere)) throw NotA3Sphere("complex is disconnected");
  if (euler_characteristic(sphere) != 0) throw NotA3Sphere("Euler characteristic is not 0");
}

}  // namespace

Rational phi(const ManifoldSummary& summary) { return phi_from(summary.f(0), summary.chiF(3)); }

Rational phi(const IntervalSummary& summary) { return phi_from(summary.f0, summary.chiF[3]); }

Rational phi(const FVector& boundary) {
  if (boundary.counts.empty() && boundary.chi_sums.empty()) return 0;
  if (boundary.counts.size() != 4 || boundary.chi_sums.size() != 4) {
    throw IncompleteSummary("phi needs f_0 and chi(F^3) of a 3-dimensional boundary pattern");
  }
  return phi_from(boundary.counts[0], boundary.chi_sums[3]);
}

PhiCoefficients PhiCoefficients::canonical() {
  PhiCoefficients c;
  c.r[0] = rational(-1, 16);
  c.s[3] = rational(1, 4);
  return c;
}

Rational phi_general(const ManifoldSummary& summary, const PhiCoefficients& coeffs) {
  Rational total = 0;
  for (int k = 0; k < 4; ++k) {
    const auto i = static_cast<std::size_t>(k);
    total += coeffs.r[i] * summary.f(k) + coeffs.s[i] * summary.chiF(k) +
             coeffs.t[i] * summary.betti_boundary(k);
  }
  return total;
}

Rational kappa_from_fvector(const std::array<std::int64_t, 4>& f) {
  return 1 - rational(f[0], 2) + rational(f[1], 4) - rational(f[2], 8) + rational(f[3], 16);
}

CharneyDavisReport charney_davis(const SimplicialComplex& sphere) {
  check_sphere_surrogate(sphere);
  CharneyDavisReport report;
  report.f_star = f_vector(sphere);
  const auto& c = report.f_star.counts;
  const std::int64_t f0 = c[0], f1 = c[1], f2 = c[2], f3 = c[3];
  if (f0 - f1 + f2 - f3 != 0 || 4 * f3 != 2 * f2) {
    throw Error("Dehn-Sommerville relations fail for a sphere that passed the surrogate check");
  }
  report.kappa = kappa_from_fvector({f0, f1, f2, f3});
  // With f_3 = f_1 - f_0 and f_2 = 2(f_1 - f_0), kappa = (f_1 - 5 f_0 + 16) / 16.
  if (report.kappa != rational(f1 - 5 * f0 + 16, 16)) {
    throw Error("kappa disagrees with its reduced form");
  }
  report.inequality_5f0 = f1 >= 5 * f0 - 16;
  report.lower_bound_4f0 = f1 >= 4 * f0 - 10;
  // The dual cell complex has f_0 = f_3* and f_3 = f_0*.
  report.dual_inequality = f3 >= 4 * f0 - 16;
  report.flag = is_flag(sphere);
  return report;
}

BoundValue haken_4cell_bound(std::int64_t f0, std::int64_t f3) {
  if (f0 < 0 || f3 < 0) throw PreconditionViolation("face counts must be nonnegative");
  BoundValue out;
  out.value = rational(-f0, 16) + rational(f3, 4);
  out.satisfied = out.value <= 1;
  return out;
}

}  // namespace hakencx
