// One line per acceptance criterion; exit status 0 iff all pass. Every
// comparison is exact rational or integer equality.

#include "hakencx/catalog.hpp"
#include "hakencx/coefficients.hpp"
#include "hakencx/duality.hpp"
#include "hakencx/flagness.hpp"
#include "hakencx/haken.hpp"
#include "hakencx/phi.hpp"
#include "hakencx/poset.hpp"
#include "hakencx/surgery.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hakencx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string tuple(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

void hypercube(Outcome& o) {
  const FVector f = f_vector(hypercube_boundary(4));
  const Rational value = phi(f);
  const BoundValue bound = haken_4cell_bound(f.counts[0], f.counts[3]);
  o.require(f.counts == std::vector<std::int64_t>{16, 32, 24, 8}, "f-vector");
  o.require(value == 1, "phi = 1");
  o.require(bound.satisfied && bound.value == 1, "bound met with equality");
  o.detail << "f = " << tuple(f.counts) << ", phi = " << to_display_string(value);
}

void coefficients(Outcome& o) {
  const SolveResult r = solve_unique(default_constraints());
  o.require(r.feasible && r.unique, "unique solution");
  std::map<std::string, Rational> expected;
  for (const auto& name : coefficient_names()) expected[name] = 0;
  expected["r0"] = Rational(-1, 16);
  expected["s3"] = Rational(1, 4);
  o.require(r.solution == expected, "r0 = -1/16, s3 = 1/4, others 0");
  ConstraintSystem dropped = default_constraints();
  o.require(drop_constraints(dropped, "hypercube_I4") == 1, "hypercube constraint present");
  const SolveResult d = solve_unique(dropped);
  o.require(d.feasible && !d.unique, "unique flips to false");
  o.detail << "r0 = " << to_display_string(r.solution.at("r0")) << ", s3 = " << to_display_string(r.solution.at("s3"))
           << ", unique after drop = " << (d.unique ? "true" : "false");
}

void flag_duality(Outcome& o) {
  std::vector<std::string> cells{"pgon4", "cube", "dodecahedron", "I4"};
  if (cell120_enabled()) cells.push_back("cell120");
  for (const std::string& name : cells) {
    const RegularCellComplex c = catalog_complex(name);
    const HakenCellCertificate cert = check_haken_cell(c, c.top_dim() + 1);
    o.require(cert.passed, name + " certified");
    o.require(cert.passed && is_flag(dual_simplicial(c, c.top_dim())), name + " dual is flag");
  }
  const HakenCellCertificate tet = check_haken_cell(catalog_complex("tetrahedron"), 3);
  o.require(!tet.passed && tet.reason.find("triangular face") != std::string::npos, "tetrahedron reason");
  for (const char* name : {"octahedron", "icosahedron"}) {
    const HakenCellCertificate c = check_haken_cell(catalog_complex(name), 3);
    o.require(!c.passed && c.reason.find("boundary pattern violation") != std::string::npos &&
                  c.reason.find("dimension 0") != std::string::npos,
              std::string(name) + " reason");
  }
  o.detail << cells.size() << " Haken cells with flag duals, 3 probes rejected";
}

void charney_davis_identity(Outcome& o) {
  std::mt19937_64 rng(200);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_sphere_fvector(rng);
    const Rational kappa = kappa_from_fvector(f);
    const bool ok = (kappa >= 0) == (f[1] >= 5 * f[0] - 16) && kappa == Rational(16 - 5 * f[0] + f[1], 16);
    agree += ok ? 1 : 0;
  }
  o.require(agree == 200, "equivalence on random pairs");
  const CharneyDavisReport cd = charney_davis(cross_polytope_boundary(4));
  o.require(cd.kappa == 0 && cd.inequality_5f0, "cross-polytope kappa = 0");
  o.detail << agree << "/200 pairs, kappa(cross4) = " << to_display_string(cd.kappa);
}

void transformation_law(Outcome& o) {
  std::mt19937_64 rng(500);
  int law = 0;
  int haken = 0;
  int haken_ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const bool closed_g = trial % 10 == 0;
    const ManifoldSummary x = oracle::random_summary(rng, !closed_g || trial % 20 == 0);
    const CutData g = oracle::random_cut(rng, trial % 2 == 0, closed_g);
    const Rational y = phi(cut(x, g));
    law += phi_after_cut(x, g) == y ? 1 : 0;
    if (g.haken()) {
      ++haken;
      haken_ok += y - g.chi() == phi(x) ? 1 : 0;
    }
  }
  o.require(law == 500, "phi_after_cut = phi(cut)");
  o.require(haken_ok == haken, "Haken cancellation");
  o.detail << law << "/500 pairs, cancellation " << haken_ok << "/" << haken;
}

/// Values of the named line in a single-stage chain.
const ChainLine* line_of(const ChainReport& r, const std::string& statement) {
  for (const ChainLine& line : r.lines) {
    if (line.statement == statement) return &line;
  }
  return nullptr;
}

void example_chains(Outcome& o) {
  int checked = 0;
  auto check = [&](const std::string& name, const Rational& chi_x, const Rational& middle, const Rational& phi_x) {
    const ChainReport r = verify_induction_chain(catalog_hierarchy(name));
    o.require(r.passed, name + " passes");
    const ChainLine* euler = line_of(r, "chi(X) = chi(Y) - chi(G)");
    const ChainLine* upper = line_of(r, "chi(Y) - chi(G) >= phi(Y) - chi(G)");
    const ChainLine* lower = line_of(r, "phi(Y) - chi(G) >= phi(X)");
    o.require(euler && upper && lower, name + " lines present");
    if (!euler || !upper || !lower) return;
    o.require(euler->lhs == chi_x && euler->rhs == chi_x, name + " chi(X)");
    o.require(upper->rhs == middle && lower->lhs == middle, name + " phi(Y) - chi(G)");
    o.require(lower->rhs == phi_x, name + " phi(X)");
    ++checked;
  };
  check("chain.G_closed_x_S1", 0, 0, 0);
  for (int g = 1; g <= 3; ++g) {
    const std::string gs = ".g" + std::to_string(g);
    check("chain.G_Tg_boundary_x_S1" + gs, 0, 0, 0);
    const Hierarchy h = catalog_hierarchy("chain.G_Tg_boundary_x_S1" + gs);
    o.require(h.final_result && h.final_result->chi_total() == 1 - g, "chi(Y) = 1 - g");
    check("chain.Tg_x_I2" + gs, 2 - 2 * g, 2 - 2 * g, 2 - 2 * g);
    check("chain.Tg_x_I2_cut_S1xI2" + gs, 2 - 2 * g, 2 - 2 * g, 2 - 2 * g);
  }
  o.detail << checked << "/10 chains with pinned intermediate values";
}

void duality_round_trip(Outcome& o) {
  int complexes = 0;
  int spheres = 0;
  for (const CatalogInfo& info : catalog_list()) {
    if (info.kind == EntryKind::Complex) {
      const RegularCellComplex c = catalog_complex(info.name);
      const int n = c.top_dim();
      o.require(euler_characteristic(barycentric_subdivision(c).simplices) == euler_characteristic(c),
                info.name + " subdivision chi");
      if (is_simple(c, n)) {
        const SimplicialComplex d = dual_simplicial(c, n);
        auto f = f_vector(c).counts;
        std::reverse(f.begin(), f.end());
        o.require(f_vector(d).counts == f, info.name + " f-vector reversal");
        o.require(isomorphic(dual_cell_complex(d, n), c), info.name + " double dual");
      } else {
        // Simplicial cell structures go through their vertex schemes.
        std::map<CellIndex, int> label;
        for (CellIndex v : c.cells_of_dim(0)) label.emplace(v, static_cast<int>(label.size()));
        std::vector<Simplex> facets;
        for (CellIndex f : c.facets()) {
          Simplex s;
          for (CellIndex v : c.vertices_of(f)) s.push_back(label.at(v));
          std::sort(s.begin(), s.end());
          facets.push_back(s);
        }
        const SimplicialComplex s(static_cast<int>(label.size()), facets);
        o.require(isomorphic(cell_complex_of(s), c), info.name + " simplicial structure");
        const RegularCellComplex d = dual_cell_complex(s, n);
        o.require(isomorphic(dual_simplicial(d, n), s), info.name + " double dual");
      }
      ++complexes;
    } else if (info.kind == EntryKind::Simplicial) {
      const SimplicialComplex s = catalog_simplicial(info.name);
      o.require(euler_characteristic(barycentric_subdivision(s).simplices) == euler_characteristic(s),
                info.name + " subdivision chi");
      if (info.name == "simplex2_full") continue;
      const int n = s.dimension();
      const RegularCellComplex d = dual_cell_complex(s, n);
      auto f = f_vector(s).counts;
      std::reverse(f.begin(), f.end());
      o.require(f_vector(d).counts == f, info.name + " f-vector reversal");
      o.require(isomorphic(dual_simplicial(d, n), s), info.name + " double dual");
      ++spheres;
    }
  }
  o.detail << complexes << " cell complexes, " << spheres << " simplicial spheres";
}

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(100);
  const auto duals = oracle::catalog_duals();
  int agree = 0;
  auto alternating = [](const FVector& f) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k < f.chi_sums.size(); ++k) total += (k % 2 == 0 ? 1 : -1) * f.chi_sums[k];
    return total;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const SimplicialComplex s = oracle::random_dual_subcomplex(rng, duals);
    o.require(s.vertex_count() <= 12, "at most 12 vertices");
    agree += is_flag(s) == oracle::brute_force_flag(s) ? 1 : 0;
    o.require(euler_characteristic(s) == alternating(f_vector(s)), "chi of a random subcomplex");
  }
  o.require(agree == 100, "is_flag matches the clique oracle");
  int euler = 0;
  for (const CatalogInfo& info : catalog_list()) {
    if (info.kind == EntryKind::Complex) {
      const RegularCellComplex c = catalog_complex(info.name);
      o.require(euler_characteristic(c) == alternating(f_vector(c)), info.name + " chi");
      ++euler;
    } else if (info.kind == EntryKind::Simplicial) {
      const SimplicialComplex s = catalog_simplicial(info.name);
      o.require(euler_characteristic(s) == alternating(f_vector(s)), info.name + " chi");
      ++euler;
    }
  }
  o.detail << agree << "/100 subcomplexes, " << euler << " catalog Euler checks";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"hypercube reproduction", hypercube},
      {"unique coefficients", coefficients},
      {"flag-duality check", flag_duality},
      {"Charney-Davis equivalence", charney_davis_identity},
      {"transformation-law consistency", transformation_law},
      {"example chains", example_chains},
      {"duality round-trip", duality_round_trip},
      {"oracle equivalence", oracle_equivalence},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "error: " << e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << "  [tolerance: exact]  " << o.detail.str() << "  (" << ms.count() << " ms)\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
