#include "hakencx/catalog.hpp"
#include "hakencx/duality.hpp"
#include "hakencx/flagness.hpp"
#include "hakencx/haken.hpp"
#include "hakencx/phi.hpp"
#include "hakencx/poset.hpp"
#include "hakencx/surgery.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hakencx;

TEST_SUITE("properties") {
  TEST_CASE("transformation law on random pairs") {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
      const bool closed_g = trial % 10 == 0;
      const bool haken = trial % 2 == 0;
      const ManifoldSummary x = oracle::random_summary(rng, !closed_g || trial % 20 == 0);
      const CutData g = oracle::random_cut(rng, haken, closed_g);
      const IntervalSummary y = cut(x, g);
      CAPTURE(trial);
      CHECK(phi_after_cut(x, g) == phi(y));
      if (g.haken()) CHECK(phi(y) - g.chi() == phi(x));
      CHECK(y.chi_total == x.chi_total() + g.chi());
    }
  }

  TEST_CASE("Charney-Davis equivalence on random pairs") {
    std::mt19937_64 rng(200);
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = oracle::random_sphere_fvector(rng);
      const Rational kappa = kappa_from_fvector(f);
      CAPTURE(f[0]);
      CAPTURE(f[1]);
      CHECK(kappa == Rational(16 - 5 * f[0] + f[1], 16));
      CHECK((kappa >= 0) == (f[1] >= 5 * f[0] - 16));
    }
  }

  TEST_CASE("flagness agrees with the clique oracle") {
    std::mt19937_64 rng(100);
    const auto duals = oracle::catalog_duals();
    for (int trial = 0; trial < 100; ++trial) {
      const SimplicialComplex s = oracle::random_dual_subcomplex(rng, duals);
      REQUIRE(s.vertex_count() <= 12);
      CAPTURE(trial);
      CHECK(is_flag(s) == oracle::brute_force_flag(s));
      std::int64_t alt = 0;
      const auto f = f_vector(s).counts;
      for (std::size_t k = 0; k < f.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * f[k];
      CHECK(euler_characteristic(s) == alt);
    }
  }

  TEST_CASE("verdicts are invariant under relabelling") {
    std::mt19937_64 rng(12);
    for (const char* name : {"pgon3", "pgon5", "cube", "dodecahedron", "tetrahedron", "octahedron", "I4"}) {
      const RegularCellComplex c = catalog_complex(name);
      const auto expected = check_haken_cell(c, c.top_dim() + 1);
      for (int trial = 0; trial < 3; ++trial) {
        const RegularCellComplex r = oracle::relabel_randomly(c, rng);
        CAPTURE(name);
        CHECK(check_haken_cell(r, r.top_dim() + 1).passed == expected.passed);
        CHECK(check_haken_cell(r, r.top_dim() + 1).dual_flag == expected.dual_flag);
        CHECK(f_vector(r) == f_vector(c));
        CHECK(validate_boundary_pattern(r).passed == validate_boundary_pattern(c).passed);
      }
    }
    for (const SimplicialComplex& s : oracle::catalog_duals()) {
      if (s.vertex_count() > 20) continue;
      const SimplicialComplex p = oracle::permute_randomly(s, rng);
      CHECK(is_flag(p) == is_flag(s));
      CHECK(minimal_non_faces(p, 4).size() == minimal_non_faces(s, 4).size());
    }
  }
}
