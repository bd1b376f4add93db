#include "hakencx/catalog.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/phi.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hakencx;

namespace {

using Counts = std::vector<std::int64_t>;

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("hypercubes and polygons") {
    CHECK(f_vector(hypercube_boundary(2)).counts == Counts{4, 4});
    CHECK(f_vector(hypercube_boundary(3)).counts == Counts{8, 12, 6});
    CHECK(f_vector(hypercube_boundary(4)).counts == Counts{16, 32, 24, 8});
    CHECK(f_vector(pgon(3)).counts == Counts{3, 3});
    CHECK(f_vector(pgon(4)).counts == Counts{4, 4});
    CHECK(f_vector(pgon(5)).counts == Counts{5, 5});
    CHECK(hypercube_boundary(3).find("**0").has_value());
    CHECK_THROWS_AS(hypercube_boundary(5), CatalogError);
    CHECK_THROWS_AS(pgon(2), CatalogError);
  }

  TEST_CASE("platonic solids") {
    CHECK(f_vector(platonic("dodecahedron")).counts == Counts{20, 30, 12});
    CHECK(f_vector(platonic("icosahedron")).counts == Counts{12, 30, 20});
    CHECK(f_vector(platonic("tetrahedron")).counts == Counts{4, 6, 4});
    CHECK(f_vector(platonic("octahedron")).counts == Counts{6, 12, 8});
    CHECK(f_vector(platonic("cube")).counts == Counts{8, 12, 6});
    CHECK_THROWS_AS(platonic("sphere"), CatalogError);
  }

  TEST_CASE("product summaries") {
    const ManifoldSummary t1 = product_summary("Tg_x_I2", {1, {}});
    CHECK(phi(t1) == 0);
    CHECK(t1.chi_total() == 0);
    const ManifoldSummary closed = product_summary("G_closed_x_S1");
    CHECK(closed.closed());
    for (int k = 0; k < 4; ++k) CHECK(closed.f(k) == 0);
    CHECK(phi(closed) == 0);
    const ManifoldSummary gi = product_summary("G_Tg_boundary_x_I", {2, {}});
    CHECK(gi.chiF(3) == -4);
    CHECK(phi(gi) == -1);
    CHECK(gi.chi_total() == -1);
    CHECK_THROWS_AS(product_summary("nope"), CatalogError);
  }

  TEST_CASE("cut data") {
    const CutData closed = cut_data("closed_haken_3mfld");
    CHECK(closed.chi() == 0);
    CHECK(closed.f0() == 0);
    CHECK(closed.b0_boundary() == 0);
    const CutData torus = cut_data("torus_boundary_3mfld", {1, {}});
    CHECK(torus.chiF(2) == 0);
    CHECK(torus.chi() == 0);
    CHECK(torus.f0() == 0);
    CHECK(torus.f1() == 0);
    CHECK(torus.f2() == 1);
    const CutData cube = cut_data("haken_3cell_cube");
    CHECK(cube.f0() == 8);
    CHECK(cube.chiF(2) == 6);
    CHECK(cube.chi_boundary() == 2);
    CHECK(cube.chi() == 1);
    CHECK(cube.haken());
    CHECK(cube.f2() * 2 == cube.f0() + 4);
    CHECK_THROWS_AS(cut_data("nope"), CatalogError);
  }

  TEST_CASE("registry") {
    const auto list = catalog_list();
    CHECK(std::is_sorted(list.begin(), list.end(),
                         [](const CatalogInfo& a, const CatalogInfo& b) { return a.name < b.name; }));
    CHECK(catalog_info("cube").haken == std::optional<bool>(true));
    CHECK(catalog_info("tetrahedron").haken == std::optional<bool>(false));
    CHECK(catalog_info("I4").cell_dim == 4);
    CHECK(f_vector(catalog_complex("I4")).counts == Counts{16, 32, 24, 8});
    CHECK(catalog_summary("I4_cell").f(0) == 16);
    CHECK_THROWS_AS(catalog_entry("missing"), CatalogError);
    CHECK_THROWS_AS(catalog_complex("cross4"), CatalogError);
    CHECK(catalog_hierarchy("chain.I4").terminal_cells.size() == 1);
  }

  TEST_CASE("the 120-cell") {
    if (!cell120_enabled()) return;
    CHECK(f_vector(cell600_simplicial()).counts == Counts{120, 720, 1200, 600});
    CHECK(f_vector(cell120()).counts == Counts{600, 1200, 720, 120});
    const RegularCellComplex c = cell120();
    for (CellIndex f : c.facets()) CHECK(f_vector(c.boundary_complex(f)).counts == Counts{20, 30, 12});
  }
}
