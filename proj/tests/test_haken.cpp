#include "hakencx/catalog.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/haken.hpp"

#include <doctest.h>

using namespace hakencx;

namespace {

/// Two squares glued along two opposite edges: an annulus.
RegularCellComplex glued_squares() {
  std::vector<Cell> cells{{"a", 0, {}, {}},           {"b", 0, {}, {}},          {"c", 0, {}, {}},
                          {"d", 0, {}, {}},           {"ab", 1, {"a", "b"}, {}},  {"cd", 1, {"c", "d"}, {}},
                          {"bc1", 1, {"b", "c"}, {}}, {"da1", 1, {"d", "a"}, {}}, {"bc2", 1, {"b", "c"}, {}},
                          {"da2", 1, {"d", "a"}, {}}, {"s1", 2, {"ab", "bc1", "cd", "da1"}, {}},
                          {"s2", 2, {"ab", "bc2", "cd", "da2"}, {}}};
  return RegularCellComplex(2, cells);
}

}  // namespace

TEST_SUITE("haken_checks") {
  TEST_CASE("polygons") {
    CHECK(check_haken_cell(pgon(4), 2).passed);
    CHECK(check_haken_cell(pgon(6), 2).passed);
    const HakenCellCertificate tri = check_haken_cell(pgon(3), 2);
    CHECK_FALSE(tri.passed);
    CHECK(tri.reason.find("triangular face") != std::string::npos);
    CHECK(check_haken_cell(hypercube_boundary(1), 1).passed);
  }

  TEST_CASE("platonic solids") {
    CHECK(check_haken_cell(platonic("cube"), 3).passed);
    CHECK(check_haken_cell(platonic("dodecahedron"), 3).passed);
    const HakenCellCertificate tet = check_haken_cell(platonic("tetrahedron"), 3);
    CHECK_FALSE(tet.passed);
    CHECK(tet.reason.find("triangular face") != std::string::npos);
    for (const char* name : {"octahedron", "icosahedron"}) {
      const HakenCellCertificate c = check_haken_cell(platonic(name), 3);
      CHECK_FALSE(c.passed);
      CHECK(c.reason.find("boundary pattern violation") != std::string::npos);
      CHECK(c.reason.find("dimension 0, expected 1") != std::string::npos);
    }
  }

  TEST_CASE("hypercube with trail and dual flag") {
    const HakenCellCertificate c = check_haken_cell(hypercube_boundary(4), 4);
    CHECK(c.passed);
    CHECK(c.dual_flag);
    CHECK(c.reason.empty());
    CHECK_FALSE(c.trail.empty());
    bool saw_cube = false;
    bool saw_square = false;
    for (const TrailEntry& t : c.trail) {
      CHECK(t.passed);
      saw_cube = saw_cube || t.dim == 3;
      saw_square = saw_square || t.dim == 2;
    }
    CHECK(saw_cube);
    CHECK(saw_square);
  }

  TEST_CASE("memoization does not change verdicts") {
    clear_haken_memo();
    const auto first = check_haken_cell(platonic("dodecahedron"), 3);
    const auto second = check_haken_cell(platonic("dodecahedron"), 3);
    CHECK(first.passed == second.passed);
    CHECK(first.trail.size() == second.trail.size());
    clear_haken_memo();
  }

  TEST_CASE("usefulness combinatorics") {
    CHECK(check_usefulness_combinatorics(hypercube_boundary(4)).passed);
    CHECK(check_usefulness_combinatorics(platonic("dodecahedron")).passed);
    const ValidationReport annulus = check_usefulness_combinatorics(glued_squares());
    CHECK_FALSE(annulus.passed);
    bool disconnected = false;
    for (const auto& e : annulus.failures()) {
      disconnected = disconnected || e.detail.find("2 component(s)") != std::string::npos;
    }
    CHECK(disconnected);
    const ValidationReport skipped = check_usefulness_combinatorics(glued_squares(), false);
    CHECK(skipped.passed);
    for (const auto& e : skipped.entries) CHECK(e.detail == "not applicable");
  }

  TEST_CASE("dimension and shape errors") {
    CHECK_THROWS_AS(check_haken_cell(pgon(4), 5), UnsupportedDimension);
    CHECK_THROWS_AS(check_haken_cell(pgon(4), 0), UnsupportedDimension);
    CHECK_THROWS_AS(check_haken_cell(pgon(4), 3), StructuralError);
  }
}
