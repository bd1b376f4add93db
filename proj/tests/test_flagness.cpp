#include "hakencx/catalog.hpp"
#include "hakencx/duality.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/flagness.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hakencx;

namespace {

std::vector<Simplex> vertex_sets(const std::vector<MinimalNonFace>& m) {
  std::vector<Simplex> out;
  for (const auto& x : m) out.push_back(x.vertices);
  return out;
}

}  // namespace

TEST_SUITE("flagness") {
  TEST_CASE("minimal non-faces") {
    CHECK(vertex_sets(minimal_non_faces(simplex_boundary(3), 4)) == std::vector<Simplex>{{0, 1, 2, 3}});
    CHECK(vertex_sets(minimal_non_faces(cross_polytope_boundary(3), 4)) ==
          std::vector<Simplex>{{0, 1}, {2, 3}, {4, 5}});
    CHECK(minimal_non_faces(SimplicialComplex(3, {{0, 1, 2}}), 3).empty());
    CHECK(vertex_sets(minimal_non_faces(cross_polytope_boundary(4), 5)) ==
          std::vector<Simplex>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    CHECK_THROWS_AS(minimal_non_faces(simplex_boundary(3), 1), PreconditionViolation);
  }

  TEST_CASE("size bound truncates the search") {
    CHECK(minimal_non_faces(simplex_boundary(3), 3).empty());
    CHECK(flag_certificate_size(simplex_boundary(3)) == 4);
    CHECK(flag_certificate_size(SimplicialComplex(2, {})) == 2);
  }

  TEST_CASE("is_flag") {
    CHECK(is_flag(cross_polytope_boundary(3)));
    CHECK_FALSE(is_flag(simplex_boundary(3)));
    CHECK(is_flag(cross_polytope_boundary(4)));
    CHECK_FALSE(is_flag(simplex_boundary(4)));
    CHECK(is_flag(icosahedron_simplicial()));
    CHECK(is_flag(SimplicialComplex(3, {{0, 1, 2}})));
    CHECK(has_empty_triangle(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(has_empty_triangle(simplex_boundary(4)));
    CHECK_FALSE(is_flag(dual_simplicial(pgon(3), 1)));
    CHECK(is_flag(dual_simplicial(pgon(4), 1)));
  }

  TEST_CASE("3-cycles of a cell complex 1-skeleton") {
    const ThreeCycle tet = has_3_cycle_in_1_skeleton(platonic("tetrahedron"));
    CHECK(tet.found);
    CHECK(tet.witness[0] != tet.witness[1]);
    CHECK_FALSE(has_3_cycle_in_1_skeleton(hypercube_boundary(3)).found);
    CHECK_FALSE(has_3_cycle_in_1_skeleton(platonic("dodecahedron")).found);
    CHECK(has_3_cycle_in_1_skeleton(platonic("octahedron")).found);
  }

  TEST_CASE("brute-force oracle on catalog spheres") {
    for (const SimplicialComplex& s : {simplex_boundary(3), simplex_boundary(4), cross_polytope_boundary(3),
                                       cross_polytope_boundary(4), icosahedron_simplicial()}) {
      CHECK(is_flag(s) == oracle::brute_force_flag(s));
    }
  }
}
