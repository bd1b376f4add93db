#include "hakencx/catalog.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/io.hpp"
#include "hakencx/poset.hpp"

#include <doctest.h>

using namespace hakencx;

TEST_SUITE("io") {
  TEST_CASE("rationals travel as strings") {
    CHECK(to_json(rational(-15, 2)) == Json("-15/2"));
    CHECK(to_json(Rational(1)) == Json("1/1"));
    CHECK(rational_from_json(Json("-1/16")) == rational(-1, 16));
    CHECK(rational_from_json(Json(3)) == 3);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  }

  TEST_CASE("complex round trip") {
    const RegularCellComplex c = platonic("dodecahedron");
    const RegularCellComplex back = complex_from_json(to_json(c));
    CHECK(back.size() == c.size());
    CHECK(to_json(back) == to_json(c));
    CHECK(isomorphic(back, c));
  }

  TEST_CASE("simplicial round trip") {
    const SimplicialComplex s = cross_polytope_boundary(4);
    CHECK(simplicial_from_json(to_json(s)) == s);
    CHECK(detect_kind(to_json(s)) == InputKind::Simplicial);
    CHECK(detect_kind(to_json(platonic("cube"))) == InputKind::Complex);
  }

  TEST_CASE("summary and cut round trips") {
    const ManifoldSummary x = product_summary("Tg_x_I2", {3, {}});
    CHECK(summary_from_json(to_json(x)) == x);
    CHECK(detect_kind(to_json(x)) == InputKind::Summary);
    const CutData g = cut_data("haken_3cell_dodecahedron");
    CHECK(to_json(cut_from_json(to_json(g))) == to_json(g));
    CHECK(detect_kind(to_json(g)) == InputKind::Cut);
    const Hierarchy h = catalog_hierarchy("chain.Tg_x_I2.g2");
    CHECK(to_json(hierarchy_from_json(to_json(h))) == to_json(h));
    CHECK(detect_kind(to_json(h)) == InputKind::Hierarchy);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_json_text("{not json"), ParseError);
    CHECK_THROWS_AS(complex_from_json(parse_json_text(R"({"top_dim": 1})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(parse_json_text(R"({"top_dim": "x", "cells": []})")), ParseError);
    CHECK_THROWS_AS(
        complex_from_json(parse_json_text(R"({"top_dim": 1, "cells": [{"id": "e", "dim": 1, "boundary": ["a"]}]})")),
        StructuralError);
    CHECK_THROWS_AS(simplicial_from_json(parse_json_text(R"({"vertices": 2, "facets": [[0, 5]]})")), Error);
    CHECK_THROWS_AS(summary_from_json(parse_json_text(R"({"label": "x", "chi_total": 0})")), IncompleteSummary);
    Json short_f = to_json(product_summary("I4_cell"));
    short_f["f"] = Json::array({16, 32, 24});
    CHECK_THROWS_AS(summary_from_json(short_f), IncompleteSummary);
    CHECK(detect_kind(parse_json_text(R"({"x": 1})")) == InputKind::Unknown);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
  }
}
