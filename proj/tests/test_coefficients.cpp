#include "hakencx/coefficients.hpp"
#include "hakencx/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hakencx;

namespace {

const LinearConstraint& by_provenance(const ConstraintSystem& s, const std::string& tag) {
  for (const auto& c : s.constraints) {
    if (c.provenance == tag) return c;
  }
  throw std::runtime_error("missing " + tag);
}

bool has_text(const ConstraintSystem& s, const std::string& text) {
  return std::any_of(s.constraints.begin(), s.constraints.end(),
                     [&](const LinearConstraint& c) { return c.to_string() == text; });
}

LinearConstraint make(std::map<std::string, Rational> coeffs, Relation rel, Rational rhs, std::string tag) {
  return LinearConstraint{std::move(coeffs), rel, std::move(rhs), std::move(tag)};
}

ConstraintSystem r0_r1_system() {
  ConstraintSystem s;
  s.variables = {"r0", "r1"};
  s.add(make({{"r0", 1}, {"r1", 2}}, Relation::LessEqual, Rational(-1, 16), "a"));
  s.add(make({{"r0", 2}, {"r1", 3}}, Relation::GreaterEqual, Rational(-1, 8), "b"));
  s.add(make({{"r1", 1}}, Relation::GreaterEqual, 0, "c"));
  return s;
}

}  // namespace

TEST_SUITE("coefficients") {
  TEST_CASE("closed product constraints force t1 = 0") {
    const ConstraintSystem s = generate_constraints({1, 2}, {0, 1});
    CHECK(has_text(s, "r3 + t0 = 0"));
    CHECK(has_text(s, "r3 + t0 + t1 = 0"));
    const SolveResult r = solve_unique(s);
    REQUIRE(r.feasible);
    CHECK(r.ranges.at("t1").point());
    CHECK(r.solution.at("t1") == 0);
  }

  TEST_CASE("genus instances of the boundary product") {
    const ConstraintSystem s = default_constraints();
    const LinearConstraint& g1 = by_provenance(s, "G3xS1_Tg[g=1]");
    CHECK(g1.relation == Relation::Equal);
    CHECK(g1.rhs == 0);
    CHECK(g1.coeffs.at("r2") == g1.coeffs.at("r3"));
    CHECK(g1.coeffs.count("s3") == 0);
    // Subtracting the g = 1 instance from the g = 2 instance leaves 4 s3 = 1.
    const LinearConstraint& g2 = by_provenance(s, "G3xS1_Tg[g=2]");
    CHECK(g2.coeffs.at("r2") == g1.coeffs.at("r2"));
    CHECK(g2.coeffs.at("r3") == g1.coeffs.at("r3"));
    CHECK(g2.coeffs.at("s3") == -4);
    CHECK(g2.rhs == -1);
    ConstraintSystem pair;
    pair.variables = coefficient_names();
    pair.add(g1);
    pair.add(g2);
    const SolveResult r = solve_unique(pair);
    CHECK(r.ranges.at("s3").point());
    CHECK(r.solution.at("s3") == Rational(1, 4));
  }

  TEST_CASE("full system has the unique canonical solution") {
    const SolveResult r = solve_unique(default_constraints());
    REQUIRE(r.feasible);
    CHECK(r.unique);
    CHECK(from_point(r.solution) == PhiCoefficients::canonical());
    CHECK(r.solution.at("r0") == Rational(-1, 16));
    CHECK(r.solution.at("s3") == Rational(1, 4));
  }

  TEST_CASE("dropping the hypercube constraint frees r0") {
    ConstraintSystem s = default_constraints();
    CHECK(drop_constraints(s, "hypercube_I4") == 1);
    const SolveResult r = solve_unique(s);
    REQUIRE(r.feasible);
    CHECK_FALSE(r.unique);
    const VariableRange& r0 = r.ranges.at("r0");
    REQUIRE(r0.lo.has_value());
    CHECK(*r0.lo == Rational(-1, 16));
    CHECK_FALSE(r0.hi.has_value());
    CHECK(r.ranges.at("r1").point());
    for (const auto& c : s.constraints) CHECK(c.satisfied_by(r.solution));
  }

  TEST_CASE("drop by tag prefix") {
    ConstraintSystem s = default_constraints();
    CHECK(drop_constraints(s, "TgxI2") == 3);
    CHECK(drop_constraints(s, "TgxI2") == 0);
    CHECK(drop_constraints(s, "no_such_tag") == 0);
  }

  TEST_CASE("three inequality system") {
    const SolveResult r = solve_unique(r0_r1_system());
    REQUIRE(r.feasible);
    CHECK(r.unique);
    CHECK(r.solution.at("r0") == Rational(-1, 16));
    CHECK(r.solution.at("r1") == 0);
  }

  TEST_CASE("perturbed solutions violate the system") {
    const ConstraintSystem s = default_constraints();
    const SolveResult r = solve_unique(s);
    for (const std::string& v : s.variables) {
      for (const Rational& delta : {Rational(1, 1000), Rational(-1, 1000)}) {
        auto point = r.solution;
        point[v] += delta;
        const bool all = std::all_of(s.constraints.begin(), s.constraints.end(),
                                     [&](const LinearConstraint& c) { return c.satisfied_by(point); });
        CAPTURE(v);
        CHECK_FALSE(all);
      }
    }
  }

  TEST_CASE("infeasible systems report an irreducible conflict") {
    ConstraintSystem s = r0_r1_system();
    s.add(make({{"r0", 1}}, Relation::GreaterEqual, 0, "d"));
    const SolveResult r = solve_unique(s);
    CHECK_FALSE(r.feasible);
    REQUIRE_FALSE(r.conflict.empty());
    ConstraintSystem core;
    core.variables = s.variables;
    for (const auto& c : r.conflict) core.add(c);
    CHECK_FALSE(feasible(core));
    for (std::size_t skip = 0; skip < r.conflict.size(); ++skip) {
      ConstraintSystem smaller;
      smaller.variables = s.variables;
      for (std::size_t i = 0; i < r.conflict.size(); ++i) {
        if (i != skip) smaller.add(r.conflict[i]);
      }
      CHECK(feasible(smaller));
    }
  }

  TEST_CASE("generator preconditions") {
    CHECK_THROWS_AS(generate_constraints({2, 3}, {0, 1}), PreconditionViolation);
    CHECK_THROWS_AS(generate_constraints({1}, {0, 1}), PreconditionViolation);
    CHECK_THROWS_AS(generate_constraints({1, 2}, {1, 1}), PreconditionViolation);
    CHECK_THROWS_AS(generate_constraints({0, 1, 2}, {0, 1}), PreconditionViolation);
    ConstraintSystem s;
    s.variables = {"x"};
    CHECK_THROWS_AS(s.add(make({{"y", 1}}, Relation::Equal, 0, "bad")), PreconditionViolation);
    CHECK_THROWS_AS(s.add(make({}, Relation::Equal, 0, "empty")), PreconditionViolation);
  }

  TEST_CASE("constraint text") {
    const auto c = make({{"r3", 1}, {"t0", 1}, {"t1", 2}}, Relation::Equal, 0, "x");
    CHECK(c.to_string() == "r3 + t0 + 2 t1 = 0");
    const auto d = make({{"r0", Rational(-1, 2)}, {"r1", -1}}, Relation::LessEqual, Rational(3, 4), "y");
    CHECK(d.to_string() == "-1/2 r0 - r1 <= 3/4");
  }

  TEST_CASE("elimination agrees with a rational grid") {
    std::mt19937_64 rng(31337);
    const std::vector<std::string> names{"x", "y", "z"};
    for (int trial = 0; trial < 40; ++trial) {
      ConstraintSystem s;
      const auto dims = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
      s.variables.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(dims));
      for (const auto& v : s.variables) {
        s.add(make({{v, 1}}, Relation::LessEqual, 2, "box"));
        s.add(make({{v, 1}}, Relation::GreaterEqual, -2, "box"));
      }
      const auto extra = oracle::uniform(rng, 1, 4);
      for (int i = 0; i < extra; ++i) {
        std::map<std::string, Rational> coeffs;
        for (const auto& v : s.variables) {
          const auto a = oracle::uniform(rng, -3, 3);
          if (a != 0) coeffs[v] = a;
        }
        if (coeffs.empty()) coeffs[s.variables.front()] = 1;
        const auto rel = oracle::uniform(rng, 0, 4);
        const Relation r = rel == 0 ? Relation::Equal : (rel <= 2 ? Relation::LessEqual : Relation::GreaterEqual);
        s.add(make(coeffs, r, oracle::uniform(rng, -3, 3), "random"));
      }
      const auto grid = oracle::grid_feasible(s, 2, dims == 3 ? 2 : 4);
      const SolveResult result = solve_unique(s);
      CAPTURE(trial);
      if (!grid.empty()) CHECK(result.feasible);
      if (!result.feasible) {
        CHECK(grid.empty());
        continue;
      }
      for (const auto& c : s.constraints) CHECK(c.satisfied_by(result.solution));
      for (const auto& point : grid) {
        for (std::size_t i = 0; i < dims; ++i) {
          const VariableRange& range = result.ranges.at(s.variables[i]);
          if (range.lo) CHECK(*range.lo <= point[i]);
          if (range.hi) CHECK(point[i] <= *range.hi);
          if (result.unique) CHECK(point[i] == result.solution.at(s.variables[i]));
        }
      }
    }
  }
}
