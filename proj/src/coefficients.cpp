#include "hakencx/coefficients.hpp"

#include "hakencx/errors.hpp"

#include <algorithm>
#include <set>

namespace hakencx {

Rational LinearConstraint::lhs_at(const std::map<std::string, Rational>& point) const {
  Rational total = 0;
  for (const auto& [name, a] : coeffs) {
    const auto it = point.find(name);
    if (it != point.end()) total += a * it->second;
  }
  return total;
}

bool LinearConstraint::satisfied_by(const std::map<std::string, Rational>& point) const {
  return holds(lhs_at(point), relation, rhs);
}

std::string LinearConstraint::to_string() const {
  std::string out;
  for (const auto& [name, a] : coeffs) {
    if (a == 0) continue;
    const Rational mag = abs(a);
    if (out.empty()) {
      out += a < 0 ? "-" : "";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_display_string(mag) + " ";
    out += name;
  }
  if (out.empty()) out = "0";
  return out + " " + hakencx::to_string(relation) + " " + to_display_string(rhs);
}

void ConstraintSystem::add(LinearConstraint c) {
  if (c.coeffs.empty()) throw PreconditionViolation("constraint '" + c.provenance + "' has no terms");
  for (const auto& [name, a] : c.coeffs) {
    if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
      throw PreconditionViolation("constraint '" + c.provenance + "' uses undeclared variable " + name);
    }
  }
  constraints.push_back(std::move(c));
}

std::vector<std::string> coefficient_names() {
  return {"r0", "r1", "r2", "r3", "s0", "s1", "s2", "s3", "t0", "t1", "t2", "t3"};
}

namespace {

using Terms = std::map<std::string, Rational>;

LinearConstraint make(Terms terms, Relation rel, Rational rhs, std::string provenance) {
  // Zero coefficients arise for some parameter values (g = 1, b1 = 0); drop
  // them but keep at least one term so the constraint stays well formed.
  Terms kept;
  for (auto& [name, a] : terms) {
    if (a != 0) kept.emplace(name, a);
  }
  if (kept.empty()) kept.emplace(terms.begin()->first, 0);
  return {std::move(kept), rel, std::move(rhs), std::move(provenance)};
}

std::string tagged(const std::string& base, const std::string& param) { return base + "[" + param + "]"; }

}  // namespace

ConstraintSystem generate_constraints(const std::vector<int>& genus_samples,
                                      const std::vector<int>& b1_samples) {
  if (genus_samples.empty() || b1_samples.empty()) {
    throw PreconditionViolation("sample lists must be nonempty");
  }
  for (int g : genus_samples) {
    if (g < 1) throw PreconditionViolation("genus samples must be >= 1");
  }
  for (int b : b1_samples) {
    if (b < 0) throw PreconditionViolation("b1 samples must be >= 0");
  }
  const bool has_g1 = std::count(genus_samples.begin(), genus_samples.end(), 1) > 0;
  const bool has_g2 = std::any_of(genus_samples.begin(), genus_samples.end(), [](int g) { return g >= 2; });
  if (!has_g1 || !has_g2) throw PreconditionViolation("genus samples need 1 and some g >= 2");
  const std::set<int> distinct_b1(b1_samples.begin(), b1_samples.end());
  if (distinct_b1.size() < 2) throw PreconditionViolation("b1 samples need two distinct values");
  const std::set<int> genera(genus_samples.begin(), genus_samples.end());

  ConstraintSystem sys;
  sys.variables = coefficient_names();
  for (const char* name : {"s0", "s1", "s2"}) {
    sys.add(make({{name, 1}}, Relation::Equal, 0, tagged("normalize_s", name)));
  }
  for (const char* name : {"t2", "t3"}) {
    sys.add(make({{name, 1}}, Relation::Equal, 0, tagged("normalize_t", name)));
  }

  // G x S^1 for closed G, cut along G x pt: 0 = 0 - 0 >= phi(G x I) >= 0.
  for (int b : distinct_b1) {
    sys.add(make({{"r3", 1}, {"t0", 1}, {"t1", b}}, Relation::Equal, 0,
                 tagged("G3xS1_closed", "b1=" + std::to_string(b))));
  }
  for (int g : genera) {
    const std::string gp = "g=" + std::to_string(g);
    const Rational chi_tg = 2 - 2 * g;
    // G x S^1 with boundary T_g cut along G x pt; t0 = -r3 substituted.
    sys.add(make({{"r2", 2}, {"r3", 2}, {"s3", 4 * (1 - g)}}, Relation::Equal, 1 - g,
                 tagged("G3xS1_Tg", gp)));
    // T_g x I^2 with its four faces T_g x I: chi >= phi.
    sys.add(make({{"r2", 4}, {"r3", 4}, {"s3", 4 * chi_tg}, {"t0", 1}}, Relation::LessEqual, chi_tg,
                 tagged("TgxI2", gp)));
    // T_g x I^2 cut along S^1 x I^2 into T_{g-1,2} x I^2.
    sys.add(make({{"r1", 8}, {"r2", 12}, {"r3", 4}, {"s3", 4 * chi_tg}, {"t0", 1}}, Relation::LessEqual,
                 chi_tg, tagged("TgxI2_cut_S1xI2", gp + ",upper")));
    sys.add(make({{"r1", 8}, {"r2", 8}}, Relation::GreaterEqual, 0, tagged("TgxI2_cut_S1xI2", gp + ",lower")));
    // Cut along a Haken 3-manifold with boundary T_g.
    sys.add(make({{"r2", 2}, {"s3", 4 * (1 - g)}}, Relation::GreaterEqual, 1 - g,
                 tagged("torus_boundary_cut", gp)));
  }
  // Cut along a Haken 3-cell with f_0 vertices and f_0/2 + 2 faces:
  // (2 r0 + 3 r1) f_0 >= 1 - (f_2 + 2)/4.
  for (const auto& [name, f0] : std::vector<std::pair<std::string, int>>{{"cube", 8}, {"dodecahedron", 20}}) {
    const int f2 = f0 / 2 + 2;
    sys.add(make({{"r0", 2 * f0}, {"r1", 3 * f0}}, Relation::GreaterEqual, 1 - rational(f2 + 2, 4),
                 tagged("haken_3cell_cut", name)));
  }
  // I^4 with f-vector (16, 32, 24, 8): 16 (r0 + 2 r1) + 8/4 <= 1.
  sys.add(make({{"r0", 16}, {"r1", 32}}, Relation::LessEqual, -1, "hypercube_I4"));
  return sys;
}

ConstraintSystem default_constraints() { return generate_constraints({1, 2, 3}, {0, 1, 2}); }

std::size_t drop_constraints(ConstraintSystem& system, const std::string& tag) {
  const auto before = system.constraints.size();
  std::erase_if(system.constraints, [&](const LinearConstraint& c) {
    return c.provenance == tag || c.provenance.rfind(tag + "[", 0) == 0;
  });
  return before - system.constraints.size();
}

namespace {

/// a . x <= b over a fixed variable order.
struct Row {
  std::vector<Rational> a;
  Rational b;
};

bool is_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

/// Scales so the first nonzero coefficient has absolute value 1, making
/// duplicate rows compare equal.
void normalize(Row& row) {
  for (const Rational& x : row.a) {
    if (x != 0) {
      const Rational m = abs(x);
      for (Rational& y : row.a) y /= m;
      row.b /= m;
      return;
    }
  }
}

struct RowLess {
  bool operator()(const Row& x, const Row& y) const {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

/// Removes trivial rows; returns false when some row reads 0 <= b with b < 0.
bool tidy(std::vector<Row>& rows) {
  std::vector<Row> out;
  for (Row& r : rows) {
    if (is_zero(r.a)) {
      if (r.b < 0) return false;
      continue;
    }
    normalize(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), RowLess{});
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Row& x, const Row& y) { return x.a == y.a && x.b == y.b; }),
            out.end());
  // Among rows with equal coefficients only the tightest matters.
  std::vector<Row> tight;
  for (Row& r : out) {
    if (!tight.empty() && tight.back().a == r.a) continue;
    tight.push_back(std::move(r));
  }
  rows = std::move(tight);
  return true;
}

/// Fourier-Motzkin elimination of variable j. Returns false if the system
/// becomes visibly infeasible.
bool eliminate(std::vector<Row>& rows, std::size_t j) {
  std::vector<Row> pos, neg, keep;
  for (Row& r : rows) {
    if (r.a[j] > 0) {
      pos.push_back(std::move(r));
    } else if (r.a[j] < 0) {
      neg.push_back(std::move(r));
    } else {
      keep.push_back(std::move(r));
    }
  }
  for (const Row& p : pos) {
    for (const Row& n : neg) {
      const Rational wp = -n.a[j];
      const Rational wn = p.a[j];
      Row combined{std::vector<Rational>(p.a.size()), wp * p.b + wn * n.b};
      for (std::size_t k = 0; k < p.a.size(); ++k) combined.a[k] = wp * p.a[k] + wn * n.a[k];
      combined.a[j] = 0;
      keep.push_back(std::move(combined));
    }
  }
  rows = std::move(keep);
  return tidy(rows);
}

/// Linear system after eliminating the equalities: each variable is either
/// a pivot expressed through the free variables or free itself.
struct Reduced {
  bool feasible = true;
  std::size_t n = 0;
  /// value[v] = constant + sum coeff * x_free, as a row over all variables
  /// (pivot columns zero) with the constant in b.
  std::vector<std::optional<Row>> pivot_expr;
  std::vector<Row> inequalities;
};

Reduced reduce(const ConstraintSystem& system) {
  const auto& vars = system.variables;
  const std::size_t n = vars.size();
  auto index_of = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin());
  };
  std::vector<Row> eq, ineq;
  for (const LinearConstraint& c : system.constraints) {
    Row r{std::vector<Rational>(n), c.rhs};
    for (const auto& [name, a] : c.coeffs) r.a[index_of(name)] += a;
    if (c.relation == Relation::Equal) {
      eq.push_back(std::move(r));
    } else if (c.relation == Relation::LessEqual) {
      ineq.push_back(std::move(r));
    } else {
      for (Rational& x : r.a) x = -x;
      r.b = -r.b;
      ineq.push_back(std::move(r));
    }
  }

  Reduced out;
  out.n = n;
  out.pivot_expr.resize(n);
  // Gauss-Jordan elimination, pivoting on the lowest free column.
  std::vector<std::size_t> pivot_of_row;
  std::vector<Row> basis;
  for (Row& r : eq) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::size_t p = pivot_of_row[i];
      if (r.a[p] == 0) continue;
      const Rational f = r.a[p];
      for (std::size_t k = 0; k < n; ++k) r.a[k] -= f * basis[i].a[k];
      r.b -= f * basis[i].b;
    }
    auto lead = std::find_if(r.a.begin(), r.a.end(), [](const Rational& x) { return x != 0; });
    if (lead == r.a.end()) {
      if (r.b != 0) {
        out.feasible = false;
        return out;
      }
      continue;
    }
    const std::size_t p = static_cast<std::size_t>(lead - r.a.begin());
    const Rational f = r.a[p];
    for (Rational& x : r.a) x /= f;
    r.b /= f;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational g = basis[i].a[p];
      if (g == 0) continue;
      for (std::size_t k = 0; k < n; ++k) basis[i].a[k] -= g * r.a[k];
      basis[i].b -= g * r.b;
    }
    basis.push_back(std::move(r));
    pivot_of_row.push_back(p);
  }
  // x_p + sum_{free} a_k x_k = b  =>  x_p = b - sum a_k x_k.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Row expr{std::vector<Rational>(n), basis[i].b};
    for (std::size_t k = 0; k < n; ++k) {
      if (k != pivot_of_row[i]) expr.a[k] = -basis[i].a[k];
    }
    out.pivot_expr[pivot_of_row[i]] = std::move(expr);
  }
  for (Row& r : ineq) {
    Row sub{std::vector<Rational>(n), r.b};
    for (std::size_t k = 0; k < n; ++k) {
      if (r.a[k] == 0) continue;
      if (const auto& e = out.pivot_expr[k]) {
        for (std::size_t m = 0; m < n; ++m) sub.a[m] += r.a[k] * e->a[m];
        sub.b -= r.a[k] * e->b;
      } else {
        sub.a[k] += r.a[k];
      }
    }
    out.inequalities.push_back(std::move(sub));
  }
  out.feasible = tidy(out.inequalities);
  return out;
}

/// Range of target . x + constant over the polyhedron `rows`, by adding an
/// auxiliary variable z = target . x + c and projecting onto z.
std::optional<VariableRange> range_of(const std::vector<Row>& rows, const Row& target) {
  const std::size_t n = target.a.size();
  std::vector<Row> ext;
  for (const Row& r : rows) {
    Row e{r.a, r.b};
    e.a.push_back(0);
    ext.push_back(std::move(e));
  }
  // z - target.a . x <= c and -(z - target.a . x) <= -c.
  Row up{std::vector<Rational>(n + 1), target.b};
  for (std::size_t k = 0; k < n; ++k) up.a[k] = -target.a[k];
  up.a[n] = 1;
  Row down{up.a, -target.b};
  for (Rational& x : down.a) x = -x;
  ext.push_back(std::move(up));
  ext.push_back(std::move(down));
  if (!tidy(ext)) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k) {
    if (!eliminate(ext, k)) return std::nullopt;
  }
  VariableRange range;
  for (const Row& r : ext) {
    const Rational& a = r.a[n];
    const Rational bound = r.b / a;
    if (a > 0) {
      if (!range.hi || bound < *range.hi) range.hi = bound;
    } else {
      if (!range.lo || bound > *range.lo) range.lo = bound;
    }
  }
  if (range.lo && range.hi && *range.lo > *range.hi) return std::nullopt;
  return range;
}

bool polyhedron_nonempty(std::vector<Row> rows, std::size_t n) {
  if (!tidy(rows)) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!eliminate(rows, k)) return false;
  }
  return true;
}

Rational pick(const VariableRange& r) {
  if (r.lo && r.hi) return (*r.lo + *r.hi) / 2;
  if (r.lo) return *r.lo;
  if (r.hi) return *r.hi;
  return 0;
}

/// Fixes x_j = value in every row.
void substitute(std::vector<Row>& rows, std::size_t j, const Rational& value) {
  for (Row& r : rows) {
    r.b -= r.a[j] * value;
    r.a[j] = 0;
  }
}

}  // namespace

bool feasible(const ConstraintSystem& system) {
  const Reduced red = reduce(system);
  return red.feasible && polyhedron_nonempty(red.inequalities, red.n);
}

SolveResult solve_unique(const ConstraintSystem& system) {
  SolveResult result;
  const Reduced red = reduce(system);
  result.feasible = red.feasible && polyhedron_nonempty(red.inequalities, red.n);
  if (!result.feasible) {
    // Deletion filter: drop every constraint whose removal keeps the
    // system infeasible; what remains is irreducible.
    ConstraintSystem core = system;
    for (std::size_t i = 0; i < core.constraints.size();) {
      ConstraintSystem trial = core;
      trial.constraints.erase(trial.constraints.begin() + static_cast<std::ptrdiff_t>(i));
      if (!feasible(trial)) {
        core = std::move(trial);
      } else {
        ++i;
      }
    }
    result.conflict = core.constraints;
    return result;
  }

  const std::size_t n = red.n;
  result.unique = true;
  for (std::size_t k = 0; k < n; ++k) {
    Row target{std::vector<Rational>(n), 0};
    if (const auto& e = red.pivot_expr[k]) {
      target = *e;
    } else {
      target.a[k] = 1;
    }
    const auto range = range_of(red.inequalities, target);
    if (!range) throw Error("projection of a feasible system came out empty");
    result.ranges[system.variables[k]] = *range;
    result.unique = result.unique && range->point();
  }

  // Choose the free variables one at a time inside the projection of what
  // is left, then back-substitute the pivots.
  std::vector<Rational> value(n);
  std::vector<Row> rows = red.inequalities;
  for (std::size_t k = 0; k < n; ++k) {
    if (red.pivot_expr[k]) continue;
    Row target{std::vector<Rational>(n), 0};
    target.a[k] = 1;
    const auto range = range_of(rows, target);
    if (!range) throw Error("sequential projection came out empty");
    value[k] = pick(*range);
    substitute(rows, k, value[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (const auto& e = red.pivot_expr[k]) {
      Rational v = e->b;
      for (std::size_t m = 0; m < n; ++m) v += e->a[m] * value[m];
      value[k] = v;
    }
  }
  for (std::size_t k = 0; k < n; ++k) result.solution[system.variables[k]] = value[k];
  for (const LinearConstraint& c : system.constraints) {
    if (!c.satisfied_by(result.solution)) {
      throw Error("solver produced a point violating '" + c.provenance + "'");
    }
  }
  return result;
}

std::map<std::string, Rational> to_point(const PhiCoefficients& coeffs) {
  std::map<std::string, Rational> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out["r" + std::to_string(k)] = coeffs.r[k];
    out["s" + std::to_string(k)] = coeffs.s[k];
    out["t" + std::to_string(k)] = coeffs.t[k];
  }
  return out;
}

PhiCoefficients from_point(const std::map<std::string, Rational>& point) {
  PhiCoefficients c;
  for (std::size_t k = 0; k < 4; ++k) {
    auto get = [&](const std::string& name) {
      const auto it = point.find(name);
      return it == point.end() ? Rational(0) : it->second;
    };
    c.r[k] = get("r" + std::to_string(k));
    c.s[k] = get("s" + std::to_string(k));
    c.t[k] = get("t" + std::to_string(k));
  }
  return c;
}

}  // namespace hakencx
