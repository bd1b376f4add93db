#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hakencx {

/// Numerical shadow of a Haken 4-manifold X: face counts f_k of its boundary
/// pattern, face Euler sums chi(F^k), Betti numbers of the boundary and
/// chi(X). Construction validates the data and throws PreconditionViolation
/// on inconsistent fields.
///
/// Since b_0 = b_3 and b_1 = b_2 for the closed 3-manifold boundary, only
/// b_0 and b_1 are stored.
class ManifoldSummary {
 public:
  struct Fields {
    std::string label;
    std::int64_t chi_total = 0;
    std::array<std::int64_t, 4> f{};
    std::array<std::int64_t, 4> chiF{};
    std::int64_t b0_boundary = 0;
    std::int64_t b1_boundary = 0;
    /// Every vertex meets four edges, so chi(F^1) = 2 f_0.
    bool haken = true;
  };

  ManifoldSummary() = default;
  explicit ManifoldSummary(Fields fields);

  const Fields& fields() const { return fields_; }
  const std::string& label() const { return fields_.label; }
  std::int64_t chi_total() const { return fields_.chi_total; }
  std::int64_t f(int k) const { return fields_.f.at(static_cast<std::size_t>(k)); }
  std::int64_t chiF(int k) const { return fields_.chiF.at(static_cast<std::size_t>(k)); }
  std::int64_t b0_boundary() const { return fields_.b0_boundary; }
  std::int64_t b1_boundary() const { return fields_.b1_boundary; }
  std::int64_t b2_boundary() const { return fields_.b1_boundary; }
  std::int64_t b3_boundary() const { return fields_.b0_boundary; }
  /// b_k(boundary) for k = 0..3.
  std::int64_t betti_boundary(int k) const;
  bool haken() const { return fields_.haken; }
  bool closed() const { return fields_.b0_boundary == 0; }

  friend bool operator==(const ManifoldSummary& a, const ManifoldSummary& b);

 private:
  Fields fields_;
};

/// Disjoint union: all fields add.
ManifoldSummary disjoint_union(const std::vector<ManifoldSummary>& parts, std::string label);

/// Data of a connected cutting hypersurface G in X that the cut calculus
/// consumes. Enforced on construction:
///   chi(G) = chi(dG) / 2, chi(F^0 G) = f_0(G),
///   chi(dG) = chi(F^0 G) - chi(F^1 G) + chi(F^2 G),
///   3 f_0(G) = 2 chi(F^1 G) when `haken` is set,
///   all face data zero when dG is empty.
class CutData {
 public:
  struct Fields {
    std::string label;
    std::int64_t f0_G = 0;
    std::int64_t f1_G = 0;
    std::int64_t f2_G = 0;
    std::array<std::int64_t, 3> chiF_G{};
    std::int64_t chi_G = 0;
    std::int64_t chi_boundary_G = 0;
    std::int64_t b0_boundary_G = 0;
    bool connected = true;
    /// Advisory; the interval bounds already cover both cases.
    std::optional<bool> separating_hint;
    bool haken = false;
  };

  CutData() = default;
  explicit CutData(Fields fields);

  const Fields& fields() const { return fields_; }
  const std::string& label() const { return fields_.label; }
  std::int64_t f0() const { return fields_.f0_G; }
  std::int64_t f1() const { return fields_.f1_G; }
  std::int64_t f2() const { return fields_.f2_G; }
  std::int64_t chiF(int k) const { return fields_.chiF_G.at(static_cast<std::size_t>(k)); }
  std::int64_t chi() const { return fields_.chi_G; }
  std::int64_t chi_boundary() const { return fields_.chi_boundary_G; }
  std::int64_t b0_boundary() const { return fields_.b0_boundary_G; }
  bool connected() const { return fields_.connected; }
  bool haken() const { return fields_.haken; }

 private:
  Fields fields_;
};

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  bool exact() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Result of cutting: exact where the calculus is exact, intervals for
/// f_1, f_2, f_3 and b_0 of the boundary.
struct IntervalSummary {
  std::string label;
  std::int64_t chi_total = 0;
  std::int64_t f0 = 0;
  Interval f1;
  Interval f2;
  Interval f3;
  std::array<std::int64_t, 4> chiF{};
  Interval b0_boundary;

  /// True iff the summary agrees with every exact field and lies in every
  /// interval.
  bool admits(const ManifoldSummary& y) const;
  /// Names of the fields where `y` disagrees.
  std::vector<std::string> mismatches(const ManifoldSummary& y) const;
};

struct HierarchyStage {
  ManifoldSummary x;
  CutData g;
};

/// Cut stages X_0 | G_0 = X_1, X_1 | G_1 = X_2, ... The result of the last
/// cut is the disjoint union of `terminal_cells` when that list is
/// nonempty. A hierarchy truncated before reaching cells may name the
/// result of its last cut in `final_result`.
struct Hierarchy {
  std::string label;
  std::vector<HierarchyStage> stages;
  std::vector<ManifoldSummary> terminal_cells;
  std::optional<ManifoldSummary> final_result;
};

}  // namespace hakencx
