#pragma once

#include "hakencx/complex.hpp"

#include <string>
#include <vector>

namespace hakencx {

struct TrailEntry {
  std::string face_id;
  int dim = 0;
  bool passed = true;
  std::string reason;
};

/// Combinatorial certificate for "this complex bounds a Haken n-cell". It
/// checks necessary conditions only: the boundary pattern, single-cell
/// intersections certified recursively, the combinatorial consequences of
/// usefulness and the absence of 3-cycles.
struct HakenCellCertificate {
  int n = 0;
  bool passed = false;
  /// First reason for failure; empty on success.
  std::string reason;
  std::vector<TrailEntry> trail;
  /// is_flag(dual_simplicial(boundary, n - 1)); false when the boundary is
  /// not simple. Recorded, not part of the verdict.
  bool dual_flag = false;
};

/// Throws UnsupportedDimension unless 1 <= n <= 4, and StructuralError when
/// the complex does not have top dimension n - 1.
HakenCellCertificate check_haken_cell(const RegularCellComplex& boundary, int n);

/// Pairwise facet intersections are connected; three pairwise meeting
/// facets have a common point. With `simply_connected` false both clauses
/// are recorded as not applicable.
ValidationReport check_usefulness_combinatorics(const RegularCellComplex& boundary,
                                                bool simply_connected = true);

/// Drops all memoized sub-certificates.
void clear_haken_memo();

}  // namespace hakencx
