#pragma once

#include "hakencx/rational.hpp"
#include "hakencx/relation.hpp"
#include "hakencx/summary.hpp"

#include <string>
#include <vector>

namespace hakencx {

/// Y = X | G. Exact fields follow the Euler sum formula, f_1..f_3 and
/// b_0 of the boundary are bracketed. Throws UnsupportedCut for a
/// disconnected G and PreconditionViolation when G has boundary but X is
/// closed.
IntervalSummary cut(const ManifoldSummary& x, const CutData& g);

/// phi(X) - f_0(G)/8 + (chi(F^2 G) + chi(dG))/4.
Rational phi_after_cut(const ManifoldSummary& x, const CutData& g);

struct ChainLine {
  /// Stage index, or -1 for terminal cells.
  int stage = 0;
  std::string subject;
  std::string statement;
  Rational lhs;
  Relation relation = Relation::Equal;
  Rational rhs;
  bool holds = false;
};

struct ChainReport {
  bool passed = true;
  std::vector<ChainLine> lines;
  /// Inconsistencies between consecutive stages, one message each.
  std::vector<std::string> inconsistencies;
};

/// Evaluates, per stage, chi(X) = chi(Y) - chi(G) >= phi(Y) - chi(G) >= phi(X)
/// (with equality in the last step for Haken cut data) and chi(X) >= phi(X);
/// for each terminal cell, phi <= 1 = chi. Y is the next stage's X; after
/// the last stage it is the final result, the union of the terminal cells,
/// or the exact part of the cut, in that order of preference.
ChainReport verify_induction_chain(const Hierarchy& h);

}  // namespace hakencx
