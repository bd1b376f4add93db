#include "hakencx/surgery.hpp"

#include "hakencx/errors.hpp"
#include "hakencx/phi.hpp"

namespace hakencx {

IntervalSummary cut(const ManifoldSummary& x, const CutData& g) {
  if (!g.connected()) throw UnsupportedCut("cutting hypersurface '" + g.label() + "' is not connected");
  if (x.closed() && g.b0_boundary() > 0) {
    throw PreconditionViolation("'" + g.label() + "' has boundary but '" + x.label() + "' is closed");
  }
  IntervalSummary y;
  y.label = x.label() + " | " + g.label();
  y.chi_total = x.chi_total() + g.chi();
  y.f0 = x.f(0) + 2 * g.f0();
  const std::int64_t f1 = x.f(1) + 2 * g.f1();
  const std::int64_t f2 = x.f(2) + 2 * g.f2();
  const std::int64_t f3 = x.f(3) + 2;
  y.f1 = {f1, f1 + g.f0()};
  y.f2 = {f2, f2 + g.f1()};
  y.f3 = {f3, f3 + g.f2()};
  y.chiF[0] = x.chiF(0) + 2 * g.chiF(0);
  y.chiF[1] = x.chiF(1) + g.chiF(0) + 2 * g.chiF(1);
  y.chiF[2] = x.chiF(2) + g.chiF(1) + 2 * g.chiF(2);
  y.chiF[3] = x.chiF(3) + g.chiF(2) + 2 * g.chi();
  if (g.b0_boundary() == 0) {
    // The two copies of a closed G are new boundary components.
    y.b0_boundary = {x.b0_boundary() + 2, x.b0_boundary() + 2};
  } else {
    y.b0_boundary = {x.b0_boundary(), x.b0_boundary() + 1};
  }
  return y;
}

Rational phi_after_cut(const ManifoldSummary& x, const CutData& g) {
  if (!g.connected()) throw UnsupportedCut("cutting hypersurface '" + g.label() + "' is not connected");
  return phi(x) - rational(g.f0(), 8) + rational(g.chiF(2) + g.chi_boundary(), 4);
}

namespace {

class ReportBuilder {
 public:
  void line(int stage, const std::string& subject, std::string statement, Rational lhs, Relation r,
            Rational rhs) {
    const bool ok = holds(lhs, r, rhs);
    report_.passed = report_.passed && ok;
    report_.lines.push_back({stage, subject, std::move(statement), std::move(lhs), r, std::move(rhs), ok});
  }
  void inconsistency(std::string message) {
    report_.passed = false;
    report_.inconsistencies.push_back(std::move(message));
  }
  ChainReport take() { return std::move(report_); }

 private:
  ChainReport report_;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

ChainReport verify_induction_chain(const Hierarchy& h) {
  ReportBuilder out;
  for (std::size_t i = 0; i < h.stages.size(); ++i) {
    const int stage = static_cast<int>(i);
    const ManifoldSummary& x = h.stages[i].x;
    const CutData& g = h.stages[i].g;
    IntervalSummary computed;
    try {
      computed = cut(x, g);
    } catch (const Error& e) {
      out.inconsistency("stage " + std::to_string(i) + ": " + e.what());
      continue;
    }

    const Rational phi_y_law = phi_after_cut(x, g);
    Rational chi_y = computed.chi_total;
    Rational phi_y = phi(computed);
    std::string y_name = computed.label;
    const ManifoldSummary* next = i + 1 < h.stages.size() ? &h.stages[i + 1].x : nullptr;
    std::optional<ManifoldSummary> cells;
    if (!next && h.final_result) next = &*h.final_result;
    if (!next && !h.terminal_cells.empty()) {
      try {
        cells = disjoint_union(h.terminal_cells, "terminal cells");
        next = &*cells;
      } catch (const Error& e) {
        out.inconsistency(std::string("terminal cells: ") + e.what());
      }
    }
    if (next) {
      const auto bad = computed.mismatches(*next);
      if (!bad.empty()) {
        out.inconsistency("stage " + std::to_string(i) + ": '" + next->label() +
                          "' is not a possible result of the cut (" + join(bad) + ")");
      }
      chi_y = next->chi_total();
      phi_y = phi(*next);
      y_name = next->label();
    }
    const Rational chi_g = g.chi();
    const std::string subject = x.label() + " cut along " + g.label();

    out.line(stage, subject, "phi(Y) by the transformation law", phi_y, Relation::Equal, phi_y_law);
    out.line(stage, subject, "chi(X) = chi(Y) - chi(G)", x.chi_total(), Relation::Equal, chi_y - chi_g);
    out.line(stage, subject, "chi(Y) - chi(G) >= phi(Y) - chi(G)", chi_y - chi_g, Relation::GreaterEqual,
             phi_y - chi_g);
    out.line(stage, subject, "phi(Y) - chi(G) >= phi(X)", phi_y - chi_g, Relation::GreaterEqual, phi(x));
    if (g.haken()) {
      out.line(stage, subject, "phi(Y) - chi(G) = phi(X)", phi_y - chi_g, Relation::Equal, phi(x));
    }
    out.line(stage, subject, "chi(X) >= phi(X)", x.chi_total(), Relation::GreaterEqual, phi(x));
  }
  for (const ManifoldSummary& cell : h.terminal_cells) {
    out.line(-1, cell.label(), "phi <= 1", phi(cell), Relation::LessEqual, 1);
    out.line(-1, cell.label(), "chi = 1", cell.chi_total(), Relation::Equal, 1);
    out.line(-1, cell.label(), "chi >= phi", cell.chi_total(), Relation::GreaterEqual, phi(cell));
  }
  return out.take();
}

}  // namespace hakencx
