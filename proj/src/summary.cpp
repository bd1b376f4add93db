#include "hakencx/summary.hpp"

#include "hakencx/errors.hpp"

namespace hakencx {

namespace {

void require(bool ok, const std::string& label, const std::string& what) {
  if (!ok) throw PreconditionViolation("summary '" + label + "': " + what);
}

}  // namespace

ManifoldSummary::ManifoldSummary(Fields fields) : fields_(std::move(fields)) {
  const Fields& s = fields_;
  for (int k = 0; k < 4; ++k) {
    require(s.f[static_cast<std::size_t>(k)] >= 0, s.label, "f_" + std::to_string(k) + " is negative");
  }
  require(s.b0_boundary >= 0 && s.b1_boundary >= 0, s.label, "negative boundary Betti number");
  require(s.chiF[0] == s.f[0], s.label, "chi(F^0) must equal f_0");
  if (s.b0_boundary == 0) {
    bool all_zero = s.b1_boundary == 0;
    for (int k = 0; k < 4; ++k) {
      all_zero = all_zero && s.f[static_cast<std::size_t>(k)] == 0 && s.chiF[static_cast<std::size_t>(k)] == 0;
    }
    require(all_zero, s.label, "empty boundary requires all boundary data to vanish");
  } else {
    require(s.f[3] >= 1, s.label, "a nonempty boundary needs at least one face");
    require(s.chiF[0] - s.chiF[1] + s.chiF[2] - s.chiF[3] == 0, s.label,
            "alternating sum of chi(F^k) must vanish");
  }
  if (s.haken) require(2 * s.f[0] == s.chiF[1], s.label, "2 f_0 = chi(F^1) fails");
}

std::int64_t ManifoldSummary::betti_boundary(int k) const {
  switch (k) {
    case 0:
    case 3:
      return fields_.b0_boundary;
    case 1:
    case 2:
      return fields_.b1_boundary;
    default:
      throw PreconditionViolation("boundary Betti index out of range");
  }
}

bool operator==(const ManifoldSummary& a, const ManifoldSummary& b) {
  const auto& x = a.fields_;
  const auto& y = b.fields_;
  return x.label == y.label && x.chi_total == y.chi_total && x.f == y.f && x.chiF == y.chiF &&
         x.b0_boundary == y.b0_boundary && x.b1_boundary == y.b1_boundary && x.haken == y.haken;
}

ManifoldSummary disjoint_union(const std::vector<ManifoldSummary>& parts, std::string label) {
  ManifoldSummary::Fields sum;
  sum.label = std::move(label);
  sum.haken = true;
  for (const ManifoldSummary& p : parts) {
    sum.chi_total += p.chi_total();
    for (std::size_t k = 0; k < 4; ++k) {
      sum.f[k] += p.fields().f[k];
      sum.chiF[k] += p.fields().chiF[k];
    }
    sum.b0_boundary += p.b0_boundary();
    sum.b1_boundary += p.b1_boundary();
    sum.haken = sum.haken && p.haken();
  }
  return ManifoldSummary(std::move(sum));
}

CutData::CutData(Fields fields) : fields_(std::move(fields)) {
  const Fields& g = fields_;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw PreconditionViolation("cut data '" + g.label + "': " + what);
  };
  need(g.f0_G >= 0 && g.f1_G >= 0 && g.f2_G >= 0 && g.b0_boundary_G >= 0, "negative count");
  need(2 * g.chi_G == g.chi_boundary_G, "chi(G) = chi(dG)/2 fails");
  need(g.chiF_G[0] == g.f0_G, "chi(F^0 G) must equal f_0(G)");
  need(g.chi_boundary_G == g.chiF_G[0] - g.chiF_G[1] + g.chiF_G[2],
       "chi(dG) must equal the alternating sum of chi(F^k G)");
  if (g.b0_boundary_G == 0) {
    need(g.f0_G == 0 && g.f1_G == 0 && g.f2_G == 0 && g.chiF_G == std::array<std::int64_t, 3>{},
         "closed G requires all boundary data to vanish");
  } else {
    need(g.f2_G >= 1, "a nonempty boundary needs at least one face");
  }
  if (g.haken) need(3 * g.f0_G == 2 * g.chiF_G[1], "3 f_0(G) = 2 chi(F^1 G) fails");
}

std::vector<std::string> IntervalSummary::mismatches(const ManifoldSummary& y) const {
  std::vector<std::string> out;
  if (y.chi_total() != chi_total) out.push_back("chi_total");
  if (y.f(0) != f0) out.push_back("f0");
  if (!f1.contains(y.f(1))) out.push_back("f1");
  if (!f2.contains(y.f(2))) out.push_back("f2");
  if (!f3.contains(y.f(3))) out.push_back("f3");
  for (int k = 0; k < 4; ++k) {
    if (y.chiF(k) != chiF[static_cast<std::size_t>(k)]) out.push_back("chiF" + std::to_string(k));
  }
  if (!b0_boundary.contains(y.b0_boundary())) out.push_back("b0_boundary");
  return out;
}

bool IntervalSummary::admits(const ManifoldSummary& y) const { return mismatches(y).empty(); }

}  // namespace hakencx
