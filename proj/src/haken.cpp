#include "hakencx/haken.hpp"

#include "hakencx/duality.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/flagness.hpp"
#include "hakencx/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

namespace hakencx {

namespace {

struct Verdict {
  bool passed = false;
  std::string reason;
};

class Memo {
 public:
  using Key = std::pair<int, std::vector<std::int64_t>>;

  std::optional<Verdict> get(const Key& key) const {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  // Concurrent writers compute the same verdict for the same key, so
  // keeping the first one is safe.
  void put(Key key, Verdict v) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), std::move(v));
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Verdict> table_;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

std::string small_face_message(std::size_t p) {
  std::ostringstream out;
  if (p == 3) {
    out << "triangular face (3-gon)";
  } else {
    out << p << "-gon";
  }
  out << " is not a Haken 2-cell";
  return out.str();
}

/// Checks that a 1-dimensional complex is a single cycle; returns its
/// length or 0 when it is not a cycle.
std::size_t cycle_length(const RegularCellComplex& boundary) {
  const auto vertices = boundary.cells_of_dim(0);
  const auto edges = boundary.cells_of_dim(1);
  if (vertices.empty() || vertices.size() != edges.size()) return 0;
  for (CellIndex v : vertices) {
    if (boundary.coboundary(v).size() != 2) return 0;
  }
  for (CellIndex e : edges) {
    if (boundary.boundary(e).size() != 2) return 0;
  }
  std::vector<CellIndex> all(boundary.size());
  for (CellIndex c = 0; c < boundary.size(); ++c) all[c] = c;
  return boundary.components(all).size() == 1 ? edges.size() : 0;
}

bool compute_dual_flag(const RegularCellComplex& boundary, int n) {
  if (!is_simple(boundary, n - 1)) return false;
  return is_flag(dual_simplicial(boundary, n - 1));
}

HakenCellCertificate certify(const RegularCellComplex& boundary, int n);

/// Sub-verdict for a face of dimension d given by its boundary complex.
Verdict face_verdict(const RegularCellComplex& face_boundary, int d) {
  if (d == 0) return {true, ""};
  Memo::Key key{d, canonical_form(face_boundary)};
  if (auto hit = memo().get(key)) return *hit;
  const HakenCellCertificate cert = certify(face_boundary, d);
  Verdict v{cert.passed, cert.reason};
  memo().put(std::move(key), v);
  return v;
}

HakenCellCertificate certify(const RegularCellComplex& boundary, int n) {
  HakenCellCertificate cert;
  cert.n = n;
  auto fail = [&](const std::string& reason) {
    if (cert.passed || cert.reason.empty()) cert.reason = reason;
    cert.passed = false;
  };
  cert.passed = true;

  if (n == 1) {
    const auto vertices = boundary.cells_of_dim(0);
    if (vertices.size() != 2 || boundary.size() != 2) {
      fail("a Haken 1-cell has exactly two boundary vertices, found " + std::to_string(vertices.size()));
    }
    cert.dual_flag = cert.passed && compute_dual_flag(boundary, n);
    return cert;
  }
  if (n == 2) {
    const std::size_t p = cycle_length(boundary);
    if (p == 0) {
      fail("boundary is not a single cycle");
    } else if (p < 4) {
      fail(small_face_message(p));
    }
    cert.dual_flag = p != 0 && compute_dual_flag(boundary, n);
    return cert;
  }

  const ValidationReport pattern = validate_boundary_pattern(boundary);
  for (const ValidationEntry& e : pattern.failures()) {
    std::string ids;
    for (const auto& id : e.facets) ids += (ids.empty() ? "" : ",") + id;
    fail("boundary pattern violation at {" + ids + "}: " + e.detail);
  }

  // Faces of every dimension: a nonempty k-fold intersection must be one
  // closed cell, itself a Haken cell.
  std::set<CellIndex> reported;
  for_each_facet_intersection(
      boundary, static_cast<std::size_t>(n),
      [&](std::span<const CellIndex> facets, const std::vector<CellIndex>& meet) {
        const int want = n - static_cast<int>(facets.size());
        std::set<CellIndex> in_meet(meet.begin(), meet.end());
        std::vector<CellIndex> top;
        for (CellIndex c : meet) {
          const auto up = boundary.coboundary(c);
          if (std::none_of(up.begin(), up.end(), [&](CellIndex u) { return in_meet.count(u) != 0; })) {
            top.push_back(c);
          }
        }
        if (top.size() != 1 || boundary.dim(top.front()) != want) {
          std::string ids;
          for (CellIndex f : facets) ids += (ids.empty() ? "" : ",") + boundary.id(f);
          fail("intersection of {" + ids + "} is not a single " + std::to_string(want) + "-cell");
          return;
        }
        const CellIndex face = top.front();
        if (!reported.insert(face).second) return;
        Verdict v;
        if (want <= 0) {
          v = {true, ""};
        } else {
          v = face_verdict(boundary.boundary_complex(face), want);
        }
        cert.trail.push_back({boundary.id(face), want, v.passed, v.reason});
        if (!v.passed) fail("face '" + boundary.id(face) + "': " + v.reason);
      });

  const ValidationReport useful = check_usefulness_combinatorics(boundary);
  for (const ValidationEntry& e : useful.failures()) fail(e.condition + ": " + e.detail);

  const ThreeCycle cycle = has_3_cycle_in_1_skeleton(boundary);
  if (cycle.found) {
    fail("3-cycle in the 1-skeleton through " + cycle.witness[0] + ", " + cycle.witness[1] + ", " +
         cycle.witness[2]);
  }

  cert.dual_flag = compute_dual_flag(boundary, n);
  return cert;
}

}  // namespace

HakenCellCertificate check_haken_cell(const RegularCellComplex& boundary, int n) {
  if (n < 1 || n > 4) throw UnsupportedDimension("Haken cells are certified for n = 1..4");
  if (boundary.top_dim() != n - 1 || boundary.facets().empty()) {
    throw StructuralError("a Haken " + std::to_string(n) + "-cell boundary must have top dimension " +
                          std::to_string(n - 1));
  }
  return certify(boundary, n);
}

ValidationReport check_usefulness_combinatorics(const RegularCellComplex& boundary, bool simply_connected) {
  ValidationReport report;
  const std::vector<CellIndex> facets = boundary.facets();
  if (!simply_connected) {
    report.add({{}, "pairwise facet intersections are connected", true, "not applicable"});
    report.add({{}, "pairwise meeting facet triples meet", true, "not applicable"});
    return report;
  }
  const std::size_t m = facets.size();
  std::vector<std::vector<CellIndex>> closures(m);
  for (std::size_t i = 0; i < m; ++i) closures[i] = boundary.closure(facets[i]);
  std::vector<std::vector<bool>> meets(m, std::vector<bool>(m, false));
  auto intersect = [](const std::vector<CellIndex>& a, const std::vector<CellIndex>& b) {
    std::vector<CellIndex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<CellIndex>> pair_cells;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<CellIndex> meet = intersect(closures[i], closures[j]);
      if (meet.empty()) continue;
      meets[i][j] = meets[j][i] = true;
      const std::size_t comps = boundary.components(meet).size();
      report.add({{boundary.id(facets[i]), boundary.id(facets[j])},
                  "pairwise facet intersection is connected", comps == 1,
                  std::to_string(comps) + " component(s)"});
      pair_cells.emplace(std::make_pair(i, j), std::move(meet));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!meets[i][j]) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!meets[i][k] || !meets[j][k]) continue;
        const bool nonempty = !intersect(pair_cells.at({i, j}), closures[k]).empty();
        report.add({{boundary.id(facets[i]), boundary.id(facets[j]), boundary.id(facets[k])},
                    "pairwise meeting facets have a common point", nonempty,
                    nonempty ? "triple intersection nonempty" : "triple intersection empty"});
      }
    }
  }
  return report;
}

void clear_haken_memo() { memo().clear(); }

}  // namespace hakencx
