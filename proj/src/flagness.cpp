#include "hakencx/flagness.hpp"

#include "hakencx/errors.hpp"

#include <algorithm>
#include <set>

namespace hakencx {

std::vector<MinimalNonFace> minimal_non_faces(const SimplicialComplex& complex, int max_size) {
  if (max_size < 2) throw PreconditionViolation("max_size must be at least 2");
  std::vector<MinimalNonFace> out;
  // Every minimal non-face C of size s is F + {v} with F = C minus its
  // largest vertex v, a face of size s-1. So each C is generated once.
  for (int size = 2; size <= max_size; ++size) {
    if (size - 2 > complex.dimension()) break;
    for (const Simplex& face : complex.faces(size - 2)) {
      for (int v = face.back() + 1; v < complex.vertex_count(); ++v) {
        Simplex candidate = face;
        candidate.push_back(v);
        if (complex.contains(candidate)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && minimal; ++drop) {
          Simplex sub;
          for (std::size_t j = 0; j < candidate.size(); ++j) {
            if (j != drop) sub.push_back(candidate[j]);
          }
          minimal = complex.contains(sub);
        }
        if (minimal) out.push_back({std::move(candidate)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MinimalNonFace& a, const MinimalNonFace& b) {
    return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size()
                                                  : a.vertices < b.vertices;
  });
  return out;
}

int flag_certificate_size(const SimplicialComplex& complex) {
  return std::max(2, complex.dimension() + 2);
}

bool is_flag(const SimplicialComplex& complex) {
  const auto mnf = minimal_non_faces(complex, flag_certificate_size(complex));
  return std::all_of(mnf.begin(), mnf.end(),
                     [](const MinimalNonFace& m) { return m.vertices.size() == 2; });
}

bool has_empty_triangle(const SimplicialComplex& complex) {
  const auto mnf = minimal_non_faces(complex, 3);
  return std::any_of(mnf.begin(), mnf.end(),
                     [](const MinimalNonFace& m) { return m.vertices.size() == 3; });
}

ThreeCycle has_3_cycle_in_1_skeleton(const RegularCellComplex& complex) {
  std::vector<std::set<CellIndex>> adj(complex.size());
  for (CellIndex e : complex.cells_of_dim(1)) {
    const auto ends = complex.boundary(e);
    if (ends.size() != 2) continue;
    adj[ends[0]].insert(ends[1]);
    adj[ends[1]].insert(ends[0]);
  }
  for (CellIndex a : complex.cells_of_dim(0)) {
    for (CellIndex b : adj[a]) {
      if (b <= a) continue;
      for (CellIndex c : adj[b]) {
        if (c <= b || adj[a].count(c) == 0) continue;
        return {true, {complex.id(a), complex.id(b), complex.id(c)}};
      }
    }
  }
  return {};
}

}  // namespace hakencx
