#include "hakencx/complex.hpp"

#include "hakencx/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hakencx {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::string join_ids(const RegularCellComplex& complex, std::span<const CellIndex> cells) {
  std::string out;
  for (CellIndex c : cells) {
    if (!out.empty()) out += ",";
    out += complex.id(c);
  }
  return out;
}

}  // namespace

RegularCellComplex::RegularCellComplex(int top_dim, std::vector<Cell> cells)
    : top_dim_(top_dim), cells_(std::move(cells)) {
  if (top_dim_ < 0) throw StructuralError("top_dim must be non-negative");
  const std::size_t n = cells_.size();
  index_.reserve(n);
  for (CellIndex i = 0; i < n; ++i) {
    const Cell& c = cells_[i];
    if (c.dim < 0) throw StructuralError("cell '" + c.id + "' has negative dimension");
    if (c.dim > top_dim_) {
      throw StructuralError("cell '" + c.id + "' has dimension above top_dim");
    }
    if (!index_.emplace(c.id, i).second) throw StructuralError("duplicate cell id '" + c.id + "'");
  }
  boundary_.resize(n);
  coboundary_.resize(n);
  for (CellIndex i = 0; i < n; ++i) {
    const Cell& c = cells_[i];
    if (c.dim == 0 && !c.boundary_ids.empty()) {
      throw StructuralError("vertex '" + c.id + "' has a nonempty boundary");
    }
    if (c.dim > 0 && c.boundary_ids.empty()) {
      throw StructuralError("cell '" + c.id + "' of dimension " + std::to_string(c.dim) +
                            " has an empty boundary");
    }
    for (const std::string& b : c.boundary_ids) {
      auto it = index_.find(b);
      if (it == index_.end()) {
        throw StructuralError("cell '" + c.id + "' refers to unknown boundary cell '" + b + "'");
      }
      if (cells_[it->second].dim != c.dim - 1) {
        throw StructuralError("cell '" + c.id + "' has boundary cell '" + b +
                              "' of the wrong dimension");
      }
      boundary_[i].push_back(it->second);
    }
    std::sort(boundary_[i].begin(), boundary_[i].end());
    if (std::adjacent_find(boundary_[i].begin(), boundary_[i].end()) != boundary_[i].end()) {
      throw StructuralError("cell '" + c.id + "' lists a boundary cell twice");
    }
    for (CellIndex b : boundary_[i]) coboundary_[b].push_back(i);
  }

  // Closed-cell surrogate: the proper faces of a k-cell have the Euler
  // characteristic of S^(k-1), and are connected for k >= 2.
  for (CellIndex i = 0; i < n; ++i) {
    const int d = cells_[i].dim;
    if (d == 0 || annotated(i)) continue;
    std::vector<CellIndex> faces = closure(i);
    faces.erase(std::find(faces.begin(), faces.end(), i));
    const std::int64_t expected = (d - 1) % 2 == 0 ? 2 : 0;
    if (euler_sum(faces) != expected) {
      throw StructuralError("cell '" + cells_[i].id +
                            "' fails the closed-cell check: boundary Euler characteristic " +
                            std::to_string(euler_sum(faces)) + ", expected " +
                            std::to_string(expected));
    }
    if (d >= 2 && components(faces).size() != 1) {
      throw StructuralError("cell '" + cells_[i].id + "' has a disconnected boundary");
    }
  }
}

std::optional<CellIndex> RegularCellComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<CellIndex> RegularCellComplex::cells_of_dim(int d) const {
  std::vector<CellIndex> out;
  for (CellIndex i = 0; i < cells_.size(); ++i) {
    if (cells_[i].dim == d) out.push_back(i);
  }
  return out;
}

std::vector<CellIndex> RegularCellComplex::facets() const { return cells_of_dim(top_dim_); }

std::vector<CellIndex> RegularCellComplex::closure(CellIndex c) const {
  std::vector<CellIndex> out{c};
  std::vector<CellIndex> stack{c};
  std::set<CellIndex> seen{c};
  while (!stack.empty()) {
    CellIndex x = stack.back();
    stack.pop_back();
    for (CellIndex b : boundary_[x]) {
      if (seen.insert(b).second) {
        out.push_back(b);
        stack.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellIndex> RegularCellComplex::vertices_of(CellIndex c) const {
  std::vector<CellIndex> out;
  for (CellIndex x : closure(c)) {
    if (cells_[x].dim == 0) out.push_back(x);
  }
  return out;
}

RegularCellComplex RegularCellComplex::subcomplex(std::span<const CellIndex> closed_set,
                                                  int top_dim) const {
  std::vector<Cell> cells;
  cells.reserve(closed_set.size());
  for (CellIndex i : closed_set) cells.push_back(cells_[i]);
  return RegularCellComplex(top_dim, std::move(cells));
}

RegularCellComplex RegularCellComplex::boundary_complex(CellIndex c) const {
  std::vector<CellIndex> faces = closure(c);
  faces.erase(std::find(faces.begin(), faces.end(), c));
  return subcomplex(faces, std::max(0, cells_[c].dim - 1));
}

std::vector<std::vector<CellIndex>> RegularCellComplex::components(
    std::span<const CellIndex> closed_set) const {
  std::map<CellIndex, std::size_t> local;
  for (CellIndex c : closed_set) local.emplace(c, local.size());
  DisjointSets sets(local.size());
  for (CellIndex c : closed_set) {
    for (CellIndex b : boundary_[c]) {
      auto it = local.find(b);
      if (it != local.end()) sets.unite(local[c], it->second);
    }
  }
  std::map<std::size_t, std::vector<CellIndex>> groups;
  for (auto [cell, pos] : local) groups[sets.find(pos)].push_back(cell);
  std::vector<std::vector<CellIndex>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t RegularCellComplex::euler_sum(std::span<const CellIndex> set) const {
  std::int64_t sum = 0;
  for (CellIndex c : set) sum += (cells_[c].dim % 2 == 0 ? 1 : -1) * chi(c);
  return sum;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw StructuralError("negative vertex count");
  std::vector<bool> covered(static_cast<std::size_t>(vertex_count), false);
  for (Simplex& f : facets) {
    if (f.empty()) throw StructuralError("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw StructuralError("facet with a repeated vertex");
    }
    if (f.front() < 0 || f.back() >= vertex_count) {
      throw StructuralError("facet vertex out of range");
    }
    for (int v : f) covered[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) facets.push_back({v});
  }
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) {
    throw StructuralError("repeated facet");
  }
  facets_ = std::move(facets);

  std::vector<std::set<Simplex>> by_dim;
  for (const Simplex& f : facets_) {
    if (f.size() > 24) throw StructuralError("facet too large to enumerate");
    const std::uint32_t subsets = 1u << f.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex s;
      for (std::size_t b = 0; b < f.size(); ++b) {
        if (mask & (1u << b)) s.push_back(f[b]);
      }
      if (by_dim.size() < s.size()) by_dim.resize(s.size());
      by_dim[s.size() - 1].insert(std::move(s));
    }
  }
  for (auto& layer : by_dim) faces_.emplace_back(layer.begin(), layer.end());

  // A facet is maximal iff it is not a codimension-one face of a larger face.
  std::vector<std::vector<bool>> covered_face(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d) covered_face[d].assign(faces_[d].size(), false);
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    for (const Simplex& s : faces_[d]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex sub;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) sub.push_back(s[j]);
        }
        const auto& layer = faces_[d - 1];
        auto it = std::lower_bound(layer.begin(), layer.end(), sub);
        covered_face[d - 1][static_cast<std::size_t>(it - layer.begin())] = true;
      }
    }
  }
  for (const Simplex& f : facets_) {
    if (covered_face[f.size() - 1][face_position(f)]) {
      throw StructuralError("facet contained in another facet");
    }
  }
}

SimplicialComplex SimplicialComplex::from_simplices(int vertex_count,
                                                    std::vector<Simplex> simplices) {
  for (Simplex& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::vector<Simplex> maximal;
  for (Simplex& s : simplices) {
    bool covered = false;
    for (const Simplex& m : maximal) {
      if (std::includes(m.begin(), m.end(), s.begin(), s.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(std::move(s));
  }
  return SimplicialComplex(vertex_count, std::move(maximal));
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return static_cast<int>(f.size()) - 1 == dimension();
  });
}

bool SimplicialComplex::contains(const Simplex& sorted_face) const {
  if (sorted_face.empty() || sorted_face.size() > faces_.size()) return false;
  const auto& layer = faces_[sorted_face.size() - 1];
  return std::binary_search(layer.begin(), layer.end(), sorted_face);
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& layer : faces_) total += layer.size();
  return total;
}

std::size_t SimplicialComplex::face_position(const Simplex& sorted_face) const {
  if (sorted_face.empty() || sorted_face.size() > faces_.size()) {
    throw std::out_of_range("not a face");
  }
  const auto& layer = faces_[sorted_face.size() - 1];
  auto it = std::lower_bound(layer.begin(), layer.end(), sorted_face);
  if (it == layer.end() || *it != sorted_face) throw std::out_of_range("not a face");
  return static_cast<std::size_t>(it - layer.begin());
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_));
  if (faces_.size() >= 2) {
    for (const Simplex& e : faces_[1]) {
      adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
      adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

SimplicialComplex SimplicialComplex::link(int vertex) const {
  std::vector<Simplex> pieces;
  std::set<int> support;
  for (const Simplex& f : facets_) {
    if (!std::binary_search(f.begin(), f.end(), vertex)) continue;
    Simplex rest;
    for (int v : f) {
      if (v != vertex) rest.push_back(v);
    }
    if (rest.empty()) continue;
    support.insert(rest.begin(), rest.end());
    pieces.push_back(std::move(rest));
  }
  std::map<int, int> relabel;
  for (int v : support) relabel.emplace(v, static_cast<int>(relabel.size()));
  for (Simplex& s : pieces) {
    for (int& v : s) v = relabel[v];
  }
  return from_simplices(static_cast<int>(relabel.size()), std::move(pieces));
}

SimplicialComplex SimplicialComplex::induced(std::span<const int> vertices) const {
  std::map<int, int> relabel;
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) relabel.emplace(v, static_cast<int>(relabel.size()));
  std::vector<Simplex> pieces;
  for (const Simplex& f : facets_) {
    Simplex s;
    for (int v : f) {
      auto it = relabel.find(v);
      if (it != relabel.end()) s.push_back(it->second);
    }
    if (!s.empty()) pieces.push_back(std::move(s));
  }
  return from_simplices(static_cast<int>(relabel.size()), std::move(pieces));
}

std::vector<ValidationEntry> ValidationReport::failures() const {
  std::vector<ValidationEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [](const ValidationEntry& e) { return !e.passed; });
  return out;
}

FVector f_vector(const RegularCellComplex& complex) {
  FVector out;
  if (complex.empty()) return out;
  const auto n = static_cast<std::size_t>(complex.top_dim()) + 1;
  out.counts.assign(n, 0);
  out.chi_sums.assign(n, 0);
  for (CellIndex i = 0; i < complex.size(); ++i) {
    const auto d = static_cast<std::size_t>(complex.dim(i));
    out.counts[d] += 1;
    out.chi_sums[d] += complex.chi(i);
  }
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector out;
  for (int d = 0; d <= complex.dimension(); ++d) {
    out.counts.push_back(static_cast<std::int64_t>(complex.faces(d).size()));
  }
  out.chi_sums = out.counts;
  return out;
}

std::int64_t euler_characteristic(const RegularCellComplex& complex) {
  const FVector f = f_vector(complex);
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.chi_sums.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f.chi_sums[k];
  return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  const FVector f = f_vector(complex);
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.counts.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f.counts[k];
  return chi;
}

void for_each_facet_intersection(
    const RegularCellComplex& complex, std::size_t max_k,
    const std::function<void(std::span<const CellIndex>, const std::vector<CellIndex>&)>& visit) {
  const std::vector<CellIndex> facets = complex.facets();
  std::vector<std::vector<CellIndex>> closures;
  closures.reserve(facets.size());
  for (CellIndex f : facets) closures.push_back(complex.closure(f));

  // vertex -> positions of the facets containing it
  std::unordered_map<CellIndex, std::vector<std::size_t>> facets_at_vertex;
  for (std::size_t p = 0; p < facets.size(); ++p) {
    for (CellIndex c : closures[p]) {
      if (complex.dim(c) == 0) facets_at_vertex[c].push_back(p);
    }
  }

  std::vector<CellIndex> chosen;
  std::function<void(std::size_t, const std::vector<CellIndex>&)> grow =
      [&](std::size_t last, const std::vector<CellIndex>& current) {
        visit(chosen, current);
        if (chosen.size() >= max_k) return;
        // Any nonempty intersection of closed sets contains a vertex.
        std::set<std::size_t> candidates;
        for (CellIndex c : current) {
          if (complex.dim(c) != 0) continue;
          for (std::size_t p : facets_at_vertex[c]) {
            if (p > last) candidates.insert(p);
          }
        }
        for (std::size_t p : candidates) {
          std::vector<CellIndex> next;
          std::set_intersection(current.begin(), current.end(), closures[p].begin(),
                                closures[p].end(), std::back_inserter(next));
          if (next.empty()) continue;
          chosen.push_back(facets[p]);
          grow(p, next);
          chosen.pop_back();
        }
      };
  if (max_k == 0) return;
  for (std::size_t p = 0; p < facets.size(); ++p) {
    chosen.assign(1, facets[p]);
    grow(p, closures[p]);
  }
}

ValidationReport validate_boundary_pattern(const RegularCellComplex& complex) {
  ValidationReport report;
  const int n = complex.top_dim() + 1;
  for_each_facet_intersection(
      complex, static_cast<std::size_t>(n) + 1,
      [&](std::span<const CellIndex> facets, const std::vector<CellIndex>& meet) {
        const int k = static_cast<int>(facets.size());
        const int want = n - k;
        ValidationEntry entry;
        for (CellIndex f : facets) entry.facets.push_back(complex.id(f));
        entry.condition = std::to_string(k) + "-fold intersection is empty or a " +
                          std::to_string(want) + "-manifold";

        std::set<CellIndex> in_meet(meet.begin(), meet.end());
        std::vector<CellIndex> top;
        int max_dim = -1;
        for (CellIndex c : meet) {
          const bool maximal = std::none_of(
              complex.coboundary(c).begin(), complex.coboundary(c).end(),
              [&](CellIndex up) { return in_meet.count(up) != 0; });
          if (maximal) top.push_back(c);
          max_dim = std::max(max_dim, complex.dim(c));
        }
        if (want < 0) {
          entry.passed = false;
          entry.detail = "expected empty intersection, found cells " + join_ids(complex, top);
        } else if (std::any_of(top.begin(), top.end(),
                               [&](CellIndex c) { return complex.dim(c) != want; })) {
          entry.passed = false;
          entry.detail = "intersection {" + join_ids(complex, top) + "} has dimension " +
                         std::to_string(max_dim) +
                         (max_dim == want ? " but is not pure" : "") + ", expected " +
                         std::to_string(want);
        } else {
          // Manifold surrogate per component: every codimension-one cell of the
          // component sits in at most two of its top cells.
          for (const auto& comp : complex.components(meet)) {
            if (want == 0) continue;
            std::set<CellIndex> in_comp(comp.begin(), comp.end());
            for (CellIndex c : comp) {
              if (complex.dim(c) != want - 1) continue;
              const auto up = complex.coboundary(c);
              const auto count = std::count_if(up.begin(), up.end(), [&](CellIndex u) {
                return in_comp.count(u) != 0;
              });
              if (count > 2) {
                entry.passed = false;
                entry.detail = "cell '" + complex.id(c) + "' lies in " + std::to_string(count) +
                               " top cells of the intersection";
              }
            }
          }
          if (entry.passed) {
            entry.detail = std::to_string(complex.components(meet).size()) + " component(s)";
          }
        }
        report.add(std::move(entry));
      });
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const ValidationEntry& a, const ValidationEntry& b) {
                     return a.facets.size() < b.facets.size();
                   });
  return report;
}

std::optional<CellIndex> simplicity_violation(const RegularCellComplex& complex, int n) {
  if (n != complex.top_dim()) {
    throw StructuralError("simplicity requested for n = " + std::to_string(n) +
                          " on a complex of top dimension " + std::to_string(complex.top_dim()));
  }
  std::vector<int> containing(complex.size(), 0);
  for (CellIndex f : complex.facets()) {
    for (CellIndex c : complex.closure(f)) containing[c] += 1;
  }
  for (CellIndex c = 0; c < complex.size(); ++c) {
    if (containing[c] != n - complex.dim(c) + 1) return c;
  }
  return std::nullopt;
}

bool is_simple(const RegularCellComplex& complex, int n) {
  return !simplicity_violation(complex, n).has_value();
}

}  // namespace hakencx
