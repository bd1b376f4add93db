#include "hakencx/duality.hpp"

#include "hakencx/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace hakencx {

namespace {

/// Maximal chains of a graded poset given by its covering relation. Each
/// chain is listed from a maximal element down to a minimal one.
std::vector<Simplex> maximal_chains(const std::vector<std::vector<std::size_t>>& down,
                                    const std::vector<bool>& maximal) {
  std::vector<Simplex> chains;
  std::vector<int> chain;
  std::function<void(std::size_t)> walk = [&](std::size_t node) {
    chain.push_back(static_cast<int>(node));
    if (down[node].empty()) {
      chains.push_back(chain);
    } else {
      for (std::size_t below : down[node]) walk(below);
    }
    chain.pop_back();
  };
  for (std::size_t node = 0; node < down.size(); ++node) {
    if (maximal[node]) walk(node);
  }
  return chains;
}

std::size_t component_count(const SimplicialComplex& complex) {
  const auto n = static_cast<std::size_t>(complex.vertex_count());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const Simplex& f : complex.facets()) {
    for (int v : f) parent[root(static_cast<std::size_t>(v))] = root(static_cast<std::size_t>(f[0]));
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) count += root(v) == v ? 1 : 0;
  return count;
}

std::string join(const Simplex& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

Simplex drop_vertex(const Simplex& s, std::size_t position) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != position) out.push_back(s[j]);
  }
  return out;
}

}  // namespace

BarycentricSubdivision barycentric_subdivision(const RegularCellComplex& complex) {
  std::vector<std::vector<std::size_t>> down(complex.size());
  std::vector<bool> maximal(complex.size());
  BarycentricSubdivision out;
  for (CellIndex c = 0; c < complex.size(); ++c) {
    down[c].assign(complex.boundary(c).begin(), complex.boundary(c).end());
    maximal[c] = complex.coboundary(c).empty();
    out.vertex_labels.push_back(complex.id(c));
  }
  out.simplices = SimplicialComplex(static_cast<int>(complex.size()), maximal_chains(down, maximal));
  return out;
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& complex) {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (int d = 0; d <= complex.dimension(); ++d) {
    offset.push_back(total);
    total += complex.faces(d).size();
  }
  std::vector<std::vector<std::size_t>> down(total);
  std::vector<bool> maximal(total, true);
  BarycentricSubdivision out;
  out.vertex_labels.resize(total);
  for (int d = 0; d <= complex.dimension(); ++d) {
    const auto& layer = complex.faces(d);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const std::size_t node = offset[static_cast<std::size_t>(d)] + i;
      out.vertex_labels[node] = "{" + join(layer[i]) + "}";
      if (d == 0) continue;
      for (std::size_t drop = 0; drop < layer[i].size(); ++drop) {
        const std::size_t below = offset[static_cast<std::size_t>(d - 1)] +
                                  complex.face_position(drop_vertex(layer[i], drop));
        down[node].push_back(below);
        maximal[below] = false;
      }
    }
  }
  out.simplices = SimplicialComplex(static_cast<int>(total), maximal_chains(down, maximal));
  return out;
}

SimplicialComplex dual_simplicial(const RegularCellComplex& complex, int n) {
  if (auto bad = simplicity_violation(complex, n)) {
    throw PreconditionViolation("complex is not simple: cell '" + complex.id(*bad) +
                                "' does not lie in exactly " +
                                std::to_string(n - complex.dim(*bad) + 1) + " facets");
  }
  const std::vector<CellIndex> facets = complex.facets();
  std::map<CellIndex, Simplex> around_vertex;
  for (std::size_t p = 0; p < facets.size(); ++p) {
    for (CellIndex v : complex.vertices_of(facets[p])) around_vertex[v].push_back(static_cast<int>(p));
  }
  std::vector<Simplex> simplices;
  simplices.reserve(around_vertex.size());
  for (auto& [vertex, star] : around_vertex) simplices.push_back(std::move(star));
  return SimplicialComplex(static_cast<int>(facets.size()), std::move(simplices));
}

std::string dual_cell_id(const Simplex& sigma) { return "D[" + join(sigma) + "]"; }

RegularCellComplex dual_cell_complex(const SimplicialComplex& complex, int n) {
  if (n < 0 || n > 4) {
    throw UnsupportedDimension("dual cell complexes are built for manifolds of dimension 0..4");
  }
  if (complex.dimension() != n || !complex.is_pure()) {
    throw PreconditionViolation("expected a pure " + std::to_string(n) + "-dimensional complex");
  }
  const std::int64_t sphere_chi = n == 0 ? 0 : ((n - 1) % 2 == 0 ? 2 : 0);
  const std::size_t sphere_components = n == 0 ? 0 : (n == 1 ? 2 : 1);
  for (int v = 0; v < complex.vertex_count(); ++v) {
    const SimplicialComplex link = complex.link(v);
    if (euler_characteristic(link) != sphere_chi || component_count(link) != sphere_components) {
      throw PreconditionViolation("link of vertex " + std::to_string(v) + " is not a " +
                                  std::to_string(n - 1) + "-sphere surrogate");
    }
  }

  std::vector<std::vector<std::vector<std::string>>> up(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) up[static_cast<std::size_t>(d)].resize(complex.faces(d).size());
  for (int d = 1; d <= n; ++d) {
    for (const Simplex& tau : complex.faces(d)) {
      for (std::size_t drop = 0; drop < tau.size(); ++drop) {
        const std::size_t pos = complex.face_position(drop_vertex(tau, drop));
        up[static_cast<std::size_t>(d - 1)][pos].push_back(dual_cell_id(tau));
      }
    }
  }
  std::vector<Cell> cells;
  cells.reserve(complex.face_count());
  for (int d = n; d >= 0; --d) {
    const auto& layer = complex.faces(d);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      cells.push_back(Cell{dual_cell_id(layer[i]), n - d,
                           std::move(up[static_cast<std::size_t>(d)][i]), std::nullopt});
    }
  }
  try {
    return RegularCellComplex(n, std::move(cells));
  } catch (const StructuralError& e) {
    throw PreconditionViolation(std::string("dual cones do not form a regular complex: ") + e.what());
  }
}

DualCone dual_cone(const SimplicialComplex& complex, const Simplex& sigma) {
  if (!complex.contains(sigma)) throw PreconditionViolation("not a face: {" + join(sigma) + "}");
  DualCone cone{sigma, {}};
  std::vector<Simplex> chain{sigma};
  std::function<void()> extend = [&]() {
    cone.cone_simplices.push_back(chain);
    const Simplex top = chain.back();
    if (static_cast<int>(top.size()) > complex.dimension()) return;
    for (int d = static_cast<int>(top.size()); d <= complex.dimension(); ++d) {
      for (const Simplex& bigger : complex.faces(d)) {
        if (!std::includes(bigger.begin(), bigger.end(), top.begin(), top.end())) continue;
        chain.push_back(bigger);
        extend();
        chain.pop_back();
      }
    }
  };
  extend();
  return cone;
}

}  // namespace hakencx
