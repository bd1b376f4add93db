#pragma once

#include "hakencx/complex.hpp"

#include <cstdint>
#include <vector>

namespace hakencx {

/// Hasse diagram of a face poset as a vertex-coloured undirected graph.
/// Node colours carry the grading (and Euler annotations), so the direction
/// of each covering relation is implied.
struct HasseDiagram {
  std::vector<std::int64_t> colour;
  std::vector<std::vector<std::size_t>> neighbours;

  std::size_t size() const { return colour.size(); }
};

HasseDiagram hasse_diagram(const RegularCellComplex& complex);
/// Nodes are the nonempty faces, coloured by dimension.
HasseDiagram hasse_diagram(const SimplicialComplex& complex);

/// Canonical certificate: equal for two diagrams iff they are isomorphic.
///
/// Individualization-refinement search that visits every leaf of the best
/// branch, so its cost grows with the automorphism group. Meant for small
/// posets (faces of catalog cells); use isomorphic() for large ones.
std::vector<std::int64_t> canonical_form(const HasseDiagram& diagram);
std::vector<std::int64_t> canonical_form(const RegularCellComplex& complex);
std::vector<std::int64_t> canonical_form(const SimplicialComplex& complex);

/// Isomorphism test that follows one path in the first diagram and searches
/// for a matching leaf in the second; cheap on highly symmetric inputs.
bool isomorphic(const HasseDiagram& a, const HasseDiagram& b);
bool isomorphic(const RegularCellComplex& a, const RegularCellComplex& b);
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace hakencx
