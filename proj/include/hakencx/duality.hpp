#pragma once

#include "hakencx/complex.hpp"

#include <string>
#include <vector>

namespace hakencx {

/// First barycentric subdivision: one vertex per cell (or face) of the
/// source, one simplex per strictly increasing chain of the face poset.
struct BarycentricSubdivision {
  /// Label of the source cell behind each subdivision vertex.
  std::vector<std::string> vertex_labels;
  SimplicialComplex simplices;
};

/// The dual cone D(sigma): chains of the face poset starting at sigma.
struct DualCone {
  Simplex base_simplex;
  std::vector<std::vector<Simplex>> cone_simplices;
};

BarycentricSubdivision barycentric_subdivision(const RegularCellComplex& complex);
BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& complex);

/// Simplicial dual of a simple cell structure on an n-manifold: vertices are
/// the facets of the input (in facet order), and each input vertex x spans
/// the simplex of the n+1 facets containing x.
SimplicialComplex dual_simplicial(const RegularCellComplex& complex, int n);

/// Dual cell structure of a simplicial n-manifold (n <= 4): the k-cells are
/// the dual cones of the (n-k)-simplices, with incidence reversed. The
/// manifold check is a vertex-link surrogate (Euler characteristic and
/// component count of S^(n-1)).
RegularCellComplex dual_cell_complex(const SimplicialComplex& complex, int n);

DualCone dual_cone(const SimplicialComplex& complex, const Simplex& sigma);

/// Cell id used by dual_cell_complex for the dual of `sigma`.
std::string dual_cell_id(const Simplex& sigma);

}  // namespace hakencx
