#pragma once

#include "hakencx/complex.hpp"
#include "hakencx/summary.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hakencx {

/// Boundary complex of the n-cube, 1 <= n <= 4. Cell ids are words over
/// {0, 1, *}, one letter per coordinate; the number of stars is the
/// dimension.
RegularCellComplex hypercube_boundary(int n);

/// tetrahedron, cube, octahedron, dodecahedron or icosahedron.
RegularCellComplex platonic(const std::string& name);

RegularCellComplex pgon(int p);

/// The face poset of a simplicial complex as a regular cell complex, with
/// ids "{0,1,2}".
RegularCellComplex cell_complex_of(const SimplicialComplex& complex);

/// Renames cells to v0.., e0.., f0.., c0.. by dimension, keeping their order.
RegularCellComplex relabel_by_dimension(const RegularCellComplex& complex);

/// Boundaries of the n-simplex and the n-dimensional cross-polytope as
/// simplicial complexes.
SimplicialComplex simplex_boundary(int n);
SimplicialComplex cross_polytope_boundary(int n);
SimplicialComplex icosahedron_simplicial();

/// The 600-cell boundary read from shipped incidence data; its dual is the
/// 120-cell. Throws CatalogError when the data is missing or the build
/// excludes it.
SimplicialComplex cell600_simplicial();
RegularCellComplex cell120();

/// True when the build includes the 120-cell entries.
bool cell120_enabled();

struct ProductParams {
  int g = 1;
  /// b_1 of the 3-manifold factor where it matters; defaults to g.
  std::optional<int> b1_G;
};

/// G_closed_x_S1, G_closed_x_I, G_Tg_boundary_x_S1, G_Tg_boundary_x_I,
/// Tg_x_I2, Tg1_2_x_I2 (T_g x I^2 cut open along S^1 x I^2 into a twice
/// punctured genus g-1 surface times I^2), I3_x_S1, I4_cell, cell120_cell.
ManifoldSummary product_summary(const std::string& kind, const ProductParams& params = {});

/// closed_haken_3mfld, torus_boundary_3mfld, haken_3cell_cube,
/// haken_3cell_dodecahedron, S1_x_I2, Tg_x_I (T_g x I, separating
/// T_g x I^2 into two copies of itself).
CutData cut_data(const std::string& kind, const ProductParams& params = {});

enum class EntryKind { Complex, Simplicial, Summary, Cut, Hierarchy };

std::string to_string(EntryKind kind);

struct CatalogInfo {
  std::string name;
  EntryKind kind = EntryKind::Complex;
  std::string description;
  /// For boundary complexes of candidate n-cells: n.
  int cell_dim = 0;
  /// For candidate cells: whether the cell is expected to be Haken.
  std::optional<bool> haken;
};

using CatalogData = std::variant<RegularCellComplex, SimplicialComplex, ManifoldSummary, CutData, Hierarchy>;

struct CatalogEntry {
  CatalogInfo info;
  CatalogData data;
};

/// All entries, sorted by name.
std::vector<CatalogInfo> catalog_list();
/// Throws CatalogError for unknown names.
CatalogInfo catalog_info(const std::string& name);
CatalogEntry catalog_entry(const std::string& name);

RegularCellComplex catalog_complex(const std::string& name);
SimplicialComplex catalog_simplicial(const std::string& name);
ManifoldSummary catalog_summary(const std::string& name);
CutData catalog_cut(const std::string& name);
Hierarchy catalog_hierarchy(const std::string& name);

}  // namespace hakencx
