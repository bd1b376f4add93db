#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hakencx {

using CellIndex = std::size_t;

/// One cell of a regular cell complex, addressed by an opaque id.
///
/// `chi` annotates faces of a general boundary pattern that are manifold
/// pieces rather than cells (an annulus, T_g x I, ...). Unannotated cells
/// count with Euler characteristic 1 and must pass the closed-cell check.
struct Cell {
  std::string id;
  int dim = 0;
  std::vector<std::string> boundary_ids;
  std::optional<std::int64_t> chi;
};

/// Face counts f_0..f_n and the per-dimension sums of face Euler
/// characteristics.
struct FVector {
  std::vector<std::int64_t> counts;
  std::vector<std::int64_t> chi_sums;

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Face poset of a regular cell complex, graded by dimension.
///
/// Construction validates the poset: unique ids, boundary entries of
/// dimension exactly dim-1, empty boundary exactly for vertices, and the
/// closed-cell surrogate (connected boundary with the Euler characteristic
/// of a (dim-1)-sphere) for every unannotated cell.
class RegularCellComplex {
 public:
  RegularCellComplex() = default;
  RegularCellComplex(int top_dim, std::vector<Cell> cells);

  int top_dim() const { return top_dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(CellIndex i) const { return cells_[i]; }
  const std::string& id(CellIndex i) const { return cells_[i].id; }
  int dim(CellIndex i) const { return cells_[i].dim; }
  std::int64_t chi(CellIndex i) const { return cells_[i].chi.value_or(1); }
  bool annotated(CellIndex i) const { return cells_[i].chi.has_value(); }

  std::span<const CellIndex> boundary(CellIndex i) const { return boundary_[i]; }
  std::span<const CellIndex> coboundary(CellIndex i) const { return coboundary_[i]; }

  std::optional<CellIndex> find(std::string_view id) const;
  std::vector<CellIndex> cells_of_dim(int d) const;
  /// Cells of dimension top_dim.
  std::vector<CellIndex> facets() const;

  /// All faces of `c` including `c`, sorted by index.
  std::vector<CellIndex> closure(CellIndex c) const;
  std::vector<CellIndex> vertices_of(CellIndex c) const;

  /// The complex formed by a face-closed subset of cells.
  RegularCellComplex subcomplex(std::span<const CellIndex> closed_set, int top_dim) const;
  /// Proper faces of `c` as a complex of top dimension dim(c) - 1.
  RegularCellComplex boundary_complex(CellIndex c) const;

  /// Components of a face-closed subset, as sorted index lists.
  std::vector<std::vector<CellIndex>> components(std::span<const CellIndex> closed_set) const;

  /// Sum of (-1)^dim chi over a set of cells.
  std::int64_t euler_sum(std::span<const CellIndex> set) const;

 private:
  int top_dim_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::vector<CellIndex>> boundary_;
  std::vector<std::vector<CellIndex>> coboundary_;
  std::unordered_map<std::string, CellIndex> index_;
};

/// Sorted vertex list.
using Simplex = std::vector<int>;

/// Simplicial complex on vertices 0..vertex_count-1 given by its facets.
///
/// Vertices that appear in no facet are added as singleton facets, so every
/// vertex is a face. A facet contained in another facet is a structural
/// error; use from_simplices to reduce an arbitrary generating set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int vertex_count, std::vector<Simplex> facets);

  static SimplicialComplex from_simplices(int vertex_count, std::vector<Simplex> simplices);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  bool is_pure() const;

  bool contains(const Simplex& sorted_face) const;
  const std::vector<Simplex>& faces(int dim) const { return faces_.at(static_cast<std::size_t>(dim)); }
  std::size_t face_count() const;
  /// Position of a face within faces(dim); throws std::out_of_range if absent.
  std::size_t face_position(const Simplex& sorted_face) const;

  /// 1-skeleton as sorted neighbour lists.
  std::vector<std::vector<int>> adjacency() const;
  /// Link of a vertex, relabelled onto 0..k-1 in increasing order.
  SimplicialComplex link(int vertex) const;
  /// Induced subcomplex on a vertex subset, relabelled in increasing order.
  SimplicialComplex induced(std::span<const int> vertices) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_;
};

struct ValidationEntry {
  std::vector<std::string> facets;
  std::string condition;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::vector<ValidationEntry> entries;

  void add(ValidationEntry entry) {
    passed = passed && entry.passed;
    entries.push_back(std::move(entry));
  }
  std::vector<ValidationEntry> failures() const;
};

FVector f_vector(const RegularCellComplex& complex);
FVector f_vector(const SimplicialComplex& complex);

/// Sum over cells of (-1)^dim chi(cell).
std::int64_t euler_characteristic(const RegularCellComplex& complex);
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Checks that any k facets (k = 1..n+1, n = top_dim + 1) meet in the empty
/// set or in a pure (n-k)-dimensional subcomplex whose components look like
/// manifolds (every codimension-one cell in at most two top cells). Entries
/// are ordered by the number of facets, then by facet order.
ValidationReport validate_boundary_pattern(const RegularCellComplex& complex);

/// True iff every k-cell lies in exactly n-k+1 facets. Throws
/// StructuralError when n differs from the complex's top dimension.
bool is_simple(const RegularCellComplex& complex, int n);

/// First cell breaking simplicity, if any.
std::optional<CellIndex> simplicity_violation(const RegularCellComplex& complex, int n);

/// Visits every set of at most `max_k` facets (increasing facet order) whose
/// common intersection is nonempty, together with that intersection.
/// Empty intersections are skipped along with all their supersets.
void for_each_facet_intersection(
    const RegularCellComplex& complex, std::size_t max_k,
    const std::function<void(std::span<const CellIndex> facets,
                             const std::vector<CellIndex>& intersection)>& visit);

}  // namespace hakencx
