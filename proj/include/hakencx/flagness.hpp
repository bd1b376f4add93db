#pragma once

#include "hakencx/complex.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hakencx {

/// A vertex set that is not a face although all its proper subsets are.
struct MinimalNonFace {
  Simplex vertices;

  friend bool operator==(const MinimalNonFace&, const MinimalNonFace&) = default;
  friend auto operator<=>(const MinimalNonFace&, const MinimalNonFace&) = default;
};

/// All minimal non-faces with at most `max_size` vertices, ordered by size
/// and then lexicographically. Throws PreconditionViolation if max_size < 2.
std::vector<MinimalNonFace> minimal_non_faces(const SimplicialComplex& complex, int max_size);

/// Default size bound that certifies flagness: dimension + 2.
int flag_certificate_size(const SimplicialComplex& complex);

/// True iff every minimal non-face is an edge.
bool is_flag(const SimplicialComplex& complex);

/// Three pairwise adjacent vertices spanning no 2-face.
bool has_empty_triangle(const SimplicialComplex& complex);

struct ThreeCycle {
  bool found = false;
  std::array<std::string, 3> witness;
};

/// Looks for three distinct vertices pairwise joined by edges. Parallel
/// edges count once. The witness is the lexicographically first triple by
/// cell order.
ThreeCycle has_3_cycle_in_1_skeleton(const RegularCellComplex& complex);

}  // namespace hakencx
