// Writes the boundary of the 600-cell as a simplicial complex in the
// {"vertices": m, "facets": [...]} format. Vertices are the 120 unit
// icosians; tetrahedra are the 4-cliques of the edge graph.
#include "hakencx/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

namespace {

using Point = std::array<double, 4>;

std::vector<Point> vertices() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Point> out;
  for (int axis = 0; axis < 4; ++axis) {
    for (double s : {1.0, -1.0}) {
      Point p{};
      p[static_cast<std::size_t>(axis)] = s;
      out.push_back(p);
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    Point p;
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -0.5 : 0.5;
    out.push_back(p);
  }
  // Even permutations of (phi, 1, 1/phi, 0) / 2 with all sign choices.
  const std::array<double, 4> base{phi / 2, 0.5, 1 / (2 * phi), 0};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    if (inversions % 2 != 0) continue;
    for (int mask = 0; mask < 8; ++mask) {
      Point p;
      std::array<double, 3> signs{(mask & 1) ? -1.0 : 1.0, (mask & 2) ? -1.0 : 1.0, (mask & 4) ? -1.0 : 1.0};
      for (int i = 0; i < 4; ++i) {
        const int src = perm[static_cast<std::size_t>(i)];
        p[static_cast<std::size_t>(i)] = src < 3 ? base[static_cast<std::size_t>(src)] * signs[static_cast<std::size_t>(src)] : 0.0;
      }
      out.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

double dist2(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Point> v = vertices();
  const int n = static_cast<int>(v.size());
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double edge2 = 1 / (phi * phi);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          a != b && std::abs(dist2(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]) - edge2) < 1e-9;
    }
  }
  auto e = [&](int a, int b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  std::vector<hakencx::Simplex> facets;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (e(a, b))
        for (int c = b + 1; c < n; ++c)
          if (e(a, c) && e(b, c))
            for (int d = c + 1; d < n; ++d)
              if (e(a, d) && e(b, d) && e(c, d)) facets.push_back({a, b, c, d});
  if (n != 120 || facets.size() != 600) {
    std::cerr << "unexpected counts: " << n << " vertices, " << facets.size() << " tetrahedra\n";
    return 1;
  }
  const hakencx::SimplicialComplex complex(n, std::move(facets));
  const std::string text = hakencx::to_json(complex).dump() + "\n";
  if (argc > 1) {
    std::ofstream(argv[1]) << text;
  } else {
    std::cout << text;
  }
  return 0;
}
