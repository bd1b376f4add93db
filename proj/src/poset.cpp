#include "hakencx/poset.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace hakencx {

namespace {

using Colouring = std::vector<int>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return h ^ x;
}

int count_classes(const Colouring& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

/// Initial colouring by rank of the node colour; the trace records the
/// colour values with their multiplicities.
Colouring initial_colouring(const HasseDiagram& g, std::uint64_t& trace) {
  std::vector<std::int64_t> values = g.colour;
  std::sort(values.begin(), values.end());
  trace = mix(0, values.size());
  for (std::int64_t v : values) trace = mix(trace, static_cast<std::uint64_t>(v));
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Colouring colour(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    colour[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), g.colour[i]) -
                                 values.begin());
  }
  return colour;
}

/// Colour refinement to the coarsest equitable partition finer than
/// `colour`. New colours are ranks of (colour, sorted neighbour colours), so
/// the result is an isomorphism invariant; the returned trace hashes every
/// round's signatures.
std::uint64_t refine(const HasseDiagram& g, Colouring& colour) {
  const std::size_t n = g.size();
  std::uint64_t trace = 0x51ed270b27d1a3c5ULL;
  int classes = count_classes(colour);
  std::vector<std::vector<int>> signature(n);
  std::vector<std::size_t> order(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(colour[v]);
      for (std::size_t u : g.neighbours[v]) sig.push_back(colour[u]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return signature[a] < signature[b]; });
    Colouring next(n);
    int rank = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || signature[order[i]] != signature[order[i - 1]]) {
        ++rank;
        trace = mix(trace, 0xfeedULL);
        for (int c : signature[order[i]]) trace = mix(trace, static_cast<std::uint64_t>(c));
      }
      trace = mix(trace, static_cast<std::uint64_t>(rank));
      next[order[i]] = rank;
    }
    colour = std::move(next);
    if (rank + 1 == classes) break;
    classes = rank + 1;
  }
  return trace;
}

Colouring individualize(const Colouring& colour, std::size_t v) {
  Colouring out(colour);
  const int c = colour[v];
  for (std::size_t u = 0; u < colour.size(); ++u) {
    if (u == v) continue;
    if (colour[u] >= c) out[u] = colour[u] + 1;
  }
  return out;
}

/// Members of the smallest non-singleton class (lowest colour on ties), or
/// empty when the colouring is discrete.
std::vector<std::size_t> target_cell(const Colouring& colour) {
  const int classes = count_classes(colour);
  std::vector<std::size_t> size(static_cast<std::size_t>(classes), 0);
  for (int c : colour) size[static_cast<std::size_t>(c)] += 1;
  std::optional<int> best;
  for (int c = 0; c < classes; ++c) {
    const auto s = size[static_cast<std::size_t>(c)];
    if (s > 1 && (!best || s < size[static_cast<std::size_t>(*best)])) best = c;
  }
  std::vector<std::size_t> members;
  if (!best) return members;
  for (std::size_t u = 0; u < colour.size(); ++u) {
    if (colour[u] == *best) members.push_back(u);
  }
  return members;
}

std::vector<std::int64_t> leaf_certificate(const HasseDiagram& g, const Colouring& label) {
  const std::size_t n = g.size();
  std::vector<std::size_t> node_at(n);
  for (std::size_t v = 0; v < n; ++v) node_at[static_cast<std::size_t>(label[v])] = v;
  std::vector<std::int64_t> cert;
  cert.push_back(static_cast<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) cert.push_back(g.colour[node_at[i]]);
  std::vector<std::int64_t> row;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    for (std::size_t u : g.neighbours[node_at[i]]) row.push_back(label[u]);
    std::sort(row.begin(), row.end());
    cert.push_back(static_cast<std::int64_t>(row.size()));
    cert.insert(cert.end(), row.begin(), row.end());
  }
  return cert;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const HasseDiagram& g) : g_(g) {}

  std::vector<std::int64_t> run() {
    std::uint64_t init_trace = 0;
    Colouring colour = initial_colouring(g_, init_trace);
    std::vector<std::uint64_t> path{mix(init_trace, refine(g_, colour))};
    descend(colour, path);
    return best_cert_;
  }

 private:
  void descend(const Colouring& colour, std::vector<std::uint64_t>& path) {
    if (have_) {
      const std::size_t len = std::min(path.size(), best_path_.size());
      if (std::lexicographical_compare(best_path_.begin(), best_path_.begin() + len, path.begin(),
                                       path.begin() + len)) {
        return;
      }
    }
    const std::vector<std::size_t> cell = target_cell(colour);
    if (cell.empty()) {
      std::vector<std::int64_t> cert = leaf_certificate(g_, colour);
      if (!have_ || path < best_path_ || (path == best_path_ && cert < best_cert_)) {
        have_ = true;
        best_path_ = path;
        best_cert_ = std::move(cert);
      }
      return;
    }
    for (std::size_t v : cell) {
      Colouring next = individualize(colour, v);
      path.push_back(refine(g_, next));
      descend(next, path);
      path.pop_back();
    }
  }

  const HasseDiagram& g_;
  bool have_ = false;
  std::vector<std::uint64_t> best_path_;
  std::vector<std::int64_t> best_cert_;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const HasseDiagram& a, const HasseDiagram& b) : a_(a), b_(b) {}

  bool run() {
    std::uint64_t ta = 0;
    std::uint64_t tb = 0;
    Colouring ca = initial_colouring(a_, ta);
    Colouring cb = initial_colouring(b_, tb);
    ta = mix(ta, refine(a_, ca));
    tb = mix(tb, refine(b_, cb));
    if (ta != tb) return false;
    // Fixed path through the first diagram.
    path_.push_back(ta);
    while (true) {
      const auto cell = target_cell(ca);
      if (cell.empty()) break;
      cell_sizes_.push_back(cell.size());
      ca = individualize(ca, cell.front());
      path_.push_back(refine(a_, ca));
    }
    target_ = leaf_certificate(a_, ca);
    return match(cb, 0);
  }

 private:
  bool match(const Colouring& colour, std::size_t depth) {
    const auto cell = target_cell(colour);
    if (depth + 1 == path_.size()) {
      return cell.empty() && leaf_certificate(b_, colour) == target_;
    }
    if (cell.size() != cell_sizes_[depth]) return false;
    for (std::size_t v : cell) {
      Colouring next = individualize(colour, v);
      if (refine(b_, next) != path_[depth + 1]) continue;
      if (match(next, depth + 1)) return true;
    }
    return false;
  }

  const HasseDiagram& a_;
  const HasseDiagram& b_;
  std::vector<std::uint64_t> path_;
  std::vector<std::size_t> cell_sizes_;
  std::vector<std::int64_t> target_;
};

std::size_t edge_count(const HasseDiagram& g) {
  std::size_t total = 0;
  for (const auto& row : g.neighbours) total += row.size();
  return total;
}

}  // namespace

HasseDiagram hasse_diagram(const RegularCellComplex& complex) {
  HasseDiagram g;
  g.colour.resize(complex.size());
  g.neighbours.resize(complex.size());
  for (CellIndex c = 0; c < complex.size(); ++c) {
    g.colour[c] = (static_cast<std::int64_t>(complex.dim(c)) << 32) + complex.chi(c);
    for (CellIndex b : complex.boundary(c)) {
      g.neighbours[c].push_back(b);
      g.neighbours[b].push_back(c);
    }
  }
  return g;
}

HasseDiagram hasse_diagram(const SimplicialComplex& complex) {
  HasseDiagram g;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (int d = 0; d <= complex.dimension(); ++d) {
    offset.push_back(total);
    total += complex.faces(d).size();
  }
  g.colour.resize(total);
  g.neighbours.resize(total);
  for (int d = 0; d <= complex.dimension(); ++d) {
    const auto& layer = complex.faces(d);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const std::size_t node = offset[static_cast<std::size_t>(d)] + i;
      g.colour[node] = d;
      if (d == 0) continue;
      const Simplex& s = layer[i];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex sub;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) sub.push_back(s[j]);
        }
        const std::size_t below = offset[static_cast<std::size_t>(d - 1)] + complex.face_position(sub);
        g.neighbours[node].push_back(below);
        g.neighbours[below].push_back(node);
      }
    }
  }
  return g;
}

std::vector<std::int64_t> canonical_form(const HasseDiagram& diagram) {
  return CanonicalSearch(diagram).run();
}

std::vector<std::int64_t> canonical_form(const RegularCellComplex& complex) {
  std::vector<std::int64_t> cert = canonical_form(hasse_diagram(complex));
  cert.insert(cert.begin(), complex.top_dim());
  return cert;
}

std::vector<std::int64_t> canonical_form(const SimplicialComplex& complex) {
  return canonical_form(hasse_diagram(complex));
}

bool isomorphic(const HasseDiagram& a, const HasseDiagram& b) {
  if (a.size() != b.size() || edge_count(a) != edge_count(b)) return false;
  return IsomorphismSearch(a, b).run();
}

bool isomorphic(const RegularCellComplex& a, const RegularCellComplex& b) {
  return a.top_dim() == b.top_dim() && isomorphic(hasse_diagram(a), hasse_diagram(b));
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return isomorphic(hasse_diagram(a), hasse_diagram(b));
}

}  // namespace hakencx
