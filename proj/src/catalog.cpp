#include "hakencx/catalog.hpp"

#include "hakencx/duality.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>

namespace hakencx {

namespace {

std::string simplex_id(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string data_dir() {
  if (const char* env = std::getenv("HAKENCX_CATALOG_DIR"); env && *env) return env;
#ifdef HAKENCX_DATA_DIR
  return HAKENCX_DATA_DIR;
#else
  return "data";
#endif
}

ManifoldSummary make_summary(std::string label, std::int64_t chi, std::array<std::int64_t, 4> f,
                        std::array<std::int64_t, 4> chiF, std::int64_t b0, std::int64_t b1) {
  ManifoldSummary::Fields s;
  s.label = std::move(label);
  s.chi_total = chi;
  s.f = f;
  s.chiF = chiF;
  s.b0_boundary = b0;
  s.b1_boundary = b1;
  return ManifoldSummary(std::move(s));
}

CutData make_cut(std::string label, std::array<std::int64_t, 3> f, std::array<std::int64_t, 3> chiF,
            std::int64_t chi, std::int64_t b0, std::optional<bool> separating = std::nullopt) {
  CutData::Fields g;
  g.label = std::move(label);
  g.f0_G = f[0];
  g.f1_G = f[1];
  g.f2_G = f[2];
  g.chiF_G = chiF;
  g.chi_G = chi;
  g.chi_boundary_G = chiF[0] - chiF[1] + chiF[2];
  g.b0_boundary_G = b0;
  g.separating_hint = separating;
  g.haken = 3 * f[0] == 2 * chiF[1];
  return CutData(std::move(g));
}

void require_genus(const ProductParams& p) {
  if (p.g < 1) throw CatalogError("genus must be at least 1");
}

}  // namespace

RegularCellComplex hypercube_boundary(int n) {
  if (n < 1 || n > 4) throw CatalogError("hypercube dimension must be 1..4");
  std::vector<Cell> cells;
  // Words over {0,1,*} with at least one fixed letter, ordered by dimension.
  std::vector<std::string> words{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      for (char c : {'0', '1', '*'}) next.push_back(w + c);
    }
    words = std::move(next);
  }
  for (int d = 0; d < n; ++d) {
    for (const auto& w : words) {
      if (std::count(w.begin(), w.end(), '*') != d) continue;
      Cell cell{w, d, {}, std::nullopt};
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '*') continue;
        for (char c : {'0', '1'}) {
          std::string b = w;
          b[i] = c;
          cell.boundary_ids.push_back(b);
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return RegularCellComplex(n - 1, std::move(cells));
}

RegularCellComplex pgon(int p) {
  if (p < 3) throw CatalogError("a p-gon needs p >= 3");
  std::vector<Cell> cells;
  for (int v = 0; v < p; ++v) cells.push_back({"v" + std::to_string(v), 0, {}, std::nullopt});
  for (int e = 0; e < p; ++e) {
    cells.push_back({"e" + std::to_string(e), 1,
                     {"v" + std::to_string(e), "v" + std::to_string((e + 1) % p)}, std::nullopt});
  }
  return RegularCellComplex(1, std::move(cells));
}

RegularCellComplex cell_complex_of(const SimplicialComplex& complex) {
  std::vector<Cell> cells;
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const Simplex& s : complex.faces(d)) {
      Cell cell{simplex_id(s), d, {}, std::nullopt};
      if (d > 0) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex sub;
          for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != drop) sub.push_back(s[j]);
          }
          cell.boundary_ids.push_back(simplex_id(sub));
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return RegularCellComplex(std::max(0, complex.dimension()), std::move(cells));
}

RegularCellComplex relabel_by_dimension(const RegularCellComplex& complex) {
  static const char prefix[] = {'v', 'e', 'f', 'c', 'h'};
  std::vector<int> counter(5, 0);
  std::vector<std::string> name(complex.size());
  for (CellIndex c = 0; c < complex.size(); ++c) {
    const int d = complex.dim(c);
    name[c] = std::string(1, d < 5 ? prefix[d] : 'x') + std::to_string(counter[static_cast<std::size_t>(std::min(d, 4))]++);
  }
  std::vector<Cell> cells;
  for (CellIndex c = 0; c < complex.size(); ++c) {
    Cell cell{name[c], complex.dim(c), {}, complex.cell(c).chi};
    for (CellIndex b : complex.boundary(c)) cell.boundary_ids.push_back(name[b]);
    cells.push_back(std::move(cell));
  }
  return RegularCellComplex(complex.top_dim(), std::move(cells));
}

SimplicialComplex simplex_boundary(int n) {
  if (n < 1) throw CatalogError("simplex dimension must be >= 1");
  std::vector<Simplex> facets;
  for (int drop = 0; drop <= n; ++drop) {
    Simplex s;
    for (int v = 0; v <= n; ++v) {
      if (v != drop) s.push_back(v);
    }
    facets.push_back(std::move(s));
  }
  return SimplicialComplex(n + 1, std::move(facets));
}

SimplicialComplex cross_polytope_boundary(int n) {
  if (n < 1) throw CatalogError("cross-polytope dimension must be >= 1");
  // Vertex 2i is +e_i, 2i+1 is -e_i; a facet picks one sign per axis.
  std::vector<Simplex> facets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Simplex s;
    for (int i = 0; i < n; ++i) s.push_back(2 * i + ((mask >> i) & 1));
    facets.push_back(std::move(s));
  }
  return SimplicialComplex(2 * n, std::move(facets));
}

SimplicialComplex icosahedron_simplicial() {
  // 0 = north pole, 1..5 upper ring, 6..10 lower ring, 11 = south pole;
  // lower vertex l_i sits between upper u_i and u_{i+1}.
  std::vector<Simplex> facets;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, u1 = 1 + (i + 1) % 5;
    const int l = 6 + i, l1 = 6 + (i + 1) % 5;
    facets.push_back({0, u, u1});
    facets.push_back({u, u1, l});
    facets.push_back({l, l1, u1});
    facets.push_back({l, l1, 11});
  }
  for (Simplex& f : facets) std::sort(f.begin(), f.end());
  return SimplicialComplex(12, std::move(facets));
}

RegularCellComplex platonic(const std::string& name) {
  if (name == "tetrahedron") return relabel_by_dimension(cell_complex_of(simplex_boundary(3)));
  if (name == "cube") return hypercube_boundary(3);
  if (name == "octahedron") return relabel_by_dimension(cell_complex_of(cross_polytope_boundary(3)));
  if (name == "icosahedron") return relabel_by_dimension(cell_complex_of(icosahedron_simplicial()));
  if (name == "dodecahedron") return relabel_by_dimension(dual_cell_complex(icosahedron_simplicial(), 2));
  throw CatalogError("unknown platonic solid '" + name + "'");
}

bool cell120_enabled() {
#ifdef HAKENCX_WITH_CELL120
  return true;
#else
  return false;
#endif
}

SimplicialComplex cell600_simplicial() {
  if (!cell120_enabled()) throw CatalogError("this build excludes the 120-cell");
  static std::once_flag once;
  static SimplicialComplex complex;
  static std::string failure;
  std::call_once(once, [] {
    try {
      complex = simplicial_from_json(read_json_file(data_dir() + "/cell600.json"));
    } catch (const Error& e) {
      failure = e.what();
    }
  });
  if (!failure.empty()) throw CatalogError("cannot load the 600-cell: " + failure);
  return complex;
}

RegularCellComplex cell120() {
  static std::once_flag once;
  static RegularCellComplex complex;
  const SimplicialComplex dual = cell600_simplicial();
  std::call_once(once, [&] { complex = relabel_by_dimension(dual_cell_complex(dual, 3)); });
  return complex;
}

ManifoldSummary product_summary(const std::string& kind, const ProductParams& p) {
  const std::int64_t g = p.g;
  if (kind == "G_closed_x_S1") return make_summary("G3xS1 (closed G)", 0, {}, {}, 0, 0);
  if (kind == "G_closed_x_I") {
    const int b1 = p.b1_G.value_or(p.g);
    if (b1 < 0) throw CatalogError("b1 must be >= 0");
    return make_summary("G3xI (closed G, b1=" + std::to_string(b1) + ")", 0, {0, 0, 0, 2}, {}, 2, 2 * b1);
  }
  require_genus(p);
  const std::string gs = "g=" + std::to_string(g);
  if (kind == "G_Tg_boundary_x_S1") {
    return make_summary("G3xS1 (dG=T_g, " + gs + ")", 0, {0, 0, 0, 1}, {}, 1, 2 * g + 1);
  }
  if (kind == "G_Tg_boundary_x_I") {
    const int b1 = p.b1_G.value_or(p.g);
    if (b1 < p.g) throw CatalogError("b1(G) >= g for a 3-manifold with boundary T_g");
    return make_summary("G3xI (dG=T_g, " + gs + ")", 1 - g, {0, 0, 2, 3}, {0, 0, 4 * (1 - g), 4 * (1 - g)}, 1,
                   2 * b1 - g);
  }
  if (kind == "Tg_x_I2") {
    return make_summary("T_g x I^2 (" + gs + ")", 2 - 2 * g, {0, 0, 4, 4}, {0, 0, 4 * (2 - 2 * g), 4 * (2 - 2 * g)},
                   1, 2 * g + 1);
  }
  if (kind == "Tg1_2_x_I2") {
    return make_summary("T_{g-1,2} x I^2 (" + gs + ")", 2 - 2 * g, {0, 8, 12, 6},
                   {0, 0, 4 * (2 - 2 * g), 4 * (2 - 2 * g)}, 1, 2 * g - 1);
  }
  if (kind == "I3_x_S1") return make_summary("I^3 x S^1", 0, {0, 8, 12, 6}, {}, 1, 1);
  if (kind == "I4_cell") return make_summary("I^4", 1, {16, 32, 24, 8}, {16, 32, 24, 8}, 1, 0);
  if (kind == "cell120_cell") return make_summary("120-cell", 1, {600, 1200, 720, 120}, {600, 1200, 720, 120}, 1, 0);
  throw CatalogError("unknown product summary '" + kind + "'");
}

CutData cut_data(const std::string& kind, const ProductParams& p) {
  const std::int64_t g = p.g;
  if (kind == "closed_haken_3mfld") return make_cut("closed Haken G3", {}, {}, 0, 0);
  if (kind == "haken_3cell_cube") return make_cut("cube", {8, 12, 6}, {8, 12, 6}, 1, 1);
  if (kind == "haken_3cell_dodecahedron") return make_cut("dodecahedron", {20, 30, 12}, {20, 30, 12}, 1, 1);
  if (kind == "S1_x_I2") return make_cut("S^1 x I^2", {0, 4, 4}, {0, 0, 0}, 0, 1, false);
  require_genus(p);
  const std::string gs = "g=" + std::to_string(g);
  if (kind == "torus_boundary_3mfld") return make_cut("G3 with dG=T_g (" + gs + ")", {0, 0, 1}, {0, 0, 2 - 2 * g}, 1 - g, 1);
  if (kind == "Tg_x_I") return make_cut("T_g x I (" + gs + ")", {0, 0, 2}, {0, 0, 2 * (2 - 2 * g)}, 2 - 2 * g, 2, true);
  throw CatalogError("unknown cut kind '" + kind + "'");
}

std::string to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Complex:
      return "complex";
    case EntryKind::Simplicial:
      return "simplicial";
    case EntryKind::Summary:
      return "summary";
    case EntryKind::Cut:
      return "cut";
    case EntryKind::Hierarchy:
      return "hierarchy";
  }
  return "?";
}

namespace {

struct Registration {
  CatalogInfo info;
  std::function<CatalogData()> build;
};

Hierarchy chain(std::string label, std::vector<HierarchyStage> stages, std::vector<ManifoldSummary> cells,
                std::optional<ManifoldSummary> result) {
  return Hierarchy{std::move(label), std::move(stages), std::move(cells), std::move(result)};
}

std::map<std::string, Registration> build_registry() {
  std::map<std::string, Registration> reg;
  auto add = [&](CatalogInfo info, std::function<CatalogData()> build) {
    const std::string name = info.name;
    reg.emplace(name, Registration{std::move(info), std::move(build)});
  };
  using K = EntryKind;

  for (int p : {3, 4, 5, 6}) {
    add({"pgon" + std::to_string(p), K::Complex, std::to_string(p) + "-gon boundary", 2, p >= 4},
        [p] { return pgon(p); });
  }
  for (int n = 1; n <= 4; ++n) {
    add({"I" + std::to_string(n), K::Complex, "boundary complex of the " + std::to_string(n) + "-cube", n, true},
        [n] { return hypercube_boundary(n); });
  }
  for (const char* solid : {"tetrahedron", "octahedron", "icosahedron"}) {
    add({solid, K::Complex, std::string(solid) + " boundary (triangular faces)", 3, false},
        [s = std::string(solid)] { return platonic(s); });
  }
  add({"cube", K::Complex, "cube boundary", 3, true}, [] { return platonic("cube"); });
  add({"dodecahedron", K::Complex, "dodecahedron boundary", 3, true}, [] { return platonic("dodecahedron"); });

  add({"simplex2_full", K::Simplicial, "the full 2-simplex", 0, std::nullopt},
      [] { return SimplicialComplex(3, {{0, 1, 2}}); });
  add({"simplex3", K::Simplicial, "boundary of the 3-simplex", 0, std::nullopt}, [] { return simplex_boundary(3); });
  add({"simplex4", K::Simplicial, "boundary of the 4-simplex", 0, std::nullopt}, [] { return simplex_boundary(4); });
  add({"cross3", K::Simplicial, "octahedron boundary", 0, std::nullopt}, [] { return cross_polytope_boundary(3); });
  add({"cross4", K::Simplicial, "boundary of the 4-dimensional cross-polytope", 0, std::nullopt},
      [] { return cross_polytope_boundary(4); });
  add({"icosahedron_s", K::Simplicial, "icosahedron boundary", 0, std::nullopt}, [] { return icosahedron_simplicial(); });
  if (cell120_enabled()) {
    add({"cell120", K::Complex, "boundary complex of the 120-cell (dodecahedral facets)", 4, true},
        [] { return cell120(); });
    add({"cell600", K::Simplicial, "boundary of the 600-cell", 0, std::nullopt}, [] { return cell600_simplicial(); });
  }

  auto summary_entry = [&](const std::string& name, const std::string& kind, ProductParams p) {
    add({name, K::Summary, product_summary(kind, p).label(), 0, std::nullopt},
        [kind, p] { return product_summary(kind, p); });
  };
  auto cut_entry = [&](const std::string& name, const std::string& kind, ProductParams p) {
    add({name, K::Cut, cut_data(kind, p).label(), 0, std::nullopt}, [kind, p] { return cut_data(kind, p); });
  };
  summary_entry("G_closed_x_S1", "G_closed_x_S1", {});
  for (int b : {0, 1, 2}) summary_entry("G_closed_x_I.b" + std::to_string(b), "G_closed_x_I", {1, b});
  summary_entry("I3_x_S1", "I3_x_S1", {});
  summary_entry("I4_cell", "I4_cell", {});
  summary_entry("cell120_cell", "cell120_cell", {});
  cut_entry("closed_haken_3mfld", "closed_haken_3mfld", {});
  cut_entry("haken_3cell_cube", "haken_3cell_cube", {});
  cut_entry("haken_3cell_dodecahedron", "haken_3cell_dodecahedron", {});
  cut_entry("S1_x_I2", "S1_x_I2", {});
  for (int g = 1; g <= 3; ++g) {
    const std::string gs = ".g" + std::to_string(g);
    const ProductParams p{g, std::nullopt};
    for (const char* kind : {"G_Tg_boundary_x_S1", "G_Tg_boundary_x_I", "Tg_x_I2", "Tg1_2_x_I2"}) {
      summary_entry(kind + gs, kind, p);
    }
    cut_entry("torus_boundary_3mfld" + gs, "torus_boundary_3mfld", p);
    cut_entry("Tg_x_I" + gs, "Tg_x_I", p);

    add({"chain.G_Tg_boundary_x_S1" + gs, K::Hierarchy, "G3xS1 with dG=T_g cut along G3 x pt", 0, std::nullopt},
        [p] {
          return chain("G3xS1, dG=T_g", {{product_summary("G_Tg_boundary_x_S1", p), cut_data("torus_boundary_3mfld", p)}},
                       {}, product_summary("G_Tg_boundary_x_I", p));
        });
    add({"chain.Tg_x_I2" + gs, K::Hierarchy, "T_g x I^2 cut along T_g x I into two copies", 0, std::nullopt},
        [p] {
          const ManifoldSummary x = product_summary("Tg_x_I2", p);
          return chain("T_g x I^2", {{x, cut_data("Tg_x_I", p)}}, {}, disjoint_union({x, x}, "2 (T_g x I^2)"));
        });
    add({"chain.Tg_x_I2_cut_S1xI2" + gs, K::Hierarchy, "T_g x I^2 cut along S^1 x I^2", 0, std::nullopt},
        [p] {
          return chain("T_g x I^2 | S^1 x I^2", {{product_summary("Tg_x_I2", p), cut_data("S1_x_I2", p)}}, {},
                       product_summary("Tg1_2_x_I2", p));
        });
  }
  add({"chain.G_closed_x_S1", K::Hierarchy, "closed G3 x S^1 cut along G3 x pt", 0, std::nullopt}, [] {
    return chain("G3xS1 (closed G)", {{product_summary("G_closed_x_S1"), cut_data("closed_haken_3mfld")}}, {},
                 product_summary("G_closed_x_I", {1, 1}));
  });
  add({"chain.I3_x_S1", K::Hierarchy, "I^3 x S^1 cut along I^3 x pt into I^4", 0, std::nullopt}, [] {
    return chain("I^3 x S^1", {{product_summary("I3_x_S1"), cut_data("haken_3cell_cube")}},
                 {product_summary("I4_cell")}, std::nullopt);
  });
  add({"chain.I4", K::Hierarchy, "the 4-cube as a terminal cell", 0, std::nullopt},
      [] { return chain("I^4", {}, {product_summary("I4_cell")}, std::nullopt); });
  add({"chain.cell120", K::Hierarchy, "the 120-cell as a terminal cell", 0, std::nullopt},
      [] { return chain("120-cell", {}, {product_summary("cell120_cell")}, std::nullopt); });
  return reg;
}

const std::map<std::string, Registration>& registry() {
  static const std::map<std::string, Registration> reg = build_registry();
  return reg;
}

const Registration& lookup(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw CatalogError("unknown catalog entry '" + name + "'");
  return it->second;
}

template <typename T>
T typed(const std::string& name, EntryKind kind) {
  const Registration& r = lookup(name);
  if (r.info.kind != kind) {
    throw CatalogError("catalog entry '" + name + "' is a " + to_string(r.info.kind) + ", not a " + to_string(kind));
  }
  return std::get<T>(r.build());
}

}  // namespace

std::vector<CatalogInfo> catalog_list() {
  std::vector<CatalogInfo> out;
  for (const auto& [name, r] : registry()) out.push_back(r.info);
  return out;
}

CatalogInfo catalog_info(const std::string& name) { return lookup(name).info; }

CatalogEntry catalog_entry(const std::string& name) {
  const Registration& r = lookup(name);
  return {r.info, r.build()};
}

RegularCellComplex catalog_complex(const std::string& name) {
  return typed<RegularCellComplex>(name, EntryKind::Complex);
}
SimplicialComplex catalog_simplicial(const std::string& name) {
  return typed<SimplicialComplex>(name, EntryKind::Simplicial);
}
ManifoldSummary catalog_summary(const std::string& name) { return typed<ManifoldSummary>(name, EntryKind::Summary); }
CutData catalog_cut(const std::string& name) { return typed<CutData>(name, EntryKind::Cut); }
Hierarchy catalog_hierarchy(const std::string& name) { return typed<Hierarchy>(name, EntryKind::Hierarchy); }

}  // namespace hakencx
