#include "hakencx/io.hpp"

#include "hakencx/errors.hpp"

#include <fstream>
#include <sstream>

namespace hakencx {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("field '") + what + "' must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t int_field(const Json& j, const char* key) { return integer(field(j, key), key); }

bool bool_field(const Json& j, const char* key, bool fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

std::string string_field(const Json& j, const char* key, const std::string& fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

template <std::size_t N>
std::array<std::int64_t, N> int_array(const Json& j, const char* key, bool incomplete_is_summary_error) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  if (a.size() != N) {
    const std::string msg = std::string("field '") + key + "' must have " + std::to_string(N) + " entries";
    if (incomplete_is_summary_error) throw IncompleteSummary(msg);
    throw ParseError(msg);
  }
  std::array<std::int64_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = integer(a[i], key);
  return out;
}

Json int_list(const auto& values) {
  Json a = Json::array();
  for (auto v : values) a.push_back(v);
  return a;
}

}  // namespace

Json to_json(const Rational& value) { return to_fraction_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

Json to_json(const RegularCellComplex& complex) {
  Json cells = Json::array();
  for (CellIndex c = 0; c < complex.size(); ++c) {
    Json cell;
    cell["id"] = complex.id(c);
    cell["dim"] = complex.dim(c);
    Json bd = Json::array();
    for (CellIndex b : complex.boundary(c)) bd.push_back(complex.id(b));
    cell["boundary"] = std::move(bd);
    if (complex.annotated(c)) cell["chi"] = complex.chi(c);
    cells.push_back(std::move(cell));
  }
  Json j;
  j["top_dim"] = complex.top_dim();
  j["cells"] = std::move(cells);
  return j;
}

RegularCellComplex complex_from_json(const Json& j) {
  const std::int64_t top = int_field(j, "top_dim");
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw ParseError("field 'cells' must be an array");
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Json& c : cells) {
    Cell cell;
    const Json& id = field(c, "id");
    if (!id.is_string()) throw ParseError("cell ids must be strings");
    cell.id = id.get<std::string>();
    cell.dim = static_cast<int>(int_field(c, "dim"));
    const auto bd = c.find("boundary");
    if (bd != c.end()) {
      if (!bd->is_array()) throw ParseError("field 'boundary' must be an array");
      for (const Json& b : *bd) {
        if (!b.is_string()) throw ParseError("boundary entries must be cell ids");
        cell.boundary_ids.push_back(b.get<std::string>());
      }
    }
    const auto chi = c.find("chi");
    if (chi != c.end() && !chi->is_null()) cell.chi = integer(*chi, "chi");
    out.push_back(std::move(cell));
  }
  return RegularCellComplex(static_cast<int>(top), std::move(out));
}

Json to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (const Simplex& f : complex.facets()) facets.push_back(int_list(f));
  Json j;
  j["vertices"] = complex.vertex_count();
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex simplicial_from_json(const Json& j) {
  const std::int64_t m = int_field(j, "vertices");
  if (m < 0) throw ParseError("vertex count must be nonnegative");
  const Json& facets = field(j, "facets");
  if (!facets.is_array()) throw ParseError("field 'facets' must be an array");
  std::vector<Simplex> out;
  for (const Json& f : facets) {
    if (!f.is_array()) throw ParseError("each facet must be an array of vertices");
    Simplex s;
    for (const Json& v : f) s.push_back(static_cast<int>(integer(v, "facets")));
    out.push_back(std::move(s));
  }
  return SimplicialComplex(static_cast<int>(m), std::move(out));
}

Json to_json(const FVector& f) {
  Json j;
  j["counts"] = int_list(f.counts);
  j["chi_sums"] = int_list(f.chi_sums);
  return j;
}

Json to_json(const ManifoldSummary& s) {
  Json j;
  j["label"] = s.label();
  j["chi_total"] = s.chi_total();
  j["f"] = int_list(s.fields().f);
  j["chiF"] = int_list(s.fields().chiF);
  j["b0_boundary"] = s.b0_boundary();
  j["b1_boundary"] = s.b1_boundary();
  j["haken"] = s.haken();
  return j;
}

ManifoldSummary summary_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a summary object");
  for (const char* key : {"chi_total", "f", "chiF", "b0_boundary", "b1_boundary"}) {
    if (!j.contains(key)) throw IncompleteSummary(std::string("summary lacks '") + key + "'");
  }
  ManifoldSummary::Fields s;
  s.label = string_field(j, "label", "summary");
  s.chi_total = int_field(j, "chi_total");
  s.f = int_array<4>(j, "f", true);
  s.chiF = int_array<4>(j, "chiF", true);
  s.b0_boundary = int_field(j, "b0_boundary");
  s.b1_boundary = int_field(j, "b1_boundary");
  s.haken = bool_field(j, "haken", true);
  return ManifoldSummary(std::move(s));
}

Json to_json(const CutData& g) {
  Json j;
  j["label"] = g.label();
  j["f0_G"] = g.f0();
  j["f1_G"] = g.f1();
  j["f2_G"] = g.f2();
  j["chiF_G"] = int_list(g.fields().chiF_G);
  j["chi_G"] = g.chi();
  j["chi_boundary_G"] = g.chi_boundary();
  j["b0_boundary_G"] = g.b0_boundary();
  j["connected"] = g.connected();
  if (g.fields().separating_hint) j["separating_hint"] = *g.fields().separating_hint;
  j["haken"] = g.haken();
  return j;
}

CutData cut_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a cut object");
  CutData::Fields g;
  g.label = string_field(j, "label", "G");
  g.f0_G = int_field(j, "f0_G");
  g.f1_G = int_field(j, "f1_G");
  g.f2_G = int_field(j, "f2_G");
  g.chiF_G = int_array<3>(j, "chiF_G", false);
  g.chi_G = int_field(j, "chi_G");
  g.chi_boundary_G = int_field(j, "chi_boundary_G");
  g.b0_boundary_G = int_field(j, "b0_boundary_G");
  g.connected = bool_field(j, "connected", true);
  if (j.contains("separating_hint") && !j["separating_hint"].is_null()) {
    g.separating_hint = bool_field(j, "separating_hint", false);
  }
  g.haken = bool_field(j, "haken", false);
  return CutData(std::move(g));
}

Json to_json(const IntervalSummary& y) {
  auto interval = [](const Interval& i) { return Json::array({i.lo, i.hi}); };
  Json j;
  j["label"] = y.label;
  j["chi_total"] = y.chi_total;
  j["f0"] = y.f0;
  j["f1"] = interval(y.f1);
  j["f2"] = interval(y.f2);
  j["f3"] = interval(y.f3);
  j["chiF"] = int_list(y.chiF);
  j["b0_boundary"] = interval(y.b0_boundary);
  return j;
}

Json to_json(const Hierarchy& h) {
  Json stages = Json::array();
  for (const HierarchyStage& s : h.stages) {
    Json st;
    st["x"] = to_json(s.x);
    st["g"] = to_json(s.g);
    stages.push_back(std::move(st));
  }
  Json cells = Json::array();
  for (const ManifoldSummary& c : h.terminal_cells) cells.push_back(to_json(c));
  Json j;
  j["label"] = h.label;
  j["stages"] = std::move(stages);
  j["terminal_cells"] = std::move(cells);
  if (h.final_result) j["final_result"] = to_json(*h.final_result);
  return j;
}

Hierarchy hierarchy_from_json(const Json& j) {
  Hierarchy h;
  h.label = string_field(j, "label", "hierarchy");
  const Json& stages = field(j, "stages");
  if (!stages.is_array()) throw ParseError("field 'stages' must be an array");
  for (const Json& s : stages) h.stages.push_back({summary_from_json(field(s, "x")), cut_from_json(field(s, "g"))});
  if (j.contains("terminal_cells")) {
    const Json& cells = j["terminal_cells"];
    if (!cells.is_array()) throw ParseError("field 'terminal_cells' must be an array");
    for (const Json& c : cells) h.terminal_cells.push_back(summary_from_json(c));
  }
  if (j.contains("final_result") && !j["final_result"].is_null()) {
    h.final_result = summary_from_json(j["final_result"]);
  }
  return h;
}

InputKind detect_kind(const Json& j) {
  if (!j.is_object()) return InputKind::Unknown;
  if (j.contains("cells") && j.contains("top_dim")) return InputKind::Complex;
  if (j.contains("facets") && j.contains("vertices")) return InputKind::Simplicial;
  if (j.contains("stages")) return InputKind::Hierarchy;
  if (j.contains("f0_G")) return InputKind::Cut;
  if (j.contains("chi_total") || j.contains("chiF")) return InputKind::Summary;
  return InputKind::Unknown;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace hakencx
