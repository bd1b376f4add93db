#include "hakencx/cli.hpp"

#include "hakencx/catalog.hpp"
#include "hakencx/coefficients.hpp"
#include "hakencx/duality.hpp"
#include "hakencx/errors.hpp"
#include "hakencx/flagness.hpp"
#include "hakencx/haken.hpp"
#include "hakencx/io.hpp"
#include "hakencx/phi.hpp"
#include "hakencx/poset.hpp"
#include "hakencx/surgery.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace hakencx::cli {

namespace {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct InputDigest {
  std::string name;
  std::string sha256;
};

struct Report {
  std::string command;
  std::vector<InputDigest> inputs;
  std::vector<Verdict> results;
  Json data = Json::object();
  /// Text-mode rendering of `data`.
  std::vector<std::pair<std::string, std::string>> rows;
  /// Printed verbatim in text mode instead of the table.
  std::optional<std::string> document;

  void verdict(std::string name, bool pass, std::string detail = {}) {
    results.push_back({std::move(name), pass, std::move(detail)});
  }
  void put(const std::string& key, Json value, std::string text) {
    data[key] = std::move(value);
    rows.emplace_back(key, std::move(text));
  }
  void put(const std::string& key, const Rational& value) {
    put(key, to_json(value), to_display_string(value));
  }
  void put(const std::string& key, std::int64_t value) { put(key, value, std::to_string(value)); }
  void put(const std::string& key, bool value) { put(key, value, value ? "true" : "false"); }
  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const Verdict& v) { return v.pass; });
  }
};

/// Input errors are reported with exit status 3.
class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments found after parsing; exit status 2.
class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

Json data_to_json(const CatalogData& data) {
  return std::visit([](const auto& value) { return to_json(value); }, data);
}

struct Input {
  std::string name;
  EntryKind kind = EntryKind::Complex;
  CatalogData data;
};

EntryKind kind_of(InputKind k) {
  switch (k) {
    case InputKind::Complex: return EntryKind::Complex;
    case InputKind::Simplicial: return EntryKind::Simplicial;
    case InputKind::Summary: return EntryKind::Summary;
    case InputKind::Cut: return EntryKind::Cut;
    case InputKind::Hierarchy: return EntryKind::Hierarchy;
    case InputKind::Unknown: break;
  }
  throw InputFailure("unrecognized input document");
}

Input load(const std::string& name, Report& report) {
  constexpr std::string_view scheme = "catalog:";
  if (name.rfind(scheme, 0) == 0) {
    const std::string entry_name = name.substr(scheme.size());
    try {
      catalog_info(entry_name);
    } catch (const CatalogError& e) {
      throw UsageFailure(e.what());
    }
    CatalogEntry entry;
    try {
      entry = catalog_entry(entry_name);
    } catch (const Error& e) {
      throw InputFailure(name + ": " + e.what());
    }
    report.inputs.push_back({name, sha256_hex(data_to_json(entry.data).dump())});
    return {name, entry.info.kind, std::move(entry.data)};
  }
  std::ifstream in(name, std::ios::binary);
  if (!in) throw InputFailure("cannot read " + name);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  report.inputs.push_back({name, sha256_hex(bytes)});
  try {
    const Json doc = parse_json_text(bytes);
    const EntryKind kind = kind_of(detect_kind(doc));
    switch (kind) {
      case EntryKind::Complex: return {name, kind, complex_from_json(doc)};
      case EntryKind::Simplicial: return {name, kind, simplicial_from_json(doc)};
      case EntryKind::Summary: return {name, kind, summary_from_json(doc)};
      case EntryKind::Cut: return {name, kind, cut_from_json(doc)};
      case EntryKind::Hierarchy: return {name, kind, hierarchy_from_json(doc)};
    }
  } catch (const Error& e) {
    throw InputFailure(name + ": " + e.what());
  }
  throw InputFailure("unrecognized input document");
}

template <typename T>
const T& expect(const Input& input, const char* what) {
  if (const T* value = std::get_if<T>(&input.data)) return *value;
  throw InputFailure(input.name + ": expected " + what + ", got " + to_string(input.kind));
}

std::string tuple_text(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

template <typename Range>
Json int_array(const Range& values) {
  Json j = Json::array();
  for (auto v : values) j.push_back(static_cast<std::int64_t>(v));
  return j;
}

std::string simplex_text(const Simplex& s) {
  std::vector<std::int64_t> values(s.begin(), s.end());
  std::string t = tuple_text(values);
  t.front() = '{';
  t.back() = '}';
  return t;
}

std::int64_t alternating_sum(const std::vector<std::int64_t>& values) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < values.size(); ++k) total += (k % 2 == 0 ? 1 : -1) * values[k];
  return total;
}

void write_document(Report& report, const Json& doc, const std::string& output) {
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageFailure("cannot write " + output);
    out << doc.dump(2) << "\n";
    report.put("written", output, output);
    return;
  }
  report.data["result"] = doc;
  report.document = doc.dump(2);
}

// Commands.

void cmd_fvec(Report& report, const Input& input) {
  FVector f;
  if (input.kind == EntryKind::Simplicial) {
    f = f_vector(expect<SimplicialComplex>(input, "a complex"));
  } else {
    f = f_vector(expect<RegularCellComplex>(input, "a complex"));
  }
  report.put("f", int_array(f.counts), tuple_text(f.counts));
  report.put("chi_sums", int_array(f.chi_sums), tuple_text(f.chi_sums));
}

void cmd_chi(Report& report, const Input& input) {
  std::int64_t chi = 0;
  FVector f;
  if (input.kind == EntryKind::Simplicial) {
    const auto& s = expect<SimplicialComplex>(input, "a complex");
    chi = euler_characteristic(s);
    f = f_vector(s);
  } else {
    const auto& c = expect<RegularCellComplex>(input, "a complex");
    chi = euler_characteristic(c);
    f = f_vector(c);
  }
  const std::int64_t alt = alternating_sum(f.chi_sums);
  report.put("chi", chi);
  report.verdict("alternating_sum", alt == chi, "alternating face sum " + std::to_string(alt));
}

void cmd_validate(Report& report, const Input& input) {
  if (input.kind == EntryKind::Simplicial) {
    const auto& s = expect<SimplicialComplex>(input, "a complex");
    report.verdict("simplicial_complex", true,
                   std::to_string(s.facets().size()) + " facets, dimension " + std::to_string(s.dimension()));
    return;
  }
  const auto& c = expect<RegularCellComplex>(input, "a complex");
  const ValidationReport v = validate_boundary_pattern(c);
  Json failures = Json::array();
  for (const ValidationEntry& e : v.failures()) {
    Json j;
    j["facets"] = e.facets;
    j["condition"] = e.condition;
    j["detail"] = e.detail;
    failures.push_back(j);
  }
  report.verdict("boundary_pattern", v.passed,
                 std::to_string(v.entries.size()) + " intersections checked, " +
                     std::to_string(failures.size()) + " failed");
  report.put("failures", failures, failures.empty() ? "none" : failures.dump());
}

void cmd_simple(Report& report, const Input& input, std::optional<int> n_arg) {
  const auto& c = expect<RegularCellComplex>(input, "a cell complex");
  const int n = n_arg.value_or(c.top_dim());
  const auto bad = simplicity_violation(c, n);
  report.put("n", static_cast<std::int64_t>(n));
  report.verdict("simple", !bad, bad ? "cell '" + c.id(*bad) + "'" : std::string{});
}

void cmd_dualize(Report& report, const Input& input, const std::string& output) {
  if (input.kind == EntryKind::Simplicial) {
    const auto& s = expect<SimplicialComplex>(input, "a complex");
    write_document(report, to_json(dual_cell_complex(s, s.dimension())), output);
  } else {
    const auto& c = expect<RegularCellComplex>(input, "a complex");
    write_document(report, to_json(dual_simplicial(c, c.top_dim())), output);
  }
}

void cmd_subdivide(Report& report, const Input& input, const std::string& output) {
  BarycentricSubdivision sd;
  std::int64_t chi = 0;
  bool weighted = false;
  if (input.kind == EntryKind::Simplicial) {
    const auto& s = expect<SimplicialComplex>(input, "a complex");
    sd = barycentric_subdivision(s);
    chi = euler_characteristic(s);
  } else {
    const auto& c = expect<RegularCellComplex>(input, "a complex");
    sd = barycentric_subdivision(c);
    chi = euler_characteristic(c);
    for (CellIndex i = 0; i < c.size(); ++i) weighted = weighted || c.annotated(i);
  }
  Json doc = to_json(sd.simplices);
  doc["vertex_labels"] = sd.vertex_labels;
  const std::int64_t sd_chi = euler_characteristic(sd.simplices);
  if (!weighted) {
    report.verdict("euler_preserved", sd_chi == chi,
                   std::to_string(sd_chi) + " vs " + std::to_string(chi));
  }
  write_document(report, doc, output);
}

void cmd_flag(Report& report, const Input& input, std::optional<int> max_size) {
  const auto& s = expect<SimplicialComplex>(input, "a simplicial complex");
  const int k = max_size.value_or(flag_certificate_size(s));
  const auto mnf = minimal_non_faces(s, k);
  Json list = Json::array();
  std::string text;
  std::optional<Simplex> witness;
  for (const MinimalNonFace& m : mnf) {
    list.push_back(int_array(m.vertices));
    if (!text.empty()) text += " ";
    text += simplex_text(m.vertices);
    if (m.vertices.size() > 2 && !witness) witness = m.vertices;
  }
  report.put("max_size", static_cast<std::int64_t>(k));
  report.put("minimal_non_faces", list, text.empty() ? "none" : text);
  report.verdict("flag", !witness,
                 witness ? "minimal non-face " + simplex_text(*witness) : "all minimal non-faces are edges");
}

void cmd_haken_check(Report& report, const Input& input, std::optional<int> n_arg) {
  const auto& c = expect<RegularCellComplex>(input, "a cell complex");
  const int n = n_arg.value_or(c.top_dim() + 1);
  const HakenCellCertificate cert = check_haken_cell(c, n);
  Json trail = Json::array();
  for (const TrailEntry& t : cert.trail) {
    Json j;
    j["face"] = t.face_id;
    j["dim"] = t.dim;
    j["passed"] = t.passed;
    j["reason"] = t.reason;
    trail.push_back(j);
  }
  report.put("n", static_cast<std::int64_t>(n));
  report.put("dual_flag", cert.dual_flag);
  report.put("trail", trail, std::to_string(cert.trail.size()) + " faces certified");
  report.verdict("haken_cell", cert.passed, cert.passed ? "certified" : cert.reason);
}

void cmd_phi(Report& report, const Input& input) {
  if (input.kind == EntryKind::Summary) {
    const auto& s = expect<ManifoldSummary>(input, "a summary");
    const Rational value = phi(s);
    report.put("phi", value);
    report.put("chi", s.chi_total());
    report.verdict("chi_ge_phi", Rational(s.chi_total()) >= value);
    return;
  }
  const auto& c = expect<RegularCellComplex>(input, "a cell complex or summary");
  const Rational value = phi(f_vector(c));
  report.put("phi", value);
  report.verdict("haken_4cell_bound", value <= 1, "phi <= 1");
}

void cmd_cd(Report& report, const Input& input) {
  const auto& s = expect<SimplicialComplex>(input, "a simplicial 3-sphere");
  const CharneyDavisReport cd = charney_davis(s);
  report.put("kappa", cd.kappa);
  report.put("f_star", int_array(cd.f_star.counts), tuple_text(cd.f_star.counts));
  report.put("flag", cd.flag);
  report.put("f1_ge_5f0_minus_16", cd.inequality_5f0);
  const bool nonneg = cd.kappa >= 0;
  report.verdict("kappa_equivalence", nonneg == cd.inequality_5f0, "kappa >= 0 iff f1* >= 5 f0* - 16");
  report.verdict("lower_bound_4f0", cd.lower_bound_4f0, "f1* >= 4 f0* - 10");
  report.verdict("dual_inequality", cd.dual_inequality == nonneg, "f3 >= 4 f0 - 16 on the dual");
  if (cd.flag) report.verdict("flag_kappa_nonnegative", nonneg);
}

std::int64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageFailure("not an integer: " + text);
  return value;
}

void cmd_bound(Report& report, const std::vector<std::string>& args) {
  std::int64_t f0 = 0;
  std::int64_t f3 = 0;
  if (args.size() == 2) {
    f0 = parse_count(args[0]);
    f3 = parse_count(args[1]);
  } else {
    const Input input = load(args.at(0), report);
    if (input.kind == EntryKind::Summary) {
      const auto& s = expect<ManifoldSummary>(input, "a summary");
      f0 = s.f(0);
      f3 = s.f(3);
    } else {
      const FVector f = f_vector(expect<RegularCellComplex>(input, "a cell complex or summary"));
      if (f.counts.size() != 4) throw PreconditionViolation("bound needs the boundary of a 4-cell");
      f0 = f.counts[0];
      f3 = f.counts[3];
    }
  }
  const BoundValue b = haken_4cell_bound(f0, f3);
  report.put("f0", f0);
  report.put("f3", f3);
  report.put("value", b.value);
  report.verdict("haken_4cell_bound", b.satisfied, "-f0/16 + f3/4 <= 1");
}

void cmd_cut(Report& report, const Input& xin, const Input& gin) {
  const auto& x = expect<ManifoldSummary>(xin, "a summary");
  const auto& g = expect<CutData>(gin, "cut data");
  const IntervalSummary y = cut(x, g);
  const Rational law = phi_after_cut(x, g);
  const Rational direct = phi(y);
  report.put("Y", to_json(y), to_json(y).dump());
  report.put("phi_X", phi(x));
  report.put("phi_Y", direct);
  report.put("phi_after_cut", law);
  report.verdict("transformation_law", law == direct);
  if (g.haken()) {
    report.verdict("haken_cancellation", direct - g.chi() == phi(x), "phi(Y) - chi(G) = phi(X)");
  }
}

void cmd_verify_chain(Report& report, const Input& input) {
  const auto& h = expect<Hierarchy>(input, "a hierarchy");
  const ChainReport chain = verify_induction_chain(h);
  Json lines = Json::array();
  for (const ChainLine& line : chain.lines) {
    Json j;
    j["stage"] = line.stage;
    j["subject"] = line.subject;
    j["statement"] = line.statement;
    j["lhs"] = to_json(line.lhs);
    j["relation"] = to_string(line.relation);
    j["rhs"] = to_json(line.rhs);
    j["holds"] = line.holds;
    lines.push_back(j);
    const std::string where = line.stage < 0 ? "terminal" : "stage " + std::to_string(line.stage);
    report.verdict(where + ": " + line.statement,
                   line.holds,
                   to_display_string(line.lhs) + " " + to_string(line.relation) + " " +
                       to_display_string(line.rhs));
  }
  for (const std::string& msg : chain.inconsistencies) report.verdict("consistency", false, msg);
  report.data["lines"] = lines;
}

Json range_json(const VariableRange& r) {
  Json j;
  j["lo"] = r.lo ? to_json(*r.lo) : Json(nullptr);
  j["hi"] = r.hi ? to_json(*r.hi) : Json(nullptr);
  return j;
}

std::string range_text(const VariableRange& r) {
  return "[" + (r.lo ? to_display_string(*r.lo) : std::string("-inf")) + ", " +
         (r.hi ? to_display_string(*r.hi) : std::string("+inf")) + "]";
}

void cmd_derive_coeffs(Report& report, const std::vector<std::string>& drops) {
  ConstraintSystem system = default_constraints();
  for (const std::string& tag : drops) {
    if (drop_constraints(system, tag) == 0) throw UsageFailure("no constraint with provenance " + tag);
  }
  Json table = Json::array();
  for (const LinearConstraint& c : system.constraints) {
    Json j;
    j["provenance"] = c.provenance;
    j["constraint"] = c.to_string();
    table.push_back(j);
    report.rows.emplace_back(c.provenance, c.to_string());
  }
  report.data["constraints"] = table;
  const SolveResult result = solve_unique(system);
  report.verdict("feasible", result.feasible);
  if (!result.feasible) {
    Json conflict = Json::array();
    for (const LinearConstraint& c : result.conflict) conflict.push_back(c.provenance);
    report.put("conflict", conflict, conflict.dump());
    return;
  }
  Json point = Json::object();
  Json ranges = Json::object();
  for (const std::string& v : system.variables) {
    point[v] = to_json(result.solution.at(v));
    ranges[v] = range_json(result.ranges.at(v));
    report.rows.emplace_back(v, to_display_string(result.solution.at(v)) + "  " +
                                    range_text(result.ranges.at(v)));
  }
  report.data["solution"] = point;
  report.data["ranges"] = ranges;
  report.data["unique"] = result.unique;
  std::string free_vars;
  for (const std::string& v : system.variables) {
    if (!result.ranges.at(v).point()) free_vars += (free_vars.empty() ? "" : " ") + v;
  }
  report.verdict("unique", result.unique, free_vars.empty() ? std::string{} : "not fixed: " + free_vars);
}

void cmd_catalog_list(Report& report) {
  Json list = Json::array();
  for (const CatalogInfo& info : catalog_list()) {
    Json j;
    j["name"] = info.name;
    j["kind"] = to_string(info.kind);
    j["description"] = info.description;
    list.push_back(j);
    std::string kind = to_string(info.kind);
    kind.resize(std::max<std::size_t>(kind.size(), 10), ' ');
    report.rows.emplace_back(info.name, kind + "  " + info.description);
  }
  report.data["entries"] = list;
}

void cmd_catalog_emit(Report& report, const std::string& name, const std::string& output) {
  const Input input = load("catalog:" + name, report);
  write_document(report, data_to_json(input.data), output);
}

// verify-all.

struct Task {
  std::string name;
  std::function<Verdict()> run;
};

/// The complex as a simplicial complex on its vertices when every cell is a
/// simplex.
std::optional<SimplicialComplex> simplicial_structure(const RegularCellComplex& c) {
  std::map<CellIndex, int> label;
  for (CellIndex v : c.cells_of_dim(0)) label.emplace(v, static_cast<int>(label.size()));
  for (CellIndex i = 0; i < c.size(); ++i) {
    if (c.vertices_of(i).size() != static_cast<std::size_t>(c.dim(i) + 1)) return std::nullopt;
  }
  std::vector<Simplex> simplices;
  for (CellIndex f : c.facets()) {
    Simplex s;
    for (CellIndex v : c.vertices_of(f)) s.push_back(label.at(v));
    std::sort(s.begin(), s.end());
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex(static_cast<int>(label.size()), std::move(simplices));
}

std::string fvec_reversal_detail(const FVector& a, const FVector& b, bool& ok) {
  std::vector<std::int64_t> reversed(b.counts.rbegin(), b.counts.rend());
  ok = a.counts == reversed;
  return tuple_text(a.counts) + " vs reversed " + tuple_text(b.counts);
}

Verdict simplicial_round_trip(const std::string& name, const SimplicialComplex& s) {
  const int n = s.dimension();
  const RegularCellComplex dual = dual_cell_complex(s, n);
  bool reversal = false;
  const std::string detail = fvec_reversal_detail(f_vector(s), f_vector(dual), reversal);
  const SimplicialComplex back = dual_simplicial(dual, n);
  const bool iso = isomorphic(back, s);
  return {name, iso && reversal, (iso ? "isomorphic, " : "not isomorphic, ") + detail};
}

Verdict cell_round_trip(const std::string& name, const RegularCellComplex& c) {
  const int n = c.top_dim();
  if (!is_simple(c, n)) {
    const auto s = simplicial_structure(c);
    if (!s) return {name, false, "neither simple nor simplicial"};
    const bool same = isomorphic(cell_complex_of(*s), c);
    Verdict v = simplicial_round_trip(name, *s);
    v.pass = v.pass && same;
    v.detail = "via simplicial structure, " + v.detail;
    return v;
  }
  const SimplicialComplex dual = dual_simplicial(c, n);
  bool reversal = false;
  const std::string detail = fvec_reversal_detail(f_vector(c), f_vector(dual), reversal);
  const RegularCellComplex back = dual_cell_complex(dual, n);
  const bool iso = isomorphic(back, c);
  return {name, iso && reversal, (iso ? "isomorphic, " : "not isomorphic, ") + detail};
}

template <typename C>
Verdict euler_check(const std::string& name, const C& c, std::optional<std::int64_t> expected) {
  const std::int64_t chi = euler_characteristic(c);
  const std::int64_t alt = alternating_sum(f_vector(c).chi_sums);
  bool ok = chi == alt;
  std::string detail = "chi " + std::to_string(chi) + ", alternating sum " + std::to_string(alt);
  if (expected) {
    ok = ok && chi == *expected;
    detail += ", expected " + std::to_string(*expected);
  }
  return {name, ok, detail};
}

template <typename C>
Verdict subdivision_check(const std::string& name, const C& c) {
  const std::int64_t chi = euler_characteristic(c);
  const std::int64_t sd = euler_characteristic(barycentric_subdivision(c).simplices);
  return {name, chi == sd, std::to_string(sd) + " vs " + std::to_string(chi)};
}

std::vector<Task> verify_all_tasks() {
  static const std::set<std::string> flag_expected{"cell600", "cross3", "cross4", "icosahedron_s",
                                                   "simplex2_full"};
  static const std::set<std::string> not_closed{"simplex2_full"};
  std::vector<Task> tasks;
  for (const CatalogInfo& info : catalog_list()) {
    const std::string name = info.name;
    switch (info.kind) {
      case EntryKind::Complex: {
        const int n = info.cell_dim;
        tasks.push_back({"euler." + name, [=] {
                           const auto c = catalog_complex(name);
                           const std::int64_t sphere = n % 2 == 1 ? 2 : 0;
                           return euler_check("euler." + name, c, sphere);
                         }});
        tasks.push_back({"haken." + name, [=] {
                           const auto cert = check_haken_cell(catalog_complex(name), n);
                           const bool expected = info.haken.value_or(false);
                           bool ok = cert.passed == expected;
                           std::string detail = cert.passed ? "certified" : cert.reason;
                           if (cert.passed) {
                             ok = ok && cert.dual_flag;
                             detail += cert.dual_flag ? ", dual flag" : ", dual not flag";
                           }
                           return Verdict{"haken." + name, ok, detail};
                         }});
        tasks.push_back(
            {"double_dual." + name, [=] { return cell_round_trip("double_dual." + name, catalog_complex(name)); }});
        tasks.push_back({"subdivision." + name,
                         [=] { return subdivision_check("subdivision." + name, catalog_complex(name)); }});
        break;
      }
      case EntryKind::Simplicial: {
        tasks.push_back({"flag." + name, [=] {
                           const bool flag = is_flag(catalog_simplicial(name));
                           const bool expected = flag_expected.count(name) > 0;
                           return Verdict{"flag." + name, flag == expected,
                                          std::string(flag ? "flag" : "not flag") + ", expected " +
                                              (expected ? "flag" : "not flag")};
                         }});
        tasks.push_back({"euler." + name,
                         [=] { return euler_check("euler." + name, catalog_simplicial(name), std::nullopt); }});
        tasks.push_back({"subdivision." + name,
                         [=] { return subdivision_check("subdivision." + name, catalog_simplicial(name)); }});
        if (!not_closed.count(name)) {
          tasks.push_back({"double_dual." + name, [=] {
                             return simplicial_round_trip("double_dual." + name, catalog_simplicial(name));
                           }});
        }
        break;
      }
      case EntryKind::Summary: {
        tasks.push_back({"phi." + name, [=] {
                           const ManifoldSummary s = catalog_summary(name);
                           const Rational value = phi(s);
                           bool ok = phi_general(s, PhiCoefficients::canonical()) == value &&
                                     Rational(s.chi_total()) >= value;
                           if (s.haken()) {
                             PhiCoefficients shifted = PhiCoefficients::canonical();
                             shifted.r[0] -= Rational(3) + Rational(2) * Rational(5, 7);
                             shifted.s[0] += 3;
                             shifted.s[1] += Rational(5, 7);
                             ok = ok && phi_general(s, shifted) == value;
                           }
                           return Verdict{"phi." + name, ok,
                                          "phi " + to_display_string(value) + ", chi " +
                                              std::to_string(s.chi_total())};
                         }});
        break;
      }
      case EntryKind::Hierarchy: {
        tasks.push_back({name, [=] {
                           const ChainReport r = verify_induction_chain(catalog_hierarchy(name));
                           std::string detail = std::to_string(r.lines.size()) + " lines";
                           for (const ChainLine& line : r.lines) {
                             if (!line.holds) {
                               detail = "fails: " + line.statement;
                               break;
                             }
                           }
                           if (!r.inconsistencies.empty()) detail = r.inconsistencies.front();
                           return Verdict{name, r.passed, detail};
                         }});
        break;
      }
      case EntryKind::Cut:
        break;
    }
  }
  tasks.push_back({"coefficients.unique", [] {
                     const SolveResult r = solve_unique(default_constraints());
                     const bool ok = r.feasible && r.unique &&
                                     from_point(r.solution) == PhiCoefficients::canonical();
                     return Verdict{"coefficients.unique", ok,
                                    "r0 = " + to_display_string(r.solution.count("r0") ? r.solution.at("r0") : 0) +
                                        ", s3 = " +
                                        to_display_string(r.solution.count("s3") ? r.solution.at("s3") : 0)};
                   }});
  tasks.push_back({"coefficients.drop_hypercube_I4", [] {
                     ConstraintSystem system = default_constraints();
                     drop_constraints(system, "hypercube_I4");
                     const SolveResult r = solve_unique(system);
                     return Verdict{"coefficients.drop_hypercube_I4", r.feasible && !r.unique,
                                    r.unique ? "still unique" : "r0 in " + range_text(r.ranges.at("r0"))};
                   }});
  tasks.push_back({"hypercube.I4", [] {
                     const FVector f = f_vector(hypercube_boundary(4));
                     const Rational value = phi(f);
                     const bool ok = f.counts == std::vector<std::int64_t>{16, 32, 24, 8} && value == 1;
                     return Verdict{"hypercube.I4", ok, tuple_text(f.counts) + ", phi " + to_display_string(value)};
                   }});
  if (cell120_enabled()) {
    tasks.push_back({"bound.cell120", [] {
                       const FVector f = f_vector(cell120());
                       const BoundValue b = haken_4cell_bound(f.counts[0], f.counts[3]);
                       return Verdict{"bound.cell120", b.satisfied && b.value == Rational(-15, 2),
                                      "value " + to_display_string(b.value)};
                     }});
  }
  tasks.push_back({"cd.cross4", [] {
                     const CharneyDavisReport cd = charney_davis(cross_polytope_boundary(4));
                     return Verdict{"cd.cross4", cd.kappa == 0 && cd.inequality_5f0 && cd.flag,
                                    "kappa " + to_display_string(cd.kappa)};
                   }});
  for (const std::string name : {"cell600", "cross4", "simplex4"}) {
    if (name == "cell600" && !cell120_enabled()) continue;
    tasks.push_back({"cd." + name + ".equivalence", [=] {
                       const CharneyDavisReport cd = charney_davis(catalog_simplicial(name));
                       const bool nonneg = cd.kappa >= 0;
                       const bool ok = nonneg == cd.inequality_5f0 && (!cd.flag || nonneg);
                       return Verdict{"cd." + name + ".equivalence", ok, "kappa " + to_display_string(cd.kappa)};
                     }});
  }
  return tasks;
}

void cmd_verify_all(Report& report) {
  std::vector<Task> tasks = verify_all_tasks();
  std::vector<Verdict> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        results[i] = {tasks[i].name, false, std::string("error: ") + e.what()};
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const Verdict& a, const Verdict& b) { return a.name < b.name; });
  report.results = std::move(results);
  report.put("checks", static_cast<std::int64_t>(report.results.size()));
}

// Output.

void print_text(const Report& report, std::ostream& out) {
  if (report.document) {
    out << *report.document << "\n";
    return;
  }
  std::size_t width = 0;
  for (const Verdict& v : report.results) width = std::max(width, v.name.size());
  for (const Verdict& v : report.results) {
    out << (v.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << v.name;
    if (!v.detail.empty()) out << "  " << v.detail;
    out << "\n";
  }
  std::size_t key_width = 0;
  for (const auto& [key, value] : report.rows) key_width = std::max(key_width, key.size());
  for (const auto& [key, value] : report.rows) {
    out << std::left << std::setw(static_cast<int>(key_width)) << key << "  " << value << "\n";
  }
  if (!report.results.empty()) out << "all_pass  " << (report.all_pass() ? "true" : "false") << "\n";
}

void print_json(const Report& report, std::ostream& out) {
  Json j;
  j["command"] = report.command;
  Json inputs = Json::array();
  for (const InputDigest& d : report.inputs) {
    Json e;
    e["name"] = d.name;
    e["sha256"] = d.sha256;
    inputs.push_back(e);
  }
  j["inputs"] = inputs;
  Json results = Json::array();
  for (const Verdict& v : report.results) {
    Json e;
    e["name"] = v.name;
    e["pass"] = v.pass;
    e["detail"] = v.detail;
    results.push_back(e);
  }
  j["results"] = results;
  j["all_pass"] = report.all_pass();
  j["data"] = report.data;
  out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial checks for Haken cells, cut calculus and flag duality", "hakencx"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string input;
  std::string second;
  std::string output;
  std::optional<int> n_arg;
  std::optional<int> max_size;
  std::vector<std::string> drops;
  std::vector<std::string> bound_args;
  std::string entry_name;

  auto with_input = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "File path or catalog:<name>")->required();
    return sub;
  };
  CLI::App* fvec = with_input("fvec", "Face counts and face Euler sums");
  CLI::App* chi = with_input("chi", "Euler characteristic");
  CLI::App* validate = with_input("validate", "Validate a complex and its boundary pattern");
  CLI::App* simple = with_input("simple", "Check simplicity");
  simple->add_option("--n", n_arg, "Manifold dimension (default: top dimension)");
  CLI::App* dualize = with_input("dualize", "Dual simplicial complex or dual cell complex");
  dualize->add_option("-o,--output", output, "Write the result to a file");
  CLI::App* subdivide = with_input("subdivide", "First barycentric subdivision");
  subdivide->add_option("-o,--output", output, "Write the result to a file");
  CLI::App* flag = with_input("flag", "Flagness and minimal non-faces");
  flag->add_option("--max-size", max_size, "Largest minimal non-face to search for");
  CLI::App* haken = with_input("haken-check", "Certify a Haken n-cell boundary");
  haken->add_option("--n", n_arg, "Cell dimension (default: top dimension + 1)");
  CLI::App* phi_cmd = with_input("phi", "The invariant phi of a summary or 4-cell boundary");
  CLI::App* cd = with_input("cd", "Charney-Davis quantity of a simplicial 3-sphere");
  CLI::App* bound = app.add_subcommand("bound", "Haken 4-cell bound, from f0 f3 or an input");
  bound->add_option("args", bound_args, "f0 f3, or one input")->required()->expected(1, 2);
  CLI::App* cut_cmd = app.add_subcommand("cut", "Cut a summary along cut data");
  cut_cmd->add_option("summary", input, "Summary input")->required();
  cut_cmd->add_option("cut", second, "Cut data input")->required();
  CLI::App* chain = with_input("verify-chain", "Evaluate the inequality chain of a hierarchy");
  CLI::App* coeffs = app.add_subcommand("derive-coeffs", "Solve for the coefficients of phi");
  coeffs->add_option("--drop", drops, "Remove constraints by provenance (repeatable)");
  CLI::App* catalog = app.add_subcommand("catalog", "Built-in instances");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "List entries");
  CLI::App* emit = catalog->add_subcommand("emit", "Write an entry as JSON");
  emit->add_option("name", entry_name, "Entry name")->required();
  emit->add_option("-o,--output", output, "Write to a file");
  CLI::App* verify_all = app.add_subcommand("verify-all", "Run every catalog check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Pass : UsageError;
  }

  Report report;
  try {
    CLI::App* chosen = app.get_subcommands().front();
    report.command = chosen->get_name();
    bool raw = false;
    if (chosen == fvec) cmd_fvec(report, load(input, report));
    if (chosen == chi) cmd_chi(report, load(input, report));
    if (chosen == validate) cmd_validate(report, load(input, report));
    if (chosen == simple) cmd_simple(report, load(input, report), n_arg);
    if (chosen == dualize) cmd_dualize(report, load(input, report), output);
    if (chosen == subdivide) cmd_subdivide(report, load(input, report), output);
    if (chosen == flag) cmd_flag(report, load(input, report), max_size);
    if (chosen == haken) cmd_haken_check(report, load(input, report), n_arg);
    if (chosen == phi_cmd) cmd_phi(report, load(input, report));
    if (chosen == cd) cmd_cd(report, load(input, report));
    if (chosen == bound) cmd_bound(report, bound_args);
    if (chosen == cut_cmd) {
      const Input x = load(input, report);
      cmd_cut(report, x, load(second, report));
    }
    if (chosen == chain) cmd_verify_chain(report, load(input, report));
    if (chosen == coeffs) cmd_derive_coeffs(report, drops);
    if (chosen == verify_all) cmd_verify_all(report);
    if (chosen == catalog) {
      CLI::App* action = catalog->get_subcommands().front();
      report.command = "catalog " + action->get_name();
      if (action == list) cmd_catalog_list(report);
      if (action == emit) {
        cmd_catalog_emit(report, entry_name, output);
        raw = output.empty();
      }
    }
    if (raw) {
      out << *report.document << "\n";
    } else if (json) {
      print_json(report, out);
    } else {
      print_text(report, out);
    }
    return report.all_pass() ? Pass : VerdictFail;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const InputFailure& e) {
    err << "input error: " << e.what() << "\n";
    return InputError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return InputError;
  } catch (const StructuralError& e) {
    err << "input error: " << e.what() << "\n";
    return InputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return VerdictFail;
  }
}

}  // namespace hakencx::cli
