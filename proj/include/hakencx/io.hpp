#pragma once

#include "hakencx/complex.hpp"
#include "hakencx/rational.hpp"
#include "hakencx/summary.hpp"

#include <json.hpp>

#include <string>

namespace hakencx {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// {"top_dim": n, "cells": [{"id", "dim", "boundary", "chi"?}]}
Json to_json(const RegularCellComplex& complex);
RegularCellComplex complex_from_json(const Json& j);

/// {"vertices": m, "facets": [[...], ...]}
Json to_json(const SimplicialComplex& complex);
SimplicialComplex simplicial_from_json(const Json& j);

Json to_json(const FVector& f);

/// {"label", "chi_total", "f", "chiF", "b0_boundary", "b1_boundary", "haken"?}
Json to_json(const ManifoldSummary& s);
ManifoldSummary summary_from_json(const Json& j);

/// {"label", "f0_G", "f1_G", "f2_G", "chiF_G", "chi_G", "chi_boundary_G",
///  "b0_boundary_G", "connected"?, "separating_hint"?, "haken"?}
Json to_json(const CutData& g);
CutData cut_from_json(const Json& j);

Json to_json(const IntervalSummary& y);

/// {"label", "stages": [{"x": summary, "g": cut}], "terminal_cells": [...],
///  "final_result"?: summary}
Json to_json(const Hierarchy& h);
Hierarchy hierarchy_from_json(const Json& j);

enum class InputKind { Complex, Simplicial, Summary, Cut, Hierarchy, Unknown };

/// Recognizes an input document by its keys.
InputKind detect_kind(const Json& j);

/// Throws ParseError when the file cannot be read or is not JSON.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace hakencx
