#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weierstab/central_charge.hpp"
#include "weierstab/limit_phase.hpp"
#include "weierstab/surface.hpp"
#include "weierstab/wall_scan.hpp"

namespace weierstab::io {

// JSON encoding used by every CLI subcommand. Rationals travel as strings
// "p/q" (or "p"), objects keep a fixed key order.

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Accepts a "p/q" string or an integer JSON number. `field` names the
/// offending key in the ParseError.
Rational rational_from_json(const Json& j, const std::string& field);

Json to_json(const ChernClass& x);
ChernClass class_from_json(const Json& j);
ChernClass class_from_text(const std::string& text);
std::vector<ChernClass> classes_from_json(const Json& j);

Json to_json(const SurfaceParams& p);
SurfaceParams params_from_json(const Json& j);

Json to_json(const Slope& s);

Json to_json(const LaurentTerm& t);
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const BiPoly& p);
Json to_json(const ChargeExpr& z);
Json to_json(const CurveCharge& z);
Json to_json(const ExactComplex& z);

Json to_json(const PhaseVerdict& v);
PhaseVerdict verdict_from_json(const Json& j);

Json to_json(const LimitPhase& phase);
LimitPhase limit_phase_from_json(const Json& j);

Json to_json(const TheoremAReport& report);

Json to_json(const Wall& w);
Json to_json(const WallReport& r);
WallReport wall_report_from_json(const Json& j);

/// Parses JSON text, turning syntax errors into ParseError.
Json parse_json(const std::string& text, const std::string& what);

} // namespace weierstab::io
