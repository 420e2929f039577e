#pragma once

#include <string>

#include <json.hpp>

#include "theta3/formats.hpp"
#include "theta3/gauge.hpp"

namespace theta3 {

using Json = nlohmann::ordered_json;

/// Exact integer encoding: a JSON number when it fits in 64 bits, otherwise
/// a decimal string. Everything in a report is exact except R's residual.
Json json_int(const Int& v);
Json json_rat(const Rat& v);

/// Full invariant report for a parsed input. `with_verdicts` adds the
/// obstruction verdicts (Seifert inputs only).
Json build_report(const ParsedInput& input, double tolerance, bool with_verdicts);

Json report_for_seifert(const SeifertData& s, double tolerance, bool with_verdicts);
Json report_for_graph(const PlumbingGraph& g);
Json report_for_ranks(const FloerRanks& f);
Json report_for_splice(const SpliceTree& t);

Json error_json(const Error& e);

/// Indented human rendering of a report tree; deterministic.
std::string render_text(const Json& j);

}  // namespace theta3
