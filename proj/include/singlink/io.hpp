#pragma once

// JSON and DOT serialization. JSON is the stable exchange format; DOT output
// is meant for looking at graphs and may change between versions.

#include <string>
#include <vector>

#include "json.hpp"
#include "singlink/cover.hpp"
#include "singlink/curve.hpp"
#include "singlink/graph.hpp"
#include "singlink/normalization.hpp"
#include "singlink/resolution.hpp"

namespace singlink {

using Json = nlohmann::ordered_json;

Json to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

Json to_json(const BlowDownCertificate& c);
BlowDownCertificate certificate_from_json(const Json& j);

// Rationals are read from strings ("34/13") or integers and written as strings.
mpq_class rational_from_json(const Json& j);
Json to_json(const PuiseuxBranch& b);
Json branches_to_json(const std::vector<PuiseuxBranch>& bs);
std::vector<PuiseuxBranch> branches_from_json(const Json& j);

Json to_json(const CurveResolution& r);
CurveResolution curve_resolution_from_json(const Json& j);

Json to_json(const CoveringGraph& c);
CoveringGraph covering_from_json(const Json& j);

Json to_json(const PipelineReport& r);

Json to_json(const BranchCoverData& data);

// Integers that do not fit in 64 bits are written as decimal strings.
Json big_to_json(const BigInt& v);

// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

std::string to_dot(const PlumbingGraph& g, const std::string& title = "G");

}  // namespace singlink
