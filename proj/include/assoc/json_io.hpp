#pragma once

#include "assoc/assembler.hpp"

#include <json.hpp>

#include <string>

namespace assoc {

using Json = nlohmann::ordered_json;

/// {"alphabet":[...],"truncation":m,"terms":[{"word":"XY","coeff":"1/24"},...]}
/// with terms in (degree, lexicographic) order.
Json series_to_json(const Series& s);
/// Throws std::invalid_argument on any schema violation.
Series series_from_json(const Json& j);
/// Reuses a shared alphabet object when the names match a known one.
Series series_from_text(const std::string& text);

/// [{"equation":"pentagon","satisfied_through":5,"residual_degrees":{"6":"nonzero"}}, ...]
Json equation_report_to_json(const EquationReport& r);
Json associator_report_to_json(const AssociatorReport& r);
/// {"strands":4,"dims":[1,6,25,...]}
Json dims_to_json(int strands, const std::vector<std::size_t>& dims);
Json gauge_record_to_json(const GaugeRecord& g);

}  // namespace assoc
