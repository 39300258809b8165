#pragma once

#include "json.hpp"

#include "haff/carnot.hpp"
#include "haff/report.hpp"

namespace haff {

/// Reads either group-spec format ("structure_constants" or
/// "free_quotient"). Malformed input raises std::invalid_argument; invalid
/// specs raise SpecValidationError subclasses.
CarnotPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const StructureSpec& s);
nlohmann::json free_quotient_to_json(const CarnotPresentation& pres);

nlohmann::json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

}  // namespace haff
