#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "contactlie/classify.hpp"
#include "contactlie/grid.hpp"
#include "contactlie/metric.hpp"
#include "contactlie/pipeline.hpp"

namespace contactlie {

using Json = nlohmann::ordered_json;

/// Parse {"labels": [...], "brackets": {"01": [...], "02": [...], "12": [...]},
/// "xi": [[...],[...]], "alpha": [...]}. Antisymmetric completion implied.
std::pair<StructureConstants, ContactData> algebra_from_json(const Json& doc);

Json to_json(const JacobiReport& rep);
Json to_json(const ContactCheck& check);
Json to_json(const CanonicalFrame& cf);
Json to_json(const ClassificationResult& res);
Json to_json(const ChartVerification& v);
Json to_json(const Factorization& f, double residual);
Json to_json(const GeodesicCheck& check);
Json to_json(const NormalExpReport& rep);

} // namespace contactlie
