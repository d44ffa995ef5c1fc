#pragma once

// JSON and text renderings. Integers are emitted as decimal strings.

#include <nlohmann/json.hpp>
#include <string>

#include "lojinf/analysis.hpp"
#include "lojinf/numeric.hpp"
#include "lojinf/pgcurve.hpp"

namespace lojinf {

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::ordered_json to_json(const StarCertificate& certificate);
nlohmann::ordered_json to_json(const PGSlice& slice);
/// Profile as an array of [radius, estimate] pairs plus the fit.
nlohmann::ordered_json to_json(const GrowthProfile& profile);
nlohmann::ordered_json to_json(const GrowthVerdict& verdict);
nlohmann::ordered_json to_json(const RootEscapeVerdict& verdict);

}  // namespace lojinf
