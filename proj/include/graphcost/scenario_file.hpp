#pragma once

// Line-based scenario files.
//
//   # comment
//   format = graphcost-scenario/1
//   route = SG_acheson
//   region = US
//   capacity = 45000                      (optional)
//
//   [overrides]
//   needle_coke = 500                     pins the parameter
//   graphitization.throughput = 0.25 [0.1, 0.3]   sets baseline and uniform range
//
//   [finance]
//   required_irr = 0.05
//   payback_years = 10
//
// Override keys use the identifiers documented in parameters.hpp.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcost/costing.hpp"

namespace graphcost {

inline constexpr std::string_view kScenarioFormat = "graphcost-scenario/1";

struct OverrideValue {
    double value = 0.0;
    std::optional<std::pair<double, double>> range;

    bool operator==(const OverrideValue&) const = default;
};

struct ScenarioFile {
    RouteId route = RouteId::SG_acheson;
    Region region = Region::US;
    std::optional<double> capacity;
    std::map<std::string, OverrideValue> overrides;
    std::map<std::string, double> finance;  // required_irr, payback_years

    bool operator==(const ScenarioFile&) const = default;
};

/// Throws ParseError carrying the 1-based line number.
ScenarioFile parse_scenario(std::string_view text);

std::string serialize_scenario(const ScenarioFile& file);

/// Empty when valid; otherwise one message per violation naming the parameter.
std::vector<std::string> validate(const ScenarioFile& file);

/// Built-in baseline for the file's route and region with the overrides applied.
/// Throws ValidationError when validate() reports violations.
Scenario resolve_scenario(const ScenarioFile& file);

/// Sets a parameter; with a range it becomes uniform on it, otherwise it is pinned.
void apply_override(Scenario& scenario, const std::string& id, const OverrideValue& value);

/// Environment variable naming a directory of <name>.scenario files that
/// shadow the built-in datasets.
inline constexpr const char* kDataDirEnv = "GRAPHCOST_DATA_DIR";

/// A built-in name (possibly shadowed via kDataDirEnv) or a path to a scenario file.
Scenario load_scenario(const std::string& ref);

}  // namespace graphcost
