#pragma once

// Built-in baseline data: the assumption tables for both routes and regions,
// the furnace variants, and reported feasibility-study projects.

#include <string>
#include <string_view>
#include <vector>

#include "graphcost/costing.hpp"

namespace graphcost {

enum class RouteScope { Synthetic, Natural, Any };

/// One numeric row of an assumption table, for one region.
struct DatasetRow {
    std::string table;  // e.g. "1b", "CF"
    std::string label;  // row label as printed in the table
    RouteScope route = RouteScope::Any;
    ParameterSpec spec;
};

/// Every assumption-table row exactly once (cost-factor rows once per region).
const std::vector<DatasetRow>& dataset_manifest();

std::vector<std::string> builtin_names();

/// US_SG, CN_SG, US_NG, CN_NG, US_SG_box, US_SG_continuous.
/// Throws ValidationError listing the valid names otherwise.
Scenario load_builtin(std::string_view name);

/// Baseline scenario for any route/region pair (variants applied on top of SG).
Scenario builtin_for(RouteId route, Region region);

enum class AdjustmentKind { AddOpexPerTonne, AddCapex, CapacityOverride };

struct Adjustment {
    AdjustmentKind kind;
    double value;
};

std::string_view to_string(AdjustmentKind k);

struct ReportedProject {
    std::string owner;
    int reportYear = 0;
    std::string location;
    std::string processType;
    double capacity = 0.0;      // t/yr as reported
    double capex = 0.0;         // $
    double opexPerTonne = 0.0;  // $/t as reported
    std::vector<Adjustment> adjustments;
    std::string note;
    double publishedTotal = 0.0;  // $/t, harmonized total as published
};

const std::vector<ReportedProject>& reported_projects();

/// Applies the adjustments in order, then prices the capital at `fin`.
double adjust_reported(const ReportedProject& project, const FinanceSpec& fin);

}  // namespace graphcost
