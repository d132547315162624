#pragma once

// Named access to every scalar model input of a Scenario.
//
// Identifier scheme:
//   <material>                     unit price, e.g. needle_coke, HF
//   electricity_price, salary, construction_rate, maintenance_rate,
//   sales_rate, scaling_exponent   regional cost factors
//   required_irr, payback_years    finance
//   capacity, uptime, plant_*, reference_capacity
//   <stage>.<field>                throughput, yield, electricity, fte, equipment,
//                                  construction_hours, other_capex, capex_override
//   <stage>.<material>             consumable rate per tonne of stage feed
//   <stage>.<material>_lifetime    uses per consumable item (rounded to an integer)

#include <string>
#include <string_view>
#include <vector>

#include "graphcost/costing.hpp"

namespace graphcost {

bool has_parameter(const Scenario& scenario, std::string_view id);

/// Throws ValidationError for unknown ids or unset optional fields.
double get_parameter(const Scenario& scenario, std::string_view id);

/// Throws ValidationError for unknown ids.
void set_parameter(Scenario& scenario, std::string_view id, double value);

/// All ids currently resolvable on `scenario`, in a stable order.
std::vector<std::string> parameter_ids(const Scenario& scenario);

}  // namespace graphcost
