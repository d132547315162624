#pragma once

// Sensitivity ladders, iso-price contours, furnace variants, alternative
// feedstock headroom and supply-disruption impact.

#include <set>
#include <string>
#include <vector>

#include "graphcost/costing.hpp"

namespace graphcost {

struct LadderTarget {
    std::string parameter;
    double bestValue;
};

struct LadderStep {
    std::string parameter;
    double fromValue = 0.0;
    double toValue = 0.0;
    double priceBefore = 0.0;
    double priceAfter = 0.0;
};

/// Moves each parameter from its current value to its best value, left to
/// right, keeping earlier parameters at their best values.
std::vector<LadderStep> sensitivity_ladder(const Scenario& base,
                                           const std::vector<LadderTarget>& orderedTargets);

/// Cost-reduction pathway for a US route: SG or NG ladder depending on the feed.
std::vector<LadderTarget> builtin_ladder(RouteId route);

/// Locus of (capital intensity, opex) pairs sharing one break-even price.
struct IsoPriceLine {
    double price = 0.0;
    double slope = 0.0;  // d opex / d capital intensity = -crf

    double opex_at(double capitalIntensity) const { return price + slope * capitalIntensity; }
};

IsoPriceLine iso_price_contour(double price, const FinanceSpec& fin);

enum class FurnaceVariant { Box, Continuous };

std::string_view to_string(FurnaceVariant v);
FurnaceVariant parse_furnace_variant(std::string_view s);

/// Replaces the Acheson graphitization stage of an SG scenario with a box or
/// continuous furnace. Parameter ranges are moved with the baselines.
Scenario apply_furnace_variant(const Scenario& base, FurnaceVariant variant);

/// Ceiling production cost for an alternative step that replaces the
/// `avoided` rows ("plant" names the plant-level row).
double alt_route_headroom(const CostBreakdown& reference, double targetPrice,
                          const std::set<std::string>& avoided);

struct MarketCalibration {
    double referenceSubsidy = 7500.0;             // $/vehicle
    double salesDropAtReference = 0.37;           // fraction
    double producerSurplusAtReference = 3e9;      // $/yr
    double consumerSurplusAtReference = 5e9;      // $/yr
};

struct DisruptionResult {
    double evCostDelta = 0.0;  // $/vehicle
    double salesDropFraction = 0.0;
    double producerDelta = 0.0;  // $/yr
    double consumerDelta = 0.0;  // $/yr
};

/// Linear scaling of the reference subsidy-removal response by the per-EV cost shock.
DisruptionResult disruption_impact(double priceBeforePerKg, double priceAfterPerKg, double kgPerEV,
                                   const MarketCalibration& cal = {});

}  // namespace graphcost
