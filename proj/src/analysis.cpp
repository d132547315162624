#include "graphcost/analysis.hpp"

#include <cmath>

#include "graphcost/error.hpp"
#include "graphcost/parameters.hpp"

namespace graphcost {

namespace {

bool within_range(const ParameterSpec& spec, double value) {
    const double slack = 1e-12 * std::max({1.0, std::abs(spec.low), std::abs(spec.high)});
    return value >= spec.low - slack && value <= spec.high + slack;
}

// Scales a parameter's value together with its declared range.
void scale_param(Scenario& s, const std::string& id, double factor) {
    if (auto* spec = s.find_param(id)) {
        spec->baseline *= factor;
        spec->low *= factor;
        spec->high *= factor;
    }
    set_parameter(s, id, get_parameter(s, id) * factor);
}

void pin_param(Scenario& s, const std::string& id, double value) {
    if (auto* spec = s.find_param(id)) {
        *spec = ParameterSpec::fixed(spec->id, spec->unit, value, spec->region);
    }
    set_parameter(s, id, value);
}

}  // namespace

std::vector<LadderStep> sensitivity_ladder(const Scenario& base,
                                           const std::vector<LadderTarget>& orderedTargets) {
    std::vector<LadderStep> steps;
    if (orderedTargets.empty()) return steps;

    Scenario current = base;
    double price = plant_cost(current).breakevenPrice;
    for (const auto& target : orderedTargets) {
        if (!has_parameter(current, target.parameter)) {
            throw ValidationError("unknown parameter '" + target.parameter + "'");
        }
        if (const auto* spec = current.find_param(target.parameter);
            spec != nullptr && !within_range(*spec, target.bestValue)) {
            throw ValidationError(target.parameter + ": best value " +
                                  std::to_string(target.bestValue) + " outside declared range [" +
                                  std::to_string(spec->low) + ", " + std::to_string(spec->high) +
                                  "]");
        }
        LadderStep step;
        step.parameter = target.parameter;
        step.fromValue = get_parameter(current, target.parameter);
        step.toValue = target.bestValue;
        step.priceBefore = price;
        set_parameter(current, target.parameter, target.bestValue);
        step.priceAfter = plant_cost(current).breakevenPrice;
        price = step.priceAfter;
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<LadderTarget> builtin_ladder(RouteId route) {
    if (is_synthetic(route)) {
        return {
            {"required_irr", 0.05},
            {"capacity", 80000},
            {"electricity_price", 0.045},
            {"needle_coke", 350},
            {"spheronization.yield", 0.80},
            {"graphitization.throughput", 0.3},
        };
    }
    return {
        {"required_irr", 0.05},
        {"capacity", 80000},
        {"graphite_concentrate", 500},
        {"spheronization.yield", 0.80},
        {"purification.throughput", 0.8},
    };
}

IsoPriceLine iso_price_contour(double price, const FinanceSpec& fin) {
    if (!(price >= 0.0)) throw ValidationError("contour price must be >= 0");
    return {price, -crf(fin.requiredIRR, fin.paybackYears)};
}

std::string_view to_string(FurnaceVariant v) {
    return v == FurnaceVariant::Box ? "box" : "continuous";
}

FurnaceVariant parse_furnace_variant(std::string_view s) {
    if (s == "box") return FurnaceVariant::Box;
    if (s == "continuous") return FurnaceVariant::Continuous;
    throw ValidationError("unknown furnace variant '" + std::string(s) +
                          "' (valid: box, continuous)");
}

Scenario apply_furnace_variant(const Scenario& base, FurnaceVariant variant) {
    Scenario s = base;
    auto* stage = s.flowsheet.find("graphitization");
    if (!is_synthetic(s.flowsheet.routeId) || stage == nullptr ||
        stage->technology != Technology::Acheson) {
        throw ValidationError("furnace variants apply only to SG scenarios with an Acheson stage");
    }

    pin_param(s, "graphitization.crucible", 0.0);
    pin_param(s, "graphitization.packing_material", 0.0);

    if (variant == FurnaceVariant::Box) {
        s.flowsheet.find("graphitization")->technology = Technology::Box;
        s.flowsheet.routeId = RouteId::SG_box;
        scale_param(s, "graphitization.throughput", 1.10);
        scale_param(s, "graphitization.electricity", 0.60);
    } else {
        s.flowsheet.find("graphitization")->technology = Technology::Continuous;
        s.flowsheet.routeId = RouteId::SG_continuous;
        // 6-8 kWh/kg induction heating.
        if (auto* spec = s.find_param("graphitization.electricity")) {
            *spec = ParameterSpec::uniform(spec->id, spec->unit, 7000, 6000, 8000, spec->region);
        }
        set_parameter(s, "graphitization.electricity", 7000);
        const bool lump = s.flowsheet.find("graphitization")->totalCapexPerLineOverride.has_value();
        for (const char* id : {"graphitization.equipment", "graphitization.other_capex",
                               "graphitization.construction_hours"}) {
            scale_param(s, id, 1.25);
        }
        if (lump) scale_param(s, "graphitization.capex_override", 1.25);
    }
    return s;
}

double alt_route_headroom(const CostBreakdown& reference, double targetPrice,
                          const std::set<std::string>& avoided) {
    for (const auto& id : avoided) {
        if (id != "plant" && reference.find_stage(id) == nullptr) {
            throw ValidationError("avoided stage '" + id + "' is not in the reference breakdown");
        }
    }
    double remaining = 0.0;
    for (const auto& sc : reference.stages) {
        if (avoided.count(sc.id) == 0) remaining += sc.costs.total();
    }
    if (avoided.count("plant") == 0) remaining += reference.plant.total();
    return targetPrice - remaining;
}

DisruptionResult disruption_impact(double priceBeforePerKg, double priceAfterPerKg, double kgPerEV,
                                   const MarketCalibration& cal) {
    if (!(priceBeforePerKg >= 0.0)) throw ValidationError("price before must be >= 0");
    if (!(priceAfterPerKg >= priceBeforePerKg)) {
        throw ValidationError("price after must be >= price before");
    }
    if (!(kgPerEV > 0.0)) throw ValidationError("kg per EV must be > 0");
    if (!(cal.referenceSubsidy > 0.0)) throw ValidationError("reference subsidy must be > 0");

    DisruptionResult r;
    r.evCostDelta = (priceAfterPerKg - priceBeforePerKg) * kgPerEV;
    const double scale = r.evCostDelta / cal.referenceSubsidy;
    r.salesDropFraction = scale * cal.salesDropAtReference;
    r.producerDelta = -scale * cal.producerSurplusAtReference;
    r.consumerDelta = -scale * cal.consumerSurplusAtReference;
    return r;
}

}  // namespace graphcost
