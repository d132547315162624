#include "graphcost/costing.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "graphcost/error.hpp"

namespace graphcost {

double CostFactors::price_of(const std::string& material) const {
    auto it = materialPrices.find(material);
    if (it == materialPrices.end()) {
        throw ValidationError("no price configured for material '" + material + "'");
    }
    return it->second;
}

std::vector<std::string> validate_cost_factors(const CostFactors& cf) {
    std::vector<std::string> out;
    if (!(cf.electricityPrice >= 0.0)) out.emplace_back("electricity_price: must be >= 0");
    if (!(cf.salary >= 0.0)) out.emplace_back("salary: must be >= 0");
    if (!(cf.constructionRate >= 0.0)) out.emplace_back("construction_rate: must be >= 0");
    if (!(cf.maintenanceRate >= 0.0 && cf.maintenanceRate < 1.0)) {
        out.emplace_back("maintenance_rate: must be in [0, 1)");
    }
    if (!(cf.salesRate >= 0.0 && cf.salesRate < 1.0)) out.emplace_back("sales_rate: must be in [0, 1)");
    if (!(cf.scalingExponent > 0.0 && cf.scalingExponent <= 1.0)) {
        out.emplace_back("scaling_exponent: must be in (0, 1]");
    }
    for (const auto& [material, price] : cf.materialPrices) {
        if (!(price >= 0.0)) out.push_back(material + ": price must be >= 0");
    }
    return out;
}

const ParameterSpec* Scenario::find_param(std::string_view id) const {
    auto it = std::find_if(params.begin(), params.end(),
                           [&](const ParameterSpec& p) { return p.id == id; });
    return it == params.end() ? nullptr : &*it;
}

ParameterSpec* Scenario::find_param(std::string_view id) {
    return const_cast<ParameterSpec*>(std::as_const(*this).find_param(id));
}

CategoryCosts& CategoryCosts::operator+=(const CategoryCosts& o) {
    annualizedCapex += o.annualizedCapex;
    feedstock += o.feedstock;
    electricity += o.electricity;
    labor += o.labor;
    consumables += o.consumables;
    maintenance += o.maintenance;
    generalAdmin += o.generalAdmin;
    sales += o.sales;
    return *this;
}

const StageCost* CostBreakdown::find_stage(std::string_view id) const {
    auto it = std::find_if(stages.begin(), stages.end(),
                           [&](const StageCost& s) { return s.id == id; });
    return it == stages.end() ? nullptr : &*it;
}

double stage_capex(const StageSpec& stage, int lines, const CostFactors& cf) {
    if (lines < 0) throw ValidationError(stage.id + ": negative line count");
    const double perLineBase = stage.totalCapexPerLineOverride
                                   ? *stage.totalCapexPerLineOverride
                                   : stage.equipmentCostPerLine + stage.otherCapexPerLine;
    const double perLine = perLineBase + stage.constructionHoursPerLine * cf.constructionRate;
    if (perLineBase < 0.0 || stage.constructionHoursPerLine < 0.0 || cf.constructionRate < 0.0) {
        throw ValidationError(stage.id + ": negative capital input");
    }
    return lines * perLine;
}

CategoryCosts stage_opex(const StageSpec& stage, const Flowsheet& flowsheet, const PlantSpec& plant,
                         const CostFactors& cf, int lines) {
    if (!(plant.capacity > 0.0)) throw ValidationError("capacity: must be > 0");
    const double feed = feed_per_tonne(flowsheet, stage.id);

    CategoryCosts c;
    c.electricity = stage.electricity * feed * cf.electricityPrice;
    c.labor = lines * stage.lineFTE * cf.salary / plant.capacity;
    for (const auto& item : stage.consumables) {
        c.consumables += item.effective_rate() * cf.price_of(item.material) * feed;
    }
    if (!flowsheet.stages.empty() && flowsheet.stages.front().id == stage.id) {
        c.feedstock = cf.price_of(flowsheet.feedMaterial) * feed;
    }
    return c;
}

double plant_lump_capex(const PlantSpec& plant, const CostFactors& cf) {
    if (!(plant.capacity > 0.0)) throw ValidationError("capacity: must be > 0");
    const double base = plant.totalCapexOverride
                            ? *plant.totalCapexOverride
                            : plant.plantEquipment + plant.plantOtherCapex;
    const double unscaled = base + plant.plantConstructionHours * cf.constructionRate;
    return unscaled * std::pow(plant.capacity / plant.referenceCapacity, cf.scalingExponent);
}

CostBreakdown plant_cost(const Scenario& scenario) {
    if (auto v = validate_scenario(scenario); !v.empty()) throw ValidationError(v.front());

    const auto& fs = scenario.flowsheet;
    const auto& plant = scenario.plant;
    const auto& cf = scenario.factors;
    const double cap = plant.capacity;

    CostBreakdown out;
    out.capacity = cap;
    out.capitalRecoveryFactor = crf(scenario.finance.requiredIRR, scenario.finance.paybackYears);

    for (const auto& stage : fs.stages) {
        StageCost sc;
        sc.id = stage.id;
        sc.feedPerTonne = feed_per_tonne(fs, stage.id);
        sc.lines = line_count(stage, cap * sc.feedPerTonne, plant.uptime);
        sc.capex = stage_capex(stage, sc.lines, cf);
        sc.costs = stage_opex(stage, fs, plant, cf, sc.lines);
        out.stages.push_back(std::move(sc));
    }

    out.plantCapex = plant_lump_capex(plant, cf);
    out.plant.labor = plant.plantFTE * cf.salary / cap;
    out.plant.electricity = plant.plantElectricity * cf.electricityPrice;
    out.plant.consumables = plant.annualConsumables / cap;
    out.plant.generalAdmin = plant.annualGA / cap;

    out.totalCapex = out.plantCapex;
    for (const auto& sc : out.stages) out.totalCapex += sc.capex;
    out.capitalIntensity = out.totalCapex / cap;

    // Maintenance follows each row's own capital, so it sums to rate * total / capacity.
    auto finish_row = [&](CategoryCosts& row, double rowCapex) {
        row.annualizedCapex = rowCapex * out.capitalRecoveryFactor / cap;
        row.maintenance = cf.maintenanceRate * rowCapex / cap;
        row.sales = cf.salesRate * row.opex();
    };
    for (auto& sc : out.stages) finish_row(sc.costs, sc.capex);
    finish_row(out.plant, out.plantCapex);

    for (const auto& sc : out.stages) out.totals += sc.costs;
    out.totals += out.plant;
    out.totalOpexPerTonne = out.totals.opex();
    out.breakevenPrice = out.totalOpexPerTonne + out.capitalIntensity * out.capitalRecoveryFactor;
    return out;
}

std::vector<std::string> validate_scenario(const Scenario& scenario) {
    std::vector<std::string> out = validate_flowsheet(scenario.flowsheet);
    auto append = [&](std::vector<std::string> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    };
    append(validate_plant(scenario.plant));
    append(validate_cost_factors(scenario.factors));
    if (!(scenario.finance.requiredIRR >= 0.0)) out.emplace_back("required_irr: must be >= 0");
    if (scenario.finance.paybackYears < 1) out.emplace_back("payback_years: must be >= 1");
    for (const auto& p : scenario.params) {
        if (auto v = p.violation(); !v.empty()) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace graphcost
