#pragma once

// Stage-by-stage CapEx/OpEx breakdown for a route, region and capacity.

#include <map>
#include <string>
#include <vector>

#include "graphcost/finance.hpp"
#include "graphcost/flowsheet.hpp"

namespace graphcost {

/// A region's price environment.
struct CostFactors {
    Region region = Region::US;
    double electricityPrice = 0.0;  // $/kWh
    double salary = 0.0;            // $/FTE-year
    double constructionRate = 0.0;  // $/hour
    double maintenanceRate = 0.0;   // fraction of initial CapEx per year
    double salesRate = 0.0;         // fraction of the other OpEx
    double scalingExponent = 0.7;
    std::map<std::string, double> materialPrices;  // $/unit

    /// Throws ValidationError naming the material when no price is configured.
    double price_of(const std::string& material) const;
};

std::vector<std::string> validate_cost_factors(const CostFactors& cf);

/// Fully specified model input: one route in one region.
struct Scenario {
    std::string name;
    Region region = Region::US;
    Flowsheet flowsheet;
    PlantSpec plant;
    CostFactors factors;
    FinanceSpec finance;
    /// Declared baselines and ranges for the uncertain inputs.
    std::vector<ParameterSpec> params;

    const ParameterSpec* find_param(std::string_view id) const;
    ParameterSpec* find_param(std::string_view id);
};

/// Per-tonne-of-product costs by category. `annualizedCapex` is the only
/// capital category; everything else is OpEx.
struct CategoryCosts {
    double annualizedCapex = 0.0;
    double feedstock = 0.0;
    double electricity = 0.0;
    double labor = 0.0;
    double consumables = 0.0;
    double maintenance = 0.0;
    double generalAdmin = 0.0;
    double sales = 0.0;

    double opex() const {
        return feedstock + electricity + labor + consumables + maintenance + generalAdmin + sales;
    }
    double total() const { return annualizedCapex + opex(); }

    CategoryCosts& operator+=(const CategoryCosts& o);
};

struct StageCost {
    std::string id;
    int lines = 0;
    double feedPerTonne = 1.0;
    double capex = 0.0;  // initial, $
    CategoryCosts costs;
};

struct CostBreakdown {
    std::vector<StageCost> stages;
    double plantCapex = 0.0;
    CategoryCosts plant;
    CategoryCosts totals;
    double capacity = 0.0;
    double totalCapex = 0.0;
    double capitalIntensity = 0.0;  // $ per t/yr
    double capitalRecoveryFactor = 0.0;
    double totalOpexPerTonne = 0.0;
    double breakevenPrice = 0.0;

    const StageCost* find_stage(std::string_view id) const;
};

/// Initial capital for `lines` parallel lines of a stage. A per-line lump
/// override replaces equipment + other capex; construction hours are always
/// charged at the regional rate.
double stage_capex(const StageSpec& stage, int lines, const CostFactors& cf);

/// Stage OpEx per tonne of product, excluding maintenance and sales (which
/// depend on plant totals). Feedstock is charged at the first stage only.
CategoryCosts stage_opex(const StageSpec& stage, const Flowsheet& flowsheet, const PlantSpec& plant,
                         const CostFactors& cf, int lines);

/// Plant-level capital, power-law scaled from the reference capacity.
double plant_lump_capex(const PlantSpec& plant, const CostFactors& cf);

CostBreakdown plant_cost(const Scenario& scenario);

/// Every invariant violation in a scenario, each prefixed with the offending field.
std::vector<std::string> validate_scenario(const Scenario& scenario);

}  // namespace graphcost
