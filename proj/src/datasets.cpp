#include "graphcost/datasets.hpp"

#include <algorithm>
#include <cstdlib>

#include "graphcost/analysis.hpp"
#include "graphcost/error.hpp"
#include "graphcost/parameters.hpp"

namespace graphcost {

namespace {

constexpr auto US = RegionScope::US;
constexpr auto CN = RegionScope::China;
constexpr auto Both = RegionScope::Both;
constexpr auto SG = RouteScope::Synthetic;
constexpr auto NG = RouteScope::Natural;
constexpr auto AnyRoute = RouteScope::Any;

ParameterSpec pct(const char* id, const char* unit, double base, double fraction,
                  RegionScope region = Both) {
    return ParameterSpec::uniform(id, unit, base, base * (1.0 - fraction), base * (1.0 + fraction),
                                  region);
}

ParameterSpec span(const char* id, const char* unit, double base, double low, double high,
                   RegionScope region = Both) {
    return ParameterSpec::uniform(id, unit, base, low, high, region);
}

ParameterSpec plus_minus(const char* id, const char* unit, double base, double delta,
                         RegionScope region = Both) {
    return ParameterSpec::uniform(id, unit, base, base - delta, base + delta, region);
}

ParameterSpec fixed(const char* id, const char* unit, double value, RegionScope region = Both) {
    return ParameterSpec::fixed(id, unit, value, region);
}

constexpr double M = 1e6;

// Shaping rows shared by both routes, differing only in yield.
void add_shaping(std::vector<DatasetRow>& rows, const char* table, RouteScope route,
                 double yield) {
    auto add = [&](const char* label, ParameterSpec spec) {
        rows.push_back({table, label, route, std::move(spec)});
    };
    add("Throughput", pct("spheronization.throughput", "t/h", 2.5, 0.25));
    add("Electricity", pct("spheronization.electricity", "kWh/t", 2200, 0.25));
    add("Labour", pct("spheronization.fte", "FTE", 8, 0.25));
    add("Equipment Cost (US)", pct("spheronization.equipment", "$", 17.5 * M, 0.25, US));
    add("Construction Labour (US)", pct("spheronization.construction_hours", "h", 79000, 0.25, US));
    add("Other CAPEX (US)", pct("spheronization.other_capex", "$", 6.5 * M, 0.25, US));
    add("Total CAPEX (China)", pct("spheronization.capex_override", "$", 8 * M, 0.25, CN));
    add("Yield", span("spheronization.yield", "fraction", yield, 0.40, 0.80));
}

std::vector<DatasetRow> build_manifest() {
    std::vector<DatasetRow> rows;
    auto add = [&](const char* table, const char* label, RouteScope route, ParameterSpec spec) {
        rows.push_back({table, label, route, std::move(spec)});
    };

    add_shaping(rows, "1a", SG, 0.70);

    add("1b", "Throughput", SG, span("graphitization.throughput", "t/h", 0.22, 0.1, 0.3));
    add("1b", "Electricity", SG, pct("graphitization.electricity", "kWh/t", 15000, 0.25));
    add("1b", "Labour", SG, pct("graphitization.fte", "FTE", 3, 0.25));
    add("1b", "Equipment Cost (US)", SG, pct("graphitization.equipment", "$", 6.8 * M, 0.25, US));
    add("1b", "Other CAPEX (US)", SG, pct("graphitization.other_capex", "$", 5.7 * M, 0.25, US));
    add("1b", "Construction Labour (US)", SG,
        pct("graphitization.construction_hours", "h", 47000, 0.25, US));
    add("1b", "Total CAPEX (China)", SG,
        pct("graphitization.capex_override", "$", 4.7 * M, 0.25, CN));
    add("1b", "Yield", SG, fixed("graphitization.yield", "fraction", 1.0));
    add("1b", "Crucible", SG, fixed("graphitization.crucible", "#/t", 10));
    add("1b", "Crucible Lifetime", SG, plus_minus("graphitization.crucible_lifetime", "#", 5, 1));
    add("1b", "Packing material", SG, fixed("graphitization.packing_material", "t/t", 2));

    // Coating is shared by both routes.
    add("1c", "Throughput", AnyRoute, pct("coating.throughput", "t/h", 0.83, 0.25));
    add("1c", "Electricity", AnyRoute, pct("coating.electricity", "kWh/t", 391, 0.25));
    add("1c", "Nitrogen", AnyRoute, fixed("coating.nitrogen", "t/t", 0.725));
    add("1c", "Labour", AnyRoute, pct("coating.fte", "FTE", 5, 0.25));
    add("1c", "Equipment Cost", AnyRoute, pct("coating.equipment", "$", 10.5 * M, 0.25, US));
    add("1c", "Construction Labour", AnyRoute, pct("coating.construction_hours", "h", 53000, 0.25));
    add("1c", "Other CAPEX", AnyRoute, pct("coating.other_capex", "$", 4.8 * M, 0.25, US));
    add("1c", "CAPEX (China)", AnyRoute, pct("coating.capex_override", "$", 10.5 * M, 0.25, CN));
    add("1c", "Yield", AnyRoute, fixed("coating.yield", "fraction", 1.0));

    add("1d", "Capacity", SG, span("capacity", "t/yr", 45000, 20000, 80000));
    add("1d", "Labour", SG, pct("plant_fte", "FTE", 90, 0.10));
    add("1d", "Equipment Cost", SG, pct("plant_equipment", "$", 22 * M, 0.25, US));
    add("1d", "Equipment Cost (China)", SG, pct("plant_equipment", "$", 7 * M, 0.25, CN));
    add("1d", "Construction Labour", SG, pct("plant_construction_hours", "h", 180000, 0.25));
    add("1d", "Other CAPEX", SG, pct("plant_other_capex", "$", 129 * M, 0.25, US));
    add("1d", "Other CAPEX (China)", SG, pct("plant_other_capex", "$", 47 * M, 0.25, CN));
    add("1d", "Consumable Cost", SG, pct("plant_consumables", "$/yr", 13 * M, 0.25));
    add("1d", "G&A Cost", SG, pct("plant_ga", "$/yr", 11 * M, 0.25));
    add("1d", "Uptime", SG, pct("uptime", "fraction", 0.90, 0.05));
    add("1d", "Electricity", SG, pct("plant_electricity", "kWh/t", 2166, 0.10));

    add_shaping(rows, "2a", NG, 0.50);

    add("2b", "Throughput", NG, span("purification.throughput", "t/h", 0.55, 0.3, 0.8, US));
    add("2b", "Electricity", NG, pct("purification.electricity", "kWh/t", 3427, 0.10, US));
    add("2b", "Labour", NG, pct("purification.fte", "FTE", 3, 0.10, US));
    add("2b", "Equipment cost (CAPEX)", NG, pct("purification.equipment", "$", 6.8 * M, 0.25, US));
    add("2b", "Construction Labour (CAPEX)", NG,
        pct("purification.construction_hours", "h", 47000, 0.25, US));
    add("2b", "Other CAPEX", NG, pct("purification.other_capex", "$", 17 * M, 0.25, US));
    add("2b", "Yield", NG, fixed("purification.yield", "fraction", 0.95, US));

    add("2c", "Throughput", NG, fixed("purification.throughput", "t/h", 3.6, CN));
    add("2c", "Electricity", NG, fixed("purification.electricity", "kWh/t", 180, CN));
    add("2c", "Water", NG, fixed("purification.water", "m3/t", 16.4, CN));
    add("2c", "Natural Gas", NG, fixed("purification.natural_gas", "m3/t", 150, CN));
    add("2c", "Lime", NG, fixed("purification.lime", "t/t", 0.5, CN));
    add("2c", "HCl", NG, fixed("purification.HCl", "t/t", 0.65, CN));
    add("2c", "HNO3", NG, fixed("purification.HNO3", "t/t", 0.15, CN));
    add("2c", "HF", NG, fixed("purification.HF", "t/t", 0.35, CN));
    add("2c", "Labour", NG, fixed("purification.fte", "FTE", 20, CN));
    add("2c", "CAPEX", NG, fixed("purification.capex_override", "$", 13 * M, CN));
    add("2c", "Yield", NG, fixed("purification.yield", "fraction", 0.95, CN));

    add("2e", "Capacity", NG, span("capacity", "t/yr", 45000, 20000, 80000));
    add("2e", "Labour", NG, pct("plant_fte", "FTE", 90, 0.10));
    add("2e", "Equipment Cost", NG, pct("plant_equipment", "$", 22 * M, 0.25, US));
    add("2e", "Construction Labour", NG, pct("plant_construction_hours", "h", 180000, 0.25));
    add("2e", "Other CAPEX", NG, pct("plant_other_capex", "$", 129 * M, 0.25, US));
    add("2e", "CAPEX (China)", NG, pct("plant_capex_override", "$", 45 * M, 0.25, CN));
    add("2e", "Consumable Cost", NG, pct("plant_consumables", "$/yr", 13 * M, 0.25));
    add("2e", "G&A Cost", NG, pct("plant_ga", "$/yr", 11 * M, 0.25));
    add("2e", "Uptime", NG, fixed("uptime", "fraction", 0.90));
    add("2e", "Electricity", NG, pct("plant_electricity", "kWh/t", 2166, 0.10));

    // Cost factors: one row per region.
    auto factor = [&](const char* label, ParameterSpec us, ParameterSpec cn) {
        us.region = US;
        cn.region = CN;
        add("CF", label, AnyRoute, std::move(us));
        add("CF", label, AnyRoute, std::move(cn));
    };
    factor("Electricity", plus_minus("electricity_price", "$/kWh", 0.065, 0.02),
           plus_minus("electricity_price", "$/kWh", 0.0553, 0.02));
    factor("Payback Period", fixed("payback_years", "years", 10), fixed("payback_years", "years", 10));
    factor("Required IRR", plus_minus("required_irr", "fraction", 0.15, 0.10),
           plus_minus("required_irr", "fraction", 0.15, 0.10));
    factor("Sales Rate", fixed("sales_rate", "fraction", 0.03), fixed("sales_rate", "fraction", 0.03));
    factor("Maintenance Rate", fixed("maintenance_rate", "fraction", 0.05),
           fixed("maintenance_rate", "fraction", 0.05));
    factor("Labour", plus_minus("salary", "$/yr", 100000, 20000),
           plus_minus("salary", "$/yr", 25000, 5000));
    factor("Scaling Factor", plus_minus("scaling_exponent", "", 0.7, 0.1),
           plus_minus("scaling_exponent", "", 0.7, 0.1));
    factor("Crucible", plus_minus("crucible", "$/unit", 250, 50), plus_minus("crucible", "$/unit", 200, 50));
    factor("Packing Material", plus_minus("packing_material", "$/t", 350, 100),
           plus_minus("packing_material", "$/t", 200, 50));
    factor("Chlorine", plus_minus("chlorine", "$/t", 690, 100), plus_minus("chlorine", "$/t", 690, 100));
    factor("Lime", plus_minus("lime", "$/t", 420, 100), plus_minus("lime", "$/t", 420, 100));
    factor("Nitrogen", plus_minus("nitrogen", "$/t", 250, 50), plus_minus("nitrogen", "$/t", 250, 50));
    factor("Pitch", plus_minus("pitch", "$/t", 700, 300), plus_minus("pitch", "$/t", 700, 300));
    factor("Needle Coke", plus_minus("needle_coke", "$/t", 650, 300),
           plus_minus("needle_coke", "$/t", 650, 300));
    factor("Graphite Concentrate", plus_minus("graphite_concentrate", "$/t", 800, 300),
           plus_minus("graphite_concentrate", "$/t", 750, 250));
    factor("Other Labour Rate", plus_minus("construction_rate", "$/h", 50, 10),
           fixed("construction_rate", "$/h", 5));
    return rows;
}

StageSpec make_stage(std::string id, StageFunction fn, Technology tech,
                     std::vector<std::string> materials) {
    StageSpec s;
    s.id = std::move(id);
    s.function = fn;
    s.technology = tech;
    for (auto& m : materials) s.consumables.push_back({std::move(m), 0.0, 1});
    return s;
}

// Route skeleton: stage order, technologies and the consumables each stage
// draws. Values are filled from the manifest.
Scenario skeleton(bool synthetic, Region region) {
    Scenario s;
    s.region = region;
    s.factors.region = region;
    auto& fs = s.flowsheet;
    fs.stages.push_back(
        make_stage("spheronization", StageFunction::Shaping, Technology::Spheronization, {}));
    if (synthetic) {
        fs.routeId = RouteId::SG_acheson;
        fs.feedMaterial = "needle_coke";
        fs.stages.push_back(make_stage("graphitization", StageFunction::Graphitization,
                                       Technology::Acheson, {"crucible", "packing_material"}));
    } else if (region == Region::US) {
        fs.routeId = RouteId::NG_carbochlorination;
        fs.feedMaterial = "graphite_concentrate";
        fs.stages.push_back(make_stage("purification", StageFunction::Purification,
                                       Technology::Carbochlorination, {"chlorine"}));
    } else {
        fs.routeId = RouteId::NG_acid_leach;
        fs.feedMaterial = "graphite_concentrate";
        fs.stages.push_back(make_stage("purification", StageFunction::Purification,
                                       Technology::AcidLeach,
                                       {"water", "natural_gas", "lime", "HCl", "HNO3", "HF"}));
    }
    fs.stages.push_back(make_stage("coating", StageFunction::Coating, Technology::PitchCoat,
                                   {"nitrogen", "pitch"}));

    // Inputs absent from the assumption tables (fixed, not sampled).
    auto& prices = s.factors.materialPrices;
    prices["water"] = 0.5;        // $/m3
    prices["natural_gas"] = 0.45; // $/m3
    prices["HCl"] = 30.0;         // $/t
    prices["HNO3"] = 280.0;       // $/t
    prices["HF"] = 700.0;         // $/t
    if (!synthetic && region == Region::US) {
        // Chlorine draw of the carbochlorination furnaces, t/t feed.
        fs.find("purification")->find_consumable("chlorine")->rate = 0.45;
    }
    return s;
}

Scenario build_core(bool synthetic, Region region, std::string name) {
    Scenario s = skeleton(synthetic, region);
    s.name = std::move(name);
    const RouteScope route = synthetic ? SG : NG;
    for (const auto& row : dataset_manifest()) {
        if (row.route != AnyRoute && row.route != route) continue;
        if (!applies_to(row.spec.region, region)) continue;
        set_parameter(s, row.spec.id, row.spec.baseline);
        ParameterSpec spec = row.spec;
        spec.region = region == Region::US ? US : CN;
        s.params.push_back(std::move(spec));
    }
    return s;
}

constexpr std::string_view kBuiltinNames[] = {"US_SG", "CN_SG", "US_NG", "CN_NG", "US_SG_box",
                                              "US_SG_continuous"};

}  // namespace

const std::vector<DatasetRow>& dataset_manifest() {
    static const std::vector<DatasetRow> rows = build_manifest();
    return rows;
}

std::vector<std::string> builtin_names() {
    return {std::begin(kBuiltinNames), std::end(kBuiltinNames)};
}

Scenario load_builtin(std::string_view name) {
    if (name == "US_SG") return build_core(true, Region::US, "US_SG");
    if (name == "CN_SG") return build_core(true, Region::China, "CN_SG");
    if (name == "US_NG") return build_core(false, Region::US, "US_NG");
    if (name == "CN_NG") return build_core(false, Region::China, "CN_NG");
    if (name == "US_SG_box") {
        Scenario s = apply_furnace_variant(load_builtin("US_SG"), FurnaceVariant::Box);
        s.name = name;
        return s;
    }
    if (name == "US_SG_continuous") {
        Scenario s = apply_furnace_variant(load_builtin("US_SG"), FurnaceVariant::Continuous);
        s.name = name;
        return s;
    }
    std::string valid;
    for (auto n : kBuiltinNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw ValidationError("unknown scenario '" + std::string(name) + "' (valid: " + valid + ")");
}

Scenario builtin_for(RouteId route, Region region) {
    const std::string prefix = region == Region::US ? "US_" : "CN_";
    switch (route) {
        case RouteId::SG_acheson: return load_builtin(prefix + "SG");
        case RouteId::SG_box:
        case RouteId::SG_continuous: {
            const auto variant =
                route == RouteId::SG_box ? FurnaceVariant::Box : FurnaceVariant::Continuous;
            Scenario s = apply_furnace_variant(load_builtin(prefix + "SG"), variant);
            s.name = prefix + "SG_" + std::string(to_string(variant));
            return s;
        }
        case RouteId::NG_carbochlorination:
        case RouteId::NG_acid_leach: {
            Scenario s = load_builtin(prefix + "NG");
            if (s.flowsheet.routeId != route) {
                throw ValidationError(std::string(to_string(route)) +
                                      " has no baseline data for region " +
                                      std::string(to_string(region)));
            }
            return s;
        }
    }
    throw ValidationError("unknown route");
}

std::string_view to_string(AdjustmentKind k) {
    switch (k) {
        case AdjustmentKind::AddOpexPerTonne: return "addOpexPerTonne";
        case AdjustmentKind::AddCapex: return "addCapex";
        case AdjustmentKind::CapacityOverride: return "capacityOverride";
    }
    return "addOpexPerTonne";
}

const std::vector<ReportedProject>& reported_projects() {
    using K = AdjustmentKind;
    static const std::vector<ReportedProject> projects = {
        {"Falcon", 2025, "Morocco", "Acid", 26000, 106 * M, 3193, {},
         "Chinese equipment; partnership with Hensen Graphite", 4005},
        {"Renascor", 2023, "Australia", "Acid-Alkali", 50000, 346 * M, 2334,
         {{K::CapacityOverride, 25000}},
         "50 ktpa uncoated spherical graphite, half battery-grade; reported CapEx/OpEx already "
         "include coating ($90M, $550/t)",
         5092},
        {"Syrah", 2023, "Louisiana, US", "Acid", 11250, 209 * M, 4310, {},
         "concentrate at $425/t from an integrated mine", 8011},
        {"NMG", 2022, "Canada", "Carbo-Chlor", 42000, 673 * M, 2631,
         {{K::AddOpexPerTonne, 1400}},
         "reported OpEx excludes concentrate: $700/t concentrate = $1400/t product", 7224},
        {"Next Source", 2024, "Saudi Arabia", "Acid", 20000, 280 * M, 4571, {}, "", 7361},
        {"Talga", 2021, "Sweden", "Acid-Alkali", 19500, 528 * M, 2363, {}, "", 7758},
        {"Graphite One", 2024, "Ohio, US", "Carbo-Chlor", 25000, 436 * M, 4960, {}, "", 8435},
        {"Anovion", 2023, "Georgia, US", "Synthetic", 40000, 800 * M, 6000, {},
         "OpEx not reported; $6000/t is an assumed value", 9985},
        {"NOVONIX", 2024, "Tennessee, US", "Synthetic", 31000, 760 * M, 5500, {},
         "harmonized cost of capital; actual financing may be cheaper", 10385},
    };
    return projects;
}

double adjust_reported(const ReportedProject& project, const FinanceSpec& fin) {
    double capacity = project.capacity;
    double capex = project.capex;
    double opex = project.opexPerTonne;
    for (const auto& a : project.adjustments) {
        switch (a.kind) {
            case AdjustmentKind::AddOpexPerTonne: opex += a.value; break;
            case AdjustmentKind::AddCapex: capex += a.value; break;
            case AdjustmentKind::CapacityOverride: capacity = a.value; break;
        }
    }
    if (!(capacity > 0.0)) {
        throw ValidationError(project.owner + ": capacity must be > 0 after adjustments");
    }
    return breakeven_price(capex, opex, capacity, fin);
}

}  // namespace graphcost
