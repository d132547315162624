#include "graphcost/flowsheet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <utility>

#include "graphcost/error.hpp"

namespace graphcost {

namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::array<std::pair<E, std::string_view>, N>& table,
             std::string_view what) {
    for (const auto& [value, name] : table) {
        if (name == s) return value;
    }
    std::string valid;
    for (const auto& [value, name] : table) {
        if (!valid.empty()) valid += ", ";
        valid += name;
    }
    throw ValidationError("unknown " + std::string(what) + " '" + std::string(s) +
                          "' (valid: " + valid + ")");
}

constexpr std::array<std::pair<Region, std::string_view>, 2> kRegions{{
    {Region::US, "US"},
    {Region::China, "China"},
}};

constexpr std::array<std::pair<RouteId, std::string_view>, 5> kRoutes{{
    {RouteId::SG_acheson, "SG_acheson"},
    {RouteId::SG_box, "SG_box"},
    {RouteId::SG_continuous, "SG_continuous"},
    {RouteId::NG_carbochlorination, "NG_carbochlorination"},
    {RouteId::NG_acid_leach, "NG_acid_leach"},
}};

int stage_rank(StageFunction f) {
    switch (f) {
        case StageFunction::Shaping: return 0;
        case StageFunction::Graphitization:
        case StageFunction::Purification: return 1;
        case StageFunction::Coating: return 2;
    }
    return 0;
}

}  // namespace

std::string_view to_string(Region r) {
    return r == Region::US ? "US" : "China";
}

std::string_view to_string(RegionScope r) {
    switch (r) {
        case RegionScope::US: return "US";
        case RegionScope::China: return "China";
        case RegionScope::Both: return "both";
    }
    return "both";
}

std::string_view to_string(Distribution d) {
    return d == Distribution::Uniform ? "uniform" : "fixed";
}

std::string_view to_string(StageFunction f) {
    switch (f) {
        case StageFunction::Shaping: return "shaping";
        case StageFunction::Graphitization: return "graphitization";
        case StageFunction::Purification: return "purification";
        case StageFunction::Coating: return "coating";
    }
    return "shaping";
}

std::string_view to_string(Technology t) {
    switch (t) {
        case Technology::Spheronization: return "spheronization";
        case Technology::Acheson: return "acheson";
        case Technology::Box: return "box";
        case Technology::Continuous: return "continuous";
        case Technology::Carbochlorination: return "carbochlorination";
        case Technology::AcidLeach: return "acid_leach";
        case Technology::PitchCoat: return "pitch_coat";
    }
    return "spheronization";
}

std::string_view to_string(RouteId r) {
    for (const auto& [value, name] : kRoutes) {
        if (value == r) return name;
    }
    return "SG_acheson";
}

Region parse_region(std::string_view s) {
    if (s == "CN") return Region::China;
    return parse_enum(s, kRegions, "region");
}

RouteId parse_route(std::string_view s) { return parse_enum(s, kRoutes, "route"); }

bool is_synthetic(RouteId r) {
    return r == RouteId::SG_acheson || r == RouteId::SG_box || r == RouteId::SG_continuous;
}

bool applies_to(RegionScope scope, Region region) {
    if (scope == RegionScope::Both) return true;
    return (scope == RegionScope::US) == (region == Region::US);
}

ParameterSpec ParameterSpec::fixed(std::string id, std::string unit, double value,
                                   RegionScope region) {
    return {std::move(id), std::move(unit), value, value, value, Distribution::Fixed, region};
}

ParameterSpec ParameterSpec::uniform(std::string id, std::string unit, double baseline,
                                     double low, double high, RegionScope region) {
    return {std::move(id), std::move(unit), baseline, low, high, Distribution::Uniform, region};
}

std::string ParameterSpec::violation() const {
    if (!std::isfinite(baseline) || !std::isfinite(low) || !std::isfinite(high)) {
        return id + ": non-finite value";
    }
    if (low > high) return id + ": range inverted (low > high)";
    if (baseline < low || baseline > high) return id + ": baseline outside [low, high]";
    if (distribution == Distribution::Fixed && (low != baseline || high != baseline)) {
        return id + ": fixed parameter must have low = baseline = high";
    }
    return {};
}

ConsumableRate* StageSpec::find_consumable(std::string_view material) {
    auto it = std::find_if(consumables.begin(), consumables.end(),
                           [&](const ConsumableRate& c) { return c.material == material; });
    return it == consumables.end() ? nullptr : &*it;
}

const ConsumableRate* StageSpec::find_consumable(std::string_view material) const {
    return const_cast<StageSpec*>(this)->find_consumable(material);
}

std::size_t Flowsheet::index_of(std::string_view stageId) const {
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (stages[i].id == stageId) return i;
    }
    throw ValidationError("unknown stage '" + std::string(stageId) + "' in route " +
                          std::string(to_string(routeId)));
}

StageSpec* Flowsheet::find(std::string_view stageId) {
    for (auto& s : stages) {
        if (s.id == stageId) return &s;
    }
    return nullptr;
}

const StageSpec* Flowsheet::find(std::string_view stageId) const {
    return const_cast<Flowsheet*>(this)->find(stageId);
}

double feed_per_tonne(const Flowsheet& flowsheet, std::string_view stageId) {
    const std::size_t first = flowsheet.index_of(stageId);
    double product = 1.0;
    for (std::size_t i = first; i < flowsheet.stages.size(); ++i) {
        const double y = flowsheet.stages[i].yieldFraction;
        if (!(y > 0.0 && y <= 1.0)) {
            throw ValidationError(flowsheet.stages[i].id + ".yield must be in (0, 1], got " +
                                  std::to_string(y));
        }
        product *= y;
    }
    return 1.0 / product;
}

double stage_feed_tonnage(const PlantSpec& plant, const Flowsheet& flowsheet,
                          std::string_view stageId) {
    return plant.capacity * feed_per_tonne(flowsheet, stageId);
}

int line_count(const StageSpec& stage, double annualFeed, double uptime) {
    if (!(stage.throughputPerLine > 0.0)) {
        throw ValidationError(stage.id + ".throughput must be > 0");
    }
    if (!(uptime > 0.0 && uptime <= 1.0)) throw ValidationError("uptime must be in (0, 1]");
    if (!(annualFeed >= 0.0)) throw ValidationError("annual feed must be >= 0");
    if (annualFeed == 0.0) return 0;
    const double perLine = stage.throughputPerLine * kHoursPerYear * uptime;
    return static_cast<int>(std::ceil(annualFeed / perLine));
}

std::vector<std::string> validate_flowsheet(const Flowsheet& flowsheet) {
    std::vector<std::string> out;
    if (flowsheet.stages.empty()) {
        out.emplace_back("flowsheet has no stages");
        return out;
    }
    std::set<std::string> seen;
    int prevRank = -1;
    for (const auto& s : flowsheet.stages) {
        if (!seen.insert(s.id).second) out.push_back(s.id + ": duplicate stage id");
        const int rank = stage_rank(s.function);
        if (rank < prevRank) {
            out.push_back(s.id + ": stage order violates shaping -> graphitization/purification -> coating");
        }
        prevRank = std::max(prevRank, rank);
        if (!(s.throughputPerLine > 0.0)) out.push_back(s.id + ".throughput: must be > 0");
        if (!(s.yieldFraction > 0.0 && s.yieldFraction <= 1.0)) {
            out.push_back(s.id + ".yield: must be in (0, 1]");
        }
        const std::pair<const char*, double> nonNegative[] = {
            {"electricity", s.electricity},
            {"fte", s.lineFTE},
            {"equipment", s.equipmentCostPerLine},
            {"construction_hours", s.constructionHoursPerLine},
            {"other_capex", s.otherCapexPerLine},
            {"capex_override", s.totalCapexPerLineOverride.value_or(0.0)},
        };
        for (const auto& [field, v] : nonNegative) {
            if (!(v >= 0.0)) out.push_back(s.id + "." + field + ": must be >= 0");
        }
        for (const auto& c : s.consumables) {
            if (!(c.rate >= 0.0)) out.push_back(s.id + "." + c.material + ": rate must be >= 0");
            if (c.lifetimeUses < 1) {
                out.push_back(s.id + "." + c.material + "_lifetime: must be >= 1");
            }
        }
    }
    if (flowsheet.stages.back().function != StageFunction::Coating) {
        out.emplace_back("flowsheet must end with a coating stage");
    }
    return out;
}

std::vector<std::string> validate_plant(const PlantSpec& plant) {
    std::vector<std::string> out;
    if (!(plant.capacity > 0.0)) out.emplace_back("capacity: must be > 0");
    if (!(plant.uptime > 0.0 && plant.uptime <= 1.0)) out.emplace_back("uptime: must be in (0, 1]");
    if (!(plant.referenceCapacity > 0.0)) out.emplace_back("reference_capacity: must be > 0");
    const std::pair<const char*, double> nonNegative[] = {
        {"plant_fte", plant.plantFTE},
        {"plant_equipment", plant.plantEquipment},
        {"plant_other_capex", plant.plantOtherCapex},
        {"plant_construction_hours", plant.plantConstructionHours},
        {"plant_consumables", plant.annualConsumables},
        {"plant_ga", plant.annualGA},
        {"plant_electricity", plant.plantElectricity},
        {"plant_capex_override", plant.totalCapexOverride.value_or(0.0)},
    };
    for (const auto& [field, v] : nonNegative) {
        if (!(v >= 0.0)) out.push_back(std::string(field) + ": must be >= 0");
    }
    return out;
}

}  // namespace graphcost
