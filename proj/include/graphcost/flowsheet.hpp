#pragma once

// Process routes as ordered stages, the yield cascade and line sizing.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphcost {

inline constexpr double kHoursPerYear = 8760.0;

enum class Region { US, China };
enum class RegionScope { US, China, Both };
enum class Distribution { Uniform, Fixed };

enum class StageFunction { Shaping, Graphitization, Purification, Coating };

enum class Technology {
    Spheronization,
    Acheson,
    Box,
    Continuous,
    Carbochlorination,
    AcidLeach,
    PitchCoat,
};

enum class RouteId { SG_acheson, SG_box, SG_continuous, NG_carbochlorination, NG_acid_leach };

std::string_view to_string(Region r);
std::string_view to_string(RegionScope r);
std::string_view to_string(Distribution d);
std::string_view to_string(StageFunction f);
std::string_view to_string(Technology t);
std::string_view to_string(RouteId r);

Region parse_region(std::string_view s);
RouteId parse_route(std::string_view s);

bool is_synthetic(RouteId r);
bool applies_to(RegionScope scope, Region region);

/// One uncertain model input.
struct ParameterSpec {
    std::string id;
    std::string unit;
    double baseline = 0.0;
    double low = 0.0;
    double high = 0.0;
    Distribution distribution = Distribution::Fixed;
    RegionScope region = RegionScope::Both;

    static ParameterSpec fixed(std::string id, std::string unit, double value,
                               RegionScope region = RegionScope::Both);
    static ParameterSpec uniform(std::string id, std::string unit, double baseline, double low,
                                 double high, RegionScope region = RegionScope::Both);

    /// Empty when the invariants hold, otherwise a description of the first violation.
    std::string violation() const;
};

struct ConsumableRate {
    std::string material;
    double rate = 0.0;     // units per tonne of stage feed
    int lifetimeUses = 1;  // > 1 only for reusable items (crucibles)

    double effective_rate() const { return rate / lifetimeUses; }
};

struct StageSpec {
    std::string id;
    StageFunction function = StageFunction::Shaping;
    Technology technology = Technology::Spheronization;
    double throughputPerLine = 1.0;  // t feed / h
    double yieldFraction = 1.0;
    double electricity = 0.0;  // kWh / t feed
    double lineFTE = 0.0;
    double equipmentCostPerLine = 0.0;
    double constructionHoursPerLine = 0.0;
    double otherCapexPerLine = 0.0;
    std::optional<double> totalCapexPerLineOverride;
    std::vector<ConsumableRate> consumables;

    ConsumableRate* find_consumable(std::string_view material);
    const ConsumableRate* find_consumable(std::string_view material) const;
};

struct Flowsheet {
    RouteId routeId = RouteId::SG_acheson;
    std::vector<StageSpec> stages;
    std::string feedMaterial;

    std::size_t index_of(std::string_view stageId) const;  // throws ValidationError if absent
    StageSpec* find(std::string_view stageId);
    const StageSpec* find(std::string_view stageId) const;
};

struct PlantSpec {
    double capacity = 45000.0;  // t product / yr
    double uptime = 0.9;
    double plantFTE = 0.0;
    double plantEquipment = 0.0;
    double plantOtherCapex = 0.0;
    double plantConstructionHours = 0.0;
    double annualConsumables = 0.0;
    double annualGA = 0.0;
    double plantElectricity = 0.0;  // kWh / t product
    double referenceCapacity = 45000.0;
    /// Regions that report a single plant-level lump replace equipment + other capex with it.
    std::optional<double> totalCapexOverride;
};

/// Tonnes of `stageId` feed needed per tonne of final product.
double feed_per_tonne(const Flowsheet& flowsheet, std::string_view stageId);

/// Annual feed entering `stageId` for the plant's product capacity.
double stage_feed_tonnage(const PlantSpec& plant, const Flowsheet& flowsheet,
                          std::string_view stageId);

/// Parallel lines needed to process `annualFeed` at the given uptime.
int line_count(const StageSpec& stage, double annualFeed, double uptime);

/// Stage-order and range checks. Each entry names the offending field.
std::vector<std::string> validate_flowsheet(const Flowsheet& flowsheet);
std::vector<std::string> validate_plant(const PlantSpec& plant);

}  // namespace graphcost
