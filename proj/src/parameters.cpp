#include "graphcost/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>
#include <variant>

#include "graphcost/error.hpp"

namespace graphcost {

namespace {

struct IntSlot {
    int* value;
    int minimum;
};

// A resolved parameter location inside a Scenario.
using Slot = std::variant<double*, IntSlot, std::optional<double>*>;

constexpr std::string_view kLifetimeSuffix = "_lifetime";

std::optional<Slot> resolve_stage(StageSpec& stage, std::string_view field) {
    if (field == "throughput") return Slot{&stage.throughputPerLine};
    if (field == "yield") return Slot{&stage.yieldFraction};
    if (field == "electricity") return Slot{&stage.electricity};
    if (field == "fte") return Slot{&stage.lineFTE};
    if (field == "equipment") return Slot{&stage.equipmentCostPerLine};
    if (field == "construction_hours") return Slot{&stage.constructionHoursPerLine};
    if (field == "other_capex") return Slot{&stage.otherCapexPerLine};
    if (field == "capex_override") return Slot{&stage.totalCapexPerLineOverride};
    if (field.size() > kLifetimeSuffix.size() && field.ends_with(kLifetimeSuffix)) {
        auto material = field.substr(0, field.size() - kLifetimeSuffix.size());
        if (auto* c = stage.find_consumable(material)) return Slot{IntSlot{&c->lifetimeUses, 1}};
        return std::nullopt;
    }
    if (auto* c = stage.find_consumable(field)) return Slot{&c->rate};
    return std::nullopt;
}

constexpr std::string_view kMaterials[] = {
    "needle_coke", "graphite_concentrate", "pitch", "nitrogen", "chlorine", "lime", "HCl",
    "HNO3", "HF", "water", "natural_gas", "crucible", "packing_material",
};

bool is_known_material(const Scenario& s, std::string_view id) {
    if (std::find(std::begin(kMaterials), std::end(kMaterials), id) != std::end(kMaterials)) {
        return true;
    }
    if (s.factors.materialPrices.count(std::string(id)) != 0) return true;
    if (s.flowsheet.feedMaterial == id) return true;
    for (const auto& stage : s.flowsheet.stages) {
        if (stage.find_consumable(id) != nullptr) return true;
    }
    return false;
}

std::optional<Slot> resolve(Scenario& s, std::string_view id) {
    if (auto dot = id.find('.'); dot != std::string_view::npos) {
        auto* stage = s.flowsheet.find(id.substr(0, dot));
        if (stage == nullptr) return std::nullopt;
        return resolve_stage(*stage, id.substr(dot + 1));
    }
    auto& cf = s.factors;
    auto& p = s.plant;
    if (id == "electricity_price") return Slot{&cf.electricityPrice};
    if (id == "salary") return Slot{&cf.salary};
    if (id == "construction_rate") return Slot{&cf.constructionRate};
    if (id == "maintenance_rate") return Slot{&cf.maintenanceRate};
    if (id == "sales_rate") return Slot{&cf.salesRate};
    if (id == "scaling_exponent") return Slot{&cf.scalingExponent};
    if (id == "required_irr") return Slot{&s.finance.requiredIRR};
    if (id == "payback_years") return Slot{IntSlot{&s.finance.paybackYears, 1}};
    if (id == "capacity") return Slot{&p.capacity};
    if (id == "uptime") return Slot{&p.uptime};
    if (id == "plant_fte") return Slot{&p.plantFTE};
    if (id == "plant_equipment") return Slot{&p.plantEquipment};
    if (id == "plant_other_capex") return Slot{&p.plantOtherCapex};
    if (id == "plant_construction_hours") return Slot{&p.plantConstructionHours};
    if (id == "plant_consumables") return Slot{&p.annualConsumables};
    if (id == "plant_ga") return Slot{&p.annualGA};
    if (id == "plant_electricity") return Slot{&p.plantElectricity};
    if (id == "reference_capacity") return Slot{&p.referenceCapacity};
    if (id == "plant_capex_override") return Slot{&p.totalCapexOverride};
    if (is_known_material(s, id)) return Slot{&cf.materialPrices[std::string(id)]};
    return std::nullopt;
}

[[noreturn]] void unknown(std::string_view id) {
    throw ValidationError("unknown parameter '" + std::string(id) + "'");
}

}  // namespace

bool has_parameter(const Scenario& scenario, std::string_view id) {
    // resolve() may insert a missing material price, so probe a copy.
    Scenario probe = scenario;
    return resolve(probe, id).has_value();
}

double get_parameter(const Scenario& scenario, std::string_view id) {
    if (!has_parameter(scenario, id)) unknown(id);
    auto& s = const_cast<Scenario&>(scenario);
    if (id.find('.') == std::string_view::npos && is_known_material(s, id)) {
        auto it = s.factors.materialPrices.find(std::string(id));
        if (it == s.factors.materialPrices.end()) {
            throw ValidationError("parameter '" + std::string(id) + "' is not set");
        }
        return it->second;
    }
    const Slot slot = *resolve(s, id);
    if (auto* d = std::get_if<double*>(&slot)) return **d;
    if (auto* i = std::get_if<IntSlot>(&slot)) return *i->value;
    const auto* opt = std::get<std::optional<double>*>(slot);
    if (!opt->has_value()) throw ValidationError("parameter '" + std::string(id) + "' is not set");
    return **opt;
}

void set_parameter(Scenario& scenario, std::string_view id, double value) {
    auto slot = resolve(scenario, id);
    if (!slot) unknown(id);
    if (auto* d = std::get_if<double*>(&*slot)) {
        **d = value;
    } else if (auto* i = std::get_if<IntSlot>(&*slot)) {
        if (!std::isfinite(value)) throw ValidationError(std::string(id) + ": non-finite value");
        *i->value = std::max(i->minimum, static_cast<int>(std::lround(value)));
    } else {
        *std::get<std::optional<double>*>(*slot) = value;
    }
}

std::vector<std::string> parameter_ids(const Scenario& scenario) {
    std::vector<std::string> ids = {
        "electricity_price", "salary", "construction_rate", "maintenance_rate", "sales_rate",
        "scaling_exponent", "required_irr", "payback_years", "capacity", "uptime", "plant_fte",
        "plant_equipment", "plant_other_capex", "plant_construction_hours", "plant_consumables",
        "plant_ga", "plant_electricity", "reference_capacity", "plant_capex_override",
    };
    for (const auto& [material, price] : scenario.factors.materialPrices) ids.push_back(material);
    for (const auto& stage : scenario.flowsheet.stages) {
        for (const char* field : {"throughput", "yield", "electricity", "fte", "equipment",
                                  "construction_hours", "other_capex", "capex_override"}) {
            ids.push_back(stage.id + "." + field);
        }
        for (const auto& c : stage.consumables) {
            ids.push_back(stage.id + "." + c.material);
            ids.push_back(stage.id + "." + c.material + std::string(kLifetimeSuffix));
        }
    }
    return ids;
}

}  // namespace graphcost
