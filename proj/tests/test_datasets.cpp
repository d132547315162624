#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "graphcost/datasets.hpp"
#include "graphcost/error.hpp"
#include "graphcost/parameters.hpp"

using namespace graphcost;

TEST_CASE("built-in scenarios load and validate") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto s = load_builtin(name);
        CHECK(validate_scenario(s).empty());
        CHECK(s.name == name);
    }
    CHECK_THROWS_AS(load_builtin("MARS_SG"), ValidationError);
}

TEST_CASE("US SG needle coke price and range") {
    const auto s = load_builtin("US_SG");
    const auto* p = s.find_param("needle_coke");
    REQUIRE(p != nullptr);
    CHECK(p->baseline == 650);
    CHECK(p->low == 350);
    CHECK(p->high == 950);
    CHECK(p->distribution == Distribution::Uniform);
    CHECK(s.factors.price_of("needle_coke") == 650);
    CHECK(s.flowsheet.feedMaterial == "needle_coke");
}

TEST_CASE("China NG uses acid leach with HF") {
    const auto s = load_builtin("CN_NG");
    const auto* pur = s.flowsheet.find("purification");
    REQUIRE(pur != nullptr);
    CHECK(pur->technology == Technology::AcidLeach);
    const auto* hf = pur->find_consumable("HF");
    REQUIRE(hf != nullptr);
    CHECK(hf->rate == doctest::Approx(0.35));
    CHECK(s.flowsheet.routeId == RouteId::NG_acid_leach);
}

TEST_CASE("US NG carbochlorination throughput") {
    const auto s = load_builtin("US_NG");
    const auto* pur = s.flowsheet.find("purification");
    REQUIRE(pur != nullptr);
    CHECK(pur->technology == Technology::Carbochlorination);
    CHECK(pur->throughputPerLine == doctest::Approx(0.55));
    const auto* p = s.find_param("purification.throughput");
    REQUIRE(p != nullptr);
    CHECK(p->low == doctest::Approx(0.3));
    CHECK(p->high == doctest::Approx(0.8));
}

TEST_CASE("declared baselines agree with scenario values") {
    for (const auto& name : builtin_names()) {
        const auto s = load_builtin(name);
        for (const auto& p : s.params) {
            CAPTURE(name);
            CAPTURE(p.id);
            REQUIRE(has_parameter(s, p.id));
            CHECK(get_parameter(s, p.id) == doctest::Approx(p.baseline));
            CHECK(p.violation().empty());
        }
    }
}

TEST_CASE("manifest rows are well formed") {
    const auto& rows = dataset_manifest();
    CHECK(rows.size() > 50);
    std::set<std::string> tables;
    for (const auto& r : rows) {
        CAPTURE(r.label);
        CHECK_FALSE(r.spec.id.empty());
        CHECK(r.spec.violation().empty());
        tables.insert(r.table);
    }
    CHECK(tables.size() >= 8);
}

TEST_CASE("reported projects reproduce published totals") {
    const auto start = std::chrono::steady_clock::now();
    const FinanceSpec fin;
    const auto& projects = reported_projects();
    REQUIRE(projects.size() == 9);
    const double expected[] = {4005, 5092, 8011, 7224, 7361, 7758, 8435, 9985, 10385};
    for (std::size_t i = 0; i < projects.size(); ++i) {
        CAPTURE(projects[i].owner);
        CHECK(std::fabs(adjust_reported(projects[i], fin) - expected[i]) <= 2.0);
        CHECK(projects[i].publishedTotal == expected[i]);
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(elapsed < std::chrono::seconds(1));
}

TEST_CASE("NextSource and NOVONIX by hand") {
    const FinanceSpec fin;
    const double c = 0.15 * std::pow(1.15, 10) / (std::pow(1.15, 10) - 1);
    CHECK(std::fabs(4571 + 280e6 * c / 20000 - 7361) <= 2);
    CHECK(std::fabs(5500 + 760e6 * c / 31000 - 10385) <= 2);
    ReportedProject zero{"zero", 2024, "x", "Acid", 1000, 0, 4321, {}, "", 4321};
    CHECK(adjust_reported(zero, fin) == doctest::Approx(4321));
}

TEST_CASE("adjustments apply in order") {
    const FinanceSpec fin;
    ReportedProject p{"p", 2024, "x", "Acid", 10000, 10e6, 1000,
                      {{AdjustmentKind::AddCapex, 10e6}, {AdjustmentKind::AddOpexPerTonne, 500},
                       {AdjustmentKind::CapacityOverride, 20000}},
                      "", 0};
    CHECK(adjust_reported(p, fin) == doctest::Approx(1500 + 20e6 * crf(0.15, 10) / 20000));
    p.adjustments = {{AdjustmentKind::CapacityOverride, 0}};
    CHECK_THROWS_AS(adjust_reported(p, fin), ValidationError);
}

TEST_CASE("parameter registry") {
    auto s = load_builtin("US_SG");
    CHECK(has_parameter(s, "graphitization.throughput"));
    CHECK(has_parameter(s, "crucible"));
    CHECK_FALSE(has_parameter(s, "graphitization.flux_capacitor"));
    CHECK_THROWS_AS(get_parameter(s, "nonsense"), ValidationError);
    CHECK_THROWS_AS(set_parameter(s, "nonsense", 1), ValidationError);

    set_parameter(s, "graphitization.throughput", 0.3);
    CHECK(s.flowsheet.find("graphitization")->throughputPerLine == 0.3);
    set_parameter(s, "payback_years", 12.4);
    CHECK(s.finance.paybackYears == 12);
    set_parameter(s, "graphitization.crucible_lifetime", 4.6);
    CHECK(s.flowsheet.find("graphitization")->find_consumable("crucible")->lifetimeUses == 5);

    // every listed id round-trips through get and set
    for (const auto& id : parameter_ids(s)) {
        CAPTURE(id);
        if (!has_parameter(s, id)) continue;
        double v = 0;
        try {
            v = get_parameter(s, id);
        } catch (const ValidationError&) {
            continue;  // unset optional field
        }
        auto copy = s;
        set_parameter(copy, id, v);
        CHECK(get_parameter(copy, id) == doctest::Approx(v));
    }

    auto ng = load_builtin("US_NG");
    CHECK(has_parameter(ng, "crucible"));
}

TEST_CASE("manifest holds every table row exactly once") {
    // rows per assumption table; the cost-factor table has a US and a China column
    const std::map<std::string, std::size_t> expected{{"1a", 8}, {"1b", 11}, {"1c", 9},  {"1d", 11}, {"2a", 8},
                                                      {"2b", 7}, {"2c", 11}, {"2e", 10}, {"CF", 32}};
    std::map<std::string, std::size_t> counts;
    std::set<std::tuple<std::string, std::string, Region>> seen;
    for (const auto& r : dataset_manifest()) {
        ++counts[r.table];
        CHECK(seen.insert({r.table, r.label, r.spec.region == RegionScope::China ? Region::China : Region::US})
                  .second);
    }
    CHECK(counts == expected);
}
