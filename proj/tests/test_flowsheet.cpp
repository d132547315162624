#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphcost/datasets.hpp"
#include "graphcost/error.hpp"
#include "graphcost/flowsheet.hpp"
#include "oracles.hpp"

using namespace graphcost;

TEST_CASE("feed per tonne along the SG cascade") {
    const auto s = load_builtin("US_SG");
    CHECK(feed_per_tonne(s.flowsheet, "spheronization") == doctest::Approx(1.0 / 0.7));
    CHECK(feed_per_tonne(s.flowsheet, "spheronization") * 650 == doctest::Approx(928.571).epsilon(1e-5));
    CHECK(feed_per_tonne(s.flowsheet, "coating") == doctest::Approx(1.0));
}

TEST_CASE("feed per tonne along the NG cascade") {
    const auto s = load_builtin("US_NG");
    CHECK(feed_per_tonne(s.flowsheet, "spheronization") ==
          doctest::Approx(oracle::feed_chain({0.5, 0.95, 1.0}, 0)));
    CHECK(feed_per_tonne(s.flowsheet, "spheronization") == doctest::Approx(2.1053).epsilon(1e-4));
}

TEST_CASE("unit yields give unit feed") {
    auto s = load_builtin("US_SG");
    for (auto& st : s.flowsheet.stages) st.yieldFraction = 1.0;
    for (const auto& st : s.flowsheet.stages) CHECK(feed_per_tonne(s.flowsheet, st.id) == 1.0);
}

TEST_CASE("unknown stage id") {
    const auto s = load_builtin("US_SG");
    CHECK_THROWS_AS(feed_per_tonne(s.flowsheet, "nope"), ValidationError);
}

TEST_CASE("stage feed tonnage") {
    const auto sg = load_builtin("US_SG");
    CHECK(stage_feed_tonnage(sg.plant, sg.flowsheet, "spheronization") ==
          doctest::Approx(64285.7).epsilon(1e-5));
    CHECK(stage_feed_tonnage(sg.plant, sg.flowsheet, "coating") == doctest::Approx(45000));
    const auto ng = load_builtin("US_NG");
    CHECK(stage_feed_tonnage(ng.plant, ng.flowsheet, "purification") ==
          doctest::Approx(47368.4).epsilon(1e-5));
}

TEST_CASE("line count") {
    const auto s = load_builtin("US_SG");
    const auto& graph = *s.flowsheet.find("graphitization");
    CHECK(line_count(graph, 45000, 0.9) == 26);
    CHECK(line_count(graph, 45000, 0.9) == oracle::min_lines(45000, 0.22, 0.9));
    CHECK(line_count(graph, 0, 0.9) == 0);
    const auto& sph = *s.flowsheet.find("spheronization");
    CHECK(line_count(sph, 64286, 0.9) == 4);
    CHECK_THROWS_AS(line_count(graph, -1, 0.9), ValidationError);
    CHECK_THROWS_AS(line_count(graph, 1000, 0.0), ValidationError);
}

TEST_CASE("line count at an exact multiple does not round up") {
    StageSpec st;
    st.throughputPerLine = 1.0;
    CHECK(line_count(st, 3 * 8760.0 * 0.5, 0.5) == 3);
}

TEST_CASE("flowsheet validation") {
    auto s = load_builtin("US_SG");
    CHECK(validate_flowsheet(s.flowsheet).empty());

    auto bad = s.flowsheet;
    bad.stages.front().yieldFraction = 1.2;
    CHECK_FALSE(validate_flowsheet(bad).empty());

    bad = s.flowsheet;
    bad.stages.front().throughputPerLine = 0.0;
    CHECK_FALSE(validate_flowsheet(bad).empty());

    bad = s.flowsheet;
    std::swap(bad.stages[0], bad.stages[1]);
    CHECK_FALSE(validate_flowsheet(bad).empty());

    bad = s.flowsheet;
    bad.stages.pop_back();  // no coating at the end
    CHECK_FALSE(validate_flowsheet(bad).empty());

    bad = s.flowsheet;
    bad.stages[1].id = bad.stages[0].id;
    CHECK_FALSE(validate_flowsheet(bad).empty());
}

TEST_CASE("plant validation") {
    auto s = load_builtin("US_SG");
    CHECK(validate_plant(s.plant).empty());
    s.plant.uptime = 1.5;
    CHECK_FALSE(validate_plant(s.plant).empty());
    s.plant.uptime = 0.9;
    s.plant.capacity = 0;
    CHECK_FALSE(validate_plant(s.plant).empty());
}

TEST_CASE("parameter spec invariants") {
    CHECK(ParameterSpec::uniform("x", "u", 1, 0, 2).violation().empty());
    CHECK_FALSE(ParameterSpec::uniform("x", "u", 3, 0, 2).violation().empty());
    CHECK_FALSE(ParameterSpec::uniform("x", "u", 1, 2, 0).violation().empty());
    const auto f = ParameterSpec::fixed("x", "u", 5);
    CHECK(f.low == 5);
    CHECK(f.high == 5);
    CHECK(f.violation().empty());
}

TEST_CASE("enum parsing") {
    CHECK(parse_region("US") == Region::US);
    CHECK(parse_region("China") == Region::China);
    CHECK(parse_route("NG_acid_leach") == RouteId::NG_acid_leach);
    CHECK(to_string(RouteId::SG_box) == "SG_box");
    CHECK_THROWS_AS(parse_route("SG_magic"), ValidationError);
    CHECK(is_synthetic(RouteId::SG_continuous));
    CHECK_FALSE(is_synthetic(RouteId::NG_carbochlorination));
    CHECK(applies_to(RegionScope::Both, Region::China));
    CHECK_FALSE(applies_to(RegionScope::US, Region::China));
}
