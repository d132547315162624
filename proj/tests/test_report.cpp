#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "graphcost/analysis.hpp"
#include "graphcost/datasets.hpp"
#include "graphcost/error.hpp"
#include "graphcost/report.hpp"

using namespace graphcost;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.199252325) == "0.199252");
    CHECK(format_number(8625.4) == "8625.4");
    CHECK(format_number(1.0e9) == "1e+09");
    CHECK(format_number(-0.0) == "0");
    CHECK(parse_format("json") == Format::Json);
    CHECK_THROWS_AS(parse_format("xml"), ValidationError);
}

TEST_CASE("breakdown CSV has stage, plant and total rows") {
    const auto b = plant_cost(load_builtin("US_SG"));
    std::ostringstream out;
    emit_breakdown(b, Format::Csv, out);
    CHECK(out.str().rfind("# graphcost-breakdown v1\n", 0) == 0);
    const auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 1 + b.stages.size() + 2);
    CHECK(rows[0].front() == "row");
    CHECK(rows[0].size() == 13);
    CHECK(rows[1].front() == b.stages.front().id);
    CHECK(rows[rows.size() - 2].front() == "plant");
    CHECK(rows.back().front() == "total");
    CHECK(rows.back().back() == format_number(b.breakevenPrice));
    for (const auto& r : rows) CHECK(r.size() == 13);
}

TEST_CASE("CSV and JSON totals agree") {
    const auto b = plant_cost(load_builtin("CN_NG"));
    std::ostringstream csv, js;
    emit_breakdown(b, Format::Csv, csv);
    emit_breakdown(b, Format::Json, js);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["schema"] == "graphcost-breakdown/1");
    CHECK(doc["stages"].size() == b.stages.size());
    const auto rows = csv_rows(csv.str());
    CHECK(format_number(doc["breakeven_price"].get<double>()) == rows.back().back());
    CHECK(format_number(doc["total_opex_per_tonne"].get<double>()) == rows.back()[11]);
}

TEST_CASE("contour CSV") {
    std::vector<IsoPriceLine> lines{iso_price_contour(6500, {}), iso_price_contour(7500, {})};
    std::ostringstream out;
    emit_contour(lines, 20000, Format::Csv, out);
    const auto rows = csv_rows(out.str());
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][1] == "-0.199252");
    CHECK(rows[2][1] == "-0.199252");
}

TEST_CASE("ladder output has one row per target") {
    const auto steps = sensitivity_ladder(load_builtin("US_SG"), builtin_ladder(RouteId::SG_acheson));
    std::ostringstream out;
    emit_ladder(steps, Format::Csv, out);
    CHECK(csv_rows(out.str()).size() == steps.size() + 1);
    std::ostringstream js;
    emit_ladder(steps, Format::Json, js);
    CHECK(nlohmann::json::parse(js.str())["steps"].size() == steps.size());
}

TEST_CASE("emitters are byte-deterministic") {
    auto render = [] {
        std::ostringstream out;
        emit_breakdown(plant_cost(load_builtin("US_NG")), Format::Json, out);
        emit_projects(reported_projects(), FinanceSpec{}, Format::Csv, out);
        emit_manifest(dataset_manifest(), Format::Csv, out);
        emit_disruption(disruption_impact(7, 35, 100), Format::Json, out);
        return out.str();
    };
    CHECK(render() == render());
}

TEST_CASE("manifest quoting keeps cells intact") {
    std::ostringstream out;
    emit_manifest(dataset_manifest(), Format::Json, out);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["rows"].size() == dataset_manifest().size());
}
