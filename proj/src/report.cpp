#include "graphcost/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

#include "graphcost/error.hpp"

namespace graphcost {

namespace {

using nlohmann::ordered_json;

double round6(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class CsvWriter {
public:
    CsvWriter(std::ostream& out, const char* kind) : out_(out) {
        out_ << "# graphcost-" << kind << " v1\n";
    }
    CsvWriter& header(std::initializer_list<const char*> cols) {
        bool first = true;
        for (const char* c : cols) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << '\n';
        return *this;
    }
    CsvWriter& cell(const std::string& s) {
        sep();
        out_ << csv_cell(s);
        return *this;
    }
    CsvWriter& cell(double v) {
        sep();
        out_ << format_number(v);
        return *this;
    }
    CsvWriter& cell(int v) {
        sep();
        out_ << v;
        return *this;
    }
    CsvWriter& empty() {
        sep();
        return *this;
    }
    void end() {
        out_ << '\n';
        started_ = false;
    }

private:
    void sep() {
        if (started_) out_ << ',';
        started_ = true;
    }
    std::ostream& out_;
    bool started_ = false;
};

void category_cells(CsvWriter& w, const CategoryCosts& c) {
    w.cell(c.annualizedCapex)
        .cell(c.feedstock)
        .cell(c.electricity)
        .cell(c.labor)
        .cell(c.consumables)
        .cell(c.maintenance)
        .cell(c.generalAdmin)
        .cell(c.sales)
        .cell(c.opex())
        .cell(c.total());
}

ordered_json category_json(const CategoryCosts& c) {
    return {
        {"annualized_capex", round6(c.annualizedCapex)},
        {"feedstock", round6(c.feedstock)},
        {"electricity", round6(c.electricity)},
        {"labor", round6(c.labor)},
        {"consumables", round6(c.consumables)},
        {"maintenance", round6(c.maintenance)},
        {"general_admin", round6(c.generalAdmin)},
        {"sales", round6(c.sales)},
        {"opex", round6(c.opex())},
        {"total", round6(c.total())},
    };
}

ordered_json breakdown_json(const CostBreakdown& b) {
    ordered_json stages = ordered_json::array();
    for (const auto& s : b.stages) {
        stages.push_back({{"id", s.id},
                          {"lines", s.lines},
                          {"feed_per_tonne", round6(s.feedPerTonne)},
                          {"capex", round6(s.capex)},
                          {"costs", category_json(s.costs)}});
    }
    return {
        {"stages", stages},
        {"plant", {{"capex", round6(b.plantCapex)}, {"costs", category_json(b.plant)}}},
        {"totals", category_json(b.totals)},
        {"capacity", round6(b.capacity)},
        {"total_capex", round6(b.totalCapex)},
        {"capital_intensity", round6(b.capitalIntensity)},
        {"capital_recovery_factor", round6(b.capitalRecoveryFactor)},
        {"total_opex_per_tonne", round6(b.totalOpexPerTonne)},
        {"breakeven_price", round6(b.breakevenPrice)},
    };
}

void write_json(std::ostream& out, const char* schema, ordered_json body) {
    ordered_json doc = {{"schema", std::string("graphcost-") + schema + "/1"}};
    doc.update(body);
    out << doc.dump(2) << '\n';
}

ordered_json percentiles_json(const Percentiles& p) {
    return {{"p5", round6(p.p5)},
            {"p25", round6(p.p25)},
            {"p50", round6(p.p50)},
            {"p75", round6(p.p75)},
            {"p95", round6(p.p95)}};
}

std::string join(const std::set<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ';';
        out += s;
    }
    return out;
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw ValidationError("unknown format '" + std::string(s) + "' (valid: csv, json)");
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void emit_breakdown(const CostBreakdown& b, Format f, std::ostream& out) {
    if (f == Format::Json) {
        write_json(out, "breakdown", breakdown_json(b));
        return;
    }
    CsvWriter w(out, "breakdown");
    w.header({"row", "lines", "capex", "annualized_capex", "feedstock", "electricity", "labor",
              "consumables", "maintenance", "general_admin", "sales", "opex", "total"});
    for (const auto& s : b.stages) {
        w.cell(s.id).cell(s.lines).cell(s.capex);
        category_cells(w, s.costs);
        w.end();
    }
    w.cell(std::string("plant")).empty().cell(b.plantCapex);
    category_cells(w, b.plant);
    w.end();
    w.cell(std::string("total")).empty().cell(b.totalCapex);
    CategoryCosts totals = b.totals;
    w.cell(b.capitalIntensity * b.capitalRecoveryFactor)
        .cell(totals.feedstock)
        .cell(totals.electricity)
        .cell(totals.labor)
        .cell(totals.consumables)
        .cell(totals.maintenance)
        .cell(totals.generalAdmin)
        .cell(totals.sales)
        .cell(b.totalOpexPerTonne)
        .cell(b.breakevenPrice);
    w.end();
}

void emit_samples(const MonteCarloSummary& s, Format f, std::ostream& out) {
    if (f == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& m : s.samples) {
            rows.push_back({{"capital_intensity", round6(m.capitalIntensity)},
                            {"opex_per_tonne", round6(m.opexPerTonne)},
                            {"breakeven_price", round6(m.breakevenPrice)}});
        }
        write_json(out, "samples", {{"scenario", s.scenarioId}, {"seed", s.seed}, {"samples", rows}});
        return;
    }
    CsvWriter w(out, "samples");
    w.header({"index", "capital_intensity", "opex_per_tonne", "breakeven_price"});
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        const auto& m = s.samples[i];
        w.cell(static_cast<int>(i)).cell(m.capitalIntensity).cell(m.opexPerTonne).cell(m.breakevenPrice);
        w.end();
    }
}

void emit_summary(const MonteCarloSummary& s, Format f, std::ostream& out) {
    if (f == Format::Json) {
        ordered_json fractions = ordered_json::array();
        for (const auto& [price, frac] : s.competitiveFraction) {
            fractions.push_back({{"price", round6(price)}, {"fraction", round6(frac)}});
        }
        write_json(out, "montecarlo",
                   {{"scenario", s.scenarioId},
                    {"seed", s.seed},
                    {"n_samples", s.samples.size()},
                    {"percentiles",
                     {{"capital_intensity", percentiles_json(s.capitalIntensity)},
                      {"opex_per_tonne", percentiles_json(s.opexPerTonne)},
                      {"breakeven_price", percentiles_json(s.breakevenPrice)}}},
                    {"competitive_fraction", fractions}});
        return;
    }
    CsvWriter w(out, "montecarlo");
    w.header({"kind", "name", "value"});
    w.cell(std::string("meta")).cell(std::string("scenario")).cell(s.scenarioId);
    w.end();
    w.cell(std::string("meta")).cell(std::string("seed")).cell(std::to_string(s.seed));
    w.end();
    w.cell(std::string("meta")).cell(std::string("n_samples")).cell(static_cast<int>(s.samples.size()));
    w.end();
    const std::pair<const char*, const Percentiles*> metrics[] = {
        {"capital_intensity", &s.capitalIntensity},
        {"opex_per_tonne", &s.opexPerTonne},
        {"breakeven_price", &s.breakevenPrice},
    };
    for (const auto& [name, p] : metrics) {
        const std::pair<const char*, double> ranks[] = {
            {"p5", p->p5}, {"p25", p->p25}, {"p50", p->p50}, {"p75", p->p75}, {"p95", p->p95}};
        for (const auto& [rank, value] : ranks) {
            w.cell(std::string("percentile")).cell(std::string(name) + "." + rank).cell(value);
            w.end();
        }
    }
    for (const auto& [price, frac] : s.competitiveFraction) {
        w.cell(std::string("competitive_fraction")).cell(format_number(price)).cell(frac);
        w.end();
    }
}

void emit_ladder(const std::vector<LadderStep>& steps, Format f, std::ostream& out) {
    if (f == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& s : steps) {
            rows.push_back({{"parameter", s.parameter},
                            {"from_value", round6(s.fromValue)},
                            {"to_value", round6(s.toValue)},
                            {"price_before", round6(s.priceBefore)},
                            {"price_after", round6(s.priceAfter)}});
        }
        write_json(out, "ladder", {{"steps", rows}});
        return;
    }
    CsvWriter w(out, "ladder");
    w.header({"step", "parameter", "from_value", "to_value", "price_before", "price_after"});
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        w.cell(static_cast<int>(i + 1)).cell(s.parameter).cell(s.fromValue).cell(s.toValue);
        w.cell(s.priceBefore).cell(s.priceAfter);
        w.end();
    }
}

void emit_contour(const std::vector<IsoPriceLine>& lines, double ciMax, Format f,
                  std::ostream& out) {
    if (f == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& l : lines) {
            rows.push_back({{"price", round6(l.price)},
                            {"slope", round6(l.slope)},
                            {"ci_start", 0},
                            {"opex_start", round6(l.opex_at(0.0))},
                            {"ci_end", round6(ciMax)},
                            {"opex_end", round6(l.opex_at(ciMax))}});
        }
        write_json(out, "contour", {{"lines", rows}});
        return;
    }
    CsvWriter w(out, "contour");
    w.header({"price", "slope", "ci_start", "opex_start", "ci_end", "opex_end"});
    for (const auto& l : lines) {
        w.cell(l.price).cell(l.slope).cell(0.0).cell(l.opex_at(0.0)).cell(ciMax).cell(l.opex_at(ciMax));
        w.end();
    }
}

void emit_projects(const std::vector<ReportedProject>& projects, const FinanceSpec& fin, Format f,
                   std::ostream& out) {
    struct Adjusted {
        double capacity, capex, opex, total;
    };
    auto adjusted = [&](const ReportedProject& p) {
        Adjusted a{p.capacity, p.capex, p.opexPerTonne, 0.0};
        for (const auto& adj : p.adjustments) {
            switch (adj.kind) {
                case AdjustmentKind::AddOpexPerTonne: a.opex += adj.value; break;
                case AdjustmentKind::AddCapex: a.capex += adj.value; break;
                case AdjustmentKind::CapacityOverride: a.capacity = adj.value; break;
            }
        }
        a.total = adjust_reported(p, fin);
        return a;
    };
    if (f == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto& p : projects) {
            const auto a = adjusted(p);
            ordered_json adjustments = ordered_json::array();
            for (const auto& adj : p.adjustments) {
                adjustments.push_back({{"kind", to_string(adj.kind)}, {"value", round6(adj.value)}});
            }
            rows.push_back({{"owner", p.owner},
                            {"report_year", p.reportYear},
                            {"location", p.location},
                            {"process_type", p.processType},
                            {"capacity", round6(p.capacity)},
                            {"capex", round6(p.capex)},
                            {"opex_per_tonne", round6(p.opexPerTonne)},
                            {"adjustments", adjustments},
                            {"total_cost", round6(a.total)},
                            {"published_total", round6(p.publishedTotal)},
                            {"note", p.note}});
        }
        write_json(out, "projects", {{"projects", rows}});
        return;
    }
    CsvWriter w(out, "projects");
    w.header({"owner", "report_year", "location", "process_type", "capacity", "capex",
              "opex_per_tonne", "adjusted_capacity", "adjusted_capex", "adjusted_opex",
              "total_cost", "published_total"});
    for (const auto& p : projects) {
        const auto a = adjusted(p);
        w.cell(p.owner).cell(p.reportYear).cell(p.location).cell(p.processType);
        w.cell(p.capacity).cell(p.capex).cell(p.opexPerTonne);
        w.cell(a.capacity).cell(a.capex).cell(a.opex).cell(a.total).cell(p.publishedTotal);
        w.end();
    }
}

void emit_variants(const std::vector<VariantRow>& rows, Format f, std::ostream& out) {
    auto graph = [](const CostBreakdown& b) {
        const StageCost* s = b.find_stage("graphitization");
        return s != nullptr ? s->costs : CategoryCosts{};
    };
    if (f == Format::Json) {
        ordered_json items = ordered_json::array();
        for (const auto& r : rows) {
            items.push_back({{"variant", r.variant}, {"breakdown", breakdown_json(r.breakdown)}});
        }
        write_json(out, "variants", {{"variants", items}});
        return;
    }
    CsvWriter w(out, "variants");
    w.header({"variant", "capital_intensity", "opex_per_tonne", "breakeven_price",
              "graphitization_annualized_capex", "graphitization_electricity",
              "graphitization_consumables"});
    for (const auto& r : rows) {
        const auto g = graph(r.breakdown);
        w.cell(r.variant).cell(r.breakdown.capitalIntensity).cell(r.breakdown.totalOpexPerTonne);
        w.cell(r.breakdown.breakevenPrice).cell(g.annualizedCapex).cell(g.electricity).cell(g.consumables);
        w.end();
    }
}

void emit_disruption(const DisruptionResult& r, Format f, std::ostream& out) {
    if (f == Format::Json) {
        write_json(out, "disruption",
                   {{"ev_cost_delta", round6(r.evCostDelta)},
                    {"sales_drop_fraction", round6(r.salesDropFraction)},
                    {"producer_delta", round6(r.producerDelta)},
                    {"consumer_delta", round6(r.consumerDelta)}});
        return;
    }
    CsvWriter w(out, "disruption");
    w.header({"ev_cost_delta", "sales_drop_fraction", "producer_delta", "consumer_delta"});
    w.cell(r.evCostDelta).cell(r.salesDropFraction).cell(r.producerDelta).cell(r.consumerDelta);
    w.end();
}

void emit_headroom(double targetPrice, const std::set<std::string>& avoided, double headroom,
                   Format f, std::ostream& out) {
    if (f == Format::Json) {
        write_json(out, "headroom",
                   {{"target_price", round6(targetPrice)},
                    {"avoided", avoided},
                    {"remaining_cost", round6(targetPrice - headroom)},
                    {"headroom", round6(headroom)}});
        return;
    }
    CsvWriter w(out, "headroom");
    w.header({"target_price", "avoided", "remaining_cost", "headroom"});
    w.cell(targetPrice).cell(join(avoided)).cell(targetPrice - headroom).cell(headroom);
    w.end();
}

void emit_manifest(const std::vector<DatasetRow>& rows, Format f, std::ostream& out) {
    auto route = [](RouteScope r) -> std::string {
        switch (r) {
            case RouteScope::Synthetic: return "SG";
            case RouteScope::Natural: return "NG";
            case RouteScope::Any: return "any";
        }
        return "any";
    };
    if (f == Format::Json) {
        ordered_json items = ordered_json::array();
        for (const auto& r : rows) {
            items.push_back({{"table", r.table},
                             {"label", r.label},
                             {"route", route(r.route)},
                             {"region", to_string(r.spec.region)},
                             {"id", r.spec.id},
                             {"unit", r.spec.unit},
                             {"baseline", round6(r.spec.baseline)},
                             {"low", round6(r.spec.low)},
                             {"high", round6(r.spec.high)},
                             {"distribution", to_string(r.spec.distribution)}});
        }
        write_json(out, "manifest", {{"rows", items}});
        return;
    }
    CsvWriter w(out, "manifest");
    w.header({"table", "label", "route", "region", "id", "unit", "baseline", "low", "high",
              "distribution"});
    for (const auto& r : rows) {
        w.cell(r.table).cell(r.label).cell(route(r.route)).cell(std::string(to_string(r.spec.region)));
        w.cell(r.spec.id).cell(r.spec.unit).cell(r.spec.baseline).cell(r.spec.low).cell(r.spec.high);
        w.cell(std::string(to_string(r.spec.distribution)));
        w.end();
    }
}

}  // namespace graphcost
