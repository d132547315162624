#include "graphcost/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "graphcost/analysis.hpp"
#include "graphcost/datasets.hpp"
#include "graphcost/error.hpp"
#include "graphcost/montecarlo.hpp"
#include "graphcost/parameters.hpp"
#include "graphcost/report.hpp"
#include "graphcost/scenario_file.hpp"

namespace graphcost {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError(what + ": '" + s + "' is not a number");
    }
    return v;
}

std::vector<double> parse_price_list(const std::string& s) {
    std::vector<double> prices;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ValidationError("--prices: empty entry in '" + s + "'");
        prices.push_back(parse_double(item, "--prices"));
    }
    if (prices.empty()) throw ValidationError("--prices: no values given");
    return prices;
}

std::set<std::string> parse_name_list(const std::vector<std::string>& items) {
    std::set<std::string> names;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (!name.empty()) names.insert(name);
        }
    }
    return names;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

struct Options {
    std::string scenario = "US_SG";
    std::vector<std::string> overrides;
    std::string format = "csv";
    std::string out;
    int n = 10000;
    std::uint64_t seed = 1;
    std::string prices;
    unsigned threads = 0;
    std::string samplesOut;
    double ciMax = 20000.0;
    double before = 7.0;
    double after = 35.0;
    double kgPerEV = 100.0;
    double target = 0.0;
    std::vector<std::string> avoid;
};

Scenario build_scenario(const Options& o) {
    Scenario s = load_scenario(o.scenario);
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ValidationError("--override expects key=value, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        if (!has_parameter(s, key)) throw ValidationError("unknown parameter '" + key + "'");
        apply_override(s, key, OverrideValue{parse_double(kv.substr(eq + 1), key), std::nullopt});
    }
    const auto problems = validate_scenario(s);
    if (!problems.empty()) throw ValidationError(problems.front());
    return s;
}

std::vector<double> default_prices(const Scenario& s) {
    const bool sg = is_synthetic(s.flowsheet.routeId);
    const auto& ref = s.finance.referencePrices;
    return {ref.at(sg ? "SG_2024" : "NG_2024"), ref.at(sg ? "SG_2022" : "NG_2022")};
}

void add_common(CLI::App* sub, Options& o, bool scenario, const char* defaultScenario = "US_SG") {
    if (scenario) {
        sub->add_option("--scenario", o.scenario,
                        "built-in scenario name or path to a scenario file")
            ->default_str(defaultScenario);
        sub->add_option("--override", o.overrides, "parameter override key=value (repeatable)");
    }
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "output file (stdout when omitted)");
}

std::string error_line(std::string_view kind, std::string message) {
    std::replace(message.begin(), message.end(), '\n', ' ');
    return "error[" + std::string(kind) + "]: " + message + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graphcost: battery-grade graphite production cost model", "graphcost"};
    app.require_subcommand(1);
    Options o;

    auto* cost = app.add_subcommand("cost", "stage by category cost breakdown");
    add_common(cost, o, true);

    auto* mc = app.add_subcommand("montecarlo", "sampled cost distributions and competitiveness");
    add_common(mc, o, true);
    mc->add_option("--n", o.n, "number of samples")->check(CLI::PositiveNumber)->capture_default_str();
    mc->add_option("--seed", o.seed, "random seed")->capture_default_str();
    mc->add_option("--prices", o.prices, "comma-separated prices for the competitive fraction");
    mc->add_option("--threads", o.threads, "worker threads (0 = hardware)")->capture_default_str();
    mc->add_option("--samples-out", o.samplesOut, "also write the per-sample table here");

    auto* ladder = app.add_subcommand("ladder", "cumulative cost-reduction ladder");
    add_common(ladder, o, true);

    auto* contour = app.add_subcommand("contour", "iso-price lines in (capital intensity, opex)");
    add_common(contour, o, true);
    contour->add_option("--prices", o.prices, "comma-separated break-even prices");
    contour->add_option("--ci-max", o.ciMax, "capital intensity at the segment end")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* variants = app.add_subcommand("variants", "Acheson, box and continuous furnaces");
    add_common(variants, o, true);

    auto* projects = app.add_subcommand("projects", "reported projects on a common basis");
    add_common(projects, o, false);

    auto* disrupt = app.add_subcommand("disrupt", "EV market response to a graphite price shock");
    add_common(disrupt, o, false);
    disrupt->add_option("--before", o.before, "graphite price before, $/kg")->capture_default_str();
    disrupt->add_option("--after", o.after, "graphite price after, $/kg")->capture_default_str();
    disrupt->add_option("--kg-per-ev", o.kgPerEV, "graphite per vehicle, kg")->capture_default_str();

    auto* headroom = app.add_subcommand("headroom", "cost ceiling for an alternative process step");
    add_common(headroom, o, true, "US_NG");
    headroom->add_option("--target", o.target, "target product price, $/t")->required();
    headroom->add_option("--avoid", o.avoid, "rows replaced by the alternative (comma list)")
        ->required();

    auto* manifest = app.add_subcommand("manifest", "built-in dataset parameters and ranges");
    add_common(manifest, o, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << error_line("usage", e.what());
        return kExitUsage;
    }

    try {
        // Headroom is measured against the natural-graphite reference plant.
        if (headroom->parsed() && headroom->get_option("--scenario")->count() == 0) {
            o.scenario = "US_NG";
        }
        const Format fmt = parse_format(o.format);
        std::ostringstream buf;
        if (cost->parsed()) {
            emit_breakdown(plant_cost(build_scenario(o)), fmt, buf);
        } else if (mc->parsed()) {
            const Scenario base = build_scenario(o);
            SamplePlan plan;
            plan.scenarioId = base.name;
            plan.nSamples = o.n;
            plan.seed = o.seed;
            plan.prices = o.prices.empty() ? default_prices(base) : parse_price_list(o.prices);
            const auto summary = run_monte_carlo(base, plan, o.threads);
            emit_summary(summary, fmt, buf);
            if (!o.samplesOut.empty()) {
                std::ostringstream samples;
                emit_samples(summary, fmt, samples);
                write_output(o.samplesOut, samples.str(), out);
            }
        } else if (ladder->parsed()) {
            const Scenario base = build_scenario(o);
            emit_ladder(sensitivity_ladder(base, builtin_ladder(base.flowsheet.routeId)), fmt, buf);
        } else if (contour->parsed()) {
            const Scenario base = build_scenario(o);
            const auto prices = o.prices.empty() ? default_prices(base) : parse_price_list(o.prices);
            std::vector<IsoPriceLine> lines;
            for (double p : prices) lines.push_back(iso_price_contour(p, base.finance));
            emit_contour(lines, o.ciMax, fmt, buf);
        } else if (variants->parsed()) {
            const Scenario base = build_scenario(o);
            std::vector<VariantRow> rows;
            rows.push_back({"acheson", plant_cost(base)});
            for (auto v : {FurnaceVariant::Box, FurnaceVariant::Continuous}) {
                rows.push_back({std::string(to_string(v)), plant_cost(apply_furnace_variant(base, v))});
            }
            emit_variants(rows, fmt, buf);
        } else if (projects->parsed()) {
            emit_projects(reported_projects(), FinanceSpec{}, fmt, buf);
        } else if (disrupt->parsed()) {
            emit_disruption(disruption_impact(o.before, o.after, o.kgPerEV), fmt, buf);
        } else if (headroom->parsed()) {
            const auto avoided = parse_name_list(o.avoid);
            const auto breakdown = plant_cost(build_scenario(o));
            emit_headroom(o.target, avoided, alt_route_headroom(breakdown, o.target, avoided), fmt,
                          buf);
        } else if (manifest->parsed()) {
            emit_manifest(dataset_manifest(), fmt, buf);
        }
        write_output(o.out, buf.str(), out);
    } catch (const ValidationError& e) {
        err << error_line("validation", e.what());
        return kExitValidation;
    } catch (const NumericError& e) {
        err << error_line("numeric", e.what());
        return kExitNumeric;
    } catch (const IoError& e) {
        err << error_line("io", e.what());
        return kExitNumeric;
    } catch (const std::out_of_range& e) {
        err << error_line("validation", e.what());
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace graphcost
