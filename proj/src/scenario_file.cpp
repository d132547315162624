#include "graphcost/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphcost/datasets.hpp"
#include "graphcost/error.hpp"
#include "graphcost/parameters.hpp"

namespace graphcost {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view s, int line) {
    s = trim(s);
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw ParseError(line, "expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

OverrideValue parse_override(std::string_view s, int line) {
    OverrideValue out;
    const auto open = s.find('[');
    if (open == std::string_view::npos) {
        out.value = parse_number(s, line);
        return out;
    }
    const auto close = s.find(']', open);
    if (close == std::string_view::npos || !trim(s.substr(close + 1)).empty()) {
        throw ParseError(line, "malformed range, expected 'value [low, high]'");
    }
    out.value = parse_number(s.substr(0, open), line);
    const auto inner = s.substr(open + 1, close - open - 1);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError(line, "malformed range, expected '[low, high]'");
    }
    out.range = std::make_pair(parse_number(inner.substr(0, comma), line),
                               parse_number(inner.substr(comma + 1), line));
    return out;
}

std::string format_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read scenario file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
    ScenarioFile file;
    enum class Section { Top, Overrides, Finance } section = Section::Top;
    bool sawFormat = false, sawRoute = false, sawRegion = false;

    int lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineNo;

        auto line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line == "[overrides]") {
                section = Section::Overrides;
            } else if (line == "[finance]") {
                section = Section::Finance;
            } else {
                throw ParseError(lineNo, "unknown section '" + std::string(line) + "'");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineNo, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineNo, "empty key");

        switch (section) {
            case Section::Top:
                if (key == "format") {
                    if (value != kScenarioFormat) {
                        throw ParseError(lineNo, "unsupported format '" + std::string(value) +
                                                     "', expected " + std::string(kScenarioFormat));
                    }
                    sawFormat = true;
                } else if (key == "route") {
                    try {
                        file.route = parse_route(value);
                    } catch (const ValidationError& e) {
                        throw ParseError(lineNo, e.what());
                    }
                    sawRoute = true;
                } else if (key == "region") {
                    try {
                        file.region = parse_region(value);
                    } catch (const ValidationError& e) {
                        throw ParseError(lineNo, e.what());
                    }
                    sawRegion = true;
                } else if (key == "capacity") {
                    file.capacity = parse_number(value, lineNo);
                } else {
                    throw ParseError(lineNo, "unknown key '" + key + "'");
                }
                break;
            case Section::Overrides:
                if (!file.overrides.emplace(key, parse_override(value, lineNo)).second) {
                    throw ParseError(lineNo, "duplicate override '" + key + "'");
                }
                break;
            case Section::Finance:
                if (key != "required_irr" && key != "payback_years") {
                    throw ParseError(lineNo, "unknown finance key '" + key + "'");
                }
                if (!file.finance.emplace(key, parse_number(value, lineNo)).second) {
                    throw ParseError(lineNo, "duplicate finance key '" + key + "'");
                }
                break;
        }
    }
    if (!sawFormat) throw ParseError(0, "missing 'format = " + std::string(kScenarioFormat) + "'");
    if (!sawRoute) throw ParseError(0, "missing 'route'");
    if (!sawRegion) throw ParseError(0, "missing 'region'");
    return file;
}

std::string serialize_scenario(const ScenarioFile& file) {
    std::ostringstream out;
    out << "format = " << kScenarioFormat << "\n";
    out << "route = " << to_string(file.route) << "\n";
    out << "region = " << to_string(file.region) << "\n";
    if (file.capacity) out << "capacity = " << format_exact(*file.capacity) << "\n";
    if (!file.overrides.empty()) {
        out << "\n[overrides]\n";
        for (const auto& [key, v] : file.overrides) {
            out << key << " = " << format_exact(v.value);
            if (v.range) {
                out << " [" << format_exact(v.range->first) << ", "
                    << format_exact(v.range->second) << "]";
            }
            out << "\n";
        }
    }
    if (!file.finance.empty()) {
        out << "\n[finance]\n";
        for (const auto& [key, v] : file.finance) out << key << " = " << format_exact(v) << "\n";
    }
    return out.str();
}

std::vector<std::string> validate(const ScenarioFile& file) {
    std::vector<std::string> out;
    Scenario base;
    try {
        base = builtin_for(file.route, file.region);
    } catch (const ValidationError& e) {
        out.emplace_back(e.what());
        return out;
    }
    if (file.capacity && !(*file.capacity > 0.0)) out.emplace_back("capacity: must be > 0");
    for (const auto& [key, v] : file.overrides) {
        if (!has_parameter(base, key)) {
            out.push_back(key + ": unknown parameter");
            continue;
        }
        if (v.range) {
            const auto [low, high] = *v.range;
            if (low > high) {
                out.push_back(key + ": range inverted (low > high)");
            } else if (v.value < low || v.value > high) {
                out.push_back(key + ": value outside its range");
            }
        }
    }
    if (auto it = file.finance.find("required_irr"); it != file.finance.end() && !(it->second >= 0.0)) {
        out.emplace_back("required_irr: must be >= 0");
    }
    if (auto it = file.finance.find("payback_years"); it != file.finance.end() && !(it->second >= 1.0)) {
        out.emplace_back("payback_years: must be >= 1");
    }
    if (!out.empty()) return out;

    // Remaining invariants (yields, uptime, ...) are checked on the resolved scenario.
    Scenario resolved = base;
    try {
        if (file.capacity) apply_override(resolved, "capacity", {*file.capacity, std::nullopt});
        for (const auto& [key, v] : file.overrides) apply_override(resolved, key, v);
        for (const auto& [key, v] : file.finance) apply_override(resolved, key, {v, std::nullopt});
    } catch (const ValidationError& e) {
        out.emplace_back(e.what());
        return out;
    }
    return validate_scenario(resolved);
}

void apply_override(Scenario& scenario, const std::string& id, const OverrideValue& value) {
    set_parameter(scenario, id, value.value);
    const double stored = get_parameter(scenario, id);  // integer fields round
    ParameterSpec spec;
    if (const auto* existing = scenario.find_param(id)) spec = *existing;
    spec.id = id;
    spec.region = scenario.region == Region::US ? RegionScope::US : RegionScope::China;
    if (value.range) {
        spec = ParameterSpec::uniform(id, spec.unit, stored, value.range->first,
                                      value.range->second, spec.region);
    } else {
        spec = ParameterSpec::fixed(id, spec.unit, stored, spec.region);
    }
    if (auto* existing = scenario.find_param(id)) {
        *existing = std::move(spec);
    } else {
        scenario.params.push_back(std::move(spec));
    }
}

Scenario resolve_scenario(const ScenarioFile& file) {
    if (auto v = validate(file); !v.empty()) throw ValidationError(v.front());
    Scenario s = builtin_for(file.route, file.region);
    if (file.capacity) apply_override(s, "capacity", {*file.capacity, std::nullopt});
    for (const auto& [key, v] : file.overrides) apply_override(s, key, v);
    for (const auto& [key, v] : file.finance) apply_override(s, key, {v, std::nullopt});
    return s;
}

Scenario load_scenario(const std::string& ref) {
    const auto names = builtin_names();
    const bool isBuiltin = std::find(names.begin(), names.end(), ref) != names.end();
    if (isBuiltin) {
        if (const char* dir = std::getenv(kDataDirEnv); dir != nullptr && *dir != '\0') {
            const auto path = std::filesystem::path(dir) / (ref + ".scenario");
            if (std::filesystem::exists(path)) {
                Scenario s = resolve_scenario(parse_scenario(read_file(path)));
                s.name = ref;
                return s;
            }
        }
        return load_builtin(ref);
    }
    if (!std::filesystem::exists(ref)) {
        // Neither a file nor a built-in: report the valid names.
        return load_builtin(ref);
    }
    Scenario s = resolve_scenario(parse_scenario(read_file(ref)));
    s.name = std::filesystem::path(ref).stem().string();
    return s;
}

}  // namespace graphcost
