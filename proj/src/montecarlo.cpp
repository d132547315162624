#include "graphcost/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "graphcost/datasets.hpp"
#include "graphcost/error.hpp"
#include "graphcost/parameters.hpp"

namespace graphcost {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Type-7 interpolation on already sorted values.
double sorted_percentile(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Percentiles summarize(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return {sorted_percentile(values, 0.05), sorted_percentile(values, 0.25),
            sorted_percentile(values, 0.50), sorted_percentile(values, 0.75),
            sorted_percentile(values, 0.95)};
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t sampleIndex, std::string_view key) {
    const std::uint64_t bits = splitmix64(seed ^ splitmix64(sampleIndex ^ splitmix64(fnv1a(key))));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Scenario sample_scenario(const Scenario& base, std::span<const ParameterSpec> specs,
                         std::uint64_t sampleIndex, std::uint64_t seed) {
    Scenario s = base;
    for (const auto& spec : specs) {
        if (spec.distribution != Distribution::Uniform) continue;
        const double u = counter_uniform(seed, sampleIndex, spec.id);
        set_parameter(s, spec.id, spec.low + u * (spec.high - spec.low));
    }
    return s;
}

double percentile(std::vector<double> values, double q) {
    if (values.empty()) throw ValidationError("percentile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("percentile rank must be in [0, 1]");
    std::sort(values.begin(), values.end());
    return sorted_percentile(values, q);
}

MonteCarloSummary run_monte_carlo(const Scenario& base, const SamplePlan& plan,
                                  unsigned threads) {
    if (plan.nSamples < 1) throw ValidationError("nSamples must be >= 1");
    if (auto v = validate_scenario(base); !v.empty()) throw ValidationError(v.front());

    std::vector<ParameterSpec> specs;
    for (const auto& p : base.params) {
        if (std::find(plan.heldFixed.begin(), plan.heldFixed.end(), p.id) == plan.heldFixed.end()) {
            specs.push_back(p);
        }
    }

    const auto n = static_cast<std::size_t>(plan.nSamples);
    std::vector<MetricSample> samples(n);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

    std::mutex errorMutex;
    std::size_t errorIndex = n;
    std::exception_ptr error;

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const Scenario s = sample_scenario(base, specs, i, plan.seed);
                if (auto v = validate_scenario(s); !v.empty()) {
                    throw ValidationError("sample " + std::to_string(i) + ": " + v.front());
                }
                const CostBreakdown b = plant_cost(s);
                samples[i] = {b.capitalIntensity, b.totalOpexPerTonne, b.breakevenPrice};
            } catch (...) {
                std::lock_guard lock(errorMutex);
                if (i < errorIndex) {
                    errorIndex = i;
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    if (threads <= 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t begin = 0; begin < n; begin += chunk) {
            pool.emplace_back(work, begin, std::min(n, begin + chunk));
        }
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    MonteCarloSummary out;
    out.scenarioId = plan.scenarioId.empty() ? base.name : plan.scenarioId;
    out.seed = plan.seed;
    out.samples = std::move(samples);

    std::vector<double> ci, opex, price;
    ci.reserve(n);
    opex.reserve(n);
    price.reserve(n);
    for (const auto& s : out.samples) {
        ci.push_back(s.capitalIntensity);
        opex.push_back(s.opexPerTonne);
        price.push_back(s.breakevenPrice);
    }
    out.capitalIntensity = summarize(std::move(ci));
    out.opexPerTonne = summarize(std::move(opex));
    out.breakevenPrice = summarize(std::move(price));
    for (double p : plan.prices) out.competitiveFraction[p] = competitive_fraction(out, p);
    return out;
}

MonteCarloSummary run_monte_carlo(const SamplePlan& plan, unsigned threads) {
    return run_monte_carlo(load_builtin(plan.scenarioId), plan, threads);
}

double competitive_fraction(const MonteCarloSummary& summary, double price) {
    if (summary.samples.empty()) return 0.0;
    const auto hits = std::count_if(summary.samples.begin(), summary.samples.end(),
                                    [&](const MetricSample& s) { return s.breakevenPrice <= price; });
    return static_cast<double>(hits) / static_cast<double>(summary.samples.size());
}

}  // namespace graphcost
