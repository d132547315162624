#pragma once

// Seeded uniform sampling over parameter ranges and the resulting cost
// distributions. Each draw depends only on (seed, sample index, parameter
// id), so results do not depend on thread count or evaluation order.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "graphcost/costing.hpp"

namespace graphcost {

struct SamplePlan {
    std::string scenarioId;
    int nSamples = 10000;
    std::uint64_t seed = 1;
    /// Prices at which to report the competitive fraction.
    std::vector<double> prices;
    /// Parameters held at baseline even when declared uniform. Competitiveness
    /// is judged at the required IRR, so it is not sampled.
    std::vector<std::string> heldFixed{"required_irr"};
};

struct MetricSample {
    double capitalIntensity = 0.0;
    double opexPerTonne = 0.0;
    double breakevenPrice = 0.0;
};

struct Percentiles {
    double p5 = 0.0, p25 = 0.0, p50 = 0.0, p75 = 0.0, p95 = 0.0;
};

struct MonteCarloSummary {
    std::string scenarioId;
    std::uint64_t seed = 0;
    std::vector<MetricSample> samples;
    Percentiles capitalIntensity;
    Percentiles opexPerTonne;
    Percentiles breakevenPrice;
    std::map<double, double> competitiveFraction;
};

/// Uniform [0, 1) variate for one (seed, sample, parameter) triple.
double counter_uniform(std::uint64_t seed, std::uint64_t sampleIndex, std::string_view key);

/// Draws every uniform spec on [low, high]; fixed specs are left untouched.
Scenario sample_scenario(const Scenario& base, std::span<const ParameterSpec> specs,
                         std::uint64_t sampleIndex, std::uint64_t seed);

/// Linear-interpolated percentile (q in [0, 1]) of unsorted values.
double percentile(std::vector<double> values, double q);

/// `threads` = 0 picks the hardware concurrency.
MonteCarloSummary run_monte_carlo(const Scenario& base, const SamplePlan& plan,
                                  unsigned threads = 0);

/// Loads the built-in scenario named by plan.scenarioId.
MonteCarloSummary run_monte_carlo(const SamplePlan& plan, unsigned threads = 0);

/// Share of samples whose break-even price is at or below `price`.
double competitive_fraction(const MonteCarloSummary& summary, double price);

}  // namespace graphcost
