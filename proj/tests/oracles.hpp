#pragma once

// Independent reference computations used by the tests. None of these call
// into the library; they restate the economics in the most direct form.

#include <cmath>
#include <vector>

namespace oracle {

/// Level annual payment that repays 1 unit of capital over `years` at `rate`,
/// found by discounting each year explicitly.
inline double annuity_factor(double rate, int years) {
    double pv = 0.0;
    double discount = 1.0;
    for (int t = 1; t <= years; ++t) {
        discount /= (1.0 + rate);
        pv += discount;
    }
    return 1.0 / pv;
}

/// NPV of building `capex` and selling `capacity` t/yr at `price` for `years`.
inline double project_npv(double rate, double price, double capex, double opex, double capacity,
                          int years) {
    double npv = -capex;
    double discount = 1.0;
    for (int t = 1; t <= years; ++t) {
        discount /= (1.0 + rate);
        npv += (price - opex) * capacity * discount;
    }
    return npv;
}

/// Feed per tonne of product by walking the cascade from the last stage back.
inline double feed_chain(const std::vector<double>& yields, std::size_t from) {
    double feed = 1.0;
    for (std::size_t i = yields.size(); i > from; --i) feed /= yields[i - 1];
    return feed;
}

/// Smallest integer n with n * tph * 8760 * uptime >= feed.
inline int min_lines(double feed, double tph, double uptime) {
    int n = 0;
    while (n * tph * 8760.0 * uptime < feed) ++n;
    return n;
}

inline bool near_rel(double a, double b, double rel) {
    return std::fabs(a - b) <= rel * std::fmax(std::fabs(a), std::fabs(b));
}

}  // namespace oracle
