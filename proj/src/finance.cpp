#include "graphcost/finance.hpp"

#include <cmath>

#include "graphcost/error.hpp"

namespace graphcost {

namespace {
constexpr double kIrrLow = 0.0;
constexpr double kIrrHigh = 10.0;
constexpr double kIrrTolerance = 1e-9;
}  // namespace

double crf(double rate, int years) {
    if (years < 1) throw ValidationError("payback years must be >= 1");
    if (!(rate >= 0.0)) throw ValidationError("discount rate must be >= 0");
    if (rate == 0.0) return 1.0 / years;
    const double growth = std::pow(1.0 + rate, years);
    return rate * growth / (growth - 1.0);
}

double breakeven_price(double capex, double opexPerTonne, double capacity,
                       const FinanceSpec& fin) {
    if (!(capacity > 0.0)) throw ValidationError("capacity must be > 0");
    return opexPerTonne + capex * crf(fin.requiredIRR, fin.paybackYears) / capacity;
}

double irr_from_price(double price, double capex, double opexPerTonne, double capacity,
                      int years) {
    if (!(capacity > 0.0)) throw ValidationError("capacity must be > 0");
    if (!(capex > 0.0)) throw ValidationError("capex must be > 0 for an IRR");
    if (!(price > opexPerTonne)) throw NumericError("margin non-positive");

    // Required annual margin per unit of capital, increasing in rate.
    const double target = (price - opexPerTonne) * capacity / capex;
    auto f = [&](double r) { return crf(r, years) - target; };

    double lo = kIrrLow;
    double hi = kIrrHigh;
    double flo = f(lo);
    // Undiscounted payback exactly: accept rounding noise at the bracket edge.
    if (std::abs(flo) <= 1e-12 * target) return lo;
    const double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw NumericError("no IRR in [0, 10]: price outside the bracketed range");
    }
    while (hi - lo > kIrrTolerance) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace graphcost
