#pragma once

// Capital annuitization, break-even pricing and IRR inversion.
//
// Cash flows are constant and real, discounted at year end. No taxes,
// depreciation, working capital or terminal value.

#include <map>
#include <string>

namespace graphcost {

struct FinanceSpec {
    double requiredIRR = 0.15;
    int paybackYears = 10;
    /// Market reference prices in $/t, keyed e.g. "SG_2024".
    std::map<std::string, double> referencePrices{
        {"SG_2024", 7500.0}, {"NG_2024", 7000.0}, {"SG_2022", 11000.0}, {"NG_2022", 9000.0}};
};

/// Capital recovery factor rate*(1+rate)^n / ((1+rate)^n - 1); 1/n at rate 0.
double crf(double rate, int years);

/// Price at which `capex` is recovered at the required IRR over the payback period.
double breakeven_price(double capex, double opexPerTonne, double capacity, const FinanceSpec& fin);

/// Rate r with breakeven_price(capex, opex, capacity, {r, years}) == price.
/// Bisection on [0, 10]; throws NumericError when the margin is non-positive
/// or the bracket holds no root.
double irr_from_price(double price, double capex, double opexPerTonne, double capacity, int years);

}  // namespace graphcost
