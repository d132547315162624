#pragma once

// Plot-ready CSV and JSON emitters. Numbers carry 6 significant digits and
// every CSV starts with a "# graphcost-<kind> v<N>" schema line.
//
// CSV column orders (schema v1):
//   breakdown   row,lines,capex,annualized_capex,feedstock,electricity,labor,
//               consumables,maintenance,general_admin,sales,opex,total
//               (one row per stage, then "plant", then "total"; the total row's
//               "total" column is the break-even price)
//   samples     index,capital_intensity,opex_per_tonne,breakeven_price
//   summary     kind,name,value   kind in {meta, percentile, competitive_fraction}
//   ladder      step,parameter,from_value,to_value,price_before,price_after
//   contour     price,slope,ci_start,opex_start,ci_end,opex_end
//   projects    owner,report_year,location,process_type,capacity,capex,
//               opex_per_tonne,adjusted_capacity,adjusted_capex,adjusted_opex,
//               total_cost,published_total
//   variants    variant,capital_intensity,opex_per_tonne,breakeven_price,
//               graphitization_annualized_capex,graphitization_electricity,
//               graphitization_consumables
//   disruption  ev_cost_delta,sales_drop_fraction,producer_delta,consumer_delta
//   headroom    target_price,avoided,remaining_cost,headroom
//   manifest    table,label,route,region,id,unit,baseline,low,high,distribution

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "graphcost/analysis.hpp"
#include "graphcost/costing.hpp"
#include "graphcost/datasets.hpp"
#include "graphcost/montecarlo.hpp"

namespace graphcost {

enum class Format { Csv, Json };

Format parse_format(std::string_view s);

/// %.6g rendering used by every emitter.
std::string format_number(double v);

void emit_breakdown(const CostBreakdown& b, Format f, std::ostream& out);
void emit_samples(const MonteCarloSummary& s, Format f, std::ostream& out);
void emit_summary(const MonteCarloSummary& s, Format f, std::ostream& out);
void emit_ladder(const std::vector<LadderStep>& steps, Format f, std::ostream& out);
void emit_contour(const std::vector<IsoPriceLine>& lines, double ciMax, Format f, std::ostream& out);
void emit_projects(const std::vector<ReportedProject>& projects, const FinanceSpec& fin, Format f,
                   std::ostream& out);

struct VariantRow {
    std::string variant;
    CostBreakdown breakdown;
};
void emit_variants(const std::vector<VariantRow>& rows, Format f, std::ostream& out);
void emit_disruption(const DisruptionResult& r, Format f, std::ostream& out);
void emit_headroom(double targetPrice, const std::set<std::string>& avoided, double headroom,
                   Format f, std::ostream& out);
void emit_manifest(const std::vector<DatasetRow>& rows, Format f, std::ostream& out);

}  // namespace graphcost
