#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "quanto/cli/config.hpp"
#include "quanto/price_result.hpp"

namespace quanto::cli {

std::vector<PriceResult> run_price(const RunConfig& cfg);

/// One (T, K, rho) point of the discrepancy experiment.
struct DetailRow {
    double T = 0.0;
    double K = 0.0;
    double rho = 0.0;
    double proxy = 0.0;
    double order2 = 0.0;
    double order3 = 0.0;
    double market = 0.0;
    double mc = 0.0;
    double ci = 0.0;
    bool partial = false;  // MC budget ran out before the CI target
};

/// Average and maximum absolute discrepancy against Monte Carlo, per method.
struct DiscrepancyStats {
    double rho = 0.0;
    double avg_abs_2nd = 0.0, max_abs_2nd = 0.0;
    double avg_abs_3rd = 0.0, max_abs_3rd = 0.0;
    double avg_abs_mkt = 0.0, max_abs_mkt = 0.0;
    std::size_t points = 0;
    bool partial = false;
};

struct TableResult {
    std::vector<DetailRow> detail;
    std::vector<DiscrepancyStats> summary;
};

/// Statistics over rows sharing one rho, accumulated in row order.
DiscrepancyStats summarize(double rho, const std::vector<DetailRow>& rows);

TableResult run_table(const RunConfig& cfg);
std::vector<ImpliedVolPoint> run_volsurface(const RunConfig& cfg);

struct SweepPoint {
    double K = 0.0;
    double rho = 0.0;
    double price = 0.0;
};
std::vector<SweepPoint> run_rho_sweep(const RunConfig& cfg);

void write_price(const RunConfig& cfg, const std::vector<PriceResult>& rows, std::ostream& out);
void write_table_summary(const RunConfig& cfg, const TableResult& t, std::ostream& out);
void write_table_detail(const RunConfig& cfg, const TableResult& t, std::ostream& out);
void write_volsurface(const RunConfig& cfg, const std::vector<ImpliedVolPoint>& pts, std::ostream& out);
void write_rho_sweep(const RunConfig& cfg, const std::vector<SweepPoint>& pts, std::ostream& out);

/// Path of the per-point CSV accompanying a table summary written to `summary_path`.
std::string detail_path(const std::string& summary_path);

/// Runs one subcommand ("price", "table", "volsurface", "rho-sweep"), writing CSV to
/// cfg.out or `console`. Library exceptions propagate to the caller.
void run_command(const std::string& command, const RunConfig& cfg, std::ostream& console);

}  // namespace quanto::cli
