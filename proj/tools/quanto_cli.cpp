// Command-line driver: single pricings, discrepancy tables, vol surfaces and rho sweeps.
//
//   quanto price      --config run.json --method order3,mc
//   quanto table      --config run.json --out table.csv
//   quanto volsurface --asset fx --out fx_vols.csv
//   quanto rho-sweep  --maturity 6 --out sweep.csv
//
// Exit codes: 0 success, 2 invalid usage or configuration, 3 numerical failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "quanto/cli/commands.hpp"
#include "quanto/cli/config.hpp"
#include "quanto/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Flags {
    std::string config;
    std::string method;
    std::string asset;
    std::optional<std::uint64_t> seed, paths;
    std::optional<int> steps_per_year;
    std::optional<std::string> out;
    std::optional<double> rho, strike, maturity;
};

void add_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON config file (sections market, instrument, mc, grid)");
    cmd->add_option("--method", f.method, "Comma list of proxy, order2, order3, market, mc");
    cmd->add_option("--seed", f.seed, "Monte Carlo seed");
    cmd->add_option("--paths", f.paths, "Initial Monte Carlo path count");
    cmd->add_option("--steps-per-year", f.steps_per_year, "Euler steps per year");
    cmd->add_option("--out", f.out, "Output CSV path (default: standard output)");
    cmd->add_option("--rho", f.rho, "LIBOR/FX correlation");
    cmd->add_option("--strike", f.strike, "Caplet strike");
    cmd->add_option("--maturity", f.maturity, "Caplet expiry in years");
    cmd->add_option("--asset", f.asset, "Vol surface asset: libor or fx");
}

quanto::cli::RunConfig effective_config(const std::string& command, const Flags& f) {
    using namespace quanto::cli;
    RunConfig cfg = f.config.empty() ? RunConfig{} : load_config(f.config);
    if (!f.method.empty()) cfg.methods = parse_methods(f.method);
    if (f.seed) cfg.mc.seed = *f.seed;
    if (f.paths) cfg.mc.paths = *f.paths;
    if (f.steps_per_year) cfg.mc.steps_per_year = *f.steps_per_year;
    if (f.out) cfg.out = *f.out;
    if (f.rho) {
        cfg.market.rho = *f.rho;
        if (command == "table") cfg.grid.rhos = {*f.rho};
    }
    if (f.strike) cfg.instrument.strike = *f.strike;
    if (f.maturity) {
        cfg.instrument.expiry = *f.maturity;
        cfg.grid.sweep_maturity = *f.maturity;
        if (command == "table" || command == "volsurface") {
            cfg.grid.maturities = {*f.maturity};
            if (f.strike)
                cfg.grid.strikes = {{*f.strike}};
            else
                cfg.grid.strikes.clear();
        }
    }
    if (!f.asset.empty()) cfg.grid.asset = parse_asset(f.asset);
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quanto caplet pricing: expansions, market approximation and Monte Carlo"};
    app.require_subcommand(1);
    Flags flags;
    for (const char* name : {"price", "table", "volsurface", "rho-sweep"}) add_flags(app.add_subcommand(name), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const auto cfg = effective_config(command, flags);
        quanto::cli::run_command(command, cfg, std::cout);
    } catch (const quanto::NumericalError& e) {
        std::cerr << "quanto " << command << ": numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const quanto::Error& e) {
        std::cerr << "quanto " << command << ": " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "quanto " << command << ": " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
