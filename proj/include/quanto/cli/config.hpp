#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quanto/market_approx.hpp"
#include "quanto/mc.hpp"
#include "quanto/model.hpp"
#include "quanto/price_result.hpp"

namespace quanto::cli {

/// Maturity / strike / correlation grid for the table, surface and sweep commands.
struct ExperimentGrid {
    std::vector<double> maturities{1.0, 6.0, 10.0, 15.0};
    std::vector<std::vector<double>> strikes;  // one list per maturity; empty = defaults
    std::vector<double> rhos{-0.5, -0.2, 0.2, 0.5};
    std::vector<double> sweep_strikes{0.04, 0.06, 0.08};
    std::vector<double> sweep_rhos{-0.5, -0.4, -0.3, -0.2, -0.1, 0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    double sweep_maturity = 6.0;
    Asset asset = Asset::Libor;
    VolSource vol_source = VolSource::ExpansionRho0;

    /// Strikes for maturity slot i (explicit list or the default range).
    std::vector<double> strikes_for(std::size_t i) const;
    void validate() const;
};

/// Default LIBOR strike range for a maturity: widens with T, centred near 6%.
std::vector<double> default_strikes(double T);

struct RunConfig {
    QuantoMarket market;
    QuantoInstrument instrument;
    McConfig mc;
    ExperimentGrid grid;
    std::vector<Method> methods{Method::Proxy, Method::Order2, Method::Order3, Method::Market};
    std::optional<std::string> out;

    RunConfig();
    void validate() const;
    /// Canonical JSON of every effective setting (after flag overrides).
    nlohmann::json to_json() const;
};

/// Parses a config document; unknown keys and type errors raise ConfigError
/// naming the offending path, e.g. "/market/rho".
RunConfig config_from_json(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

Method parse_method(const std::string& name);
std::vector<Method> parse_methods(const std::string& comma_list);
Asset parse_asset(const std::string& name);
std::string asset_name(Asset a);
std::string source_name(VolSource s);

/// 64-bit FNV-1a of the canonical config dump, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace quanto::cli
