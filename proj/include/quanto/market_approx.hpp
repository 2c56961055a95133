#pragma once

#include <optional>

#include "quanto/mc.hpp"
#include "quanto/model.hpp"
#include "quanto/price_result.hpp"

namespace quanto {

/// Undiscounted Black call: F Phi(d1) - K Phi(d2).
double black_call(double forward, double strike, double vol, double T);

struct ImpliedVolResult {
    double vol = 0.0;
    bool near_degenerate = false;  // solution pinned at a bracket end
    int iterations = 0;
};

inline constexpr double kImpliedVolLower = 1e-6;
inline constexpr double kImpliedVolUpper = 5.0;
inline constexpr double kImpliedVolPriceTol = 1e-12;

/// Inverts the Black formula for price / scale, where scale = discount * accrual.
/// Safeguarded Newton with bisection fallback on [1e-6, 5]. Throws NoSolutionError outside
/// (intrinsic, forward); a time value within the price tolerance returns the lower bracket,
/// flagged near_degenerate, as does a root pinned to either bracket end.
ImpliedVolResult black_implied_vol(double price, double forward, double strike, double T,
                                   double scale = 1.0);

enum class Asset { Libor, Fx };
enum class VolSource { ExpansionRho0, MonteCarlo };

struct ImpliedVolPoint {
    Asset asset = Asset::Libor;
    double expiry = 0.0;
    double strike = 0.0;
    double vol = 0.0;
    VolSource source = VolSource::ExpansionRho0;
    bool near_degenerate = false;
};

/// Vanilla on one asset under its own measure (no quanto drift), priced with the
/// third-order expansion at zero correlation or by Monte Carlo, then inverted.
/// A missing strike means ATM (the current forward).
ImpliedVolPoint model_implied_vol(Asset asset, double T, std::optional<double> strike,
                                  const QuantoMarket& market,
                                  VolSource source = VolSource::ExpansionRho0,
                                  const McConfig& mc = {});

/// Black formula with forward drift -q, q = rho * lambda_imp(ATM) * sigma_imp(ATM),
/// and the strike-dependent LIBOR implied vol.
PriceResult market_price(const QuantoInstrument& instrument, const QuantoMarket& market);

/// Same formula from supplied implied vols.
double market_price_from_vols(const QuantoInstrument& instrument, const QuantoMarket& market,
                              double libor_vol_at_strike, double libor_vol_atm, double fx_vol_atm);

}  // namespace quanto
