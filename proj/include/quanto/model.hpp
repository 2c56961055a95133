#pragma once

#include <functional>

namespace quanto {

/// Quanto caplet on a foreign LIBOR rate fixing at `expiry`, paying
/// accrual * (L(expiry) - strike)^+ in domestic currency, discounted by `discount`.
struct QuantoInstrument {
    double expiry = 1.0;
    double accrual = 1.0;
    double strike = 0.06;
    double discount = 1.0;

    void validate() const;
};

/// Parameters of the hyperbolic local volatility function.
/// beta = 1 is the log-normal limit (constant vol equal to nu).
struct HyperbolicVolParams {
    double nu = 0.08;
    double beta = 1.0;

    void validate() const;
};

/// Joint LIBOR / FX forward market with hyperbolic local vols.
struct QuantoMarket {
    double L0 = 0.06;
    double X0 = 1.0;
    double rho = 0.0;
    HyperbolicVolParams libor_vol{0.08, 0.3};
    HyperbolicVolParams fx_vol{0.15, 0.5};

    void validate() const;
    double y0() const;
    double z0() const;
};

/// Value and first two derivatives of a vol function (level or log space).
struct VolDerivs {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// A time-homogeneous relative vol given as a function of the level,
/// returning value and level-space derivatives.
using LevelVolFunction = std::function<VolDerivs(double level)>;

double hyperbolic_vol(double level, const HyperbolicVolParams& params);

/// Analytic level-space derivatives of the hyperbolic vol.
VolDerivs hyperbolic_vol_level_derivs(double level, const HyperbolicVolParams& params);

/// Vol as a function of y = ln(level), with chain-rule derivatives:
/// d/dy = f'(L) L and d2/dy2 = f''(L) L^2 + f'(L) L.
VolDerivs log_vol_derivs(double log_level, const HyperbolicVolParams& params);
VolDerivs log_vol_derivs(double log_level, const LevelVolFunction& vol);

/// lambda, sigma and their log-space derivatives frozen at (y0, z0).
struct LogCoeffBundle {
    double lam = 0.0;
    double lam_y = 0.0;
    double lam_yy = 0.0;
    double sig = 0.0;
    double sig_z = 0.0;
    double sig_zz = 0.0;
};

LogCoeffBundle log_coefficients(const QuantoMarket& market);

/// Drift of Y = ln L under the domestic payment measure:
/// -(lambda^2 / 2 + rho lambda sigma).
double quanto_drift(const QuantoMarket& market, double y, double z);

/// Drift of Z = ln X: -sigma^2 / 2.
double fx_drift(const QuantoMarket& market, double z);

/// The market seen as a plain (non-quanto) local-vol underlying on the FX forward:
/// FX vol in the LIBOR slot, X0 as the initial level, zero correlation.
QuantoMarket fx_as_underlying(const QuantoMarket& market);

}  // namespace quanto
