#include "quanto/model.hpp"

#include <cmath>
#include <sstream>

#include "quanto/errors.hpp"

namespace quanto {

namespace {

template <typename... Args>
std::string concat(const Args&... args) {
    std::ostringstream os;
    os.precision(12);
    (os << ... << args);
    return os.str();
}

}  // namespace

void QuantoInstrument::validate() const {
    if (!(expiry > 0.0) || !std::isfinite(expiry))
        throw ParameterError(concat("instrument expiry must be > 0, got ", expiry));
    if (!(accrual > 0.0) || !std::isfinite(accrual))
        throw ParameterError(concat("instrument accrual must be > 0, got ", accrual));
    if (!(strike > 0.0) || !std::isfinite(strike))
        throw ParameterError(concat("instrument strike must be > 0, got ", strike));
    if (!(discount > 0.0 && discount <= 1.5))
        throw ParameterError(concat("instrument discount must lie in (0, 1.5], got ", discount));
}

void HyperbolicVolParams::validate() const {
    if (!(nu > 0.0) || !std::isfinite(nu))
        throw ParameterError(concat("vol level nu must be > 0, got ", nu));
    if (!(beta > 0.0 && beta <= 1.0))
        throw ParameterError(concat("skew beta must lie in (0, 1], got ", beta));
}

void QuantoMarket::validate() const {
    if (!(L0 > 0.0) || !std::isfinite(std::log(L0)))
        throw ParameterError(concat("initial LIBOR L0 must be > 0, got ", L0));
    if (!(X0 > 0.0) || !std::isfinite(std::log(X0)))
        throw ParameterError(concat("initial FX forward X0 must be > 0, got ", X0));
    if (!(std::abs(rho) <= 1.0))
        throw ParameterError(concat("correlation must lie in [-1, 1], got ", rho));
    libor_vol.validate();
    fx_vol.validate();
}

double QuantoMarket::y0() const { return std::log(L0); }
double QuantoMarket::z0() const { return std::log(X0); }

double hyperbolic_vol(double level, const HyperbolicVolParams& params) {
    return hyperbolic_vol_level_derivs(level, params).value;
}

// f(L) = nu [ (1 - b + b^2)/b + (b - 1)/b * u(L) ],  u(L) = (S(L) - b)/L,
// S(L) = sqrt(L^2 + b^2 (1 - L)^2).
VolDerivs hyperbolic_vol_level_derivs(double level, const HyperbolicVolParams& params) {
    params.validate();
    if (!(level > 0.0) || !std::isfinite(level))
        throw DomainError(concat("hyperbolic vol requires a positive finite level, got ", level));
    const double nu = params.nu;
    const double b = params.beta;
    if (b == 1.0) return {nu, 0.0, 0.0};

    const double one_minus = 1.0 - level;
    const double q = level * level + b * b * one_minus * one_minus;
    const double s = std::sqrt(q);
    const double q1 = 2.0 * level - 2.0 * b * b * one_minus;
    const double q2 = 2.0 + 2.0 * b * b;
    const double s1 = q1 / (2.0 * s);
    const double s2 = q2 / (2.0 * s) - q1 * q1 / (4.0 * s * q);

    const double u = (s - b) / level;
    const double u1 = s1 / level - (s - b) / (level * level);
    const double u2 = s2 / level - 2.0 * s1 / (level * level) + 2.0 * (s - b) / (level * level * level);

    const double k = nu * (b - 1.0) / b;
    return {nu * (1.0 - b + b * b) / b + k * u, k * u1, k * u2};
}

VolDerivs log_vol_derivs(double log_level, const HyperbolicVolParams& params) {
    params.validate();
    if (params.beta == 1.0) return {params.nu, 0.0, 0.0};
    return log_vol_derivs(log_level, [&params](double level) {
        return hyperbolic_vol_level_derivs(level, params);
    });
}

VolDerivs log_vol_derivs(double log_level, const LevelVolFunction& vol) {
    if (!std::isfinite(log_level))
        throw DomainError(concat("log level must be finite, got ", log_level));
    const double level = std::exp(log_level);
    const VolDerivs f = vol(level);
    return {f.value, f.d1 * level, f.d2 * level * level + f.d1 * level};
}

LogCoeffBundle log_coefficients(const QuantoMarket& market) {
    market.validate();
    const VolDerivs lam = log_vol_derivs(market.y0(), market.libor_vol);
    const VolDerivs sig = log_vol_derivs(market.z0(), market.fx_vol);
    return {lam.value, lam.d1, lam.d2, sig.value, sig.d1, sig.d2};
}

double quanto_drift(const QuantoMarket& market, double y, double z) {
    const double lam = log_vol_derivs(y, market.libor_vol).value;
    const double sig = log_vol_derivs(z, market.fx_vol).value;
    return -(0.5 * lam * lam + market.rho * lam * sig);
}

double fx_drift(const QuantoMarket& market, double z) {
    const double sig = log_vol_derivs(z, market.fx_vol).value;
    return -0.5 * sig * sig;
}

QuantoMarket fx_as_underlying(const QuantoMarket& market) {
    QuantoMarket fx = market;
    fx.L0 = market.X0;
    fx.libor_vol = market.fx_vol;
    fx.rho = 0.0;
    return fx;
}

}  // namespace quanto
