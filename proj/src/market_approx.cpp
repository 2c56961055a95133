#include "quanto/market_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "quanto/errors.hpp"
#include "quanto/expansion.hpp"
#include "quanto/proxy.hpp"

namespace quanto {

double black_call(double forward, double strike, double vol, double T) {
    return black_type_call(std::log(forward), strike, 0.0, vol * vol * T);
}

namespace {

double black_vega(double forward, double strike, double vol, double T) {
    const double sd = vol * std::sqrt(T);
    const double d1 = (std::log(forward / strike) + 0.5 * sd * sd) / sd;
    return forward * normal_pdf(d1) * std::sqrt(T);
}

}  // namespace

ImpliedVolResult black_implied_vol(double price, double forward, double strike, double T, double scale) {
    if (!(forward > 0.0) || !(strike > 0.0) || !(T > 0.0) || !(scale > 0.0))
        throw DomainError("implied vol needs positive forward, strike, expiry and scale");
    const double target = price / scale;
    const double intrinsic = std::max(forward - strike, 0.0);
    // Prices within rounding of the band edges (forward - strike is itself rounded) count as on them.
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * forward;
    const double floor = intrinsic > 0.0 ? intrinsic + slack : 0.0;
    if (!(target > floor) || !(target < forward - slack)) {
        std::ostringstream os;
        os.precision(17);
        os << "price " << target << " outside the no-arbitrage band (" << intrinsic << ", "
           << forward << ")";
        throw NoSolutionError(os.str());
    }

    // A time value below the price tolerance does not pin down a vol: every vol from the
    // lower bracket up to some small level reproduces it, so report the bracket end.
    if (target - intrinsic <= 10.0 * kImpliedVolPriceTol) return {kImpliedVolLower, true, 0};
    double lo = kImpliedVolLower, hi = kImpliedVolUpper;
    const double f_lo = black_call(forward, strike, lo, T) - target;
    const double f_hi = black_call(forward, strike, hi, T) - target;
    if (f_lo >= 0.0) return {lo, true, 0};
    if (f_hi <= 0.0) return {hi, true, 0};

    // Start from the Brenner-Subrahmanyam ATM guess, clamped into the bracket.
    double vol = std::clamp(target / forward * std::sqrt(2.0 * std::numbers::pi / T), lo, hi);
    // Stop once the price matches and the Newton step no longer moves the vol; a few
    // polishing steps after the price tolerance is met bring the vol to rounding level.
    int polish = 0;
    for (int it = 1; it <= 200; ++it) {
        const double diff = black_call(forward, strike, vol, T) - target;
        const double vega = black_vega(forward, strike, vol, T);
        const double step = vega > 0.0 ? diff / vega : INFINITY;
        if (std::abs(diff) <= kImpliedVolPriceTol &&
            (std::abs(step) <= 1e-14 * vol || ++polish > 4 || hi - lo < 1e-15 * hi)) {
            const bool edge = vol - kImpliedVolLower < 1e-8 || kImpliedVolUpper - vol < 1e-8;
            return {vol, edge, it};
        }
        if (diff > 0.0)
            hi = vol;
        else if (diff < 0.0)
            lo = vol;
        double next = vol - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (hi - lo < 1e-15 * hi) return {next, false, it};
        vol = next;
    }
    throw NumericalError("implied vol did not converge in 200 iterations");
}

namespace {

// Single local-vol asset seen as the LIBOR slot of a zero-correlation market.
QuantoMarket as_plain_underlying(Asset asset, const QuantoMarket& market) {
    QuantoMarket m = asset == Asset::Libor ? market : fx_as_underlying(market);
    m.rho = 0.0;
    return m;
}

}  // namespace

ImpliedVolPoint model_implied_vol(Asset asset, double T, std::optional<double> strike,
                                  const QuantoMarket& market, VolSource source, const McConfig& mc) {
    if (!(T > 0.0)) throw DomainError("implied vol expiry must be > 0");
    market.validate();
    const QuantoMarket m = as_plain_underlying(asset, market);
    const double K = strike.value_or(m.L0);

    ImpliedVolPoint pt;
    pt.asset = asset;
    pt.expiry = T;
    pt.strike = K;
    pt.source = source;
    if (m.libor_vol.beta == 1.0) {
        // Log-normal asset: the smile is flat at nu.
        pt.vol = m.libor_vol.nu;
        return pt;
    }
    const QuantoInstrument inst{T, 1.0, K, 1.0};
    double price = 0.0;
    if (source == VolSource::ExpansionRho0) {
        price = price_order3(inst, m).price;
    } else {
        McConfig cfg = mc;
        cfg.drift = DriftMode::NoQuanto;
        price = simulate_quanto(inst, m, cfg).price;
    }
    const ImpliedVolResult iv = black_implied_vol(price, m.L0, K, T);
    pt.vol = iv.vol;
    pt.near_degenerate = iv.near_degenerate;
    return pt;
}

double market_price_from_vols(const QuantoInstrument& instrument, const QuantoMarket& market,
                              double libor_vol_at_strike, double libor_vol_atm, double fx_vol_atm) {
    const double T = instrument.expiry;
    const double q = market.rho * libor_vol_atm * fx_vol_atm;
    return instrument.accrual * instrument.discount *
           black_type_call(market.y0(), instrument.strike, q * T,
                           libor_vol_at_strike * libor_vol_at_strike * T);
}

PriceResult market_price(const QuantoInstrument& instrument, const QuantoMarket& market) {
    instrument.validate();
    market.validate();
    const double T = instrument.expiry;
    const double lam_k = model_implied_vol(Asset::Libor, T, instrument.strike, market).vol;
    const double lam_atm = model_implied_vol(Asset::Libor, T, std::nullopt, market).vol;
    const double sig_atm = model_implied_vol(Asset::Fx, T, std::nullopt, market).vol;
    PriceResult r;
    r.method = Method::Market;
    r.price = market_price_from_vols(instrument, market, lam_k, lam_atm, sig_atm);
    return r;
}

}  // namespace quanto
