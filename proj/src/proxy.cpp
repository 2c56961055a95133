#include "quanto/proxy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quanto/errors.hpp"

namespace quanto {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_pdf(double x) {
    constexpr double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

ProxyMoments proxy_moments(double y0, const LogCoeffBundle& c, double rho, double T) {
    ProxyMoments m;
    m.Lambda_T = c.lam * c.lam * T;
    m.Sigma_T = rho * c.lam * c.sig * T;
    m.V0_T = m.Lambda_T;
    m.m0_T = y0 - m.Sigma_T - 0.5 * m.Lambda_T;
    return m;
}

ProxyMoments proxy_moments(const QuantoMarket& market, double T) {
    market.validate();
    return proxy_moments(market.y0(), log_coefficients(market), market.rho, T);
}

ProxyMoments proxy_moments(double y0, const TimeFunction& lambda_t, const TimeFunction& sigma_t,
                           double rho, double T, int nodes_per_level) {
    ProxyMoments m;
    m.Lambda_T = omega_quad({{[&](double t) { return lambda_t(t) * lambda_t(t); }}, T}, nodes_per_level);
    m.Sigma_T = rho * omega_quad({{[&](double t) { return lambda_t(t) * sigma_t(t); }}, T}, nodes_per_level);
    m.V0_T = m.Lambda_T;
    m.m0_T = y0 - m.Sigma_T - 0.5 * m.Lambda_T;
    return m;
}

double hermite(int j, double x) {
    if (j < 0 || j > kMaxGreekOrder)
        throw UnsupportedOrderError("Hermite order must be in [0, 8], got " + std::to_string(j));
    double h_prev = 1.0;
    if (j == 0) return h_prev;
    double h = x;
    for (int k = 1; k < j; ++k) {
        const double next = x * h - k * h_prev;
        h_prev = h;
        h = next;
    }
    return h;
}

double black_type_call(double y0, double strike, double shift, double var) {
    if (var < 0.0) throw NumericalError("negative proxy variance");
    const double fwd = std::exp(y0 - shift);
    if (var == 0.0) return std::max(fwd - strike, 0.0);
    const double sd = std::sqrt(var);
    const double d1 = (y0 - std::log(strike) - shift + 0.5 * var) / sd;
    const double d2 = d1 - sd;
    return fwd * normal_cdf(d1) - strike * normal_cdf(d2);
}

std::array<double, kMaxGreekOrder + 1> call_greeks(double y0, double strike,
                                                   const ProxyMoments& m) {
    std::array<double, kMaxGreekOrder + 1> g{};
    g[0] = black_type_call(y0, strike, m.Sigma_T, m.Lambda_T);
    if (!(m.Lambda_T > 0.0)) {
        for (int n = 1; n <= kMaxGreekOrder; ++n) g[n] = std::nan("");
        return g;
    }
    const double sd = std::sqrt(m.Lambda_T);
    const double d1 = (y0 - std::log(strike) - m.Sigma_T + 0.5 * m.Lambda_T) / sd;
    const double fwd = std::exp(y0 - m.Sigma_T);
    const double phi = normal_pdf(d1);
    const double Phi = normal_cdf(d1);

    std::array<double, kMaxGreekOrder> He{};
    for (int j = 0; j < kMaxGreekOrder; ++j) He[j] = hermite(j, d1);

    for (int n = 1; n <= kMaxGreekOrder; ++n) {
        // sum_{j=1}^{n-1} C(n-1, j) (-1)^{j-1} He_{j-1}(d1) / sd^j
        double sum = 0.0;
        double binom = 1.0;
        double sd_pow = 1.0;
        for (int j = 1; j <= n - 1; ++j) {
            binom = binom * (n - j) / j;
            sd_pow *= sd;
            const double sign = (j % 2 == 1) ? 1.0 : -1.0;
            sum += binom * sign * He[j - 1] / sd_pow;
        }
        g[n] = fwd * (Phi + phi * sum);
    }
    return g;
}

double greek_g(int n, const QuantoInstrument& instrument, const QuantoMarket& market) {
    if (n < 0 || n > kMaxGreekOrder)
        throw UnsupportedOrderError("Greek order must be in [0, 8], got " + std::to_string(n));
    instrument.validate();
    const ProxyMoments m = proxy_moments(market, instrument.expiry);
    if (n >= 1 && !(m.Lambda_T > 0.0))
        throw DegenerateVarianceError("Greeks of order >= 1 need positive proxy variance");
    return call_greeks(market.y0(), instrument.strike, m)[n];
}

double proxy_price(const QuantoInstrument& instrument, const QuantoMarket& market) {
    instrument.validate();
    const ProxyMoments m = proxy_moments(market, instrument.expiry);
    return instrument.accrual * instrument.discount *
           black_type_call(market.y0(), instrument.strike, m.Sigma_T, m.Lambda_T);
}

}  // namespace quanto
