#pragma once

#include <array>

#include "quanto/model.hpp"
#include "quanto/omega.hpp"

namespace quanto {

/// Moments of the Gaussian proxy Y0_T = y0 - Sigma_T + int lambda dW - Lambda_T / 2.
struct ProxyMoments {
    double Lambda_T = 0.0;  // int_0^T lambda^2
    double Sigma_T = 0.0;   // rho int_0^T lambda sigma
    double m0_T = 0.0;      // mean of Y0_T
    double V0_T = 0.0;      // variance of Y0_T (equals Lambda_T)
};

ProxyMoments proxy_moments(double y0, const LogCoeffBundle& coeffs, double rho, double T);
ProxyMoments proxy_moments(const QuantoMarket& market, double T);

/// Time-dependent coefficients frozen at (y0, z0): lambda(t, y0), sigma(t, z0).
ProxyMoments proxy_moments(double y0, const TimeFunction& lambda_t, const TimeFunction& sigma_t,
                           double rho, double T, int nodes_per_level = kDefaultOmegaNodes);

/// Probabilists' Hermite polynomial He_j, j <= 8.
double hermite(int j, double x);

inline constexpr int kMaxGreekOrder = 8;

/// E[(exp(y0 - shift + sqrt(var) N - var / 2) - K)^+], the proxy call expectation.
/// var = 0 returns the intrinsic value.
double black_type_call(double y0, double strike, double shift, double var);

/// Argument-shift derivatives g_n = d^n/de^n E[(exp(Y0_T + e) - K)^+] at e = 0,
/// with the proxy moments held fixed; entries 0..8.
std::array<double, kMaxGreekOrder + 1> call_greeks(double y0, double strike, const ProxyMoments& m);

double greek_g(int n, const QuantoInstrument& instrument, const QuantoMarket& market);

/// delta * B * E[(exp(Y0_T) - K)^+].
double proxy_price(const QuantoInstrument& instrument, const QuantoMarket& market);

double normal_cdf(double x);
double normal_pdf(double x);

}  // namespace quanto
