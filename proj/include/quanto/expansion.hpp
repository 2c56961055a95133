#pragma once

#include <array>
#include <span>
#include <vector>

#include "quanto/model.hpp"
#include "quanto/omega.hpp"
#include "quanto/price_result.hpp"
#include "quanto/proxy.hpp"

namespace quanto {

/// Products of frozen coefficients appearing as omega integrands in the weight tables.
enum class Factor {
    Lam2,      // lambda^2
    LamSig,    // lambda sigma
    Sig2,      // sigma^2
    LamLamY,   // lambda lambda_y
    LamYSig,   // lambda_y sigma
    LamSigZ,   // lambda sigma_z
    LamY2,     // lambda_y^2
    LamLamYY,  // lambda lambda_yy
    LamYYSig,  // lambda_yy sigma
    LamSigZZ,  // lambda sigma_zz
    SigSigZ,   // sigma sigma_z
    LamYSigZ,  // lambda_y sigma_z
};
inline constexpr int kFactorCount = 12;

double factor_value(Factor f, const LogCoeffBundle& c);

/// One weight: family 'A' (2 layers), 'B' (3 layers) or 'C' (4 layers), its index,
/// and the ordered integrands (outermost first).
struct WeightRow {
    char family;
    int index;
    std::vector<Factor> factors;
};

/// All 139 weight rows. There is no C13: the C family skips that index.
const std::vector<WeightRow>& weight_rows();

inline constexpr int kCountA = 11;
inline constexpr int kCountB = 42;
inline constexpr int kCountC = 87;
inline constexpr int kMissingC = 13;

/// Weights and the Greek coefficients of the third-order correction
///   sum_j gamma0[j-1] g_j + sum_i rho^i sum_j gamma_rho[i-1][j-1] g_j.
struct ExpansionCoefficients {
    std::array<double, kCountA> A{};
    std::array<double, kCountB> B{};
    std::array<double, kCountC> C{};  // C[kMissingC - 1] is NaN
    std::array<double, 6> gamma0{};
    std::array<std::array<double, 6>, 4> gamma_rho{};

    // 1-based accessors; throw DomainError on out-of-range or missing indices.
    double a(int i) const;
    double b(int i) const;
    double c(int i) const;
    double weight(char family, int index) const;
};

/// Weights frozen at (y0, z0) via the constant-coefficient omega, then gammas.
ExpansionCoefficients build_coefficients(const LogCoeffBundle& coeffs, double T);
ExpansionCoefficients build_coefficients(const QuantoMarket& market, double T);

/// Time-dependent coefficients lambda(t, y0), ... evaluated by nested quadrature.
struct TimeCoeffFunctions {
    TimeFunction lam, lam_y, lam_yy, sig, sig_z, sig_zz;
};
ExpansionCoefficients build_coefficients(const TimeCoeffFunctions& coeffs, double T,
                                         int nodes_per_level = kDefaultOmegaNodes);

/// Fill gamma0 / gamma_rho from the A, B, C weights.
void assemble_gammas(ExpansionCoefficients& coeffs);

/// Greeks g_0..g_6 (at least 7 entries; g_0 unused).
double order2_correction(const ExpansionCoefficients& coeffs, double rho, std::span<const double> g);
double order3_correction(const ExpansionCoefficients& coeffs, double rho, std::span<const double> g);

PriceResult price_order2(const QuantoInstrument& instrument, const QuantoMarket& market);
PriceResult price_order3(const QuantoInstrument& instrument, const QuantoMarket& market);

/// || h'(Y0_T) ||_2 for the call payoff h(y) = (e^y - K)^+ under the proxy law.
double call_payoff_norm(double strike, const ProxyMoments& m);

/// Level grid bounds used for the sup/inf constants: [L0 / f, L0 * f] and [X0 / f, X0 * f].
inline constexpr double kErrorGridFactor = 10.0;

ErrorScale error_scale(int order, const QuantoMarket& market, double T, double payoff_norm);

}  // namespace quanto
