#include "quanto/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "quanto/errors.hpp"

namespace quanto {

double factor_value(Factor f, const LogCoeffBundle& c) {
    switch (f) {
        case Factor::Lam2: return c.lam * c.lam;
        case Factor::LamSig: return c.lam * c.sig;
        case Factor::Sig2: return c.sig * c.sig;
        case Factor::LamLamY: return c.lam * c.lam_y;
        case Factor::LamYSig: return c.lam_y * c.sig;
        case Factor::LamSigZ: return c.lam * c.sig_z;
        case Factor::LamY2: return c.lam_y * c.lam_y;
        case Factor::LamLamYY: return c.lam * c.lam_yy;
        case Factor::LamYYSig: return c.lam_yy * c.sig;
        case Factor::LamSigZZ: return c.lam * c.sig_zz;
        case Factor::SigSigZ: return c.sig * c.sig_z;
        case Factor::LamYSigZ: return c.lam_y * c.sig_z;
    }
    throw DomainError("unknown factor");
}

namespace {

double& slot(ExpansionCoefficients& k, char family, int index) {
    switch (family) {
        case 'A': return k.A.at(index - 1);
        case 'B': return k.B.at(index - 1);
        case 'C': return k.C.at(index - 1);
    }
    throw DomainError(std::string("unknown weight family ") + family);
}

void check_index(char family, int index, int count) {
    if (index < 1 || index > count)
        throw DomainError(std::string(1, family) + std::to_string(index) + " is out of range");
    if (family == 'C' && index == kMissingC) throw DomainError("there is no weight C13");
}

ExpansionCoefficients empty_coefficients() {
    ExpansionCoefficients k;
    k.C[kMissingC - 1] = std::numeric_limits<double>::quiet_NaN();
    return k;
}

}  // namespace

double ExpansionCoefficients::a(int i) const {
    check_index('A', i, kCountA);
    return A[i - 1];
}
double ExpansionCoefficients::b(int i) const {
    check_index('B', i, kCountB);
    return B[i - 1];
}
double ExpansionCoefficients::c(int i) const {
    check_index('C', i, kCountC);
    return C[i - 1];
}
double ExpansionCoefficients::weight(char family, int index) const {
    switch (family) {
        case 'A': return a(index);
        case 'B': return b(index);
        case 'C': return c(index);
    }
    throw DomainError(std::string("unknown weight family ") + family);
}

ExpansionCoefficients build_coefficients(const LogCoeffBundle& coeffs, double T) {
    ExpansionCoefficients k = empty_coefficients();
    std::array<double, kFactorCount> fv{};
    for (int f = 0; f < kFactorCount; ++f) fv[f] = factor_value(static_cast<Factor>(f), coeffs);
    std::array<double, kMaxOmegaArity> buf{};
    for (const WeightRow& row : weight_rows()) {
        for (std::size_t i = 0; i < row.factors.size(); ++i)
            buf[i] = fv[static_cast<int>(row.factors[i])];
        slot(k, row.family, row.index) = omega_const({buf.data(), row.factors.size()}, T);
    }
    assemble_gammas(k);
    return k;
}

ExpansionCoefficients build_coefficients(const QuantoMarket& market, double T) {
    market.validate();
    return build_coefficients(log_coefficients(market), T);
}

ExpansionCoefficients build_coefficients(const TimeCoeffFunctions& fn, double T, int nodes) {
    auto at = [&fn](double t) {
        return LogCoeffBundle{fn.lam(t), fn.lam_y(t), fn.lam_yy(t), fn.sig(t), fn.sig_z(t), fn.sig_zz(t)};
    };
    ExpansionCoefficients k = empty_coefficients();
    for (const WeightRow& row : weight_rows()) {
        OmegaSpec spec;
        spec.horizon = T;
        for (Factor f : row.factors)
            spec.integrands.push_back([at, f](double t) { return factor_value(f, at(t)); });
        slot(k, row.family, row.index) = omega_quad(spec, nodes);
    }
    assemble_gammas(k);
    return k;
}

void assemble_gammas(ExpansionCoefficients& k) {
    auto A = [&k](int i) { return k.a(i); };
    auto B = [&k](int i) { return k.b(i); };
    auto C = [&k](int i) { return k.c(i); };
    auto SB = [&k](std::initializer_list<int> ix) {
        double s = 0.0;
        for (int i : ix) s += k.b(i);
        return s;
    };
    auto SC = [&k](std::initializer_list<int> ix) {
        double s = 0.0;
        for (int i : ix) s += k.c(i);
        return s;
    };

    auto& g0 = k.gamma0;
    g0[0] = 0.5 * (A(1) - A(2) - A(3)) - 0.5 * B(1) - 0.25 * (B(2) + B(3));
    g0[1] = -1.5 * A(1) + 0.5 * (A(2) + A(3)) + 3.5 * B(1) + 1.25 * (B(3) + B(2)) + 0.5 * C(33) +
            0.25 * C(32);
    g0[2] = A(1) - 6.0 * B(1) - 2.0 * (B(3) + B(2)) - 1.5 * C(32) - 3.0 * C(33);
    g0[3] = 3.0 * B(1) + B(2) + B(3) + 3.25 * C(32) + 6.5 * C(33);
    g0[4] = -3.0 * C(32) - 6.0 * C(33);
    g0[5] = C(32) + 2.0 * C(33);

    // rho^1. B30 belongs to the -1/2 group of the g_1 weight: it comes from the
    // xi^2 alpha_yy / 2 term together with B31, alongside -B29 / 4.
    auto& g1 = k.gamma_rho[0];
    g1 = {};
    g1[0] = A(7) + 0.5 * (A(8) + A(9) - A(10) - A(11)) - B(28) -
            0.5 * SB({26, 27, 32, 36, 35, 31, 30, 42}) - 0.25 * SB({33, 34, 29, 37});
    g1[1] = -A(7) - A(8) + B(29) + 2.5 * B(27) + 3.0 * (B(28) + B(26)) + 0.5 * SB({32, 33, 34}) +
            1.5 * SB({31, 30, 42, 35}) + C(56) + C(55) + 0.5 * SC({50, 52, 54, 78}) +
            0.25 * SC({5, 6, 7, 51, 53, 57, 58, 77});
    g1[2] = -3.0 * B(26) - 2.0 * (B(27) + B(28)) - SB({29, 30, 31, 35, 42}) -
            0.75 * SC({5, 6, 7, 53, 57, 58}) - 4.0 * SC({55, 56}) - 2.0 * SC({50, 52}) -
            2.5 * SC({54, 78}) - 1.25 * SC({51, 77});
    g1[3] = 0.5 * SC({5, 6, 7, 57, 58, 53}) + 2.0 * SC({51, 77}) + 4.0 * SC({54, 78}) +
            5.0 * SC({55, 56}) + 2.5 * SC({50, 52});
    g1[4] = -C(50) - C(51) - C(52) - C(77) - 2.0 * SC({54, 55, 56, 78});

    // rho^2
    auto& g2 = k.gamma_rho[1];
    g2 = {};
    g2[0] = A(4) - A(5) - 0.5 * SB({10, 13, 14, 15, 16, 17}) - B(11) - B(12) - B(18) - B(19);
    g2[1] = -A(6) + 2.0 * SB({10, 20, 11}) + B(12) + B(41) + B(16) + B(17) + B(18) + B(19) +
            B(38) + 1.5 * B(21) + 0.5 * SB({22, 23, 24, 25, 39}) + C(39) + C(42) + C(43) + C(84) +
            C(85) + 2.0 * C(44) + 0.25 * SC({8, 10, 12, 14, 80, 82, 86, 87}) +
            0.5 * SC({9, 11, 15, 16, 38, 40, 41, 45, 46, 79, 81, 83});
    g2[2] = -SB({23, 22, 38, 39}) - 2.0 * B(20) - C(80) - 2.0 * SC({83, 39}) -
            3.0 * SC({42, 43, 84, 85}) - 4.0 * C(44) - 0.5 * SC({8, 9, 17, 15, 16, 12, 14, 18, 19}) -
            1.5 * SC({38, 40, 79, 81}) - 0.5 * SC({41, 45, 46, 47, 48, 49, 86, 87, 82});
    g2[3] = SC({38, 39, 40, 79, 80, 81}) + 2.0 * SC({44, 42, 43, 85, 83, 84}) +
            1.5 * SC({17, 19, 18, 47, 48, 49});
    g2[4] = -SC({17, 19, 18, 49, 48, 47});

    // rho^3
    auto& g3 = k.gamma_rho[2];
    g3 = {};
    g3[0] = -B(4) - B(8);
    g3[1] = 2.0 * SB({5, 7, 40}) + SC({64, 67, 68, 34}) + 2.0 * SC({69, 35}) +
            0.5 * SC({20, 21, 22, 63, 65, 66, 70, 71});
    g3[2] = -B(6) - B(9) - SC({31, 24, 25, 34, 63, 64, 65, 36}) -
            2.0 * SC({27, 35, 69, 67, 68, 37}) - 0.5 * SC({26, 23, 28, 29, 30, 73, 74, 75});
    g3[3] = SC({28, 26, 30, 31, 75, 74, 73, 36}) + 2.0 * SC({27, 37});

    // rho^4
    auto& g4 = k.gamma_rho[3];
    g4 = {};
    g4[1] = C(59) + 2.0 * C(60);
    g4[2] = -C(4) - C(61) - 2.0 * (C(62) + C(3));
    g4[3] = 2.0 * C(1) + C(2);
}

namespace {

void require_greeks(std::span<const double> g, std::size_t n) {
    if (g.size() < n)
        throw DomainError("expansion needs Greeks g_0..g_" + std::to_string(n - 1));
}

}  // namespace

double order2_correction(const ExpansionCoefficients& k, double rho, std::span<const double> g) {
    require_greeks(g, 4);
    const double A1 = k.a(1), A4 = k.a(4), A6 = k.a(6), A7 = k.a(7), A8 = k.a(8), A9 = k.a(9);
    const double c0 = A1 * (0.5 * g[1] - 1.5 * g[2] + g[3]);
    const double c1 = g[1] * (A7 + 0.5 * (A8 + A9)) - g[2] * (A7 + A8);
    const double c2 = g[1] * A4 - g[2] * A6;
    return c0 + rho * (c1 + rho * c2);
}

double order3_correction(const ExpansionCoefficients& k, double rho, std::span<const double> g) {
    require_greeks(g, 7);
    double total = 0.0;
    for (int j = 0; j < 6; ++j) total += k.gamma0[j] * g[j + 1];
    // Horner in rho over the four rho-power blocks.
    double poly = 0.0;
    for (int i = 3; i >= 0; --i) {
        double block = 0.0;
        for (int j = 0; j < 6; ++j) block += k.gamma_rho[i][j] * g[j + 1];
        poly = (poly + block) * rho;
    }
    return total + poly;
}

double call_payoff_norm(double strike, const ProxyMoments& m) {
    // E[e^{2Y} 1{Y > k}] for Y ~ N(m, V) is e^{2m + 2V} Phi((m + 2V - k) / sqrt V).
    const double k = std::log(strike);
    const double V = m.V0_T;
    if (V <= 0.0) return m.m0_T > k ? std::exp(m.m0_T) : 0.0;
    return std::exp(m.m0_T + V) * std::sqrt(normal_cdf((m.m0_T + 2.0 * V - k) / std::sqrt(V)));
}

ErrorScale error_scale(int order, const QuantoMarket& market, double T, double payoff_norm) {
    if (order != 2 && order != 3)
        throw UnsupportedOrderError("error scale exists for orders 2 and 3, got " + std::to_string(order));
    market.validate();
    if (!(std::abs(market.rho) < 1.0))
        throw CorrelationDegenerateError("error scale requires |rho| < 1");
    if (!(T > 0.0)) throw DomainError("maturity must be > 0");
    if (payoff_norm < 0.0) throw DomainError("payoff norm must be >= 0");

    constexpr int n = 201;
    const double span = std::log(kErrorGridFactor);
    double M0 = 0.0, M1 = 0.0;
    double lam_inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double u = -span + 2.0 * span * i / (n - 1);
        const VolDerivs l = log_vol_derivs(market.y0() + u, market.libor_vol);
        const VolDerivs s = log_vol_derivs(market.z0() + u, market.fx_vol);
        M0 = std::max({M0, std::abs(l.value), std::abs(s.value)});
        M1 = std::max({M1, std::abs(l.d1), std::abs(l.d2), std::abs(s.d1), std::abs(s.d2)});
        lam_inf = std::min(lam_inf, l.value);
    }

    ErrorScale e;
    e.order = order;
    e.M0 = M0;
    e.M1 = M1;
    e.lambda_inf = lam_inf;
    e.rho = market.rho;
    e.T = T;
    const double ellip = lam_inf * (1.0 - market.rho * market.rho);
    if (order == 2)
        e.scale = payoff_norm * std::pow(M0, 3) * M1 * std::pow(T, 1.5) / ellip;
    else
        e.scale = payoff_norm * std::pow(M0, 5) * M1 * T * T / (ellip * ellip);
    return e;
}

namespace {

PriceResult price_expansion(int order, const QuantoInstrument& instrument, const QuantoMarket& market) {
    instrument.validate();
    market.validate();
    const double T = instrument.expiry;
    const LogCoeffBundle coeffs = log_coefficients(market);
    const ProxyMoments m = proxy_moments(market.y0(), coeffs, market.rho, T);
    if (!(m.Lambda_T > 0.0))
        throw DegenerateVarianceError("expansion needs positive proxy variance");
    const auto g = call_greeks(market.y0(), instrument.strike, m);
    const ExpansionCoefficients k = build_coefficients(coeffs, T);
    const double corr = order == 2 ? order2_correction(k, market.rho, g) : order3_correction(k, market.rho, g);

    PriceResult r;
    r.method = order == 2 ? Method::Order2 : Method::Order3;
    r.price = instrument.accrual * instrument.discount * (g[0] + corr);
    if (std::abs(market.rho) < 1.0)
        r.error_scale = error_scale(order, market, T, call_payoff_norm(instrument.strike, m));
    return r;
}

}  // namespace

PriceResult price_order2(const QuantoInstrument& instrument, const QuantoMarket& market) {
    return price_expansion(2, instrument, market);
}

PriceResult price_order3(const QuantoInstrument& instrument, const QuantoMarket& market) {
    return price_expansion(3, instrument, market);
}

}  // namespace quanto
