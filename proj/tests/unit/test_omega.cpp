#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "quanto/errors.hpp"
#include "quanto/omega.hpp"

using namespace quanto;

namespace {

OmegaSpec constants(const std::vector<double>& c, double T) {
    OmegaSpec s;
    s.horizon = T;
    for (double v : c) s.integrands.push_back([v](double) { return v; });
    return s;
}

}  // namespace

TEST(OmegaConst, ClosedForms) {
    const double one[] = {1.0};
    const double two[] = {1.0, 1.0};
    const double three[] = {1.0, 1.0, 1.0};
    EXPECT_DOUBLE_EQ(omega_const(one, 1.7), 1.7);
    EXPECT_DOUBLE_EQ(omega_const(two, 2.0), 2.0);
    EXPECT_DOUBLE_EQ(omega_const(three, 3.0), 4.5);
    const double four[] = {0.3, -1.2, 2.0, 0.7};
    EXPECT_DOUBLE_EQ(omega_const(four, 1.5), 0.3 * -1.2 * 2.0 * 0.7 * std::pow(1.5, 4) / 24);
}

TEST(OmegaConst, ArityErrors) {
    EXPECT_THROW(omega_const({}, 1.0), ArityError);
    const double five[] = {1, 1, 1, 1, 1};
    EXPECT_THROW(omega_const(five, 1.0), ArityError);
}

TEST(OmegaQuad, ElementaryIntegrals) {
    OmegaSpec s{{[](double t) { return t; }, [](double) { return 1.0; }}, 1.0};
    EXPECT_NEAR(omega_quad(s), 1.0 / 6.0, 1e-14);
    EXPECT_NEAR(omega_quad(constants({1, 1, 1}, 3.0)), 4.5, 1e-13);
    OmegaSpec e{{[](double t) { return std::exp(t); }, [](double) { return 1.0; }}, 1.0};
    EXPECT_NEAR(omega_quad(e), std::exp(1.0) - 2.0, 1e-8 * (std::exp(1.0) - 2.0));
}

TEST(OmegaQuad, OrderOfIntegrandsMatters) {
    // omega(l1, l2) = int_0^T l1(r) int_r^T l2: with l1 = 1, l2 = t -> int_0^1 (1 - r^2)/2 = 1/3.
    OmegaSpec s{{[](double) { return 1.0; }, [](double t) { return t; }}, 1.0};
    EXPECT_NEAR(omega_quad(s), 1.0 / 3.0, 1e-14);
    // Four layers of t: the ordered simplex integral of r1 r2 r3 r4 over [0,1] is 1/384.
    OmegaSpec p{{[](double t) { return t; }, [](double t) { return t; }, [](double t) { return t; },
                 [](double t) { return t; }},
                1.0};
    EXPECT_NEAR(omega_quad(p), 1.0 / 384.0, 1e-15);
}

TEST(OmegaQuad, MatchesClosedFormOnRandomConstants) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0), tu(0.1, 15.0);
    for (int draw = 0; draw < 100; ++draw) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<double> c(n);
            for (auto& v : c) v = u(gen);
            const double T = tu(gen);
            const double exact = omega_const(c, T);
            EXPECT_NEAR(omega_quad(constants(c, T)), exact, 1e-10 * std::abs(exact));
        }
    }
}

TEST(OmegaQuad, Multilinearity) {
    const double a = 3.7;
    OmegaSpec s{{[](double t) { return std::cos(t); }, [](double t) { return 1.0 + t * t; }}, 2.0};
    OmegaSpec sa{{[a](double t) { return a * std::cos(t); }, [](double t) { return 1.0 + t * t; }}, 2.0};
    EXPECT_NEAR(omega_quad(sa), a * omega_quad(s), 1e-10 * std::abs(a * omega_quad(s)));
    const double c2[] = {0.4, 1.3}, c2a[] = {a * 0.4, 1.3};
    EXPECT_DOUBLE_EQ(omega_const(c2a, 2.0), a * omega_const(c2, 2.0));
}

TEST(OmegaQuad, RefinementIsStable) {
    OmegaSpec s{{[](double t) { return std::exp(-t); }, [](double t) { return std::sin(t) + 2.0; },
                 [](double t) { return 1.0 / (1.0 + t); }},
                4.0};
    const double coarse = omega_quad(s, 16);
    const double fine = omega_quad(s, 32);
    EXPECT_LT(std::abs(fine - coarse), 1e-9 * std::abs(fine));
}

TEST(OmegaQuad, ConfigurationErrors) {
    EXPECT_THROW(omega_quad(constants({1.0}, 1.0), 7), ConfigError);
    EXPECT_THROW(omega_quad(OmegaSpec{{}, 1.0}), ArityError);
    EXPECT_THROW(omega_quad(constants({1, 1, 1, 1, 1}, 1.0)), ArityError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
    const GaussLegendreRule r = gauss_legendre(10, -1.0, 2.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 19);
    EXPECT_NEAR(s, (std::pow(2.0, 20) - 1.0) / 20.0, 1e-9);
}
