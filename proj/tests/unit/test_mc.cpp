#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "oracles.hpp"
#include "quanto/mc.hpp"
#include "quanto/model.hpp"
#include "quanto/proxy.hpp"
#include "quanto/rng.hpp"

using namespace quanto;

namespace {

McConfig small_config(std::uint64_t paths = 100'000) {
    McConfig c;
    c.paths = paths;
    c.steps_per_year = 50;
    return c;
}

}  // namespace

TEST(RngStream, Deterministic) {
    NormalStream a = rng_stream(42, 7), b = rng_stream(42, 7);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(RngStream, StandardNormalMoments) {
    NormalStream s = rng_stream(123, 0);
    const int n = 1'000'000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = s();
        sum += x;
        sq += x * x;
    }
    const double mean = sum / n;
    EXPECT_LT(std::abs(mean), 4.0 / std::sqrt(n));
    EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.01);
}

TEST(RngStream, DistinctStreamsAreUncorrelated) {
    NormalStream a = rng_stream(99, 0), b = rng_stream(99, 1);
    const int n = 1'000'000;
    double sab = 0, sa = 0, sb = 0, saa = 0, sbb = 0;
    for (int i = 0; i < n; ++i) {
        const double x = a(), y = b();
        sab += x * y;
        sa += x;
        sb += y;
        saa += x * x;
        sbb += y * y;
    }
    const double cov = sab / n - (sa / n) * (sb / n);
    const double corr = cov / std::sqrt((saa / n - sa * sa / n / n) * (sbb / n - sb * sb / n / n));
    EXPECT_LT(std::abs(corr), 0.005);
}

TEST(SimulateQuanto, LogNormalMatchesClosedForm) {
    QuantoMarket m;
    m.libor_vol.beta = 1.0;
    m.fx_vol.beta = 1.0;
    m.rho = -0.5;
    const QuantoInstrument inst{1.0, 1.0, 0.06, 1.0};
    const McEstimate e = simulate_quanto(inst, m, small_config(400'000));
    EXPECT_NEAR(e.price, proxy_price(inst, m), e.ci_halfwidth);
    EXPECT_DOUBLE_EQ(e.ci_halfwidth, 1.96 * e.std_error);
    EXPECT_EQ(e.paths_used, 400'000u);
}

TEST(SimulateQuanto, ZeroCorrelationMatchesLocalVolPde) {
    QuantoMarket m;
    m.rho = 0.0;
    const double T = 1.0, K = 0.06;
    McConfig cfg = small_config(400'000);
    cfg.steps_per_year = 250;
    const McEstimate e = simulate_quanto({T, 1.0, K, 1.0}, m, cfg);
    const double pde = oracle::local_vol_call_pde([&](double L) { return hyperbolic_vol(L, m.libor_vol); }, m.L0, K, T);
    EXPECT_NEAR(e.price, pde, e.ci_halfwidth) << "pde " << pde;
}

TEST(SimulateQuanto, BitwiseDeterministicAndIndependentOfThreads) {
    QuantoMarket m;
    m.rho = 0.3;
    const QuantoInstrument inst{2.0, 1.0, 0.05, 1.0};
    McConfig c = small_config(50'000);
    c.batch_paths = 4096;
    c.threads = 1;
    const McEstimate a = simulate_quanto(inst, m, c);
    const McEstimate b = simulate_quanto(inst, m, c);
    c.threads = 4;
    const McEstimate d = simulate_quanto(inst, m, c);
    EXPECT_EQ(a.price, b.price);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(a.price, d.price);
    EXPECT_EQ(a.std_error, d.std_error);
    c.seed += 1;
    EXPECT_NE(simulate_quanto(inst, m, c).price, a.price);
}

TEST(SimulateQuanto, QuantoThreadsEnvironmentCapsWorkers) {
    ::setenv("QUANTO_THREADS", "1", 1);
    EXPECT_EQ(worker_count(8), 1);
    ::setenv("QUANTO_THREADS", "3", 1);
    EXPECT_EQ(worker_count(8), 3);
    EXPECT_EQ(worker_count(2), 2);
    ::unsetenv("QUANTO_THREADS");
}

TEST(SimulateQuanto, FarOutOfTheMoneyIsWorthless) {
    QuantoMarket m;
    const double T = 1.0;
    const ProxyMoments p = proxy_moments(m, T);
    const double K = std::exp(m.y0() + 10.0 * std::sqrt(p.Lambda_T));
    const McEstimate e = simulate_quanto({T, 1.0, K, 1.0}, m, small_config());
    EXPECT_LT(e.price, 1e-12);
    EXPECT_LT(e.ci_halfwidth, 1e-12);
}

TEST(SimulateQuanto, ForwardIsAMartingaleWithoutQuantoDrift) {
    QuantoMarket m;
    m.rho = -0.5;
    McConfig c = small_config(200'000);
    c.drift = DriftMode::NoQuanto;
    const McEstimate e = simulate_forward(6.0, m, c);
    EXPECT_NEAR(e.price, m.L0, e.ci_halfwidth);
    // With the quanto drift the forward moves by about -rho lambda sigma T in log terms.
    c.drift = DriftMode::Quanto;
    const McEstimate q = simulate_forward(6.0, m, c);
    EXPECT_GT(q.price - m.L0, 5.0 * q.ci_halfwidth);
}

TEST(SimulateQuanto, AntitheticDoesNotIncreaseStdError) {
    QuantoMarket m;
    m.rho = -0.5;
    const QuantoInstrument inst{1.0, 1.0, 0.06, 1.0};
    McConfig c = small_config(200'000);
    const McEstimate anti = simulate_quanto(inst, m, c);
    c.antithetic = false;
    const McEstimate plain = simulate_quanto(inst, m, c);
    EXPECT_LE(anti.std_error, plain.std_error);
}

TEST(SimulateQuanto, HalvingTheStepMovesLessThanTwoHalfWidths) {
    QuantoMarket m;
    m.rho = -0.5;
    const QuantoInstrument inst{1.0, 1.0, 0.06, 1.0};
    McConfig c = small_config(400'000);
    c.steps_per_year = 125;
    const McEstimate coarse = simulate_quanto(inst, m, c);
    c.steps_per_year = 250;
    const McEstimate fine = simulate_quanto(inst, m, c);
    EXPECT_LT(std::abs(fine.price - coarse.price), 2.0 * fine.ci_halfwidth);
}

TEST(SimulateQuanto, TargetGrowsPathsAndBudgetIsEnforced) {
    QuantoMarket m;
    const QuantoInstrument inst{1.0, 1.0, 0.06, 1.0};
    McConfig c = small_config(1000);
    c.target_ci_halfwidth = 1e-4;
    const McEstimate e = simulate_quanto(inst, m, c);
    EXPECT_LE(e.ci_halfwidth, 1e-4);
    EXPECT_GT(e.paths_used, 1000u);

    c.target_ci_halfwidth = 1e-7;
    c.budget = 1e7;
    try {
        simulate_quanto(inst, m, c);
        FAIL() << "expected budget exhaustion";
    } catch (const McBudgetExhausted& ex) {
        ASSERT_EQ(ex.best().size(), 1u);
        EXPECT_GT(ex.best()[0].price, 0.0);
        EXPECT_GT(ex.best()[0].ci_halfwidth, 1e-7);
    }
    McConfig big = small_config(1'000'000);
    big.budget = 1e6;
    EXPECT_THROW(simulate_quanto(inst, m, big), ConfigError);
}

TEST(SimulateQuanto, AdaptiveRunEqualsDirectRunOfSameSize) {
    QuantoMarket m;
    const QuantoInstrument inst{1.0, 1.0, 0.06, 1.0};
    McConfig c = small_config(3000);
    c.batch_paths = 1024;
    c.target_ci_halfwidth = 3e-4;
    const McEstimate adaptive = simulate_quanto(inst, m, c);
    McConfig d = c;
    d.target_ci_halfwidth.reset();
    d.paths = adaptive.paths_used;
    const McEstimate direct = simulate_quanto(inst, m, d);
    EXPECT_EQ(adaptive.price, direct.price);
}

TEST(SimulateQuanto, StripSharesPathsAcrossStrikes) {
    QuantoMarket m;
    m.rho = 0.2;
    const QuantoInstrument inst{1.0, 1.0, 0.06, 1.0};
    const McConfig c = small_config(20'000);
    const auto strip = simulate_quanto_strip(inst, {0.04, 0.06, 0.08}, m, c);
    ASSERT_EQ(strip.size(), 3u);
    EXPECT_EQ(strip[1].price, simulate_quanto(inst, m, c).price);
    EXPECT_GT(strip[0].price, strip[1].price);
    EXPECT_GT(strip[1].price, strip[2].price);
}

TEST(McConfig, Validation) {
    McConfig c;
    c.paths = 999;
    EXPECT_THROW(c.validate(), ConfigError);
    c.paths = 1000;
    c.steps_per_year = 11;
    EXPECT_THROW(c.validate(), ConfigError);
}
