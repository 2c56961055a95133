#include "quanto/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "quanto/rng.hpp"

namespace quanto {

void McConfig::validate() const {
    if (paths < 1000) throw ConfigError("mc.paths must be >= 1000");
    if (steps_per_year < 12) throw ConfigError("mc.steps_per_year must be >= 12");
    if (target_ci_halfwidth && !(*target_ci_halfwidth > 0.0))
        throw ConfigError("mc.target_ci_halfwidth must be > 0");
    if (!(budget > 0.0)) throw ConfigError("mc.budget must be > 0");
    if (batch_paths < 2) throw ConfigError("mc batch size must be >= 2");
}

int worker_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("QUANTO_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

namespace {

// Hyperbolic vol of a log-level without per-call validation; constants hoisted.
struct LogVol {
    double nu, a, c, b, b2;
    bool flat;

    explicit LogVol(const HyperbolicVolParams& p)
        : nu(p.nu),
          a((1.0 - p.beta + p.beta * p.beta) / p.beta),
          c((p.beta - 1.0) / p.beta),
          b(p.beta),
          b2(p.beta * p.beta),
          flat(p.beta == 1.0) {}

    double operator()(double x) const {
        if (flat) return nu;
        const double L = std::exp(x);
        const double m = 1.0 - L;
        return nu * (a + c * (std::sqrt(L * L + b2 * m * m) - b) / L);
    }
};

struct Sums {
    std::vector<double> sum, sumsq;
    std::uint64_t samples = 0;
    std::uint64_t paths = 0;
};

struct Problem {
    QuantoMarket market;
    double expiry;
    std::vector<double> strikes;  // 0 prices the forward e^{Y_T} itself
    double scale;                 // accrual * discount
    McConfig config;
    int steps;
};

Sums run_batch(const Problem& pb, std::uint64_t batch, std::uint64_t batch_size) {
    const auto& mk = pb.market;
    const LogVol vol_l(mk.libor_vol), vol_x(mk.fx_vol);
    const double rho = mk.rho;
    const double rho_bar = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const double dt = pb.expiry / pb.steps;
    const double sq = std::sqrt(dt);
    const bool quanto = pb.config.drift == DriftMode::Quanto && rho != 0.0;
    const double y0 = mk.y0(), z0 = mk.z0();
    const std::size_t nk = pb.strikes.size();

    NormalStream normal = rng_stream(pb.config.seed, batch);
    Sums s;
    s.sum.assign(nk, 0.0);
    s.sumsq.assign(nk, 0.0);

    const bool anti = pb.config.antithetic;
    const std::uint64_t samples = anti ? batch_size / 2 : batch_size;
    std::vector<double> pay(nk);
    for (std::uint64_t p = 0; p < samples; ++p) {
        double y[2] = {y0, y0};
        double z[2] = {z0, z0};
        const int legs = anti ? 2 : 1;
        for (int t = 0; t < pb.steps; ++t) {
            const double e1 = normal();
            const double e2 = normal();
            const double dwx = sq * e1;
            const double dwl = sq * (rho * e1 + rho_bar * e2);
            for (int leg = 0; leg < legs; ++leg) {
                const double sgn = leg == 0 ? 1.0 : -1.0;
                const double lam = vol_l(y[leg]);
                double drift = -0.5 * lam * lam;
                if (quanto) {
                    const double sig = vol_x(z[leg]);
                    drift -= rho * lam * sig;
                    z[leg] += -0.5 * sig * sig * dt + sig * sgn * dwx;
                }
                y[leg] += drift * dt + lam * sgn * dwl;
            }
        }
        const double L0 = std::exp(y[0]);
        const double L1 = anti ? std::exp(y[1]) : 0.0;
        for (std::size_t k = 0; k < nk; ++k) {
            const double K = pb.strikes[k];
            double v = std::max(L0 - K, 0.0);
            if (anti) v = 0.5 * (v + std::max(L1 - K, 0.0));
            s.sum[k] += v;
            s.sumsq[k] += v * v;
        }
    }
    s.samples = samples;
    s.paths = anti ? 2 * samples : samples;
    return s;
}

// Runs batches [first, last) across workers; results land in batch order.
void run_batches(const Problem& pb, std::uint64_t first, std::uint64_t last,
                 std::uint64_t total_paths, std::vector<Sums>& out) {
    const std::uint64_t bp = pb.config.batch_paths;
    out.resize(last);
    const int workers = std::max<int>(1, std::min<std::uint64_t>(worker_count(pb.config.threads), last - first));
    std::atomic<std::uint64_t> next{first};
    auto work = [&] {
        for (std::uint64_t b = next++; b < last; b = next++) {
            const std::uint64_t size = std::min(bp, total_paths - b * bp);
            out[b] = run_batch(pb, b, size);
        }
    };
    if (workers == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

std::vector<McEstimate> merge(const Problem& pb, const std::vector<Sums>& batches) {
    const std::size_t nk = pb.strikes.size();
    std::vector<double> sum(nk, 0.0), sumsq(nk, 0.0);
    std::uint64_t n = 0, paths = 0;
    for (const Sums& s : batches) {
        for (std::size_t k = 0; k < nk; ++k) {
            sum[k] += s.sum[k];
            sumsq[k] += s.sumsq[k];
        }
        n += s.samples;
        paths += s.paths;
    }
    std::vector<McEstimate> est(nk);
    for (std::size_t k = 0; k < nk; ++k) {
        const double mean = sum[k] / n;
        const double var = std::max(0.0, (sumsq[k] - n * mean * mean) / (n - 1));
        est[k].price = pb.scale * mean;
        est[k].std_error = pb.scale * std::sqrt(var / n);
        est[k].ci_halfwidth = 1.96 * est[k].std_error;
        est[k].paths_used = paths;
    }
    return est;
}

std::vector<McEstimate> solve(const Problem& pb) {
    const McConfig& cfg = pb.config;
    const std::uint64_t bp = cfg.antithetic ? (cfg.batch_paths + 1) / 2 * 2 : cfg.batch_paths;
    Problem p = pb;
    p.config.batch_paths = bp;

    std::uint64_t total = cfg.paths;
    if (cfg.antithetic) total += total % 2;
    auto cost = [&p](std::uint64_t paths) { return static_cast<double>(paths) * p.steps; };
    if (cost(total) > cfg.budget) {
        std::ostringstream os;
        os << "mc: " << total << " paths x " << p.steps << " steps exceeds the budget of "
           << cfg.budget << " step evaluations";
        throw ConfigError(os.str());
    }

    std::vector<Sums> batches;
    std::uint64_t done_batches = 0;
    for (;;) {
        const std::uint64_t nb = (total + bp - 1) / bp;
        // Earlier batches keep their size; only a trailing partial batch is redrawn larger.
        if (done_batches > 0 && batches[done_batches - 1].paths < bp) --done_batches;
        run_batches(p, done_batches, nb, total, batches);
        done_batches = nb;
        auto est = merge(p, batches);
        if (!cfg.target_ci_halfwidth) return est;
        double worst = 0.0;
        for (const auto& e : est) worst = std::max(worst, e.ci_halfwidth);
        if (worst <= *cfg.target_ci_halfwidth) return est;
        if (cost(2 * total) > cfg.budget) {
            std::ostringstream os;
            os << "mc: CI half-width " << worst << " above target " << *cfg.target_ci_halfwidth
               << " after " << total << " paths; budget exhausted";
            throw McBudgetExhausted(os.str(), std::move(est));
        }
        total *= 2;
    }
}

Problem make_problem(double expiry, const QuantoMarket& market, const McConfig& config) {
    market.validate();
    config.validate();
    if (!(expiry > 0.0)) throw DomainError("expiry must be > 0");
    Problem p{market, expiry, {}, 1.0, config, 0};
    p.steps = std::max(1, static_cast<int>(std::ceil(expiry * config.steps_per_year - 1e-9)));
    return p;
}

}  // namespace

McEstimate simulate_quanto(const QuantoInstrument& instrument, const QuantoMarket& market,
                           const McConfig& config) {
    return simulate_quanto_strip(instrument, {instrument.strike}, market, config).front();
}

std::vector<McEstimate> simulate_quanto_strip(const QuantoInstrument& instrument,
                                              const std::vector<double>& strikes,
                                              const QuantoMarket& market, const McConfig& config) {
    instrument.validate();
    if (strikes.empty()) throw DomainError("strike strip is empty");
    for (double k : strikes)
        if (!(k > 0.0)) throw DomainError("strikes must be > 0");
    Problem p = make_problem(instrument.expiry, market, config);
    p.strikes = strikes;
    p.scale = instrument.accrual * instrument.discount;
    return solve(p);
}

McEstimate simulate_forward(double expiry, const QuantoMarket& market, const McConfig& config) {
    Problem p = make_problem(expiry, market, config);
    p.strikes = {0.0};
    return solve(p).front();
}

}  // namespace quanto
