#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quanto/errors.hpp"
#include "quanto/model.hpp"

namespace quanto {

/// Which drift the log-LIBOR carries in the simulation.
enum class DriftMode {
    Quanto,    // -(lambda^2 / 2 + rho lambda sigma): the domestic payment measure
    NoQuanto,  // -lambda^2 / 2: the foreign measure, e^Y is a martingale
};

struct McConfig {
    std::uint64_t paths = 2'000'000;
    int steps_per_year = 250;
    std::uint64_t seed = 20240601;
    std::optional<double> target_ci_halfwidth;
    bool antithetic = true;
    double budget = 5e9;  // max paths * time steps
    int threads = 0;      // 0: hardware concurrency, capped by QUANTO_THREADS
    DriftMode drift = DriftMode::Quanto;
    std::uint64_t batch_paths = 1 << 14;

    void validate() const;
};

struct McEstimate {
    double price = 0.0;
    double ci_halfwidth = 0.0;  // 1.96 standard errors
    std::uint64_t paths_used = 0;
    double std_error = 0.0;
};

/// Thrown when the CI target is not met within the budget; carries the best estimate.
class McBudgetExhausted : public NumericalError {
public:
    McBudgetExhausted(const std::string& what, std::vector<McEstimate> best)
        : NumericalError(what), best_(std::move(best)) {}
    const std::vector<McEstimate>& best() const { return best_; }

private:
    std::vector<McEstimate> best_;
};

/// Log-Euler Monte Carlo price of delta * B * (L_T - K)^+.
McEstimate simulate_quanto(const QuantoInstrument& instrument, const QuantoMarket& market,
                           const McConfig& config);

/// Same paths priced against several strikes (common random numbers).
/// With a CI target, paths grow until every strike meets it.
std::vector<McEstimate> simulate_quanto_strip(const QuantoInstrument& instrument,
                                              const std::vector<double>& strikes,
                                              const QuantoMarket& market, const McConfig& config);

/// Monte Carlo mean of exp(Y_T) (no payoff), used for martingale checks.
McEstimate simulate_forward(double expiry, const QuantoMarket& market, const McConfig& config);

/// Worker count honouring QUANTO_THREADS.
int worker_count(int requested);

}  // namespace quanto
