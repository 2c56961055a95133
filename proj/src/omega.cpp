#include "quanto/omega.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quanto/errors.hpp"

namespace quanto {

double omega_const(std::span<const double> coeffs, double T) {
    const auto n = coeffs.size();
    if (n == 0 || n > kMaxOmegaArity)
        throw ArityError("omega takes 1 to 4 integrands, got " + std::to_string(n));
    if (!(T > 0.0)) throw DomainError("omega horizon must be > 0");
    double prod = 1.0;
    double factorial = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        prod *= coeffs[i] * T;
        factorial *= static_cast<double>(i + 1);
    }
    return prod / factorial;
}

GaussLegendreRule gauss_legendre(int n, double a, double b) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged root
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

namespace {

// Polynomial interpolant through (nodes, values) in barycentric form.
class Barycentric {
public:
    explicit Barycentric(const std::vector<double>& nodes) : nodes_(nodes), w_(nodes.size(), 1.0) {
        const auto n = nodes.size();
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) w_[j] /= (nodes[j] - nodes[k]);
        }
    }

    double operator()(const std::vector<double>& values, double x) const {
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            const double d = x - nodes_[j];
            if (d == 0.0) return values[j];
            const double t = w_[j] / d;
            num += t * values[j];
            den += t;
        }
        return num / den;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> w_;
};

}  // namespace

double omega_quad(const OmegaSpec& spec, int nodes_per_level) {
    const auto n = spec.integrands.size();
    if (n == 0 || n > kMaxOmegaArity)
        throw ArityError("omega takes 1 to 4 integrands, got " + std::to_string(n));
    if (nodes_per_level < 8)
        throw ConfigError("omega_quad needs at least 8 nodes per level, got " +
                          std::to_string(nodes_per_level));
    const double T = spec.horizon;
    if (!(T > 0.0)) throw DomainError("omega horizon must be > 0");

    const int m = nodes_per_level;
    const GaussLegendreRule grid = gauss_legendre(m, 0.0, T);
    const GaussLegendreRule unit = gauss_legendre(m, 0.0, 1.0);
    const Barycentric interp(grid.nodes);

    // F_k(t) = int_t^T l_k(r) F_{k+1}(r) dr with F_{n+1} = 1, tabulated on the grid.
    std::vector<double> inner;  // F_{k+1} on the grid; empty means identically 1
    for (std::size_t level = n; level-- > 1;) {
        const TimeFunction& f = spec.integrands[level];
        std::vector<double> current(m);
        for (int i = 0; i < m; ++i) {
            const double t = grid.nodes[i];
            const double len = T - t;
            double acc = 0.0;
            for (int q = 0; q < m; ++q) {
                const double r = t + len * unit.nodes[q];
                const double g = inner.empty() ? 1.0 : interp(inner, r);
                acc += unit.weights[q] * f(r) * g;
            }
            current[i] = len * acc;
        }
        inner = std::move(current);
    }
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        const double g = inner.empty() ? 1.0 : inner[i];
        total += grid.weights[i] * spec.integrands[0](grid.nodes[i]) * g;
    }
    return total;
}

}  // namespace quanto
