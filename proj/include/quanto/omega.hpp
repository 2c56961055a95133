#pragma once

#include <functional>
#include <span>
#include <vector>

namespace quanto {

using TimeFunction = std::function<double(double)>;

/// Iterated time integral
///   omega(l1, ..., ln)_0^T = int_0^T l1(r1) int_{r1}^T l2(r2) ... int_{r_{n-1}}^T ln(rn) drn ... dr1
/// for 1 to 4 integrand layers.
struct OmegaSpec {
    std::vector<TimeFunction> integrands;
    double horizon = 1.0;
};

inline constexpr int kMaxOmegaArity = 4;
inline constexpr int kDefaultOmegaNodes = 32;

/// Constant integrands: (prod coeffs) T^n / n!.
double omega_const(std::span<const double> coeffs, double T);

/// Nested Gauss-Legendre evaluation. Each inner antiderivative t -> int_t^T ...
/// is tabulated on the fixed Gauss-Legendre grid of [0, T] and evaluated off-grid by
/// barycentric polynomial interpolation, so polynomial integrands of moderate degree
/// are integrated to rounding error.
double omega_quad(const OmegaSpec& spec, int nodes_per_level = kDefaultOmegaNodes);

/// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n, double a, double b);

}  // namespace quanto
