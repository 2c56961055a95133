#pragma once

#include <optional>
#include <string_view>

namespace quanto {

enum class Method { Proxy, Order2, Order3, Market, MonteCarlo };

std::string_view method_name(Method m);

/// Magnitude of the expansion's error bound with the generic constant set to 1.
/// A scaling diagnostic, not a certified bound.
struct ErrorScale {
    int order = 2;
    double scale = 0.0;
    double M0 = 0.0;
    double M1 = 0.0;
    double lambda_inf = 0.0;
    double rho = 0.0;
    double T = 0.0;
};

struct PriceResult {
    double price = 0.0;
    Method method = Method::Proxy;
    std::optional<ErrorScale> error_scale;
    std::optional<double> ci_halfwidth;
};

}  // namespace quanto
