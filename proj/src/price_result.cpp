#include "quanto/price_result.hpp"

namespace quanto {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Proxy: return "proxy";
        case Method::Order2: return "order2";
        case Method::Order3: return "order3";
        case Method::Market: return "market";
        case Method::MonteCarlo: return "mc";
    }
    return "unknown";
}

}  // namespace quanto
