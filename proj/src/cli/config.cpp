#include "quanto/cli/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "quanto/errors.hpp"

namespace quanto::cli {

using nlohmann::json;

namespace {

std::vector<double> arange(double lo, double hi, double step) {
    std::vector<double> v;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int i = 0; i <= n; ++i) v.push_back(std::round((lo + i * step) * 1e6) / 1e6);
    return v;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigError("config " + path + ": " + msg);
}

// Walks one JSON object, rejecting keys nobody asked for.
class Section {
public:
    Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_.empty() ? "/" : path_, "expected an object");
    }
    ~Section() noexcept(false) {
        if (std::uncaught_exceptions() > 0) return;
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) fail(path_ + "/" + it.key(), "unknown key");
    }

    const json* find(const std::string& key) {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }
    std::string at(const std::string& key) const { return path_ + "/" + key; }

    void number(const std::string& key, double& out) {
        if (const json* v = find(key)) {
            if (!v->is_number()) fail(at(key), "expected a number");
            out = v->get<double>();
        }
    }
    template <class Int>
    void integer(const std::string& key, Int& out) {
        if (const json* v = find(key)) {
            if (!v->is_number_integer() && !v->is_number_unsigned()) fail(at(key), "expected an integer");
            if (v->is_number_integer() && v->get<std::int64_t>() < 0) fail(at(key), "must be >= 0");
            out = v->get<Int>();
        }
    }
    void boolean(const std::string& key, bool& out) {
        if (const json* v = find(key)) {
            if (!v->is_boolean()) fail(at(key), "expected true or false");
            out = v->get<bool>();
        }
    }
    void string(const std::string& key, std::string& out) {
        if (const json* v = find(key)) {
            if (!v->is_string()) fail(at(key), "expected a string");
            out = v->get<std::string>();
        }
    }
    void numbers(const std::string& key, std::vector<double>& out) {
        if (const json* v = find(key)) out = number_list(*v, at(key));
    }

    static std::vector<double> number_list(const json& v, const std::string& path) {
        if (!v.is_array()) fail(path, "expected an array of numbers");
        std::vector<double> r;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number()) fail(path + "/" + std::to_string(i), "expected a number");
            r.push_back(v[i].get<double>());
        }
        return r;
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_vol(Section& parent, const std::string& key, HyperbolicVolParams& p) {
    if (const json* v = parent.find(key)) {
        Section s(*v, parent.at(key));
        s.number("nu", p.nu);
        s.number("beta", p.beta);
    }
}

// Re-throws validation failures of a section as config errors tagged with its path.
template <class F>
void checked(const std::string& path, F&& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        if (std::string_view(e.what()).starts_with("config /")) throw;
        fail(path, e.what());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

}  // namespace

std::vector<double> default_strikes(double T) {
    if (T <= 1.0) return arange(0.03, 0.09, 0.005);
    if (T <= 6.0) return arange(0.02, 0.12, 0.01);
    if (T <= 10.0) return arange(0.015, 0.14, 0.005);
    return arange(0.01, 0.16, 0.01);
}

std::vector<double> ExperimentGrid::strikes_for(std::size_t i) const {
    if (i < strikes.size() && !strikes[i].empty()) return strikes[i];
    return default_strikes(maturities.at(i));
}

void ExperimentGrid::validate() const {
    if (maturities.empty()) fail("/grid/maturities", "must not be empty");
    for (std::size_t i = 0; i < maturities.size(); ++i)
        if (!(maturities[i] > 0.0)) fail("/grid/maturities/" + std::to_string(i), "must be > 0");
    if (!strikes.empty() && strikes.size() != maturities.size())
        fail("/grid/strikes", "needs one strike list per maturity");
    for (std::size_t i = 0; i < maturities.size(); ++i) {
        const auto ks = strikes_for(i);
        for (std::size_t j = 0; j < ks.size(); ++j) {
            if (!(ks[j] > 0.0)) fail("/grid/strikes/" + std::to_string(i), "strikes must be > 0");
            if (j > 0 && !(ks[j] > ks[j - 1]))
                fail("/grid/strikes/" + std::to_string(i), "strikes must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < rhos.size(); ++i)
        if (!(std::abs(rhos[i]) <= 1.0)) fail("/grid/rhos/" + std::to_string(i), "|rho| must be <= 1");
    for (double r : sweep_rhos)
        if (!(std::abs(r) < 1.0)) fail("/grid/sweep_rhos", "|rho| must be < 1");
    for (double k : sweep_strikes)
        if (!(k > 0.0)) fail("/grid/sweep_strikes", "strikes must be > 0");
    if (!(sweep_maturity > 0.0)) fail("/grid/sweep_maturity", "must be > 0");
}

RunConfig::RunConfig() {
    market.rho = -0.5;
    mc.paths = 200'000;
    mc.target_ci_halfwidth = 2e-4;
}

void RunConfig::validate() const {
    checked("/market", [&] { market.validate(); });
    checked("/instrument", [&] { instrument.validate(); });
    checked("/mc", [&] { mc.validate(); });
    grid.validate();
    if (methods.empty()) fail("/methods", "must list at least one method");
}

std::string asset_name(Asset a) { return a == Asset::Libor ? "libor" : "fx"; }
std::string source_name(VolSource s) { return s == VolSource::ExpansionRho0 ? "expansion_rho0" : "monte_carlo"; }

Asset parse_asset(const std::string& name) {
    if (name == "libor") return Asset::Libor;
    if (name == "fx") return Asset::Fx;
    throw ConfigError("unknown asset '" + name + "' (expected libor or fx)");
}

Method parse_method(const std::string& name) {
    for (Method m : {Method::Proxy, Method::Order2, Method::Order3, Method::Market, Method::MonteCarlo})
        if (name == method_name(m)) return m;
    throw ConfigError("unknown method '" + name + "' (expected proxy, order2, order3, market or mc)");
}

std::vector<Method> parse_methods(const std::string& list) {
    std::vector<Method> r;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) r.push_back(parse_method(item));
    if (r.empty()) throw ConfigError("method list is empty");
    return r;
}

RunConfig config_from_json(const json& doc) {
    RunConfig cfg;
    Section root(doc, "");
    if (const json* v = root.find("market")) {
        Section s(*v, "/market");
        s.number("L0", cfg.market.L0);
        s.number("X0", cfg.market.X0);
        s.number("rho", cfg.market.rho);
        read_vol(s, "libor_vol", cfg.market.libor_vol);
        read_vol(s, "fx_vol", cfg.market.fx_vol);
    }
    if (const json* v = root.find("instrument")) {
        Section s(*v, "/instrument");
        s.number("expiry", cfg.instrument.expiry);
        s.number("accrual", cfg.instrument.accrual);
        s.number("strike", cfg.instrument.strike);
        s.number("discount", cfg.instrument.discount);
    }
    if (const json* v = root.find("mc")) {
        Section s(*v, "/mc");
        s.integer("paths", cfg.mc.paths);
        s.integer("steps_per_year", cfg.mc.steps_per_year);
        s.integer("seed", cfg.mc.seed);
        s.boolean("antithetic", cfg.mc.antithetic);
        s.number("budget", cfg.mc.budget);
        s.integer("threads", cfg.mc.threads);
        if (const json* t = s.find("target_ci_halfwidth")) {
            if (t->is_null())
                cfg.mc.target_ci_halfwidth.reset();
            else if (t->is_number())
                cfg.mc.target_ci_halfwidth = t->get<double>();
            else
                fail("/mc/target_ci_halfwidth", "expected a number or null");
        }
    }
    if (const json* v = root.find("grid")) {
        Section s(*v, "/grid");
        s.numbers("maturities", cfg.grid.maturities);
        if (const json* k = s.find("strikes")) {
            if (!k->is_array()) fail("/grid/strikes", "expected an array of strike arrays");
            cfg.grid.strikes.clear();
            for (std::size_t i = 0; i < k->size(); ++i)
                cfg.grid.strikes.push_back(Section::number_list((*k)[i], "/grid/strikes/" + std::to_string(i)));
        }
        s.numbers("rhos", cfg.grid.rhos);
        s.numbers("sweep_strikes", cfg.grid.sweep_strikes);
        s.numbers("sweep_rhos", cfg.grid.sweep_rhos);
        s.number("sweep_maturity", cfg.grid.sweep_maturity);
        std::string asset = asset_name(cfg.grid.asset);
        s.string("asset", asset);
        checked("/grid/asset", [&] { cfg.grid.asset = parse_asset(asset); });
        std::string source = source_name(cfg.grid.vol_source);
        s.string("vol_source", source);
        if (source == "expansion_rho0")
            cfg.grid.vol_source = VolSource::ExpansionRho0;
        else if (source == "monte_carlo")
            cfg.grid.vol_source = VolSource::MonteCarlo;
        else
            fail("/grid/vol_source", "expected expansion_rho0 or monte_carlo");
    }
    if (const json* v = root.find("methods")) {
        if (!v->is_array()) fail("/methods", "expected an array of method names");
        cfg.methods.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (!(*v)[i].is_string()) fail("/methods/" + std::to_string(i), "expected a string");
            checked("/methods/" + std::to_string(i),
                    [&] { cfg.methods.push_back(parse_method((*v)[i].get<std::string>())); });
        }
    }
    if (const json* v = root.find("out")) {
        if (!v->is_string()) fail("/out", "expected a path string");
        cfg.out = v->get<std::string>();
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path + " is not valid JSON: " + e.what());
    }
    return config_from_json(doc);
}

json RunConfig::to_json() const {
    auto vol = [](const HyperbolicVolParams& p) { return json{{"nu", p.nu}, {"beta", p.beta}}; };
    json j;
    j["market"] = {{"L0", market.L0}, {"X0", market.X0}, {"rho", market.rho},
                   {"libor_vol", vol(market.libor_vol)}, {"fx_vol", vol(market.fx_vol)}};
    j["instrument"] = {{"expiry", instrument.expiry}, {"accrual", instrument.accrual},
                       {"strike", instrument.strike}, {"discount", instrument.discount}};
    j["mc"] = {{"paths", mc.paths}, {"steps_per_year", mc.steps_per_year}, {"seed", mc.seed},
               {"antithetic", mc.antithetic}, {"budget", mc.budget}, {"threads", mc.threads},
               {"target_ci_halfwidth", mc.target_ci_halfwidth ? json(*mc.target_ci_halfwidth) : json()}};
    json strikes = json::array();
    for (std::size_t i = 0; i < grid.maturities.size(); ++i) strikes.push_back(grid.strikes_for(i));
    j["grid"] = {{"maturities", grid.maturities}, {"strikes", strikes}, {"rhos", grid.rhos},
                 {"sweep_strikes", grid.sweep_strikes}, {"sweep_rhos", grid.sweep_rhos},
                 {"sweep_maturity", grid.sweep_maturity}, {"asset", asset_name(grid.asset)},
                 {"vol_source", source_name(grid.vol_source)}};
    json methods = json::array();
    for (Method m : this->methods) methods.push_back(std::string(method_name(m)));
    j["methods"] = methods;
    return j;
}

std::string config_hash(const RunConfig& cfg) {
    const std::string text = cfg.to_json().dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace quanto::cli
