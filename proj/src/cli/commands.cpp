#include "quanto/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "quanto/cli/csv.hpp"
#include "quanto/errors.hpp"
#include "quanto/expansion.hpp"
#include "quanto/market_approx.hpp"
#include "quanto/mc.hpp"
#include "quanto/proxy.hpp"

namespace quanto::cli {

namespace {

void header(const RunConfig& cfg, const std::string& command, CsvWriter& w) {
    w.comment("quanto " + command + " seed=" + std::to_string(cfg.mc.seed) +
              " config_hash=" + config_hash(cfg));
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

// Implied vols the market formula needs at one maturity, which do not depend on rho.
struct MaturityVols {
    std::vector<double> at_strike;
    double libor_atm = 0.0;
    double fx_atm = 0.0;
};

MaturityVols maturity_vols(const RunConfig& cfg, double T, const std::vector<double>& strikes) {
    MaturityVols v;
    const VolSource src = cfg.grid.vol_source;
    for (double K : strikes)
        v.at_strike.push_back(model_implied_vol(Asset::Libor, T, K, cfg.market, src, cfg.mc).vol);
    v.libor_atm = model_implied_vol(Asset::Libor, T, std::nullopt, cfg.market, src, cfg.mc).vol;
    v.fx_atm = model_implied_vol(Asset::Fx, T, std::nullopt, cfg.market, src, cfg.mc).vol;
    return v;
}

}  // namespace

std::vector<PriceResult> run_price(const RunConfig& cfg) {
    cfg.validate();
    std::vector<PriceResult> rows;
    for (Method m : cfg.methods) {
        switch (m) {
            case Method::Proxy: rows.push_back({proxy_price(cfg.instrument, cfg.market), m, {}, {}}); break;
            case Method::Order2: rows.push_back(price_order2(cfg.instrument, cfg.market)); break;
            case Method::Order3: rows.push_back(price_order3(cfg.instrument, cfg.market)); break;
            case Method::Market: rows.push_back(market_price(cfg.instrument, cfg.market)); break;
            case Method::MonteCarlo: {
                const McEstimate e = simulate_quanto(cfg.instrument, cfg.market, cfg.mc);
                rows.push_back({e.price, m, {}, e.ci_halfwidth});
                break;
            }
        }
    }
    return rows;
}

DiscrepancyStats summarize(double rho, const std::vector<DetailRow>& rows) {
    DiscrepancyStats s;
    s.rho = rho;
    for (const DetailRow& r : rows) {
        if (r.rho != rho) continue;
        const double e2 = std::abs(r.order2 - r.mc);
        const double e3 = std::abs(r.order3 - r.mc);
        const double em = std::abs(r.market - r.mc);
        s.avg_abs_2nd += e2;
        s.avg_abs_3rd += e3;
        s.avg_abs_mkt += em;
        s.max_abs_2nd = std::max(s.max_abs_2nd, e2);
        s.max_abs_3rd = std::max(s.max_abs_3rd, e3);
        s.max_abs_mkt = std::max(s.max_abs_mkt, em);
        s.partial = s.partial || r.partial;
        ++s.points;
    }
    if (s.points > 0) {
        s.avg_abs_2nd /= s.points;
        s.avg_abs_3rd /= s.points;
        s.avg_abs_mkt /= s.points;
    }
    return s;
}

TableResult run_table(const RunConfig& cfg) {
    cfg.validate();
    TableResult t;
    std::vector<MaturityVols> vols;
    for (std::size_t i = 0; i < cfg.grid.maturities.size(); ++i)
        vols.push_back(maturity_vols(cfg, cfg.grid.maturities[i], cfg.grid.strikes_for(i)));

    for (double rho : cfg.grid.rhos) {
        QuantoMarket mk = cfg.market;
        mk.rho = rho;
        for (std::size_t i = 0; i < cfg.grid.maturities.size(); ++i) {
            const double T = cfg.grid.maturities[i];
            const auto strikes = cfg.grid.strikes_for(i);
            QuantoInstrument inst = cfg.instrument;
            inst.expiry = T;

            std::vector<McEstimate> mc;
            bool partial = false;
            try {
                mc = simulate_quanto_strip(inst, strikes, mk, cfg.mc);
            } catch (const McBudgetExhausted& e) {
                mc = e.best();
                partial = true;
            }
            for (std::size_t j = 0; j < strikes.size(); ++j) {
                inst.strike = strikes[j];
                DetailRow r;
                r.T = T;
                r.K = strikes[j];
                r.rho = rho;
                r.proxy = proxy_price(inst, mk);
                r.order2 = price_order2(inst, mk).price;
                r.order3 = price_order3(inst, mk).price;
                r.market = market_price_from_vols(inst, mk, vols[i].at_strike[j], vols[i].libor_atm,
                                                  vols[i].fx_atm);
                r.mc = mc[j].price;
                r.ci = mc[j].ci_halfwidth;
                r.partial = partial;
                t.detail.push_back(r);
            }
        }
    }
    for (double rho : cfg.grid.rhos) t.summary.push_back(summarize(rho, t.detail));
    return t;
}

std::vector<ImpliedVolPoint> run_volsurface(const RunConfig& cfg) {
    cfg.validate();
    std::vector<ImpliedVolPoint> pts;
    const Asset asset = cfg.grid.asset;
    // FX strikes reuse the LIBOR grid in moneyness: K_fx = K_libor * X0 / L0.
    const double scale = asset == Asset::Libor ? 1.0 : cfg.market.X0 / cfg.market.L0;
    for (std::size_t i = 0; i < cfg.grid.maturities.size(); ++i) {
        const double T = cfg.grid.maturities[i];
        for (double K : cfg.grid.strikes_for(i))
            pts.push_back(model_implied_vol(asset, T, K * scale, cfg.market, cfg.grid.vol_source, cfg.mc));
    }
    return pts;
}

std::vector<SweepPoint> run_rho_sweep(const RunConfig& cfg) {
    cfg.validate();
    std::vector<SweepPoint> pts;
    QuantoInstrument inst = cfg.instrument;
    inst.expiry = cfg.grid.sweep_maturity;
    for (double K : cfg.grid.sweep_strikes) {
        inst.strike = K;
        for (double rho : cfg.grid.sweep_rhos) {
            QuantoMarket mk = cfg.market;
            mk.rho = rho;
            pts.push_back({K, rho, price_order3(inst, mk).price});
        }
    }
    return pts;
}

void write_price(const RunConfig& cfg, const std::vector<PriceResult>& rows, std::ostream& out) {
    CsvWriter w(out);
    header(cfg, "price", w);
    w.row({"method", "T", "K", "rho", "price", "error_scale", "ci_halfwidth"});
    for (const PriceResult& r : rows) {
        w.row({std::string(method_name(r.method)), format_double(cfg.instrument.expiry),
               format_double(cfg.instrument.strike), format_double(cfg.market.rho), format_double(r.price),
               r.error_scale ? format_double(r.error_scale->scale) : "", opt(r.ci_halfwidth)});
    }
}

void write_table_summary(const RunConfig& cfg, const TableResult& t, std::ostream& out) {
    CsvWriter w(out);
    header(cfg, "table", w);
    w.row({"rho", "avg_abs_2nd", "max_abs_2nd", "avg_abs_3rd", "max_abs_3rd", "avg_abs_mkt", "max_abs_mkt",
           "points", "partial_benchmark"});
    for (const DiscrepancyStats& s : t.summary) {
        w.row({format_double(s.rho), format_double(s.avg_abs_2nd), format_double(s.max_abs_2nd),
               format_double(s.avg_abs_3rd), format_double(s.max_abs_3rd), format_double(s.avg_abs_mkt),
               format_double(s.max_abs_mkt), std::to_string(s.points), s.partial ? "1" : "0"});
    }
}

void write_table_detail(const RunConfig& cfg, const TableResult& t, std::ostream& out) {
    CsvWriter w(out);
    header(cfg, "table-detail", w);
    w.row({"T", "K", "rho", "proxy", "order2", "order3", "market", "mc", "ci", "partial_benchmark"});
    for (const DetailRow& r : t.detail) {
        w.row({format_double(r.T), format_double(r.K), format_double(r.rho), format_double(r.proxy),
               format_double(r.order2), format_double(r.order3), format_double(r.market), format_double(r.mc),
               format_double(r.ci), r.partial ? "1" : "0"});
    }
}

void write_volsurface(const RunConfig& cfg, const std::vector<ImpliedVolPoint>& pts, std::ostream& out) {
    CsvWriter w(out);
    header(cfg, "volsurface", w);
    w.row({"asset", "T", "strike", "vol", "source"});
    for (const ImpliedVolPoint& p : pts)
        w.row({asset_name(p.asset), format_double(p.expiry), format_double(p.strike), format_double(p.vol),
               source_name(p.source)});
}

void write_rho_sweep(const RunConfig& cfg, const std::vector<SweepPoint>& pts, std::ostream& out) {
    CsvWriter w(out);
    header(cfg, "rho-sweep", w);
    w.row({"K", "rho", "price"});
    for (const SweepPoint& p : pts) w.row({format_double(p.K), format_double(p.rho), format_double(p.price)});
}

std::string detail_path(const std::string& summary_path) {
    const auto dot = summary_path.rfind('.');
    const auto slash = summary_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return summary_path + "_detail";
    return summary_path.substr(0, dot) + "_detail" + summary_path.substr(dot);
}

namespace {

template <class Write>
void emit(const std::optional<std::string>& path, std::ostream& console, Write&& write) {
    if (!path) {
        write(console);
        return;
    }
    std::ofstream f(*path);
    if (!f) throw ConfigError("cannot write output file '" + *path + "'");
    write(f);
}

}  // namespace

void run_command(const std::string& command, const RunConfig& cfg, std::ostream& console) {
    if (command == "price") {
        const auto rows = run_price(cfg);
        emit(cfg.out, console, [&](std::ostream& o) { write_price(cfg, rows, o); });
    } else if (command == "table") {
        const TableResult t = run_table(cfg);
        emit(cfg.out, console, [&](std::ostream& o) { write_table_summary(cfg, t, o); });
        const std::optional<std::string> detail =
            cfg.out ? std::optional<std::string>(detail_path(*cfg.out)) : std::nullopt;
        emit(detail, console, [&](std::ostream& o) { write_table_detail(cfg, t, o); });
    } else if (command == "volsurface") {
        const auto pts = run_volsurface(cfg);
        emit(cfg.out, console, [&](std::ostream& o) { write_volsurface(cfg, pts, o); });
    } else if (command == "rho-sweep") {
        const auto pts = run_rho_sweep(cfg);
        emit(cfg.out, console, [&](std::ostream& o) { write_rho_sweep(cfg, pts, o); });
    } else {
        throw ConfigError("unknown command '" + command + "'");
    }
}

}  // namespace quanto::cli
