#include "oracles.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

// ---- polynomials in the state (xi, ga, Y1, Z1, Y2) ----
constexpr int kVars = 5;
using Mono = std::array<int, kVars>;
using Poly = std::map<Mono, double>;
enum { XI, GA, Y1, Z1, Y2 };

Poly constant(double a) { return a == 0.0 ? Poly{} : Poly{{Mono{}, a}}; }
Poly var(int v, double a = 1.0) {
    Mono m{};
    m[v] = 1;
    return Poly{{m, a}};
}
Poly add(Poly a, const Poly& b) {
    for (const auto& [m, c] : b) a[m] += c;
    return a;
}
Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m;
            for (int i = 0; i < kVars; ++i) m[i] = ma[i] + mb[i];
            r[m] += ca * cb;
        }
    return r;
}
Poly scale(Poly a, double s) {
    for (auto& [m, c] : a) c *= s;
    return a;
}

struct Dynamics {
    Poly drift, bL, bX;  // dV = drift dt + bL dW^L + bX dW^X
};

// Polynomials in t, ascending coefficients.
using TPoly = std::vector<double>;

class MomentSolver {
public:
    MomentSolver(const Coeffs& k, double rho, double c) : rho_(rho) {
        const double al = -(0.5 * k.l * k.l + rho * k.l * k.s);
        const double al_y = -(k.l * k.ly + rho * k.ly * k.s);
        const double al_z = -rho * k.l * k.sz;
        const double al_yy = -(k.ly * k.ly + k.l * k.lyy + rho * k.lyy * k.s);
        const double al_zz = -rho * k.l * k.szz;
        const double al_yz = -rho * k.ly * k.sz;
        const double be = -0.5 * k.s * k.s;
        const double be_z = -k.s * k.sz;

        dyn_[XI] = {constant(al), constant(k.l), {}};
        dyn_[GA] = {constant(be), {}, constant(k.s)};
        dyn_[Y1] = {add(var(XI, al_y), var(GA, al_z)), var(XI, k.ly), {}};
        dyn_[Z1] = {var(GA, be_z), {}, var(GA, k.sz)};
        Poly xi2 = mul(var(XI), var(XI));
        Poly ga2 = mul(var(GA), var(GA));
        Poly d2 = add(add(var(Y1, 2 * al_y), var(Z1, 2 * al_z)),
                      add(scale(mul(var(XI), var(GA)), 2 * al_yz), add(scale(xi2, al_yy), scale(ga2, al_zz))));
        dyn_[Y2] = {d2, add(var(Y1, 2 * k.ly), scale(xi2, k.lyy)), {}};
        // Girsanov drift of the tilt e^{c int l dW^L}: W^L gains c l, W^X gains c rho l.
        tiltL_ = c * k.l;
        tiltX_ = c * rho * k.l;
    }

    TPoly moment(const Mono& m) {
        bool one = true;
        for (int e : m) one = one && e == 0;
        if (one) return {1.0};
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        const Poly g = generator(m);
        TPoly acc;
        for (const auto& [mm, cc] : g) {
            if (cc == 0.0) continue;
            const TPoly sub = moment(mm);
            if (acc.size() < sub.size()) acc.resize(sub.size(), 0.0);
            for (std::size_t i = 0; i < sub.size(); ++i) acc[i] += cc * sub[i];
        }
        TPoly integ(acc.size() + 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) integ[i + 1] = acc[i] / (i + 1);
        memo_[m] = integ;
        return integ;
    }

private:
    Poly generator(const Mono& m) const {
        Poly res;
        for (int v = 0; v < kVars; ++v) {
            if (m[v] == 0) continue;
            Mono d = m;
            d[v] -= 1;
            const Dynamics& dv = dyn_[v];
            Poly coef = add(dv.drift, add(scale(dv.bL, tiltL_), scale(dv.bX, tiltX_)));
            res = add(res, scale(mul(Poly{{d, 1.0}}, coef), m[v]));
        }
        for (int v = 0; v < kVars; ++v)
            for (int w = 0; w < kVars; ++w) {
                Mono d = m;
                double f;
                if (v == w) {
                    if (m[v] < 2) continue;
                    f = m[v] * (m[v] - 1.0);
                    d[v] -= 2;
                } else {
                    if (m[v] < 1 || m[w] < 1) continue;
                    f = m[v] * static_cast<double>(m[w]);
                    d[v] -= 1;
                    d[w] -= 1;
                }
                const Dynamics &a = dyn_[v], &b = dyn_[w];
                Poly q = add(add(mul(a.bL, b.bL), mul(a.bX, b.bX)),
                             scale(add(mul(a.bL, b.bX), mul(a.bX, b.bL)), rho_));
                res = add(res, scale(mul(Poly{{d, 1.0}}, q), 0.5 * f));
            }
        return res;
    }

    std::array<Dynamics, kVars> dyn_;
    double tiltL_ = 0.0, tiltX_ = 0.0, rho_;
    std::map<Mono, TPoly> memo_;
};

double eval(const TPoly& p, double t) {
    double r = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
    return r;
}

double ncdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

long double he(int n, long double x) {
    long double a = 1.0L, b = x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        const long double c = x * b - k * a;
        a = b;
        b = c;
    }
    return b;
}

void gauss_legendre16(std::array<double, 16>& x, std::array<double, 16>& w) {
    const int n = 16;
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

}  // namespace

EtaTerms eta_terms(const Coeffs& k, double rho, double T, double c) {
    MomentSolver s(k, rho, c);
    auto mono = [](int v, int e) {
        Mono m{};
        m[v] = e;
        return m;
    };
    const double ey1 = eval(s.moment(mono(Y1, 1)), T);
    const double ey2 = eval(s.moment(mono(Y2, 1)), T);
    const double ey1sq = eval(s.moment(mono(Y1, 2)), T);
    return {c * ey1, 0.5 * c * ey2 + 0.5 * c * c * ey1sq};
}

double black(double forward, double strike, double sd) {
    const double d1 = std::log(forward / strike) / sd + 0.5 * sd;
    return forward * ncdf(d1) - strike * ncdf(d1 - sd);
}

double shift_derivative(int n, double m, double sd, double strike) {
    const double zk = (std::log(strike) - m) / sd;
    const double hi = std::max(zk, sd) + 14.0;
    const int panels = 400;
    std::array<double, 16> gx, gw;
    gauss_legendre16(gx, gw);
    const long double h = (static_cast<long double>(hi) - zk) / panels;
    // Extended precision: the 1/sd^n factor amplifies cancellation between the signed
    // Hermite lobes, which in double costs ~1e-9 relative at n = 8 and short expiries.
    long double acc = 0.0L;
    for (int p = 0; p < panels; ++p) {
        const long double a = zk + p * h;
        for (int i = 0; i < 16; ++i) {
            const long double z = a + 0.5L * h * (gx[i] + 1.0L);
            const long double payoff = std::exp(m + sd * z) - strike;
            const long double dens = std::exp(-0.5L * z * z) / std::sqrt(2.0L * M_PI);
            acc += 0.5L * h * gw[i] * payoff * he(n, z) * dens;
        }
    }
    return static_cast<double>(acc / std::pow(static_cast<long double>(sd), n));
}

double local_vol_call_pde(const std::function<double(double)>& vol, double L0, double strike, double T,
                          int nx, int nt) {
    const double y0 = std::log(L0);
    double vmax = 0.0;
    for (int i = -50; i <= 50; ++i) vmax = std::max(vmax, vol(L0 * std::exp(0.1 * i)));
    const double width = 10.0 * vmax * std::sqrt(T) + std::abs(std::log(strike / L0));
    const double ylo = y0 - width, yhi = y0 + width;
    const double dy = (yhi - ylo) / (nx - 1);
    std::vector<double> y(nx), u(nx), a(nx);
    for (int i = 0; i < nx; ++i) {
        y[i] = ylo + i * dy;
        u[i] = std::max(std::exp(y[i]) - strike, 0.0);
        const double v = vol(std::exp(y[i]));
        a[i] = 0.5 * v * v;
    }
    // u_tau = a (u_yy - u_y); theta-scheme with implicit Rannacher start steps.
    const double dt = T / nt;
    std::vector<double> lo(nx), di(nx), up(nx), rhs(nx);
    auto step = [&](double theta) {
        for (int i = 1; i < nx - 1; ++i) {
            const double cm = a[i] * (1.0 / (dy * dy) + 0.5 / dy);
            const double cp = a[i] * (1.0 / (dy * dy) - 0.5 / dy);
            const double cc = -2.0 * a[i] / (dy * dy);
            const double Lu = cm * u[i - 1] + cc * u[i] + cp * u[i + 1];
            rhs[i] = u[i] + (1.0 - theta) * dt * Lu;
            lo[i] = -theta * dt * cm;
            di[i] = 1.0 - theta * dt * cc;
            up[i] = -theta * dt * cp;
        }
        // Dirichlet: worthless below, forward minus strike above.
        lo[0] = up[0] = 0.0;
        di[0] = 1.0;
        rhs[0] = 0.0;
        lo[nx - 1] = up[nx - 1] = 0.0;
        di[nx - 1] = 1.0;
        rhs[nx - 1] = std::exp(yhi) - strike;
        for (int i = 1; i < nx; ++i) {
            const double m = lo[i] / di[i - 1];
            di[i] -= m * up[i - 1];
            rhs[i] -= m * rhs[i - 1];
        }
        u[nx - 1] = rhs[nx - 1] / di[nx - 1];
        for (int i = nx - 2; i >= 0; --i) u[i] = (rhs[i] - up[i] * u[i + 1]) / di[i];
    };
    for (int n = 0; n < nt; ++n) step(n < 4 ? 1.0 : 0.5);
    // Cubic interpolation at y0.
    const double pos = (y0 - ylo) / dy;
    const int i = static_cast<int>(pos);
    const double f = pos - i;
    const double p0 = u[i - 1], p1 = u[i], p2 = u[i + 1], p3 = u[i + 2];
    return p1 + 0.5 * f * (p2 - p0 + f * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + f * (3.0 * (p1 - p2) + p3 - p0)));
}

double polyfit_max_residual(const std::vector<double>& x, const std::vector<double>& y, int degree) {
    // Modified Gram-Schmidt QR of the Vandermonde matrix in long double.
    const std::size_t n = x.size(), m = degree + 1;
    if (n < m) throw std::invalid_argument("not enough points for the fit");
    std::vector<std::vector<long double>> q(m, std::vector<long double>(n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) q[j][i] = std::pow(static_cast<long double>(x[i]), static_cast<int>(j));
    std::vector<long double> r(y.begin(), y.end());
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            long double d = 0;
            for (std::size_t i = 0; i < n; ++i) d += q[k][i] * q[j][i];
            for (std::size_t i = 0; i < n; ++i) q[j][i] -= d * q[k][i];
        }
        long double nrm = 0;
        for (std::size_t i = 0; i < n; ++i) nrm += q[j][i] * q[j][i];
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) q[j][i] /= nrm;
        long double d = 0;
        for (std::size_t i = 0; i < n; ++i) d += q[j][i] * r[i];
        for (std::size_t i = 0; i < n; ++i) r[i] -= d * q[j][i];
    }
    long double worst = 0;
    for (long double v : r) worst = std::max(worst, std::abs(v));
    return static_cast<double>(worst);
}

}  // namespace oracle
