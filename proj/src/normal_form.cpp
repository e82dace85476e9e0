#include "ilw/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ilw {

namespace {

using detail::DispData;
using detail::disp_data;
using detail::eta_line_model;
using detail::zeta_line_model;

inline double horner4(const double c[4], double m) { return c[0] + m * (c[1] + m * (c[2] + m * c[3])); }

inline double sgn0(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

struct B12 {
    double b1, b2;
};

// b1 and b2 share the resonance denominator; both numerators vanish on the
// lines xi = 0, eta = 0, xi + eta = 0, so inside the bands the quotients are
// taken between fourth-order models in the small variable. b1 is a symmetric
// function of the triple (xi, eta, -xi-eta), which reduces every line to the
// eta-line model; b2 is only (xi,eta)-symmetric and keeps a dedicated model
// on the output line.
B12 b12_pair(double xi, double eta, double delta) {
    if (xi == 0.0 && eta == 0.0) return {3.0, 0.0};
    const double s = xi + eta;
    const double axi = std::fabs(xi), aeta = std::fabs(eta), as = std::fabs(s);
    const double lo = std::min({axi, aeta, as});
    if (lo >= kResonanceBand) {
        const double om = dispersion_a(s, delta) - dispersion_a(xi, delta) - dispersion_a(eta, delta);
        const double a1s = group_velocity(s, delta);
        const double a1x = group_velocity(xi, delta);
        const double a1e = group_velocity(eta, delta);
        const double n1 = s * a1s - xi * a1x - eta * a1e;
        const double ct = symbol_ctilde_a(xi, eta, delta);
        return {n1 / om, ct * (a1e - a1x) / om};
    }
    if (as == lo) {
        const DispData dd = disp_data(xi, delta);
        const auto em = eta_line_model(dd, xi, delta);
        const auto zm = zeta_line_model(dd, xi, delta);
        return {horner4(em.n, -s) / horner4(em.w, -s), horner4(zm.q, s) / horner4(zm.w, s)};
    }
    const double big = (aeta == lo) ? xi : eta;
    const double m = (aeta == lo) ? eta : xi;
    const DispData dd = disp_data(big, delta);
    const auto em = eta_line_model(dd, big, delta);
    const double den = horner4(em.w, m);
    return {horner4(em.n, m) / den, horner4(em.q, m) / den};
}

}  // namespace

double symbol_b1(double xi, double eta, double delta) { return b12_pair(xi, eta, delta).b1; }

double symbol_b2(double xi, double eta, double delta) { return b12_pair(xi, eta, delta).b2; }

double symbol_b(double xi, double eta, double delta) {
    const B12 p = b12_pair(xi, eta, delta);
    return 0.5 * p.b1 + p.b2;
}

double symbol_ctilde_a(double xi, double eta, double delta) {
    const double sx = std::tanh(delta * xi), sy = std::tanh(delta * eta), ss = std::tanh(delta * (xi + eta));
    return -0.25 * xi * sy * (ss - sx) + 0.25 * eta * sx * (ss - sy);
}

cdouble symbol_c(double xi, double eta, double delta) {
    return cdouble{0.0, eta - 2.0 * symbol_ctilde_a(xi, eta, delta)};
}

cdouble symbol_c_sym3(double xi, double eta, double delta) {
    return symbol_c(xi, eta, delta) + symbol_c(xi, -xi - eta, delta);
}

double symbol_b_sharp(double xi, double eta, double delta) {
    return 0.75 + 0.25 * std::tanh(delta * xi) * std::tanh(delta * eta);
}

double symbol_b_residual(double xi, double eta, double delta) {
    return symbol_b(xi, eta, delta) - symbol_b_sharp(xi, eta, delta);
}

double symbol_G(double xi, double eta, double delta) {
    const double sx = std::tanh(delta * xi), sy = std::tanh(delta * eta), ss = std::tanh(delta * (xi + eta));
    return ss * sx + ss * sy - sx * sy + 1.0;
}

double symbol_dctilde(double xi, double eta, double delta) {
    double dsx[4], dsy[4];
    sigma_derivs(xi, delta, dsx);
    sigma_derivs(eta, delta, dsy);
    const double ss = std::tanh(delta * (xi + eta));
    const double sx = dsx[0], sy = dsy[0], px = dsx[1], py = dsy[1];
    return 0.25 * (sx * (ss - sy) + sy * (ss - sx)) - 0.25 * eta * (sx * py + px * (ss - sy)) -
           0.25 * xi * (sy * px + py * (ss - sx));
}

double symbol_d(double xi, double eta, double delta) {
    return symbol_b(xi, eta, delta) - 1.0 + symbol_dctilde(xi, eta, delta);
}

cdouble symbol_r(double xi, double eta, double zeta, double delta) {
    const double f[3] = {xi, eta, zeta};
    static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    cdouble acc{};
    for (const auto& p : perm) {
        const double a = f[p[0]], q = f[p[1]], s = f[p[2]];
        const double qs = q + s;
        acc += cdouble{0.0, qs} * symbol_b(a, qs, delta) - symbol_c(a, qs, delta) * symbol_b(q, s, delta);
    }
    return acc / 6.0;
}

double bo_ctilde_a(double xi, double eta) {
    const double sx = sgn0(xi), sy = sgn0(eta), ss = sgn0(xi + eta);
    return -0.25 * xi * sy * (ss - sx) + 0.25 * eta * sx * (ss - sy);
}

double bo_b(double xi, double eta) { return 0.75 + 0.25 * sgn0(xi) * sgn0(eta); }

cdouble bo_c(double xi, double eta) { return cdouble{0.0, eta - 2.0 * bo_ctilde_a(xi, eta)}; }

BoSymbols bo_symbols(double xi, double eta) {
    if (xi == 0.0 || eta == 0.0) throw std::domain_error("bo_symbols: sgn undefined on the axes");
    return {bo_b(xi, eta), bo_ctilde_a(xi, eta), bo_c(xi, eta)};
}

// ---------------------------------------------------------------------------

SymbolGrid::SymbolGrid(GridPtr grid, double delta) : grid_(std::move(grid)), delta_(delta), n_(grid_->n()) {
    if (!(delta >= 1.0)) throw std::invalid_argument("SymbolGrid: delta must be >= 1");
    const int nn = 2 * n_ + 1;
    a0_.resize(nn);
    a1_.resize(nn);
    gg_.resize(nn);
    sg_.resize(nn);
    for (int m = -n_; m <= n_; ++m) {
        const double xi = xi_of(m);
        const int t = m + n_;
        a0_[t] = dispersion_a(xi, delta_);
        a1_[t] = group_velocity(xi, delta_);
        gg_[t] = xi * a1_[t];
        sg_[t] = std::tanh(delta_ * xi);
    }
}

double SymbolGrid::pair_b(int m1, int m2) const {
    const int ms = m1 + m2;
    const double band_modes = kResonanceBand / grid_->dxi();
    const int alo = std::min({std::abs(m1), std::abs(m2), std::abs(ms)});
    if (alo <= band_modes)  // rare: delegate to the banded scalar path
        return symbol_b(xi_of(m1), xi_of(m2), delta_);
    const int t1 = m1 + n_, t2 = m2 + n_, ts = ms + n_;
    const double om = a0_[ts] - a0_[t1] - a0_[t2];
    const double n1 = gg_[ts] - gg_[t1] - gg_[t2];
    const double ct = -0.25 * xi_of(m1) * sg_[t2] * (sg_[ts] - sg_[t1]) + 0.25 * xi_of(m2) * sg_[t1] * (sg_[ts] - sg_[t2]);
    return (0.5 * n1 + ct * (a1_[t2] - a1_[t1])) / om;
}

double SymbolGrid::pair_d(int m1, int m2) const {
    const int t1 = m1 + n_, t2 = m2 + n_, ts = m1 + m2 + n_;
    const double sx = sg_[t1], sy = sg_[t2], ss = sg_[ts];
    const double px = delta_ * (1.0 - sx * sx), py = delta_ * (1.0 - sy * sy);
    const double xi = xi_of(m1), eta = xi_of(m2);
    const double dct = 0.25 * (sx * (ss - sy) + sy * (ss - sx)) - 0.25 * eta * (sx * py + px * (ss - sy)) -
                       0.25 * xi * (sy * px + py * (ss - sx));
    return pair_b(m1, m2) - 1.0 + dct;
}

double SymbolGrid::b(int m1, int m2) const { return pair_b(m1, m2); }
double SymbolGrid::d(int m1, int m2) const { return pair_d(m1, m2); }

cdouble SymbolGrid::c(int m1, int m2) const {
    const int t1 = m1 + n_, t2 = m2 + n_, ts = m1 + m2 + n_;
    const double ct = -0.25 * xi_of(m1) * sg_[t2] * (sg_[ts] - sg_[t1]) + 0.25 * xi_of(m2) * sg_[t1] * (sg_[ts] - sg_[t2]);
    return cdouble{0.0, xi_of(m2) - 2.0 * ct};
}

namespace {

template <class PairFn>
Spectrum dense_apply(const GridSpec& g, const Spectrum& u, const Spectrum& v, PairFn&& pf) {
    const int n = g.n();
    const int half = n / 2;
    Spectrum out(n, cdouble{});
    for (int ko = -half + 1; ko < half; ++ko) {
        cdouble acc{};
        const int mlo = std::max(-half + 1, ko - half + 1);
        const int mhi = std::min(half - 1, ko + half - 1);
        for (int m = mlo; m <= mhi; ++m) {
            const cdouble uv = u[g.index(m)] * v[g.index(ko - m)];
            if (uv == cdouble{}) continue;
            acc += pf(m, ko - m) * uv;
        }
        out[g.index(ko)] = acc;
    }
    return out;
}

Spectrum mult_spec(const GridSpec& g, const Spectrum& s, const std::function<double(double)>& m) {
    const int n = g.n();
    Spectrum out(n, cdouble{});
    for (int j = 0; j < n; ++j) {
        const int mm = g.mode(j);
        if (mm == -n / 2) continue;
        out[j] = m(g.xi(j)) * s[j];
    }
    return out;
}

Spectrum dx_spec(const GridSpec& g, const Spectrum& s) {
    const int n = g.n();
    Spectrum out(n, cdouble{});
    for (int j = 0; j < n; ++j) {
        const int mm = g.mode(j);
        if (mm == -n / 2) continue;
        out[j] = cdouble{0.0, g.xi(j)} * s[j];
    }
    return out;
}

}  // namespace

Spectrum SymbolGrid::apply_b(const Spectrum& u, const Spectrum& v) const {
    return dense_apply(*grid_, u, v, [this](int m1, int m2) { return pair_b(m1, m2); });
}

Spectrum SymbolGrid::apply_d(const Spectrum& u, const Spectrum& v) const {
    return dense_apply(*grid_, u, v, [this](int m1, int m2) { return pair_d(m1, m2); });
}

// C(u,v) = u v_x - 2i Ctilde(u,v); every ctilde term is separable in
// (multiplier on u) x (multiplier on v) x (multiplier on output), so the
// whole form costs a handful of dealiased products.
Spectrum SymbolGrid::apply_c(const Spectrum& u, const Spectrum& v) const {
    const GridSpec& g = *grid_;
    const double d = delta_;
    auto sig = [d](double xi) { return std::tanh(d * xi); };
    const Spectrum su = mult_spec(g, u, sig);
    const Spectrum sv = mult_spec(g, v, sig);
    const Spectrum du = dx_spec(g, u);
    const Spectrum dv = dx_spec(g, v);

    Spectrum out = product_dealiased(g, u, dv);  // symbol i eta
    const Spectrum t1 = product_dealiased(g, du, sv);
    const Spectrum t2 = product_dealiased(g, mult_spec(g, du, sig), sv);
    const Spectrum t3 = product_dealiased(g, su, dv);
    const Spectrum t4 = product_dealiased(g, su, mult_spec(g, dv, sig));
    const Spectrum t1o = mult_spec(g, t1, sig);
    const Spectrum t3o = mult_spec(g, t3, sig);
    for (int j = 0; j < g.n(); ++j) out[j] += 0.5 * (t1o[j] - t2[j] - t3o[j] + t4[j]);
    return out;
}

Spectrum SymbolGrid::apply_b_sharp(const Spectrum& u, const Spectrum& v) const {
    const GridSpec& g = *grid_;
    const double d = delta_;
    auto sig = [d](double xi) { return std::tanh(d * xi); };
    const Spectrum p0 = product_dealiased(g, u, v);
    const Spectrum p1 = product_dealiased(g, mult_spec(g, u, sig), mult_spec(g, v, sig));
    Spectrum out(g.n());
    for (int j = 0; j < g.n(); ++j) out[j] = 0.75 * p0[j] + 0.25 * p1[j];
    return out;
}

Spectrum SymbolGrid::apply_r(const Spectrum& u) const {
    const GridSpec& g = *grid_;
    Spectrum uux = dx_spec(g, product_dealiased(g, u, u));
    for (auto& c : uux) c *= 0.5;
    const Spectrum buu = apply_b(u, u);
    const Spectrum t1 = apply_b(u, uux);
    const Spectrum t2 = apply_c(u, buu);
    Spectrum out(g.n());
    for (int j = 0; j < g.n(); ++j) out[j] = 2.0 * t1[j] - t2[j];
    return out;
}

Spectrum SymbolGrid::apply_b_bo(const Spectrum& u, const Spectrum& v) const {
    const GridSpec& g = *grid_;
    auto sg = [](double xi) { return sgn0(xi); };
    const Spectrum p0 = product_dealiased(g, u, v);
    const Spectrum p1 = product_dealiased(g, mult_spec(g, u, sg), mult_spec(g, v, sg));
    Spectrum out(g.n());
    for (int j = 0; j < g.n(); ++j) out[j] = 0.75 * p0[j] + 0.25 * p1[j];
    return out;
}

Spectrum SymbolGrid::apply_c_bo(const Spectrum& u, const Spectrum& v) const {
    const GridSpec& g = *grid_;
    auto sg = [](double xi) { return sgn0(xi); };
    const Spectrum su = mult_spec(g, u, sg);
    const Spectrum sv = mult_spec(g, v, sg);
    const Spectrum du = dx_spec(g, u);
    const Spectrum dv = dx_spec(g, v);
    Spectrum out = product_dealiased(g, u, dv);
    const Spectrum t1 = mult_spec(g, product_dealiased(g, du, sv), sg);
    const Spectrum t2 = product_dealiased(g, mult_spec(g, du, sg), sv);
    const Spectrum t3 = mult_spec(g, product_dealiased(g, su, dv), sg);
    const Spectrum t4 = product_dealiased(g, su, mult_spec(g, dv, sg));
    for (int j = 0; j < g.n(); ++j) out[j] += 0.5 * (t1[j] - t2[j] - t3[j] + t4[j]);
    return out;
}

Spectrum SymbolGrid::apply_r_bo(const Spectrum& u) const {
    const GridSpec& g = *grid_;
    Spectrum uux = dx_spec(g, product_dealiased(g, u, u));
    for (auto& c : uux) c *= 0.5;
    const Spectrum buu = apply_b_bo(u, u);
    const Spectrum t1 = apply_b_bo(u, uux);
    const Spectrum t2 = apply_c_bo(u, buu);
    Spectrum out(g.n());
    for (int j = 0; j < g.n(); ++j) out[j] = 2.0 * t1[j] - t2[j];
    return out;
}

Field SymbolGrid::apply_b(const Field& u, const Field& v) const {
    return ifft_real(*grid_, apply_b(fft(u), fft(v)), grid_);
}
Field SymbolGrid::apply_c(const Field& u, const Field& v) const {
    return ifft_real(*grid_, apply_c(fft(u), fft(v)), grid_);
}
Field SymbolGrid::apply_d(const Field& u, const Field& v) const {
    return ifft_real(*grid_, apply_d(fft(u), fft(v)), grid_);
}
Field SymbolGrid::apply_r(const Field& u) const { return ifft_real(*grid_, apply_r(fft(u)), grid_); }

// ---------------------------------------------------------------------------

namespace {

// -i xi sech^2 sech^2 / (1 + tanh tanh) rewritten through
// cosh(x)cosh(y)(1 + tanh x tanh y) = cosh(x+y); the quotient form loses all
// digits once tanh saturates.
cdouble c_sym3_closed(double xi, double eta, double delta) {
    return cdouble{0.0, -xi / (std::cosh(delta * xi) * std::cosh(delta * eta) * std::cosh(delta * (xi + eta)))};
}

struct Worst {
    double off = 0.0, in = 0.0;
    double xi = 0.0, eta = 0.0;
    void feed(double r, double x, double e, bool in_band) {
        if (in_band) {
            in = std::max(in, r);
        } else if (r > off) {
            off = r;
            xi = x;
            eta = e;
        }
    }
};

}  // namespace

IdentityReport verify_quadratic_identity(const IdentityOptions& opt) {
    const double d = opt.delta;
    const double flip = opt.flip_b2_sign ? -1.0 : 1.0;
    Worst triple, csym, closed, b2rec, full, dcons;

    auto visit = [&](double xi, double eta, bool in_band) {
        // tanh triple identity
        {
            const double sx = std::tanh(d * xi), sy = std::tanh(d * eta), ss = std::tanh(d * (xi + eta));
            triple.feed(std::fabs(ss * sx * sy - (sx + sy - ss)), xi, eta, in_band);
        }
        // c + c^T = i(xi+eta)
        csym.feed(std::abs(symbol_c(xi, eta, d) + symbol_c(eta, xi, d) - cdouble{0.0, xi + eta}), xi, eta, in_band);
        // c_sym3 closed form
        closed.feed(std::abs(symbol_c_sym3(xi, eta, d) - c_sym3_closed(xi, eta, d)), xi, eta, in_band);
        // b2 reconstruction and the full identity
        const double om = resonance_omega2(xi, eta, d);
        const double ct = symbol_ctilde_a(xi, eta, d);
        const double dap = group_velocity(eta, d) - group_velocity(xi, d);
        const B12 p = b12_pair(xi, eta, d);
        b2rec.feed(std::fabs(flip * p.b2 * om - ct * dap), xi, eta, in_band);
        const double n1 =
            (xi + eta) * group_velocity(xi + eta, d) - xi * group_velocity(xi, d) - eta * group_velocity(eta, d);
        full.feed(std::fabs((0.5 * p.b1 + flip * p.b2) * om - 0.5 * n1 - ct * dap), xi, eta, in_band);
        // d-definition consistency, central differences of ctilde_a
        {
            const double h = 1e-3;
            auto ct2 = [&](double a, double b2_) { return symbol_ctilde_a(a, b2_, d); };
            const double de = (8.0 * (ct2(xi, eta + h) - ct2(xi, eta - h)) - (ct2(xi, eta + 2 * h) - ct2(xi, eta - 2 * h))) /
                              (12.0 * h);
            const double dx = (8.0 * (ct2(xi + h, eta) - ct2(xi - h, eta)) - (ct2(xi + 2 * h, eta) - ct2(xi - 2 * h, eta))) /
                              (12.0 * h);
            const double dref = (0.5 * p.b1 + flip * p.b2) - 1.0 + (de - dx);
            const double dval = (0.5 * p.b1 + flip * p.b2) - 1.0 + symbol_dctilde(xi, eta, d);
            dcons.feed(std::fabs(dval - dref), xi, eta, in_band);
        }
    };

    const double step = 2.0 * opt.extent / (opt.points - 1);
    for (int i = 0; i < opt.points; ++i) {
        const double xi = -opt.extent + i * step;
        for (int j = 0; j < opt.points; ++j) {
            const double eta = -opt.extent + j * step;
            const double lo = std::min({std::fabs(xi), std::fabs(eta), std::fabs(xi + eta)});
            visit(xi, eta, lo < kResonanceBand);
        }
    }
    // in-band sweep: probe each resonance line explicitly
    const double bigs[] = {-12.0, -3.0, -0.5, 0.5, 3.0, 12.0, 20.0};
    const double fracs[] = {-0.99, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 0.99};
    for (double big : bigs)
        for (double f : fracs) {
            const double m = f * kResonanceBand;
            visit(big, m, true);           // eta small
            visit(m, big, true);           // xi small
            visit(big, m - big, true);     // xi + eta small
        }

    IdentityReport rep;
    auto add = [&](const char* name, const Worst& w) {
        CheckResult r;
        r.name = name;
        r.worst = w.off;
        r.worst_in = w.in;
        r.at_xi = w.xi;
        r.at_eta = w.eta;
        r.pass = (w.off <= opt.tol) && (w.in <= opt.tol_band);
        rep.checks.push_back(r);
    };
    add("tanh-triple", triple);
    add("c-symmetrization", csym);
    add("c_sym3-closed-form", closed);
    add("b2-reconstruction", b2rec);
    add("b-full-identity", full);
    add("d-consistency", dcons);
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

std::string IdentityReport::to_text() const {
    std::ostringstream os;
    os << "quadratic identity suite: " << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "  %-22s worst %.3e (in-band %.3e) at (%.4g, %.4g) %s\n", c.name.c_str(),
                      c.worst, c.worst_in, c.at_xi, c.at_eta, c.pass ? "ok" : "FAIL");
        os << buf;
    }
    return os.str();
}

LadderReport decay_ladder(double extent, int points, double delta, double extent3, int points3) {
    LadderReport rep;
    LadderEntry csym{"csym3_weighted"}, bres{"b_residual_weighted"}, dw{"d_weighted"};
    const double step = 2.0 * extent / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double xi = -extent + i * step;
        for (int j = 0; j < points; ++j) {
            const double eta = -extent + j * step;
            const double zeta = -xi - eta;
            const double hi = std::max({std::fabs(xi), std::fabs(eta), std::fabs(zeta)});
            const double lo = std::min({std::fabs(xi), std::fabs(eta), std::fabs(zeta)});
            // closed form: the defining sum c(xi,eta) + c(xi,zeta) is
            // roundoff-limited under the e^{xi_hi} weight
            const double v1 = std::abs(c_sym3_closed(xi, eta, delta)) * std::exp(hi) / (1.0 + hi);
            if (v1 > csym.sup) csym = {csym.name, v1, {xi, eta, 0.0}};
            const double v2 = (1.0 + hi) * std::exp(lo) * std::fabs(symbol_b_residual(xi, eta, delta));
            if (v2 > bres.sup) bres = {bres.name, v2, {xi, eta, 0.0}};
            const double v3 = std::exp(lo) * std::fabs(symbol_d(xi, eta, delta));
            if (v3 > dw.sup) dw = {dw.name, v3, {xi, eta, 0.0}};
        }
    }
    LadderEntry rw{"r_over_sigma_sum"};
    const double step3 = 2.0 * extent3 / (points3 - 1);
    for (int i = 0; i < points3; ++i)
        for (int j = 0; j < points3; ++j)
            for (int k = 0; k < points3; ++k) {
                const double x = -extent3 + i * step3, y = -extent3 + j * step3, z = -extent3 + k * step3;
                const double den = std::fabs(std::tanh(delta * x)) + std::fabs(std::tanh(delta * y)) +
                                   std::fabs(std::tanh(delta * z));
                if (den < 1e-12) continue;
                const double v = std::abs(symbol_r(x, y, z, delta)) / den;
                if (v > rw.sup) rw = {rw.name, v, {x, y, z}};
            }
    rep.entries = {csym, bres, dw, rw};
    return rep;
}

std::string LadderReport::to_text() const {
    std::ostringstream os;
    os << "decay ladder suprema:\n";
    for (const auto& e : entries) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "  %-22s %.6e at (%.4g, %.4g, %.4g)\n", e.name.c_str(), e.sup, e.at[0], e.at[1],
                      e.at[2]);
        os << buf;
    }
    return os.str();
}

void dump_symbol_csv(const std::string& name, double extent, int points, double delta, const std::string& path) {
    std::function<cdouble(double, double)> fn;
    if (name == "b")
        fn = [delta](double x, double y) { return cdouble{symbol_b(x, y, delta), 0.0}; };
    else if (name == "b1")
        fn = [delta](double x, double y) { return cdouble{symbol_b1(x, y, delta), 0.0}; };
    else if (name == "b2")
        fn = [delta](double x, double y) { return cdouble{symbol_b2(x, y, delta), 0.0}; };
    else if (name == "b_residual")
        fn = [delta](double x, double y) { return cdouble{symbol_b_residual(x, y, delta), 0.0}; };
    else if (name == "ctilde_a")
        fn = [delta](double x, double y) { return cdouble{symbol_ctilde_a(x, y, delta), 0.0}; };
    else if (name == "c")
        fn = [delta](double x, double y) { return symbol_c(x, y, delta); };
    else if (name == "c_sym3")
        fn = [delta](double x, double y) { return symbol_c_sym3(x, y, delta); };
    else if (name == "d")
        fn = [delta](double x, double y) { return cdouble{symbol_d(x, y, delta), 0.0}; };
    else if (name == "G")
        fn = [delta](double x, double y) { return cdouble{symbol_G(x, y, delta), 0.0}; };
    else
        throw std::invalid_argument("dump_symbol_csv: unknown symbol " + name);
    std::ofstream os(path);
    if (!os) throw std::runtime_error("dump_symbol_csv: cannot open " + path);
    os << "xi,eta,value_re,value_im\n";
    const double step = 2.0 * extent / (points - 1);
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
            const double x = -extent + i * step, y = -extent + j * step;
            const cdouble v = fn(x, y);
            char buf[128];
            std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.17g,%.17g\n", x, y, v.real(), v.imag());
            os << buf;
        }
}

}  // namespace ilw
