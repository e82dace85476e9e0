#include "ilw/dispersion.hpp"

#include "ilw/lp.hpp"
#include "ilw/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ilw {

double weight_omega(double t, double x, int which, double kappa) {
    if (!(t > 0.0)) throw std::domain_error("weight_omega: t must be positive");
    if (!(kappa > 0.0 && kappa <= 0.25)) throw std::domain_error("weight_omega: kappa in (0, 1/4]");
    if (x < -t) return 1.0 / std::sqrt(t);
    const double tm = std::pow(t, -1.0 / 3.0);
    const double z = tm * x;
    const double zp = tm * std::max(x, 0.0);
    const double br = std::sqrt(1.0 + z * z), brp = std::sqrt(1.0 + zp * zp);
    if (which == 0) return tm * std::pow(br, -0.25) * std::pow(brp, -0.75 - kappa);
    if (which == 1) return tm * tm * std::pow(br, 0.25) * std::pow(brp, -1.25);
    throw std::invalid_argument("weight_omega: which must be 0 or 1");
}

namespace {

// smooth taper equal to 1 on [lo, hi] and supported on [lo - w, hi + w]
double taper(double v, double lo, double hi, double w) {
    if (v >= lo && v <= hi) return 1.0;
    if (v <= lo - w || v >= hi + w) return 0.0;
    const double r = v < lo ? (lo - v) / w : (v - hi) / w;
    return lp_bump(1.0 + r);  // reuse the mollifier shoulder on [1, 2]
}

}  // namespace

KernelSample kernel(double t, KernelBand band, const std::vector<double>& xs, const KernelOptions& opt) {
    if (!(t > 0.0)) throw std::domain_error("kernel: t must be positive");
    const Model mdl = frame_model(opt.frame);
    KernelSample out;
    out.t = t;
    out.band = band;
    out.x = xs;
    out.k.assign(xs.size(), cdouble{});
    out.tk.assign(xs.size(), cdouble{});

    double xabs = 1.0;
    for (double x : xs) xabs = std::max(xabs, std::fabs(x));

    // window in |xi| and its smooth weight
    double lo = 0.0, hi = 0.0;
    std::function<double(double)> win;
    switch (band.kind) {
        case KernelBand::Kind::Shell: {
            const double sk = std::ldexp(1.0, band.k);
            lo = 0.5 * sk;
            hi = 2.0 * sk;
            win = [band, sk](double xi) { return lp_bump(xi / sk) - lp_bump(2.0 * xi / sk); };
            break;
        }
        case KernelBand::Kind::AboveZero: {
            lo = 0.5;
            // stationary points satisfy t phase'(xi) = -x; phase' grows like
            // 2 xi, so xi_* <= (|x|/t + 1/delta)/2 + 1
            double ximax = 0.5 * (xabs / t + 1.0 / opt.delta) + 1.0;
            ximax = std::max(2.0 * ximax, 4.0);
            hi = ximax;
            win = [ximax](double xi) { return (1.0 - lp_bump(xi)) * taper(xi, 0.0, ximax, ximax); };
            break;
        }
        case KernelBand::Kind::Full: {
            lo = 0.0;
            double ximax = 0.5 * (xabs / t + 1.0 / opt.delta) + 1.0;
            ximax = std::max(2.0 * ximax, 4.0);
            hi = ximax;
            win = [ximax](double xi) { return taper(xi, 0.0, ximax, ximax); };
            break;
        }
    }

    // phase-resolving mesh over [max(0, lo - margin), hi + margin]
    const double margin = (band.kind == KernelBand::Kind::Shell) ? 0.5 * lo : hi;
    const double a = std::max(0.0, lo - margin);
    const double b = 2.0 * hi;  // generous: the window vanishes beyond hi (+ taper width)
    double dmax = 0.0;
    for (double xi = a; xi <= b; xi += (b - a) / 64.0)
        dmax = std::max(dmax, std::fabs(t * model_phase_derivative(mdl, xi, opt.delta)));
    dmax += xabs;
    int npts = static_cast<int>(std::ceil(opt.oversample * dmax * (b - a) / (2.0 * M_PI))) + 1;
    npts = std::max(npts, opt.min_points);
    const double h = (b - a) / (npts - 1);
    if (dmax * h > M_PI / 4.0)
        throw std::runtime_error("kernel: mesh leaves more than pi/4 phase change per cell");

    // K real for real symbols: K = (1/pi) int_0^inf win cos(x xi + t phase),
    // T K = (1/pi) int_0^inf win tanh sin(x xi + t phase)
    std::vector<double> wv(npts), ph(npts), th(npts), xiv(npts);
    for (int i = 0; i < npts; ++i) {
        const double xi = a + i * h;
        xiv[i] = xi;
        wv[i] = win(xi);
        ph[i] = t * model_phase(mdl, xi, opt.delta);
        th[i] = std::tanh(opt.delta * xi);
    }
    for (size_t jx = 0; jx < xs.size(); ++jx) {
        const double x = xs[jx];
        double acc_c = 0.0, acc_s = 0.0;
        for (int i = 0; i < npts; ++i) {
            if (wv[i] == 0.0) continue;
            const double w = (i == 0 || i == npts - 1) ? 0.5 : 1.0;
            const double arg = x * xiv[i] + ph[i];
            acc_c += w * wv[i] * std::cos(arg);
            acc_s += w * wv[i] * th[i] * std::sin(arg);
        }
        out.k[jx] = cdouble{acc_c * h / M_PI, 0.0};
        out.tk[jx] = cdouble{acc_s * h / M_PI, 0.0};
    }
    return out;
}

void KernelSample::save_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("KernelSample::save_csv: cannot open " + path);
    os << "t,x,re,im,band\n";
    std::string bname = band.kind == KernelBand::Kind::Full
                            ? "full"
                            : (band.kind == KernelBand::Kind::AboveZero ? ">0" : "k" + std::to_string(band.k));
    for (size_t j = 0; j < x.size(); ++j) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.10g,%.17g,%.17g,%.17g,%s\n", t, x[j], k[j].real(), k[j].imag(),
                      bname.c_str());
        os << buf;
    }
}

double wrap_mass_fraction(const Field& f) {
    // Mean-subtracted localized data carries a constant pedestal everywhere,
    // so the sentinel windows are compared against their own average: only
    // structure that actually reached the boundary counts.
    const int n = f.n();
    const int sentinel = n / 20;
    double base = 0.0;
    for (int j = 0; j < n; ++j)
        if (j < sentinel || j >= n - sentinel) base += f.v[j];
    base /= 2 * sentinel;
    double outer = 0.0, total = 0.0;
    for (int j = 0; j < n; ++j) {
        total += f.v[j] * f.v[j];
        if (j < sentinel || j >= n - sentinel) {
            const double d = f.v[j] - base;
            outer += d * d;
        }
    }
    return total > 0.0 ? outer / total : 0.0;
}

Field vectorfield_L(const Field& f, double t, double delta, Frame frame, double center) {
    if (wrap_mass_fraction(f) > 1e-8)
        throw std::domain_error("vectorfield_L: data touches the domain wrap (sentinel mass above 1e-8)");
    const Model mdl = frame_model(frame);
    Field out = multiply_by_x(f);
    if (center != 0.0)
        for (int j = 0; j < f.n(); ++j) out.v[j] -= center * f.v[j];
    if (t != 0.0) {
        Field drift = apply_multiplier(
            f, [mdl, delta](double xi) { return cdouble{model_phase_derivative(mdl, xi, delta), 0.0}; },
            cdouble{model_phase_derivative(mdl, 0.0, delta), 0.0});
        for (int j = 0; j < f.n(); ++j) out.v[j] += t * drift.v[j];
    }
    return out;
}

KsRatioReport ks_ratio(const Field& datum, const std::vector<double>& times, double delta, Frame frame,
                       double kappa, double center) {
    if (std::fabs(datum.mean()) > 1e-12 * (1.0 + norm_linf(datum)))
        throw std::invalid_argument("ks_ratio: datum must be mean-zero");
    const Model mdl = frame_model(frame);
    const GridPtr g = datum.grid;
    KsRatioReport rep;
    const Spectrum s0 = fft(datum);
    for (double t : times) {
        const Spectrum st = apply_multiplier(
            *g, s0, [&](double xi) { return std::polar(1.0, t * model_phase(mdl, xi, delta)); }, cdouble{1.0, 0.0});
        Field phi = ifft_real(*g, st, g);
        Field tphi = tilbert(phi, delta);
        Field lphi = vectorfield_L(phi, t, delta, frame, center);
        const double denom = norm_besov(phi) + norm_tilbert_half(lphi, delta);
        KsRatioRow row;
        row.t = t;
        row.besov = norm_besov(phi);
        row.l_tilbert = norm_tilbert_half(lphi, delta);
        double sup0 = 0.0, sup1 = 0.0;
        int jpeak = 0;
        for (int j = 0; j < g->n(); ++j) {
            const double w0 = weight_omega(t, g->x(j) - center, 0, kappa);
            const double w1 = weight_omega(t, g->x(j) - center, 1, kappa);
            sup0 = std::max(sup0, std::fabs(phi.v[j]) / (w0 * denom));
            sup1 = std::max(sup1, std::fabs(tphi.v[j]) / (w1 * denom));
            if (std::fabs(phi.v[j]) > std::fabs(phi.v[jpeak])) jpeak = j;
        }
        row.peak_x = g->x(jpeak) - center;
        row.r0 = sup0;
        row.r1 = sup1;
        rep.rows.push_back(row);
    }
    rep.max_r0 = rep.min_r0 = rep.rows.front().r0;
    rep.max_r1 = rep.min_r1 = rep.rows.front().r1;
    for (const auto& r : rep.rows) {
        rep.max_r0 = std::max(rep.max_r0, r.r0);
        rep.min_r0 = std::min(rep.min_r0, r.r0);
        rep.max_r1 = std::max(rep.max_r1, r.r1);
        rep.min_r1 = std::min(rep.min_r1, r.r1);
    }
    return rep;
}

void KsRatioReport::save_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("KsRatioReport::save_csv: cannot open " + path);
    os << "t,r0,r1,peak_x,besov,l_tilbert\n";
    for (const auto& r : rows) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%.10g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.r0, r.r1, r.peak_x, r.besov,
                      r.l_tilbert);
        os << buf;
    }
}

}  // namespace ilw
