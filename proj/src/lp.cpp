#include "ilw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilw {

double lp_bump(double r) {
    const double a = std::fabs(r);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    auto h = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    const double hi = h(2.0 - a), lo = h(a - 1.0);
    return hi / (hi + lo);
}

int lp_k_min(const GridSpec& g) { return static_cast<int>(std::ceil(std::log2(g.dxi()))); }

int lp_k_max(const GridSpec& g) { return static_cast<int>(std::ceil(std::log2(g.xi_max()))) + 1; }

double lp_symbol(const GridSpec& g, int k, double xi, LpMode mode) {
    const double a = std::fabs(xi);
    const double sk = std::ldexp(1.0, -k);  // 2^{-k}
    if (mode == LpMode::ExactShell) {
        if (xi == 0.0) return 0.0;
        const bool above = a * sk > 0.5 || k == lp_k_min(g);
        return (above && a * sk <= 1.0) ? 1.0 : 0.0;
    }
    if (xi == 0.0) return 0.0;
    const double hi = lp_bump(a * sk);
    if (k == lp_k_min(g)) return hi;
    return hi - lp_bump(2.0 * a * sk);
}

Spectrum lp_project(const GridSpec& g, const Spectrum& s, DyadicIndex d, LpMode mode) {
    if (d.k < lp_k_min(g) || d.k > lp_k_max(g)) throw std::invalid_argument("lp_project: shell outside lattice range");
    const int n = g.n();
    Spectrum out(n, cdouble{});
    for (int j = 0; j < n; ++j) {
        const int m = g.mode(j);
        if (m == 0 || m == -n / 2) continue;
        if (d.sign > 0 && m < 0) continue;
        if (d.sign < 0 && m > 0) continue;
        out[j] = lp_symbol(g, d.k, g.xi(j), mode) * s[j];
    }
    return out;
}

Field lp_project(const Field& f, DyadicIndex d, LpMode mode) {
    if (d.sign != 0) throw std::invalid_argument("lp_project: signed projection of a real field is complex");
    return ifft_real(*f.grid, lp_project(*f.grid, fft(f), d, mode), f.grid);
}

CField lp_project(const CField& f, DyadicIndex d, LpMode mode) {
    return ifft(*f.grid, lp_project(*f.grid, fft(f), d, mode), f.grid);
}

Spectrum lp_below(const GridSpec& g, const Spectrum& s, int k) {
    const int n = g.n();
    Spectrum out(n, cdouble{});
    const double sk = std::ldexp(1.0, -(k - 1));
    for (int j = 0; j < n; ++j) {
        const int m = g.mode(j);
        if (m == -n / 2) continue;
        out[j] = lp_bump(std::fabs(g.xi(j)) * sk) * s[j];
    }
    return out;
}

Field lp_below(const Field& f, int k) { return ifft_real(*f.grid, lp_below(*f.grid, fft(f), k), f.grid); }

namespace {

Spectrum half_line_spec(const GridSpec& g, Spectrum s, int sign) {
    const int n = g.n();
    for (int j = 0; j < n; ++j) {
        const int m = g.mode(j);
        if (m == 0 || m == -n / 2 || (sign > 0 && m < 0) || (sign < 0 && m > 0)) s[j] = cdouble{};
    }
    return s;
}

}  // namespace

CField half_line_project(const Field& f, int sign) {
    return ifft(*f.grid, half_line_spec(*f.grid, fft(f), sign), f.grid);
}

CField half_line_project(const CField& f, int sign) {
    return ifft(*f.grid, half_line_spec(*f.grid, fft(f), sign), f.grid);
}

double norm_besov(const Field& f, LpMode mode) {
    const GridSpec& g = *f.grid;
    const Spectrum s = fft(f);
    double worst = 0.0;
    for (int k = lp_k_min(g); k < 0; ++k) {
        double acc = 0.0;
        for (int j = 0; j < g.n(); ++j) {
            const int m = g.mode(j);
            if (m == 0 || m == -g.n() / 2) continue;
            const double w = lp_symbol(g, k, g.xi(j), mode);
            if (w != 0.0) acc += w * w * std::norm(s[j]);
        }
        worst = std::max(worst, std::ldexp(acc, -k));
    }
    double l2sq = 0.0;
    for (const auto& c : s) l2sq += std::norm(c);
    return std::sqrt((l2sq + worst) * g.period());
}

double norm_tilbert_half_spec(const GridSpec& g, const Spectrum& s, double delta) {
    double acc = 0.0;
    for (int j = 0; j < g.n(); ++j) {
        const int m = g.mode(j);
        if (m == -g.n() / 2) continue;
        acc += std::fabs(std::tanh(delta * g.xi(j))) * std::norm(s[j]);
    }
    return std::sqrt(acc * g.period());
}

double norm_tilbert_half(const Field& f, double delta) {
    return norm_tilbert_half_spec(*f.grid, fft(f), delta);
}

FrequencyEnvelope frequency_envelope(const Field& f, double delta_env, LpMode mode) {
    if (!(delta_env > 0.0 && delta_env <= 1.0)) throw std::invalid_argument("frequency_envelope: delta_env in (0,1]");
    const GridSpec& g = *f.grid;
    const int klo = lp_k_min(g), khi = lp_k_max(g);
    std::vector<double> dyadic(khi - klo + 1);
    for (int k = klo; k <= khi; ++k) dyadic[k - klo] = norm_l2(lp_project(f, {k, 0}, mode));
    FrequencyEnvelope env;
    env.k_min = klo;
    env.delta_env = delta_env;
    env.c.resize(dyadic.size());
    for (int k = klo; k <= khi; ++k) {
        double best = 0.0;
        for (int j = klo; j <= khi; ++j)
            best = std::max(best, std::pow(2.0, -delta_env * std::abs(j - k)) * dyadic[j - klo]);
        env.c[k - klo] = best;
    }
    return env;
}

}  // namespace ilw
