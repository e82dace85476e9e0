#include "ilw/symbols.hpp"

#include <cmath>
#include <algorithm>

namespace ilw {

namespace {

// coth(z) and csch^2(z) for |z| >= kSeriesRadius, via expm1 so the symbol
// differences sgn - coth and the high-frequency tails stay accurate.
double coth_closed(double z) {
    const double az = std::fabs(z);
    const double c = 1.0 + 2.0 / std::expm1(2.0 * az);
    return z > 0 ? c : -c;
}

double csch2_closed(double z) {
    const double az = std::fabs(z);
    if (az > 350.0) {
        const double e = std::exp(-2.0 * az);  // may underflow to 0, harmless
        return 4.0 * e;
    }
    const double em = std::expm1(-2.0 * az);  // -(1 - e^{-2az})
    const double e = std::exp(-2.0 * az);
    return 4.0 * e / (em * em);
}

}  // namespace

double dispersion_a(double xi, double delta) {
    const double z = delta * xi;
    if (std::fabs(z) < kSeriesRadius) {
        const double d = delta, x2 = xi * xi;
        const double d2 = d * d, d3 = d2 * d, d5 = d3 * d2, d7 = d5 * d2;
        return xi / d + x2 * xi * (d / 3.0 + x2 * (-d3 / 45.0 + x2 * (2.0 * d5 / 945.0 - x2 * d7 / 4725.0)));
    }
    return xi * xi * coth_closed(z);
}

double dispersion_A(double xi, double delta) {
    const double z = delta * xi;
    if (std::fabs(z) < kSeriesRadius) {
        const double d = delta, x2 = xi * xi;
        const double d2 = d * d, d3 = d2 * d, d5 = d3 * d2, d7 = d5 * d2;
        return x2 * xi * (d / 3.0 + x2 * (-d3 / 45.0 + x2 * (2.0 * d5 / 945.0 - x2 * d7 / 4725.0)));
    }
    return xi * xi * coth_closed(z) - xi / delta;
}

double group_velocity(double xi, double delta) {
    const double z = delta * xi;
    if (std::fabs(z) < kSeriesRadius) return 1.0 / delta + group_velocity_excess(xi, delta);
    return 2.0 * xi * coth_closed(z) - delta * xi * xi * csch2_closed(z);
}

double group_velocity_excess(double xi, double delta) {
    const double z = delta * xi;
    if (std::fabs(z) < kSeriesRadius) {
        const double d = delta, x2 = xi * xi;
        const double d2 = d * d, d3 = d2 * d, d5 = d3 * d2, d7 = d5 * d2;
        return x2 * (d + x2 * (-d3 / 9.0 + x2 * (2.0 * d5 / 135.0 - x2 * d7 / 525.0)));
    }
    return 2.0 * xi * coth_closed(z) - delta * xi * xi * csch2_closed(z) - 1.0 / delta;
}

void dispersion_derivs(double xi, double delta, double out[6]) {
    const double z = delta * xi;
    const double d = delta;
    const double d2 = d * d, d3 = d2 * d, d5 = d3 * d2, d7 = d5 * d2, d9 = d7 * d2;
    // The closed forms for the higher derivatives cancel like z^{-n-1} near
    // zero, so the series branch here extends to a larger radius than the
    // scalar evaluators use.
    constexpr double kDerivSeriesRadius = 0.1;
    if (std::fabs(z) < kDerivSeriesRadius) {
        const double x = xi, x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
        const double x6 = x4 * x2, x7 = x6 * x, x8 = x4 * x4, x9 = x8 * x, x10 = x8 * x2, x11 = x10 * x;
        out[0] = x / d + d * x3 / 3.0 - d3 * x5 / 45.0 + 2.0 * d5 * x7 / 945.0 - d7 * x9 / 4725.0 + 2.0 * d9 * x11 / 93555.0;
        out[1] = 1.0 / d + d * x2 - d3 * x4 / 9.0 + 2.0 * d5 * x6 / 135.0 - d7 * x8 / 525.0 + 2.0 * d9 * x10 / 8505.0;
        out[2] = 2.0 * d * x - 4.0 * d3 * x3 / 9.0 + 4.0 * d5 * x5 / 45.0 - 8.0 * d7 * x7 / 525.0 + 4.0 * d9 * x9 / 1701.0;
        out[3] = 2.0 * d - 4.0 * d3 * x2 / 3.0 + 4.0 * d5 * x4 / 9.0 - 8.0 * d7 * x6 / 75.0 + 4.0 * d9 * x8 / 189.0;
        out[4] = -8.0 * d3 * x / 3.0 + 16.0 * d5 * x3 / 9.0 - 16.0 * d7 * x5 / 25.0 + 32.0 * d9 * x7 / 189.0;
        out[5] = -8.0 * d3 / 3.0 + 16.0 * d5 * x2 / 3.0 - 16.0 * d7 * x4 / 5.0 + 32.0 * d9 * x6 / 27.0;
        return;
    }
    const double c = coth_closed(z);
    const double w = csch2_closed(z);
    // coth derivative chain in (c, w)
    const double c1 = -d * w;
    const double c2 = 2.0 * d2 * c * w;
    const double c3 = -2.0 * d3 * w * (w + 2.0 * c * c);
    const double c4 = 8.0 * d2 * d2 * c * w * (2.0 * w + c * c);
    const double c5 = -8.0 * d5 * w * (2.0 * w * w + 11.0 * c * c * w + 2.0 * c * c * c * c);
    const double x = xi, x2 = x * x;
    out[0] = x2 * c;
    out[1] = x2 * c1 + 2.0 * x * c;
    out[2] = x2 * c2 + 4.0 * x * c1 + 2.0 * c;
    out[3] = x2 * c3 + 6.0 * x * c2 + 6.0 * c1;
    out[4] = x2 * c4 + 8.0 * x * c3 + 12.0 * c2;
    out[5] = x2 * c5 + 10.0 * x * c4 + 20.0 * c3;
}

double sigma_tanh(double xi, double delta) { return std::tanh(delta * xi); }

void sigma_derivs(double xi, double delta, double out[4]) {
    const double S = std::tanh(delta * xi);
    const double d = delta, u = 1.0 - S * S;
    out[0] = S;
    out[1] = d * u;
    out[2] = -2.0 * d * d * S * u;
    out[3] = -2.0 * d * d * d * u * (1.0 - 3.0 * S * S);
}

std::complex<double> smoothing_p(double xi, double delta) {
    if (xi == 0.0) throw std::domain_error("smoothing_p: symbol singular at xi = 0");
    const double az = delta * std::fabs(xi);
    double v;  // sgn(xi) - coth(delta xi), computed on xi > 0 then extended oddly
    if (az < kSeriesRadius) {
        // 1 - coth(z) = -1/z + 1 - z/3 + z^3/45 ...
        v = -1.0 / az + 1.0 - az / 3.0 + az * az * az / 45.0;
    } else {
        v = -2.0 / std::expm1(2.0 * az);
    }
    if (xi < 0) v = -v;
    return {0.0, v};
}

namespace detail {

DispData disp_data(double xi, double delta) {
    DispData d;
    sigma_derivs(xi, delta, d.sig);
    dispersion_derivs(xi, delta, d.a);
    d.aprime_excess = group_velocity_excess(xi, delta);
    return d;
}

EtaLineModel eta_line_model(const DispData& big, double xi, double delta) {
    EtaLineModel m;
    const double d = delta, d3 = d * d * d;
    const double a2 = big.a[2], a3 = big.a[3], a4 = big.a[4], a5 = big.a[5];
    const double Ap = big.aprime_excess;
    // Omega2(xi, m)/m, from a(xi+m)-a(xi) minus the Maclaurin series of a(m)
    m.w[0] = Ap;
    m.w[1] = a2 / 2.0;
    m.w[2] = a3 / 6.0 - d / 3.0;
    m.w[3] = a4 / 24.0;
    // N_b1 = g(xi+m)-g(xi)-g(m), g = xi a'(xi)
    m.n[0] = Ap + xi * a2;
    m.n[1] = (2.0 * a2 + xi * a3) / 2.0;
    m.n[2] = (3.0 * a3 + xi * a4) / 6.0 - d;
    m.n[3] = (4.0 * a4 + xi * a5) / 24.0;
    // N_b2 = ctilde(xi,m) * (a'(m) - a'(xi)); ctilde expanded in m to fourth
    // order, a'(m)-a'(xi) = -Ap + d m^2 + O(m^4).
    const double S = big.sig[0], S1 = big.sig[1], S2 = big.sig[2], S3 = big.sig[3];
    const double c1 = S * S / 4.0;
    const double c2 = -xi * d * S1 / 4.0 + S * (S1 - d) / 4.0;
    const double c3 = S2 * (S - xi * d) / 8.0;
    const double c4 = -xi * (d * S3 / 6.0 - d3 * S1 / 3.0) / 4.0 + S * (S3 / 6.0 + d3 / 3.0) / 4.0;
    const double p0 = -Ap, p2 = d;
    m.q[0] = c1 * p0;
    m.q[1] = c2 * p0;
    m.q[2] = c3 * p0 + c1 * p2;
    m.q[3] = c4 * p0 + c2 * p2;
    return m;
}

ZetaLineModel zeta_line_model(const DispData& big, double xi, double delta) {
    ZetaLineModel zm;
    const double d = delta;
    const double a2 = big.a[2], a3 = big.a[3], a4 = big.a[4], a5 = big.a[5];
    const double Ap = big.aprime_excess;
    const double S = big.sig[0], S1 = big.sig[1], S2 = big.sig[2], S3 = big.sig[3];
    // ctilde(xi, m - xi) = k0 + k1 m + k2 m^2 + k3 m^3 + O(m^4)
    const double k0 = -xi * S * S / 2.0;
    const double k1 = S * S / 4.0 + xi * S * S1 / 2.0;
    const double k2 = d * (S - xi * S1) / 4.0 - S * S1 / 4.0 - xi * S * S2 / 4.0;
    const double k3 = S2 * (d * xi + S) / 8.0 + xi * S * S3 / 12.0;
    // a'(m - xi) - a'(xi) = -a2 m + a3 m^2/2 - a4 m^3/6 + a5 m^4/24
    zm.q[0] = -k0 * a2;
    zm.q[1] = -k1 * a2 + k0 * a3 / 2.0;
    zm.q[2] = -k2 * a2 + k1 * a3 / 2.0 - k0 * a4 / 6.0;
    zm.q[3] = -k3 * a2 + k2 * a3 / 2.0 - k1 * a4 / 6.0 + k0 * a5 / 24.0;
    zm.w[0] = -Ap;
    zm.w[1] = a2 / 2.0;
    zm.w[2] = d / 3.0 - a3 / 6.0;
    zm.w[3] = a4 / 24.0;
    return zm;
}

}  // namespace detail

double resonance_omega2(double xi, double eta, double delta) {
    const double s = xi + eta;
    if (xi == 0.0 || eta == 0.0 || s == 0.0) return 0.0;
    const double axi = std::fabs(xi), aeta = std::fabs(eta), as = std::fabs(s);
    const double lo = std::min({axi, aeta, as});
    if (lo >= kResonanceBand) return dispersion_a(s, delta) - dispersion_a(xi, delta) - dispersion_a(eta, delta);
    // Expand in the smallest variable. Omega2 is a symmetric function of the
    // triple (xi, eta, -xi-eta), so the two input lines reduce to the same
    // eta = m model; the output line has its own denominator series.
    if (as == lo) {
        const auto zm = detail::zeta_line_model(detail::disp_data(xi, delta), xi, delta);
        return s * (zm.w[0] + s * (zm.w[1] + s * (zm.w[2] + s * zm.w[3])));
    }
    const double big = (aeta == lo) ? xi : eta;
    const double m = (aeta == lo) ? eta : xi;
    const auto md = detail::eta_line_model(detail::disp_data(big, delta), big, delta);
    return m * (md.w[0] + m * (md.w[1] + m * (md.w[2] + m * md.w[3])));
}

}  // namespace ilw
