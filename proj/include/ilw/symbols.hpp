// Pointwise evaluation of the scalar Fourier symbols of the intermediate
// long wave model: the dispersion phase a(xi) = xi^2 coth(delta xi) and its
// derivatives, the shifted phase A = a - xi/delta, the smoothing symbol
// p = i(sgn - coth), the tanh surrogate sigma, and the two-wave resonance
// function Omega2. All formulas switch to truncated power series for
// |delta*xi| below a fixed radius so that values stay accurate through the
// removable singularities at xi = 0.
#pragma once

#include <complex>
#include <stdexcept>

namespace ilw {

// Series/closed-form switch radius, measured in z = delta*xi.
inline constexpr double kSeriesRadius = 1e-2;

// Half-width of the Taylor-model bands around the resonance lines
// xi = 0, eta = 0, xi + eta = 0 used by resonance_omega2 and the
// normal-form quotient symbols.
inline constexpr double kResonanceBand = 1e-3;

// One or two frequencies plus the depth parameter. When built with two
// frequencies the third one is stored as zeta = -xi - eta.
struct SymbolPoint {
    double xi = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
    double delta = 1.0;

    SymbolPoint() = default;
    explicit SymbolPoint(double xi_, double delta_ = 1.0) : xi(xi_), delta(delta_) {
        check_delta();
    }
    SymbolPoint(double xi_, double eta_, double delta_) : xi(xi_), eta(eta_), zeta(-xi_ - eta_), delta(delta_) {
        check_delta();
    }

private:
    void check_delta() const {
        if (!(delta >= 1.0)) throw std::invalid_argument("SymbolPoint: delta must be >= 1");
    }
};

// a(xi) = xi^2 coth(delta xi); odd, a(0) = 0.
double dispersion_a(double xi, double delta);
// A(xi) = a(xi) - xi/delta; odd, ~ delta xi^3/3 near 0, ~ xi|xi| - xi/delta at infinity.
double dispersion_A(double xi, double delta);
// a'(xi) = 2 xi coth(delta xi) - delta xi^2 csch^2(delta xi); even, a'(0) = 1/delta.
double group_velocity(double xi, double delta);
// A'(xi) = a'(xi) - 1/delta, evaluated without cancellation near 0.
double group_velocity_excess(double xi, double delta);

// a and its first five derivatives at xi. out[0] = a, out[k] = a^{(k)}.
void dispersion_derivs(double xi, double delta, double out[6]);

// sigma(xi) = tanh(delta xi).
double sigma_tanh(double xi, double delta);
// sigma and its first three derivatives. out[0] = sigma, out[k] = sigma^{(k)}.
void sigma_derivs(double xi, double delta, double out[4]);

// Symbol of the smoothing difference H - T^{-1}: p(xi) = i(sgn xi - coth(delta xi)).
// Decays like 2 e^{-2 delta |xi|}; singular like -i/(delta xi) at 0.
std::complex<double> smoothing_p(double xi, double delta);

// Omega2(xi,eta) = a(xi+eta) - a(xi) - a(eta). Vanishes exactly on the lines
// xi = 0, eta = 0, xi + eta = 0; evaluated by a fourth-order Taylor model in
// the smallest of the three variables when it is below kResonanceBand.
double resonance_omega2(double xi, double eta, double delta);

// SymbolPoint wrappers.
inline double dispersion_a(const SymbolPoint& p) { return dispersion_a(p.xi, p.delta); }
inline double dispersion_A(const SymbolPoint& p) { return dispersion_A(p.xi, p.delta); }
inline double group_velocity(const SymbolPoint& p) { return group_velocity(p.xi, p.delta); }
inline std::complex<double> smoothing_p(const SymbolPoint& p) { return smoothing_p(p.xi, p.delta); }
inline double sigma_tanh(const SymbolPoint& p) { return sigma_tanh(p.xi, p.delta); }
inline double resonance_omega2(const SymbolPoint& p) { return resonance_omega2(p.xi, p.eta, p.delta); }

namespace detail {

// Values cached at one frequency for the quotient symbols: sigma with three
// derivatives and a with five.
struct DispData {
    double sig[4];
    double a[6];
    double aprime_excess;  // a'(xi) - 1/delta
};

DispData disp_data(double xi, double delta);

// Fourth-order coefficients in m of N_b1, N_b2 and Omega2/m for the line
// eta = m at fixed xi (numerators and shared denominator of b1, b2).
struct EtaLineModel {
    double n[4];  // N_b1/m  = n0 + n1 m + n2 m^2 + n3 m^3
    double q[4];  // N_b2/m  = q0 + ...
    double w[4];  // Omega2/m = w0 + ...
};
EtaLineModel eta_line_model(const DispData& big, double xi, double delta);

// Same for the line xi + eta = m at fixed xi (small output frequency).
struct ZetaLineModel {
    double q[4];  // N_b2/m
    double w[4];  // Omega2/m
};
ZetaLineModel zeta_line_model(const DispData& big, double xi, double delta);

}  // namespace detail

}  // namespace ilw
