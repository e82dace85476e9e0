// The normal-form symbol family: the bounded correction b = b1/2 + b2 built
// from the dispersion, the transport symbol c and its antisymmetric part
// ctilde_a, the symmetrized defect c_sym3, the quadratic source d, the cubic
// remainder r, their deep-water (sgn) limits, and the identity / decay
// verifiers. Quotients are evaluated through fourth-order Taylor models in
// bands of half-width kResonanceBand around the lines xi = 0, eta = 0,
// xi + eta = 0 where numerator and denominator both vanish.
#pragma once

#include "ilw/grid.hpp"
#include "ilw/symbols.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace ilw {

// Smooth everywhere; -> 3 at the origin, -> 2 at high frequency.
double symbol_b1(double xi, double eta, double delta);
// Antisymmetric, odd, vanishes on both axes.
double symbol_ctilde_a(double xi, double eta, double delta);
// c(xi,eta) = i eta - 2i ctilde_a(xi,eta).
cdouble symbol_c(double xi, double eta, double delta);
// c(xi,eta) + c(xi,-xi-eta); equals -i xi sech^2(d xi) sech^2(d eta) /
// (1 + tanh(d xi) tanh(d eta)).
cdouble symbol_c_sym3(double xi, double eta, double delta);
// b2 = ctilde_a(xi,eta) (a'(eta) - a'(xi)) / Omega2(xi,eta).
double symbol_b2(double xi, double eta, double delta);
double symbol_b(double xi, double eta, double delta);
// Leading part 3/4 + (1/4) tanh(d xi) tanh(d eta).
double symbol_b_sharp(double xi, double eta, double delta);
double symbol_b_residual(double xi, double eta, double delta);
// G = s(xi+eta)s(xi) + s(xi+eta)s(eta) - s(xi)s(eta) + 1, s = tanh(d .).
double symbol_G(double xi, double eta, double delta);
// (d_eta - d_xi) ctilde_a, in closed form.
double symbol_dctilde(double xi, double eta, double delta);
// d = b - 1 + (d_eta - d_xi) ctilde_a; decays like e^{-c xi_lo}.
double symbol_d(double xi, double eta, double delta);
// Fully symmetrized trilinear symbol of 2B(u, u u_x) - C(u, B(u,u)).
cdouble symbol_r(double xi, double eta, double zeta, double delta);

// Deep-water (sgn) limits. The public accessors reject axis inputs where sgn
// is ambiguous; the identities extend to pair-degenerate tuples with the
// interior convention sgn(0) = 0 used internally by the surrogate operators.
struct BoSymbols {
    double b;
    double ctilde_a;
    cdouble c;
};
BoSymbols bo_symbols(double xi, double eta);
double bo_b(double xi, double eta);        // sgn(0) = 0 convention
double bo_ctilde_a(double xi, double eta); // sgn(0) = 0 convention
cdouble bo_c(double xi, double eta);

// ---------------------------------------------------------------------------
// Lattice-cached evaluation and bilinear application.

// Per-mode dispersion data over the doubled mode range of a grid, so that
// pair evaluations b(xi_i, xi_j) in O(n^2) sweeps cost no transcendentals.
class SymbolGrid {
public:
    SymbolGrid(GridPtr grid, double delta);

    double delta() const { return delta_; }
    const GridPtr& grid() const { return grid_; }

    // symbols at lattice pairs, by mode number (|m| <= n/2 for inputs,
    // |m1 + m2| <= n - 2 internally)
    double b(int m1, int m2) const;
    double d(int m1, int m2) const;
    cdouble c(int m1, int m2) const;

    // dense bilinear application in spectral space (exact convolution)
    Spectrum apply_b(const Spectrum& u, const Spectrum& v) const;
    Spectrum apply_d(const Spectrum& u, const Spectrum& v) const;
    // separable FFT path for the transport form C(u, v)
    Spectrum apply_c(const Spectrum& u, const Spectrum& v) const;
    // leading-part form 3/4 uv - 1/4 (Tu)(Tv)
    Spectrum apply_b_sharp(const Spectrum& u, const Spectrum& v) const;
    // cubic remainder R(u,u,u) = 2B(u, u u_x) - C(u, B(u,u))
    Spectrum apply_r(const Spectrum& u) const;

    // same, on real fields
    Field apply_b(const Field& u, const Field& v) const;
    Field apply_c(const Field& u, const Field& v) const;
    Field apply_d(const Field& u, const Field& v) const;
    Field apply_r(const Field& u) const;

    // deep-water surrogate variants (sgn symbols, sgn(0) = 0)
    Spectrum apply_b_bo(const Spectrum& u, const Spectrum& v) const;
    Spectrum apply_c_bo(const Spectrum& u, const Spectrum& v) const;
    Spectrum apply_r_bo(const Spectrum& u) const;

private:
    GridPtr grid_;
    double delta_;
    int n_;
    // arrays indexed by m + n_ for m in [-n, n]
    std::vector<double> a0_, a1_, gg_, sg_;
    double xi_of(int m) const { return grid_->dxi() * m; }
    double pair_b(int m1, int m2) const;
    double pair_d(int m1, int m2) const;
};

// ---------------------------------------------------------------------------
// Verifiers.

struct CheckResult {
    std::string name;
    double worst = 0.0;      // worst residual off the Taylor bands
    double worst_in = 0.0;   // worst residual inside the bands
    double at_xi = 0.0, at_eta = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<CheckResult> checks;
    bool pass = false;
    std::string to_text() const;
};

struct IdentityOptions {
    double extent = 25.0;  // |xi|, |eta| <= extent
    int points = 400;      // per axis
    double delta = 1.0;
    double tol = 1e-10;     // off-band tolerance
    double tol_band = 1e-6; // in-band tolerance
    bool flip_b2_sign = false;  // fault injection for the negative control
};

// Checks, on a points x points lattice: the tanh triple identity, the
// c-symmetrization c + c^T = i(xi+eta), the c_sym3 closed form, the b2
// reconstruction b2 * Omega2 = ctilde_a * (a'(eta) - a'(xi)), the full
// identity b * Omega2 = (1/2)N_1 + ctilde_a (a'(eta) - a'(xi)), and the
// d-definition consistency against central differences of ctilde_a.
IdentityReport verify_quadratic_identity(const IdentityOptions& opt);

struct LadderEntry {
    std::string name;
    double sup = 0.0;
    double at[3] = {0.0, 0.0, 0.0};
};

struct LadderReport {
    std::vector<LadderEntry> entries;  // csym3, b_residual, d, r
    std::string to_text() const;
};

// Measured suprema of |c_sym3| e^{xi_hi}/(1+xi_hi), (1+xi_hi) e^{xi_lo} |b^r|,
// e^{xi_lo} |d| over a 2D lattice, and |r| / sum |tanh| over a 3D lattice.
LadderReport decay_ladder(double extent, int points, double delta, double extent3 = 15.0, int points3 = 48);

// CSV dump (xi, eta, re, im) of a named symbol on a lattice, for plotting.
void dump_symbol_csv(const std::string& name, double extent, int points, double delta, const std::string& path);

}  // namespace ilw
