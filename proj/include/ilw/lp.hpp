// Littlewood-Paley machinery on the periodic lattice: dyadic projections
// (smooth bump or sharp shell), half-line projections, the Besov and
// half-Tilbert norms, and frequency envelopes.
#pragma once

#include "ilw/grid.hpp"

#include <vector>

namespace ilw {

// Dyadic shell label; sign restricts to positive/negative frequencies.
struct DyadicIndex {
    int k = 0;
    int sign = 0;  // 0: both half-lines, +1 / -1: restrict
};

enum class LpMode { SmoothBump, ExactShell };

// Smooth cutoff adapted to [-2, 2], equal to 1 on [-1, 1]; built from the
// exp(-1/x) mollifier h via psi(r) = h(2-|r|) / (h(2-|r|) + h(|r|-1)).
double lp_bump(double r);

// Symbol of P_k at frequency xi.
//   SmoothBump: psi(xi/2^k) - psi(xi/2^{k-1}) for k > k_lo(g), and psi(xi/2^k)
//               alone at the lowest representable shell so the family sums
//               to 1 away from the mean mode.
//   ExactShell: indicator of 2^{k-1} < |xi| <= 2^k, again absorbing the
//               bottom at k_lo(g).
double lp_symbol(const GridSpec& g, int k, double xi, LpMode mode);

// Lowest / highest shell indices representable on the lattice.
int lp_k_min(const GridSpec& g);
int lp_k_max(const GridSpec& g);

Field lp_project(const Field& f, DyadicIndex d, LpMode mode = LpMode::SmoothBump);
CField lp_project(const CField& f, DyadicIndex d, LpMode mode = LpMode::SmoothBump);
Spectrum lp_project(const GridSpec& g, const Spectrum& s, DyadicIndex d, LpMode mode = LpMode::SmoothBump);

// P_{<k}: smooth symbol psi(xi / 2^{k-1}) (includes the mean mode).
Field lp_below(const Field& f, int k);
Spectrum lp_below(const GridSpec& g, const Spectrum& s, int k);

// Half-line projections P_+/P_- (mean mode excluded from both).
CField half_line_project(const Field& f, int sign);
CField half_line_project(const CField& f, int sign);

// Besov-type norm: sqrt(||f||_{L2}^2 + sup_{k<0} 2^{-k} ||P_k f||_{L2}^2)
// over the representable negative shells.
double norm_besov(const Field& f, LpMode mode = LpMode::SmoothBump);

// || |T|^{1/2} f ||_{L2} with multiplier |tanh(delta xi)|^{1/2}.
double norm_tilbert_half(const Field& f, double delta);
double norm_tilbert_half_spec(const GridSpec& g, const Spectrum& s, double delta);

// Minimal slowly varying majorant of the dyadic L2 norms:
// c_k = max_j 2^{-delta_env |j-k|} ||P_j f||_{L2}.
struct FrequencyEnvelope {
    int k_min = 0;
    std::vector<double> c;  // c[k - k_min]
    double delta_env = 0.0;
    double at(int k) const { return c[k - k_min]; }
};
FrequencyEnvelope frequency_envelope(const Field& f, double delta_env, LpMode mode = LpMode::SmoothBump);

}  // namespace ilw
