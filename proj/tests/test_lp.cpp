#include "doctest.h"

#include "ilw/grid.hpp"
#include "ilw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace ilw;

TEST_CASE("dyadic partition of unity up to the mean mode") {
    auto g = make_grid(80.0, 512);
    Field f = random_band_limited(g, 21);
    for (LpMode mode : {LpMode::SmoothBump, LpMode::ExactShell}) {
        Field sum(g);
        for (int k = lp_k_min(*g); k <= lp_k_max(*g); ++k) {
            Field pk = lp_project(f, {k, 0}, mode);
            for (int j = 0; j < f.n(); ++j) sum.v[j] += pk.v[j];
        }
        const double mean = f.mean();
        double worst = 0.0;
        for (int j = 0; j < f.n(); ++j) worst = std::max(worst, std::fabs(sum.v[j] + mean - f.v[j]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("shell supports are almost orthogonal") {
    auto g = make_grid(80.0, 512);
    Field f = random_band_limited(g, 22);
    const int k0 = -1;
    for (int k = lp_k_min(*g); k <= lp_k_max(*g); ++k) {
        if (std::abs(k - k0) < 2) continue;
        Field pk = lp_project(lp_project(f, {k0, 0}, LpMode::ExactShell), {k, 0}, LpMode::ExactShell);
        CHECK(norm_l2(pk) < 1e-13);
        if (std::abs(k - k0) >= 2) {
            Field ps = lp_project(lp_project(f, {k0, 0}), {k, 0});
            CHECK(norm_l2(ps) < 1e-13);
        }
    }
}

TEST_CASE("half-line projections and the Riesz relation") {
    auto g = make_grid(80.0, 512);
    Field f = random_band_limited(g, 23);
    CField fp = half_line_project(f, +1);
    CField fm = half_line_project(f, -1);
    const double mean = f.mean();
    double worst = 0.0;
    for (int j = 0; j < f.n(); ++j)
        worst = std::max(worst, std::abs(fp.v[j] + fm.v[j] + mean - f.v[j]));
    CHECK(worst < 1e-12);
    // with the adopted convention H has symbol +i sgn(xi), so H = i (P+ - P-)
    Field hf = hilbert(f);
    worst = 0.0;
    for (int j = 0; j < f.n(); ++j)
        worst = std::max(worst, std::abs(cdouble{0.0, 1.0} * (fp.v[j] - fm.v[j]) - cdouble{hf.v[j], 0.0}));
    CHECK(worst < 1e-12);
    // smooth projectors commute with the half-line restriction
    CField a = half_line_project(lp_project(f, {-2, 0}), +1);
    CField b = lp_project(half_line_project(f, +1), {-2, 0});
    worst = 0.0;
    for (int j = 0; j < f.n(); ++j) worst = std::max(worst, std::abs(a.v[j] - b.v[j]));
    CHECK(worst < 1e-13);
}

TEST_CASE("besov norm of a single-shell field") {
    // unit-L2 data in shell k = -4: norm^2 = 1 + 2^4
    auto g = make_grid(1000.0, 1024);
    REQUIRE(lp_k_min(*g) <= -5);
    Spectrum s(g->n(), cdouble{});
    // place modes well inside the exact shell (2^{-5}, 2^{-4}]
    const double target = 0.75 * std::pow(2.0, -4);
    const int m0 = static_cast<int>(std::round(target / g->dxi()));
    s[g->index(m0)] = cdouble{0.5, 0.25};
    s[g->index(-m0)] = std::conj(s[g->index(m0)]);
    Field f = ifft_real(*g, s, g);
    const double scale = 1.0 / norm_l2(f);
    for (auto& x : f.v) x *= scale;
    CHECK(norm_besov(f, LpMode::ExactShell) == doctest::Approx(std::sqrt(17.0)).epsilon(1e-10));
}

TEST_CASE("tilbert-half norm: high-frequency data reduces to L2") {
    auto g = make_grid(40.0, 512);
    Spectrum s(g->n(), cdouble{});
    std::mt19937 rng(24);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int m = 40; m <= 120; ++m) {  // xi >= 2 pi 40/40 = 6.28 > 5
        const cdouble c{N(rng), N(rng)};
        s[g->index(m)] = c;
        s[g->index(-m)] = std::conj(c);
    }
    Field f = ifft_real(*g, s, g);
    CHECK(norm_tilbert_half(f, 1.0) == doctest::Approx(norm_l2(f)).epsilon(1e-4));
    Field zero(g);
    CHECK(norm_besov(zero) == 0.0);
    CHECK(norm_tilbert_half(zero, 1.0) == 0.0);
}

TEST_CASE("frequency envelope properties") {
    auto g = make_grid(80.0, 512);
    const double denv = 0.5;
    CHECK_THROWS_AS(frequency_envelope(Field(g), 0.0), std::invalid_argument);
    // single-shell data: c_k = 2^{-denv |k-k0|} ||f||
    {
        Spectrum s(g->n(), cdouble{});
        const int m0 = static_cast<int>(std::round(1.5 / g->dxi()));
        s[g->index(m0)] = cdouble{1.0, 0.0};
        s[g->index(-m0)] = cdouble{1.0, 0.0};
        Field f = ifft_real(*g, s, g);
        const auto env = frequency_envelope(f, denv, LpMode::ExactShell);
        const int k0 = 1;  // |xi| = 1.5 lands in the shell (1, 2]
        for (int k = lp_k_min(*g); k <= lp_k_max(*g); ++k)
            CHECK(env.at(k) ==
                  doctest::Approx(std::pow(2.0, -denv * std::abs(k - k0)) * norm_l2(f)).epsilon(1e-12));
    }
    // random data: envelope dominates the dyadic norms, varies slowly, and is
    // square-summable with the geometric-series constant
    double sum_dyadic_sq = 0.0;
    for (unsigned seed = 30; seed < 40; ++seed) {
        Field f = random_band_limited(g, seed);
        const auto env = frequency_envelope(f, denv);
        sum_dyadic_sq = 0.0;
        for (int k = lp_k_min(*g); k <= lp_k_max(*g); ++k) {
            CHECK(env.at(k) + 1e-15 >= norm_l2(lp_project(f, {k, 0})));
            sum_dyadic_sq += env.at(k) * env.at(k);
        }
        for (int k = lp_k_min(*g); k < lp_k_max(*g); ++k) {
            const double ratio = env.at(k + 1) / env.at(k);
            CHECK(ratio <= std::pow(2.0, denv) * (1.0 + 1e-12));
            CHECK(ratio >= std::pow(2.0, -denv) * (1.0 - 1e-12));
        }
        const double cap = 2.0 / (1.0 - std::pow(4.0, -denv));
        CHECK(sum_dyadic_sq <= cap * norm_l2(f) * norm_l2(f));
    }
}

TEST_CASE("projector commutator gain") {
    // ||[P_k, f] g||_2 <= C 2^{-k} ||f_x||_inf ||g||_2 with C stable in k
    auto g = make_grid(40.0, 1024);
    Field f = random_band_limited(g, 41, 20);  // smooth multiplier
    const double fx_inf = norm_linf(derivative(f));
    for (int k = 2; k <= 6; ++k) {
        Field gk = random_band_limited(g, 50 + k, 0);
        gk = lp_project(gk, {k, 0});
        const double gn = norm_l2(gk);
        if (gn < 1e-14) continue;
        Field fg(g);
        for (int j = 0; j < g->n(); ++j) fg.v[j] = f.v[j] * gk.v[j];
        Field comm = lp_project(fg, {k, 0});
        Field pg = lp_project(gk, {k, 0});
        for (int j = 0; j < g->n(); ++j) comm.v[j] -= f.v[j] * pg.v[j];
        const double c = norm_l2(comm) / (std::pow(2.0, -k) * fx_inf * gn);
        CHECK(std::isfinite(c));
        CHECK(c < 10.0);
    }
}
