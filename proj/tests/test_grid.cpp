#include "doctest.h"

#include "ilw/grid.hpp"
#include "ilw/symbols.hpp"

#include <cmath>
#include <cstdio>
#include <random>

using namespace ilw;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(GridSpec(-1.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(10.0, 24), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(10.0, 8), std::invalid_argument);
    auto g = make_grid(20.0, 64);
    CHECK(g->dx() == doctest::Approx(20.0 / 64));
    CHECK(g->xi(1) == doctest::Approx(2.0 * M_PI / 20.0));
    CHECK(g->mode(63) == -1);
    CHECK(g->x(0) == doctest::Approx(-10.0));
}

TEST_CASE("fft round trip and Parseval") {
    auto g = make_grid(40.0, 256);
    Field f = random_band_limited(g, 1);
    const Spectrum s = fft(f);
    Field back = ifft_real(*g, s, g);
    for (int j = 0; j < f.n(); ++j) CHECK(back.v[j] == doctest::Approx(f.v[j]).epsilon(1e-12));
    // Parseval: ||f||_{L2}^2 equals the lattice-weighted spectral sum
    CHECK(norm_l2(f) == doctest::Approx(norm_l2_spec(*g, s)).epsilon(1e-12));
    // spectrum of a real field is Hermitian-symmetric
    for (int m = 1; m < g->n() / 2; ++m)
        CHECK(std::abs(s[g->index(-m)] - std::conj(s[g->index(m)])) < 1e-14);
}

TEST_CASE("multiplier identity and Hilbert involution") {
    auto g = make_grid(40.0, 256);
    Field f = random_band_limited(g, 2);
    Field id = apply_multiplier(f, [](double) { return cdouble{1.0, 0.0}; }, cdouble{1.0, 0.0});
    for (int j = 0; j < f.n(); ++j) CHECK(id.v[j] == doctest::Approx(f.v[j]).epsilon(1e-12));
    // H^2 = -I on mean-zero fields
    Field h2 = hilbert(hilbert(f));
    double worst = 0.0;
    for (int j = 0; j < f.n(); ++j) worst = std::max(worst, std::fabs(h2.v[j] + f.v[j]));
    CHECK(worst < 1e-12 * norm_linf(f) * f.n());
    CHECK(worst / norm_linf(f) < 1e-12);
}

TEST_CASE("multiplier rejects non-finite symbols and non-Hermitian real application") {
    auto g = make_grid(40.0, 64);
    Field f = random_band_limited(g, 3);
    CHECK_THROWS_AS(apply_multiplier(f, [](double xi) { return cdouble{1.0 / (xi - xi), 0.0}; }),
                    std::domain_error);
    // odd real symbol maps real fields to complex ones: rejected
    CHECK_THROWS_AS(apply_multiplier(f, [](double xi) { return cdouble{xi > 0 ? 1.0 : -1.0, 0.0}; }),
                    std::invalid_argument);
}

TEST_CASE("Tilbert inverse pairing identity") {
    // T^{-1}(u Tv + v Tu) = uv - (Tu)(Tv) modulo constants
    auto g = make_grid(60.0, 512);
    for (unsigned seed : {4u, 5u, 6u}) {
        Field u = random_band_limited(g, seed, 100);
        Field v = random_band_limited(g, seed + 50, 100);
        const double delta = (seed % 2) ? 1.0 : 2.0;
        Field tu = tilbert(u, delta), tv = tilbert(v, delta);
        Spectrum lhs_in = product_dealiased(*g, fft(u), fft(tv));
        const Spectrum p2 = product_dealiased(*g, fft(v), fft(tu));
        for (size_t j = 0; j < lhs_in.size(); ++j) lhs_in[j] += p2[j];
        const Spectrum lhs =
            apply_multiplier(*g, lhs_in, [delta](double xi) { return cdouble{0.0, 1.0 / std::tanh(delta * xi)}; });
        Spectrum rhs = product_dealiased(*g, fft(u), fft(v));
        const Spectrum tt = product_dealiased(*g, fft(tu), fft(tv));
        for (size_t j = 0; j < rhs.size(); ++j) rhs[j] -= tt[j];
        rhs[0] = 0.0;  // T^{-1} is defined modulo constants
        double worst = 0.0;
        for (size_t j = 0; j < rhs.size(); ++j) worst = std::max(worst, std::abs(lhs[j] - rhs[j]));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("derivative matches single-mode oracle") {
    auto g = make_grid(10.0, 64);
    Field f(g);
    const double k = 2.0 * M_PI / 10.0 * 3;
    for (int j = 0; j < 64; ++j) f.v[j] = std::sin(k * g->x(j));
    Field d = derivative(f);
    for (int j = 0; j < 64; ++j) CHECK(d.v[j] == doctest::Approx(k * std::cos(k * g->x(j))).epsilon(1e-10));
}

TEST_CASE("bilinear apply: constant symbol is the pointwise product") {
    auto g = make_grid(30.0, 128);
    Field u = random_band_limited(g, 7, 31);
    Field v = random_band_limited(g, 8, 31);
    Field w = bilinear_apply([](double, double) { return cdouble{1.0, 0.0}; }, u, v);
    for (int j = 0; j < u.n(); ++j) CHECK(w.v[j] == doctest::Approx(u.v[j] * v.v[j]).epsilon(5e-11));
}

TEST_CASE("bilinear apply: Leibniz symbol gives (uv)_x / 2") {
    auto g = make_grid(30.0, 128);
    Field u = random_band_limited(g, 9, 31);
    Field v = random_band_limited(g, 10, 31);
    Field w = bilinear_apply([](double xi, double eta) { return cdouble{0.0, 0.5 * (xi + eta)}; }, u, v);
    Field uv(g);
    for (int j = 0; j < u.n(); ++j) uv.v[j] = u.v[j] * v.v[j];
    Field ref = derivative(uv);
    for (int j = 0; j < u.n(); ++j) CHECK(w.v[j] == doctest::Approx(0.5 * ref.v[j]).epsilon(1e-9));
}

TEST_CASE("bilinear apply: exact against doubled-resolution oracle") {
    auto bsym = [](double xi, double eta) {
        return cdouble{std::cos(xi) + eta * eta / (1.0 + eta * eta), 0.0};
    };
    auto g = make_grid(30.0, 128);
    auto g2 = make_grid(30.0, 256);
    Field u = random_band_limited(g, 11, 40);
    Field v = random_band_limited(g, 12, 40);
    // same data on the doubled grid
    Field u2(g2), v2(g2);
    {
        const Spectrum su = fft(u), sv = fft(v);
        Spectrum su2(256, cdouble{}), sv2(256, cdouble{});
        for (int m = -63; m <= 63; ++m) {
            su2[g2->index(m)] = su[g->index(m)];
            sv2[g2->index(m)] = sv[g->index(m)];
        }
        u2 = ifft_real(*g2, su2, g2);
        v2 = ifft_real(*g2, sv2, g2);
    }
    const Spectrum w = bilinear_apply(*g, bsym, fft(u), fft(v));
    const Spectrum w2 = bilinear_apply(*g2, bsym, fft(u2), fft(v2));
    double worst = 0.0;
    for (int m = -63; m <= 63; ++m) worst = std::max(worst, std::abs(w[g->index(m)] - w2[g2->index(m)]));
    CHECK(worst < 1e-12);
}

TEST_CASE("bilinear aliasing guard") {
    auto g = make_grid(30.0, 128);
    Field u = random_band_limited(g, 13, 60);  // occupies the top third
    Field ok = random_band_limited(g, 14, 30);
    CHECK_THROWS_AS(bilinear_apply([](double, double) { return cdouble{1.0, 0.0}; }, u, ok, false),
                    std::domain_error);
    CHECK_NOTHROW(bilinear_apply([](double, double) { return cdouble{1.0, 0.0}; }, ok, ok, false));
}

TEST_CASE("real-field closure of the model operators") {
    auto g = make_grid(40.0, 256);
    Field f = random_band_limited(g, 15);
    for (const Field& out : {hilbert(f), tilbert(f, 1.0), tilbert_inv_dx(f, 1.0), derivative(f, 2)}) {
        CHECK(out.n() == f.n());
        for (double x : out.v) CHECK(std::isfinite(x));
    }
    // smoothing difference applied with two derivatives stays bounded
    Field p2f = apply_multiplier(f, [](double xi) {
        return smoothing_p(xi, 1.0) * cdouble{-xi * xi, 0.0};
    });
    CHECK(norm_l2(p2f) < 20.0 * norm_l2(f));
}

TEST_CASE("field serialization round trip") {
    auto g = make_grid(17.5, 64);
    Field f = random_band_limited(g, 16);
    save_field_csv(f, "test_field.csv");
    Field a = load_field_csv("test_field.csv");
    CHECK(a.grid->period() == doctest::Approx(17.5));
    for (int j = 0; j < 64; ++j) CHECK(a.v[j] == doctest::Approx(f.v[j]).epsilon(1e-15));
    save_field_binary(f, "test_field.bin");
    Field b = load_field_binary("test_field.bin");
    for (int j = 0; j < 64; ++j) CHECK(b.v[j] == f.v[j]);
    std::remove("test_field.csv");
    std::remove("test_field.bin");
}

TEST_CASE("antiderivative requires mean-zero input") {
    auto g = make_grid(10.0, 64);
    Field f(g);
    for (auto& x : f.v) x = 1.0;
    CHECK_THROWS_AS(antiderivative(f), std::invalid_argument);
}
