#include "ilw/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ilw {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct GridSpec::Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    ~Plans() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

GridSpec::GridSpec(double period, int n_points) : L_(period), n_(n_points), plans_(std::make_unique<Plans>()) {
    if (!(L_ > 0.0)) throw std::invalid_argument("GridSpec: period must be positive");
    if (n_ < 16 || (n_ & (n_ - 1)) != 0) throw std::invalid_argument("GridSpec: n_points must be a power of two >= 16");
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<cdouble> dummy(n_);
    auto* p = reinterpret_cast<fftw_complex*>(dummy.data());
    plans_->fwd = fftw_plan_dft_1d(n_, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->bwd = fftw_plan_dft_1d(n_, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

GridSpec::~GridSpec() = default;

void GridSpec::fft_forward(cdouble* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plans_->fwd, p, p);
}

void GridSpec::fft_backward(cdouble* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plans_->bwd, p, p);
}

GridPtr make_grid(double period, int n_points) { return std::make_shared<const GridSpec>(period, n_points); }

Field::Field(GridPtr g, std::vector<double> vals) : grid(std::move(g)), v(std::move(vals)) {
    if (static_cast<int>(v.size()) != grid->n()) throw std::invalid_argument("Field: size mismatch");
}

double Field::mean() const {
    double s = 0.0;
    for (double x : v) s += x;
    return s / v.size();
}

namespace {

// Samples are taken at x_j = -L/2 + j dx, so coefficients relative to the
// centered coordinate pick up the twiddle (-1)^m against the raw DFT.
void twiddle(Spectrum& s, int n) {
    for (int j = 0; j < n; ++j)
        if (j & 1) s[j] = -s[j];  // (-1)^m = (-1)^j in FFTW index order
}

}  // namespace

Spectrum fft(const Field& f) {
    const int n = f.n();
    Spectrum s(n);
    for (int j = 0; j < n; ++j) s[j] = f.v[j];
    f.grid->fft_forward(s.data());
    const double inv = 1.0 / n;
    for (auto& c : s) c *= inv;
    twiddle(s, n);
    return s;
}

Spectrum fft(const CField& f) {
    Spectrum s = f.v;
    f.grid->fft_forward(s.data());
    const double inv = 1.0 / f.n();
    for (auto& c : s) c *= inv;
    twiddle(s, f.n());
    return s;
}

CField ifft(const GridSpec& g, const Spectrum& s, GridPtr gp) {
    if (static_cast<int>(s.size()) != g.n()) throw std::invalid_argument("ifft: spectrum size mismatch");
    CField out(std::move(gp));
    Spectrum t = s;
    twiddle(t, g.n());
    g.fft_backward(t.data());
    out.v = std::move(t);
    return out;
}

Field ifft_real(const GridSpec& g, const Spectrum& s, GridPtr gp) {
    CField c = ifft(g, s, std::move(gp));
    Field out(c.grid);
    for (int j = 0; j < g.n(); ++j) out.v[j] = c.v[j].real();
    return out;
}

double norm_l2_spec(const GridSpec& g, const Spectrum& s) {
    double acc = 0.0;
    for (const auto& c : s) acc += std::norm(c);
    return std::sqrt(acc * g.period());
}

double norm_l2(const Field& f) {
    double acc = 0.0;
    for (double x : f.v) acc += x * x;
    return std::sqrt(acc * f.grid->dx());
}

double norm_l2(const CField& f) {
    double acc = 0.0;
    for (const auto& x : f.v) acc += std::norm(x);
    return std::sqrt(acc * f.grid->dx());
}

double norm_linf(const Field& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::fabs(x));
    return m;
}

double inner(const Field& f, const Field& g) {
    if (f.grid != g.grid) throw std::invalid_argument("inner: grid mismatch");
    double acc = 0.0;
    for (int j = 0; j < f.n(); ++j) acc += f.v[j] * g.v[j];
    return acc * f.grid->dx();
}

Spectrum apply_multiplier(const GridSpec& g, const Spectrum& s, const MultiplierFn& m, cdouble at_zero) {
    const int n = g.n();
    Spectrum out(n);
    for (int j = 0; j < n; ++j) {
        const int mode = g.mode(j);
        if (mode == 0) {
            out[j] = at_zero * s[j];
            continue;
        }
        if (mode == -n / 2) {
            out[j] = 0.0;  // unpaired mode: lattice is kept symmetric about 0
            continue;
        }
        const cdouble mv = m(g.xi(j));
        if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
            throw std::domain_error("apply_multiplier: symbol not finite at lattice point");
        out[j] = mv * s[j];
    }
    return out;
}

Field apply_multiplier(const Field& f, const MultiplierFn& m, cdouble at_zero) {
    // Hermitian symmetry check on a probe mode keeps real fields real.
    const double probe = f.grid->dxi();
    const cdouble a = m(probe), b = m(-probe);
    if (std::abs(b - std::conj(a)) > 1e-12 * (1.0 + std::abs(a)))
        throw std::invalid_argument("apply_multiplier: symbol is not Hermitian, result would be complex");
    return ifft_real(*f.grid, apply_multiplier(*f.grid, fft(f), m, at_zero), f.grid);
}

CField apply_multiplier(const CField& f, const MultiplierFn& m, cdouble at_zero) {
    return ifft(*f.grid, apply_multiplier(*f.grid, fft(f), m, at_zero), f.grid);
}

Field derivative(const Field& f, int order) {
    return apply_multiplier(f, [order](double xi) {
        cdouble p{1.0, 0.0};
        for (int k = 0; k < order; ++k) p *= cdouble{0.0, xi};
        return p;
    });
}

Field hilbert(const Field& f) {
    return apply_multiplier(f, [](double xi) { return cdouble{0.0, xi > 0 ? 1.0 : -1.0}; });
}

Field tilbert(const Field& f, double delta) {
    return apply_multiplier(f, [delta](double xi) { return cdouble{0.0, -std::tanh(delta * xi)}; });
}

Field tilbert_inv_dx(const Field& f, double delta) {
    return apply_multiplier(
        f, [delta](double xi) { return cdouble{-xi / std::tanh(delta * xi), 0.0}; }, cdouble{-1.0 / delta, 0.0});
}

Field antiderivative(const Field& f) {
    if (std::fabs(f.mean()) > 1e-12 * (1.0 + norm_linf(f)))
        throw std::invalid_argument("antiderivative: input must be mean-zero");
    return apply_multiplier(f, [](double xi) { return cdouble{0.0, -1.0 / xi}; });
}

namespace {

// Cached c2c plans for the padded (non power of two) product lengths.
struct PadPlans {
    fftw_plan fwd = nullptr, bwd = nullptr;
};

PadPlans& pad_plans(int np) {
    static std::map<int, PadPlans> cache;
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto& p = cache[np];
    if (!p.fwd) {
        std::vector<cdouble> dummy(np);
        auto* d = reinterpret_cast<fftw_complex*>(dummy.data());
        p.fwd = fftw_plan_dft_1d(np, d, d, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.bwd = fftw_plan_dft_1d(np, d, d, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    return p;
}

}  // namespace

Spectrum product_dealiased(const GridSpec& g, const Spectrum& a, const Spectrum& b) {
    const int n = g.n();
    const int np = 3 * n / 2;
    // zero-pad both spectra to np modes, multiply pointwise in physical
    // space, transform back and truncate
    std::vector<cdouble> pa(np, cdouble{}), pb(np, cdouble{});
    for (int j = 0; j < n; ++j) {
        const int m = g.mode(j);
        if (m == -n / 2) continue;
        const int idx = m >= 0 ? m : m + np;
        pa[idx] = a[j];
        pb[idx] = b[j];
    }
    const PadPlans& pl = pad_plans(np);
    auto* fa = reinterpret_cast<fftw_complex*>(pa.data());
    auto* fb = reinterpret_cast<fftw_complex*>(pb.data());
    fftw_execute_dft(pl.bwd, fa, fa);
    fftw_execute_dft(pl.bwd, fb, fb);
    for (int j = 0; j < np; ++j) pa[j] *= pb[j];
    fftw_execute_dft(pl.fwd, fa, fa);
    Spectrum out(n, cdouble{});
    const double inv = 1.0 / np;
    for (int j = 0; j < n; ++j) {
        const int m = g.mode(j);
        if (m == -n / 2) continue;
        const int idx = m >= 0 ? m : m + np;
        out[j] = pa[idx] * inv;
    }
    return out;
}

namespace {

bool occupies_top_third(const GridSpec& g, const Spectrum& s) {
    const int n = g.n();
    double lo = 0.0, hi = 0.0;
    for (int j = 0; j < n; ++j) {
        const int am = std::abs(g.mode(j));
        (am > n / 3 ? hi : lo) += std::norm(s[j]);
    }
    return hi > 1e-24 * (lo + hi);
}

}  // namespace

Spectrum bilinear_apply(const GridSpec& g, const BilinearSymbol& b, const Spectrum& u, const Spectrum& v,
                        bool dealias) {
    const int n = g.n();
    if (!dealias && (occupies_top_third(g, u) || occupies_top_third(g, v)))
        throw std::domain_error("bilinear_apply: aliasing guard, data occupies the top third of the spectrum");
    const double dxi = g.dxi();
    Spectrum out(n, cdouble{});
    const int half = n / 2;
    for (int ko = -half + 1; ko < half; ++ko) {
        cdouble acc{};
        for (int m = -half + 1; m < half; ++m) {
            int me = ko - m;
            if (me <= -half || me >= half) {
                if (dealias) continue;
                me = me > 0 ? me - n : me + n;  // cyclic wrap of the unpadded product
            }
            const cdouble uv = u[g.index(m)] * v[g.index(me)];
            if (uv == cdouble{}) continue;
            const cdouble bv = b(dxi * m, dxi * me);
            if (!std::isfinite(bv.real()) || !std::isfinite(bv.imag()))
                throw std::domain_error("bilinear_apply: symbol not finite on the doubled lattice");
            acc += bv * uv;
        }
        out[g.index(ko)] = acc;
    }
    return out;
}

Field bilinear_apply(const BilinearSymbol& b, const Field& u, const Field& v, bool dealias) {
    if (u.grid != v.grid) throw std::invalid_argument("bilinear_apply: grid mismatch");
    const Spectrum s = bilinear_apply(*u.grid, b, fft(u), fft(v), dealias);
    return ifft_real(*u.grid, s, u.grid);
}

Field multiply_by_x(const Field& f) {
    Field out(f.grid);
    for (int j = 0; j < f.n(); ++j) out.v[j] = f.grid->x(j) * f.v[j];
    return out;
}

void save_field_csv(const Field& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_field_csv: cannot open " + path);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", f.grid->period());
    os << "# ilw-field L=" << buf << " n=" << f.n() << "\n";
    for (int j = 0; j < f.n(); ++j) {
        char line[96];
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", f.grid->x(j), f.v[j]);
        os << line;
    }
}

Field load_field_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_field_csv: cannot open " + path);
    std::string header;
    std::getline(is, header);
    double L = 0.0;
    int n = 0;
    if (std::sscanf(header.c_str(), "# ilw-field L=%lf n=%d", &L, &n) != 2)
        throw std::runtime_error("load_field_csv: bad header in " + path);
    Field f(make_grid(L, n));
    for (int j = 0; j < n; ++j) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("load_field_csv: truncated file " + path);
        double x, val;
        if (std::sscanf(line.c_str(), "%lf,%lf", &x, &val) != 2)
            throw std::runtime_error("load_field_csv: bad row in " + path);
        f.v[j] = val;
    }
    return f;
}

void save_field_binary(const Field& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field_binary: cannot open " + path);
    const char magic[8] = {'i', 'l', 'w', 'f', 'l', 'd', '0', '1'};
    os.write(magic, 8);
    const double L = f.grid->period();
    const std::int64_t n = f.n();
    os.write(reinterpret_cast<const char*>(&L), 8);
    os.write(reinterpret_cast<const char*>(&n), 8);
    os.write(reinterpret_cast<const char*>(f.v.data()), 8 * f.n());
}

Field load_field_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field_binary: cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (std::memcmp(magic, "ilwfld01", 8) != 0) throw std::runtime_error("load_field_binary: bad magic in " + path);
    double L;
    std::int64_t n;
    is.read(reinterpret_cast<char*>(&L), 8);
    is.read(reinterpret_cast<char*>(&n), 8);
    Field f(make_grid(L, static_cast<int>(n)));
    is.read(reinterpret_cast<char*>(f.v.data()), 8 * n);
    if (!is) throw std::runtime_error("load_field_binary: truncated file " + path);
    return f;
}

Field random_band_limited(GridPtr g, unsigned seed, int max_mode) {
    const int n = g->n();
    if (max_mode <= 0) max_mode = n / 3;
    max_mode = std::min(max_mode, n / 2 - 1);
    std::mt19937 rng(seed);
    std::normal_distribution<double> N(0.0, 1.0);
    Spectrum s(n, cdouble{});
    for (int m = 1; m <= max_mode; ++m) {
        const cdouble c{N(rng), N(rng)};
        s[g->index(m)] = c;
        s[g->index(-m)] = std::conj(c);
    }
    Field f = ifft_real(*g, s, g);
    const double nn = norm_l2(f);
    for (auto& x : f.v) x /= nn;
    return f;
}

}  // namespace ilw
