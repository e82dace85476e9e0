// Periodic spectral discretization: grid, real/complex fields, transforms,
// Fourier-multiplier application, dealiased products and bilinear forms with
// general two-frequency symbols.
//
// Conventions. The domain is x in [-L/2, L/2) sampled at n equispaced nodes,
// x_j = -L/2 + j L/n. Spectra hold Fourier-series coefficients c_m relative
// to the centered coordinate, f(x_j) = sum_m c_m e^{i xi_m x_j} with
// xi_m = 2 pi m / L, stored in FFTW order (index j <-> mode m = j < n/2 ?
// j : j - n). Operators act on the symmetric lattice |m| < n/2; the unpaired
// mode m = -n/2 is annihilated by every multiplier and product.
#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ilw {

using cdouble = std::complex<double>;
using Spectrum = std::vector<cdouble>;

class GridSpec {
public:
    // period L > 0, n a power of two >= 16
    GridSpec(double period, int n_points);
    ~GridSpec();
    GridSpec(const GridSpec&) = delete;
    GridSpec& operator=(const GridSpec&) = delete;

    double period() const { return L_; }
    int n() const { return n_; }
    double dx() const { return L_ / n_; }
    double dxi() const { return two_pi_ / L_; }
    double x(int j) const { return -0.5 * L_ + j * dx(); }
    // mode number of storage index j
    int mode(int j) const { return j < n_ / 2 ? j : j - n_; }
    // storage index of mode m in [-n/2, n/2)
    int index(int m) const { return m >= 0 ? m : m + n_; }
    double xi(int j) const { return dxi() * mode(j); }
    double xi_max() const { return dxi() * (n_ / 2 - 1); }

    // unnormalized c2c transforms on caller buffers (thread-safe)
    void fft_forward(cdouble* data) const;
    void fft_backward(cdouble* data) const;

private:
    double L_;
    int n_;
    static constexpr double two_pi_ = 6.283185307179586476925286766559;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

using GridPtr = std::shared_ptr<const GridSpec>;

GridPtr make_grid(double period, int n_points);

// Real-valued function sampled on the grid.
struct Field {
    GridPtr grid;
    std::vector<double> v;

    Field() = default;
    explicit Field(GridPtr g) : grid(std::move(g)), v(grid->n(), 0.0) {}
    Field(GridPtr g, std::vector<double> vals);
    int n() const { return grid->n(); }
    double mean() const;
};

// Complex-valued function sampled on the grid.
struct CField {
    GridPtr grid;
    std::vector<cdouble> v;

    CField() = default;
    explicit CField(GridPtr g) : grid(std::move(g)), v(grid->n(), cdouble{}) {}
    int n() const { return grid->n(); }
};

// Transforms. Spectra are coefficient vectors in FFTW mode order.
Spectrum fft(const Field& f);
Spectrum fft(const CField& f);
Field ifft_real(const GridSpec& g, const Spectrum& s, GridPtr gp);
CField ifft(const GridSpec& g, const Spectrum& s, GridPtr gp);
inline Field ifft_real(const GridPtr& g, const Spectrum& s) { return ifft_real(*g, s, g); }
inline CField ifft(const GridPtr& g, const Spectrum& s) { return ifft(*g, s, g); }

// L^2(dx) norms and inner product over one period (spectral quadrature).
double norm_l2(const Field& f);
double norm_l2(const CField& f);
double norm_linf(const Field& f);
double inner(const Field& f, const Field& g);
double norm_l2_spec(const GridSpec& g, const Spectrum& s);

// Multiplier application. m is evaluated on the nonzero symmetric lattice;
// the caller supplies the mean-mode value (0 for every operator that comes
// paired with a derivative). Non-finite symbol values on the lattice are
// rejected. The _real variant requires Hermitian symmetry m(-xi) = conj(m(xi))
// and returns a real field.
using MultiplierFn = std::function<cdouble(double xi)>;
Spectrum apply_multiplier(const GridSpec& g, const Spectrum& s, const MultiplierFn& m, cdouble at_zero = 0.0);
Field apply_multiplier(const Field& f, const MultiplierFn& m, cdouble at_zero = 0.0);
CField apply_multiplier(const CField& f, const MultiplierFn& m, cdouble at_zero = 0.0);

// Common operators on real fields.
Field derivative(const Field& f, int order = 1);
Field hilbert(const Field& f);                          // symbol i sgn(xi)
Field tilbert(const Field& f, double delta);            // symbol -i tanh(delta xi)
Field tilbert_inv_dx(const Field& f, double delta);     // symbol -xi coth(delta xi), mean -> -1/delta
Field antiderivative(const Field& f);                   // symbol 1/(i xi), mean-zero input required

// Pointwise product with 3/2-rule dealiasing, spectral in/out.
Spectrum product_dealiased(const GridSpec& g, const Spectrum& a, const Spectrum& b);

// Bilinear form with a general two-frequency symbol, applied by exact
// spectral convolution over the doubled lattice (equivalent to zero padding).
// With dealias = false the convolution wraps cyclically and inputs occupying
// the top third of the spectrum are rejected.
using BilinearSymbol = std::function<cdouble(double xi, double eta)>;
Spectrum bilinear_apply(const GridSpec& g, const BilinearSymbol& b, const Spectrum& u, const Spectrum& v,
                        bool dealias = true);
Field bilinear_apply(const BilinearSymbol& b, const Field& u, const Field& v, bool dealias = true);

// x * f on the centered coordinate (not a Fourier multiplier; the sawtooth
// jump sits at the domain edge, so callers keep data localized).
Field multiply_by_x(const Field& f);

// Serialization: CSV rows (x, value) after a one-line header carrying L and
// n_points, and a little-endian binary twin.
void save_field_csv(const Field& f, const std::string& path);
Field load_field_csv(const std::string& path);
void save_field_binary(const Field& f, const std::string& path);
Field load_field_binary(const std::string& path);

// Deterministic band-limited test data: random modes 1 <= |m| <= n/3,
// mean-zero, unit L^2 norm.
Field random_band_limited(GridPtr g, unsigned seed, int max_mode = 0);

}  // namespace ilw
