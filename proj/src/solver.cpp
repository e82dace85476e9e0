#include "ilw/solver.hpp"

#include "ilw/lp.hpp"
#include "ilw/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ilw {

Model model_from_string(const std::string& s) {
    if (s == "ILW" || s == "ilw") return Model::Ilw;
    if (s == "ILW-with-transport" || s == "ilw-with-transport") return Model::IlwTransport;
    if (s == "BO" || s == "bo") return Model::Bo;
    if (s == "KdV" || s == "kdv" || s == "KDV") return Model::Kdv;
    throw std::invalid_argument("unknown model: " + s);
}

std::string to_string(Model m) {
    switch (m) {
        case Model::Ilw: return "ILW";
        case Model::IlwTransport: return "ILW-with-transport";
        case Model::Bo: return "BO";
        case Model::Kdv: return "KdV";
    }
    return "?";
}

double model_phase(Model m, double xi, double delta) {
    switch (m) {
        case Model::Ilw: return dispersion_a(xi, delta);
        case Model::IlwTransport: return dispersion_A(xi, delta);
        case Model::Bo: return xi * std::fabs(xi);
        case Model::Kdv: return delta * xi * xi * xi / 3.0;
    }
    return 0.0;
}

double model_phase_derivative(Model m, double xi, double delta) {
    switch (m) {
        case Model::Ilw: return group_velocity(xi, delta);
        case Model::IlwTransport: return group_velocity_excess(xi, delta);
        case Model::Bo: return 2.0 * std::fabs(xi);
        case Model::Kdv: return delta * xi * xi;
    }
    return 0.0;
}

Field make_initial_data(const GridPtr& g, const InitialData& d) {
    Field f(g);
    switch (d.kind) {
        case InitialData::Kind::Gaussian:
            for (int j = 0; j < g->n(); ++j) {
                const double y = (g->x(j) - d.center) / d.width;
                f.v[j] = d.amplitude * std::exp(-y * y);
            }
            break;
        case InitialData::Kind::Sech2:
            for (int j = 0; j < g->n(); ++j) {
                const double y = (g->x(j) - d.center) / d.width;
                const double s = 1.0 / std::cosh(y);
                f.v[j] = d.amplitude * s * s;
            }
            break;
        case InitialData::Kind::File: {
            Field loaded = load_field_binary(d.path);
            if (loaded.n() != g->n() || std::fabs(loaded.grid->period() - g->period()) > 1e-12)
                throw std::invalid_argument("make_initial_data: file grid does not match config grid");
            f.v = loaded.v;
            break;
        }
    }
    const double m = f.mean();
    for (auto& x : f.v) x -= m;
    return f;
}

void SimConfig::validate() const {
    if (!grid) throw std::invalid_argument("SimConfig: missing grid");
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("SimConfig: t_end must be positive");
    if (!(delta >= 1.0)) throw std::invalid_argument("SimConfig: delta must be >= 1");
    double amax = 0.0;
    for (int j = 0; j < grid->n(); ++j) {
        const int m = grid->mode(j);
        if (m == -grid->n() / 2) continue;
        amax = std::max(amax, std::fabs(model_phase(model, grid->xi(j), delta)));
    }
    if (dt * amax > stability_bound)
        throw std::invalid_argument("SimConfig: dt * max|phase| exceeds the integrator stability bound");
}

namespace {

// phi_k(z) by the analytic mean over a unit circle around z; exact for these
// entire functions and free of the small-z cancellation.
cdouble phi_contour(int k, cdouble z, int npts = 64) {
    cdouble acc{};
    for (int m = 0; m < npts; ++m) {
        const double th = 2.0 * M_PI * (m + 0.5) / npts;
        const cdouble s = z + std::polar(1.0, th);
        cdouble v;
        const cdouble es = std::exp(s);
        switch (k) {
            case 1: v = (es - 1.0) / s; break;
            case 2: v = (es - 1.0 - s) / (s * s); break;
            default: v = (es - 1.0 - s - 0.5 * s * s) / (s * s * s); break;
        }
        acc += v;
    }
    return acc / static_cast<double>(npts);
}

}  // namespace

Etdrk4::Etdrk4(GridPtr grid, double dt, Model model, double delta, bool dealias, double blowup_factor)
    : grid_(std::move(grid)), dt_(dt), model_(model), delta_(delta), dealias_(dealias), blowup_factor_(blowup_factor) {
    const int n = grid_->n();
    e_full_.resize(n);
    e_half_.resize(n);
    phi1_half_.resize(n);
    phi2_half_.resize(n);
    phi1_full_.resize(n);
    phi2_full_.resize(n);
    phi3_full_.resize(n);
    for (int j = 0; j < n; ++j) {
        const int m = grid_->mode(j);
        if (m == -n / 2) {
            e_full_[j] = e_half_[j] = 0.0;
            continue;
        }
        const cdouble z{0.0, dt_ * model_phase(model_, grid_->xi(j), delta_)};
        e_full_[j] = std::exp(z);
        e_half_[j] = std::exp(0.5 * z);
        phi1_half_[j] = phi_contour(1, 0.5 * z);
        phi2_half_[j] = phi_contour(2, 0.5 * z);
        phi1_full_[j] = phi_contour(1, z);
        phi2_full_[j] = phi_contour(2, z);
        phi3_full_[j] = phi_contour(3, z);
    }
}

Spectrum Etdrk4::nonlinearity(const Spectrum& s) const {
    // N(u) = (1/2) d_x (u^2)
    const GridSpec& g = *grid_;
    Spectrum sq;
    if (dealias_) {
        sq = product_dealiased(g, s, s);
    } else {
        // unpadded square: inverse transform, square, forward
        CField u = ifft(g, s, grid_);
        for (auto& c : u.v) c *= c;
        Spectrum t = u.v;
        g.fft_forward(t.data());
        const double inv = 1.0 / g.n();
        sq.assign(g.n(), cdouble{});
        // undo the centered-coordinate twiddle consistently with fft()
        for (int j = 0; j < g.n(); ++j) sq[j] = ((j & 1) ? -t[j] : t[j]) * inv;
    }
    Spectrum out(g.n(), cdouble{});
    for (int j = 0; j < g.n(); ++j) {
        const int m = g.mode(j);
        if (m == -g.n() / 2) continue;
        out[j] = cdouble{0.0, 0.5 * g.xi(j)} * sq[j];
    }
    return out;
}

void Etdrk4::step(Spectrum& state, double t_now) const {
    const int n = grid_->n();
    const double h = dt_;
    const Spectrum n1 = nonlinearity(state);
    Spectrum u2(n), u3(n), u4(n);
    for (int j = 0; j < n; ++j) u2[j] = e_half_[j] * state[j] + 0.5 * h * phi1_half_[j] * n1[j];
    const Spectrum n2 = nonlinearity(u2);
    for (int j = 0; j < n; ++j) u3[j] = u2[j] + h * phi2_half_[j] * (n2[j] - n1[j]);
    const Spectrum n3 = nonlinearity(u3);
    for (int j = 0; j < n; ++j)
        u4[j] = e_full_[j] * state[j] + h * (phi1_full_[j] * n1[j] + 2.0 * phi2_full_[j] * (n3[j] - n1[j]));
    const Spectrum n4 = nonlinearity(u4);
    double sup_before = 0.0;
    {
        const CField phys = ifft(*grid_, state, grid_);
        for (const auto& c : phys.v) sup_before = std::max(sup_before, std::abs(c));
    }
    for (int j = 0; j < n; ++j) {
        const cdouble b1 = phi1_full_[j] - 3.0 * phi2_full_[j] + 4.0 * phi3_full_[j];
        const cdouble b2 = 2.0 * phi2_full_[j] - 4.0 * phi3_full_[j];
        const cdouble b4 = -phi2_full_[j] + 4.0 * phi3_full_[j];
        state[j] = e_full_[j] * state[j] + h * (b1 * n1[j] + b2 * (n2[j] + n3[j]) + b4 * n4[j]);
    }
    double sup_after = 0.0;
    {
        const CField phys = ifft(*grid_, state, grid_);
        for (const auto& c : phys.v) sup_after = std::max(sup_after, std::abs(c));
    }
    if (!std::isfinite(sup_after) || sup_after > blowup_factor_ * std::max(sup_before, 1e-300)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "Etdrk4: instability detected at t = %.6g (sup %.3e -> %.3e)", t_now,
                      sup_before, sup_after);
        throw std::runtime_error(msg);
    }
}

Field step_etdrk4(const Field& state, double dt, Model model, double delta, bool dealias) {
    Etdrk4 stepper(state.grid, dt, model, delta, dealias);
    Spectrum s = fft(state);
    stepper.step(s, 0.0);
    return ifft_real(*state.grid, s, state.grid);
}

namespace {

StepDiagnostics make_diagnostics(double t, const Field& f, double delta) {
    StepDiagnostics d;
    d.t = t;
    d.e0 = energy(f, 0, delta);
    d.e1 = energy(f, 1, delta);
    d.e2 = energy(f, 2, delta);
    d.linf = norm_linf(f);
    d.besov = norm_besov(f);
    d.tilbert_half = norm_tilbert_half(f, delta);
    return d;
}

}  // namespace

SimTrace evolve(const SimConfig& cfg) {
    cfg.validate();
    SimTrace trace;
    trace.config = cfg;

    std::vector<double> wanted = cfg.snapshot_times;
    if (wanted.empty()) {
        const double cad = cfg.cadence > 0.0 ? cfg.cadence : cfg.t_end;
        for (double t = 0.0; t <= cfg.t_end + 1e-12; t += cad) wanted.push_back(t);
    }
    std::sort(wanted.begin(), wanted.end());

    Field u0 = make_initial_data(cfg.grid, cfg.initial);
    if (std::fabs(u0.mean()) > 1e-12 * (1.0 + norm_linf(u0)))
        throw std::invalid_argument("evolve: initial data must be mean-zero");

    const Etdrk4 stepper(cfg.grid, cfg.dt, cfg.model, cfg.delta, cfg.dealias, cfg.blowup_factor);
    Spectrum state = fft(u0);
    const long nsteps = std::lround(cfg.t_end / cfg.dt);
    size_t next = 0;
    auto emit = [&](double t, const Spectrum& s) {
        while (next < wanted.size() && wanted[next] <= t + 0.5 * cfg.dt) {
            Field f = ifft_real(*cfg.grid, s, cfg.grid);
            trace.times.push_back(t);
            trace.diagnostics.push_back(make_diagnostics(t, f, cfg.delta));
            trace.snapshots.push_back(std::move(f));
            ++next;
        }
    };
    emit(0.0, state);
    for (long k = 0; k < nsteps; ++k) {
        stepper.step(state, k * cfg.dt);  // throws with the failure time on blow-up
        emit((k + 1) * cfg.dt, state);
    }
    return trace;
}

void SimTrace::save_diagnostics_csv(const std::string& path, const std::string& config_hash) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_diagnostics_csv: cannot open " + path);
    os << "# config_hash=" << config_hash << "\n";
    os << "t,E0,E1,E2,Linf,besov,tilbert_half\n";
    for (const auto& d : diagnostics) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", d.t, d.e0, d.e1, d.e2, d.linf,
                      d.besov, d.tilbert_half);
        os << buf;
    }
}

double energy(const Field& f, int order, double delta) {
    const GridSpec& g = *f.grid;
    if (order == 0) return 0.5 * inner(f, f);
    if (std::fabs(f.mean()) > 1e-10 * (1.0 + norm_linf(f)))
        throw std::invalid_argument("energy: orders >= 1 need mean-zero input");
    const Field q = tilbert_inv_dx(f, delta);  // T^{-1} f_x
    if (order == 1) {
        double cubic = 0.0;
        for (int j = 0; j < g.n(); ++j) cubic += f.v[j] * f.v[j] * f.v[j];
        return inner(f, q) - cubic * g.dx() / 3.0;
    }
    if (order != 2) throw std::invalid_argument("energy: order must be 0, 1 or 2");
    const Field fx = derivative(f);
    double acc = 0.0;
    for (int j = 0; j < g.n(); ++j) {
        const double u = f.v[j];
        acc += 0.5 * fx.v[j] * fx.v[j] - 1.5 * u * u * q.v[j] + 0.25 * u * u * u * u + 1.5 * q.v[j] * q.v[j];
    }
    return acc * g.dx();
}

Field rescale_delta(const Field& f, double delta_factor) {
    if (!(delta_factor > 0.0)) throw std::invalid_argument("rescale_delta: factor must be positive");
    if (delta_factor == 1.0) return f;
    auto g2 = make_grid(f.grid->period() / delta_factor, f.grid->n());
    Field out(g2);
    for (int j = 0; j < f.n(); ++j) out.v[j] = delta_factor * f.v[j];
    return out;
}

}  // namespace ilw
