#include "gw/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

namespace gw {

namespace {

const char* kMethodNames[] = {"ni",          "los_closed", "los_ni",
                              "spm",         "etalon",     "etalon_surf",
                              "space_wave",  "surface_wave", "naive_ni"};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == ';' || c == '\n' || c == '"') c = ' ';
    return s;
}

// Regime metadata common to every method, plus per-method condition
// parameters. Pure function of (scenario, method).
std::string validity_flags(const Scenario& sc, Method m) {
    std::string v = "hertzian_ok=";
    v += sc.hertzian_ok() ? "1" : "0";
    if (sc.ground().sigma() > 0.0) {
        const double d = delta(sc);
        v += ";delta=" + fmt(d);
        v += ";delta_regime_ok=";
        v += (d < 0.1) ? "1" : "0";
        v += ";nd=" + fmt(numerical_distance(sc));
        v += ";sigma_ratio=" + fmt(sc.ground().sigma() / (sc.omega() * constants::eps0));
    }
    if (m == Method::SPM || m == Method::Etalon) {
        const auto dg = derived_geometry(sc.geometry());
        const double cond = std::sqrt(sc.k01() * dg.r2) * std::sin(0.5 * dg.phi);
        v += ";spm_cond=" + fmt(cond);
    }
    if (m == Method::EtalonSurf) {
        const auto dg = derived_geometry(sc.geometry());
        v += ";grazing_deg=" + fmt(dg.phi * 180.0 / constants::pi);
    }
    return v;
}

} // namespace

std::string method_name(Method m) { return kMethodNames[static_cast<int>(m)]; }

std::optional<Method> method_from_name(std::string_view name) {
    for (int i = 0; i < 9; ++i)
        if (name == kMethodNames[i]) return static_cast<Method>(i);
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (!(start < stop)) throw std::invalid_argument("SweepSpec: requires start < stop");
    if (points < 2) throw std::invalid_argument("SweepSpec: requires points >= 2");
    if (methods.empty()) throw std::invalid_argument("SweepSpec: at least one method required");
    if (scale == SweepScale::Log && !(start > 0.0))
        throw std::invalid_argument("SweepSpec: log scale requires start > 0");
    quadrature.validate();
    for (Method m : methods)
        if (m == Method::NaiveNI && !naive_exclusion)
            throw std::invalid_argument(
                "SweepSpec: naive_ni requires an exclusion half-width parameter");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    std::vector<double> g(spec.points);
    for (int i = 0; i < spec.points; ++i) {
        const double t = static_cast<double>(i) / (spec.points - 1);
        g[i] = (spec.scale == SweepScale::Linear)
                   ? spec.start + t * (spec.stop - spec.start)
                   : std::exp(std::log(spec.start) + t * (std::log(spec.stop) - std::log(spec.start)));
    }
    return g;
}

namespace {

SweepRow evaluate_row(const SweepSpec& spec, const Scenario& sc, double axis_value, Method m) {
    SweepRow row;
    row.axis_value = axis_value;
    row.method = m;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        row.validity = validity_flags(sc, m);
        CylindricalFieldVector f{};
        switch (m) {
            case Method::NI: {
                const auto scat = scattered_numeric(sc, spec.quadrature);
                f = los_closed_form(sc) + scat.field;
                row.evals = scat.evals;
                break;
            }
            case Method::LosClosed:
                f = los_closed_form(sc);
                break;
            case Method::LosNI: {
                const auto r = los_numeric(sc, spec.quadrature);
                f = r.field;
                row.evals = r.evals;
                break;
            }
            case Method::SPM:
                f = los_closed_form(sc) + spm_reflected(sc).field;
                break;
            case Method::Etalon:
                f = los_closed_form(sc) + etalon_scattered(sc);
                break;
            case Method::EtalonSurf:
                f = pseudo_surface_wave(sc, spec.pseudo).field;
                break;
            case Method::SpaceWave:
                f = space_wave_fresnel(sc);
                break;
            case Method::SurfaceWave: {
                const auto b = field_breakdown(sc, spec.quadrature);
                f = b.surface_wave;
                row.evals = b.evals;
                break;
            }
            case Method::NaiveNI: {
                NaiveOptions opt;
                opt.exclusion_half_width_frac = *spec.naive_exclusion;
                const auto r = scattered_naive(sc, spec.quadrature, opt);
                f = r.field;
                row.evals = r.evals;
                break;
            }
        }
        row.e_rho = f.e_rho;
        row.e_x = f.e_x;
    } catch (const std::exception& e) {
        row.ok = false;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.e_rho = row.e_x = Complex{nan, nan};
        row.validity += ";error:" + sanitize(e.what());
    }
    row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Scenario& base) {
    spec.validate();
    const std::vector<double> grid = sweep_grid(spec);
    const int nm = static_cast<int>(spec.methods.size());
    std::vector<SweepRow> rows(grid.size() * nm);

    const auto work_point = [&](int i) {
        const double v = grid[i];
        const Scenario sc = (spec.axis == SweepAxis::Frequency) ? base.with_frequency(v)
                                                                : base.with_rho(v);
        for (int j = 0; j < nm; ++j)
            rows[static_cast<std::size_t>(i) * nm + j] =
                evaluate_row(spec, sc, v, spec.methods[j]);
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min<unsigned>(hw, grid.size());
    if (n_threads <= 1) {
        for (int i = 0; i < static_cast<int>(grid.size()); ++i) work_point(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&, t] {
                for (int i = static_cast<int>(t); i < static_cast<int>(grid.size());
                     i += static_cast<int>(n_threads))
                    work_point(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

} // namespace gw
