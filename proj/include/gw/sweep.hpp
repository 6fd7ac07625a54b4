#ifndef GW_SWEEP_HPP
#define GW_SWEEP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gw/asymptotics.hpp"
#include "gw/em_core.hpp"
#include "gw/fields_exact.hpp"
#include "gw/quadrature.hpp"

namespace gw {

enum class SweepAxis { Frequency, Distance };
enum class SweepScale { Linear, Log };

// Solver paths selectable in a sweep. Each row reports the field that path
// computes: the three total-field paths (ni, spm, etalon) add the closed-form
// direct field to their scattered field; los paths report the direct field
// alone; etalon_surf and naive_ni report scattered-field values; space_wave
// and surface_wave report those decomposition pieces.
enum class Method {
    NI,
    LosClosed,
    LosNI,
    SPM,
    Etalon,
    EtalonSurf,
    SpaceWave,
    SurfaceWave,
    NaiveNI,
};

std::string method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct SweepSpec {
    SweepAxis axis = SweepAxis::Frequency;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
    SweepScale scale = SweepScale::Log;
    std::vector<Method> methods;
    QuadratureSpec quadrature{};
    std::optional<double> naive_exclusion{}; // fraction of k01; required with NaiveNI
    PseudoSurfaceOptions pseudo{};

    void validate() const;
};

struct SweepRow {
    double axis_value = 0.0;
    Method method = Method::NI;
    bool ok = true;
    Complex e_rho{};
    Complex e_x{};
    std::string validity;
    std::int64_t evals = 0;
    double wall_time = 0.0;
};

std::vector<double> sweep_grid(const SweepSpec& spec);

// One row per (axis point x method), in that order. Solver errors are
// recorded in-row and never abort the sweep. Points are evaluated in
// parallel; the output is deterministic apart from wall_time.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Scenario& base);

} // namespace gw

#endif
