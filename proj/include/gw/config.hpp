#ifndef GW_CONFIG_HPP
#define GW_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gw/benchmark.hpp"
#include "gw/em_core.hpp"
#include "gw/sweep.hpp"

namespace gw {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key = value configuration mirroring the usual scenario parameter
// table (heights, source, ground, frequency range) plus sweep/benchmark
// controls. '#' starts a comment; unknown keys are rejected. All values SI:
// Hz, m, A, S/m, H/m.
struct Config {
    // scenario parameters
    double f_min = 1e6;
    double f_max = 1e9;
    double x0 = 60.0;
    double x = 15.0;
    double current = 1.0;
    double two_h = 0.1;
    double sigma = 4.8;
    double eps_r = 80.0;
    double mu = constants::mu0;

    // sweep controls
    std::string axis = "freq"; // freq | dist
    int points = 40;
    std::string scale = "log"; // linear | log
    std::vector<std::string> methods = {"ni", "spm", "etalon"};
    double rel_tol = 1e-6;
    std::string quadrature = "simpson"; // simpson | trapezoid
    std::int64_t max_evals = 10'000'000;
    int initial_panels = 64;
    double fixed_d = 1000.0; // horizontal distance for frequency sweeps
    double fixed_f = 3e7;    // frequency for distance sweeps
    double d_min = 100.0;
    double d_max = 10000.0;
    std::optional<double> naive_exclusion{};
    double pseudo_nd_limit = 1.0;
    double pseudo_grazing_limit_deg = 5.0;

    // benchmark controls
    std::vector<double> bench_frequencies = {1e6, 3e6, 1e7, 3e7, 8e7, 1e8, 3e8, 1e9};
    std::vector<double> bench_tolerances = {1e-3, 1e-6, 1e-9};
    int bench_repetitions = 5;
    double bench_rho = 1000.0;
    std::int64_t bench_max_evals = 2'000'000'000;
};

Config load_config(const std::string& path);
Config parse_config(const std::string& text, const std::string& origin = "<string>");

Scenario scenario_from_config(const Config& c);
SweepSpec sweep_from_config(const Config& c);
BenchmarkSpec benchmark_from_config(const Config& c);

} // namespace gw

#endif
