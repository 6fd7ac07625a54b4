#ifndef GW_BENCHMARK_HPP
#define GW_BENCHMARK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gw/em_core.hpp"
#include "gw/quadrature.hpp"

namespace gw {

// Quadrature timing matrix over (frequency x tolerance x method) for the
// scattered-field integrals at a fixed horizontal distance. Wall times are
// hardware-bound; eval counts are the portable cost measure.
struct BenchmarkSpec {
    std::vector<double> frequencies = {1e6, 3e6, 1e7, 3e7, 8e7, 1e8, 3e8, 1e9};
    std::vector<double> tolerances = {1e-3, 1e-6, 1e-9};
    std::vector<QuadratureMethod> methods = {QuadratureMethod::AdaptiveSimpson,
                                             QuadratureMethod::Trapezoidal};
    int repetitions = 5;
    double rho = 1000.0;
    // The slow-method cells at tight tolerance legitimately need far more
    // than the everyday default budget.
    std::int64_t max_evals = 2'000'000'000;
    int initial_panels = 64;

    void validate() const;
};

struct BenchmarkRow {
    double frequency = 0.0;
    double tolerance = 0.0;
    QuadratureMethod method = QuadratureMethod::AdaptiveSimpson;
    bool ok = true;
    double median_ms = 0.0;
    std::int64_t evals = 0;
    std::string error;
};

std::string quadrature_method_name(QuadratureMethod m);

// Runs every cell sequentially (single-threaded, for stable timing), with
// one discarded warm-up evaluation per cell and the median wall time over
// the repetitions. Non-convergence is recorded per cell.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const Scenario& base);

} // namespace gw

#endif
