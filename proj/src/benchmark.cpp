#include "gw/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "gw/fields_exact.hpp"

namespace gw {

std::string quadrature_method_name(QuadratureMethod m) {
    return m == QuadratureMethod::AdaptiveSimpson ? "adaptive_simpson" : "trapezoidal";
}

void BenchmarkSpec::validate() const {
    if (frequencies.empty() || tolerances.empty() || methods.empty())
        throw std::invalid_argument("BenchmarkSpec: frequencies, tolerances and methods must be non-empty");
    if (repetitions < 1) throw std::invalid_argument("BenchmarkSpec: repetitions must be >= 1");
    if (!(rho > 0.0)) throw std::invalid_argument("BenchmarkSpec: rho must be > 0");
    for (double t : tolerances) {
        QuadratureSpec q;
        q.rel_tol = t;
        q.max_evals = max_evals;
        q.initial_panels = initial_panels;
        q.validate();
    }
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec, const Scenario& base) {
    spec.validate();
    std::vector<BenchmarkRow> rows;
    rows.reserve(spec.frequencies.size() * spec.tolerances.size() * spec.methods.size());

    for (double f : spec.frequencies) {
        const Scenario sc = base.with_frequency(f).with_rho(spec.rho);
        for (double tol : spec.tolerances) {
            for (QuadratureMethod m : spec.methods) {
                QuadratureSpec q;
                q.method = m;
                q.rel_tol = tol;
                q.max_evals = spec.max_evals;
                q.initial_panels = spec.initial_panels;

                BenchmarkRow row;
                row.frequency = f;
                row.tolerance = tol;
                row.method = m;
                try {
                    (void)scattered_numeric(sc, q); // warm-up, discarded
                    std::vector<double> times(spec.repetitions);
                    for (int r = 0; r < spec.repetitions; ++r) {
                        const auto t0 = std::chrono::steady_clock::now();
                        const auto sol = scattered_numeric(sc, q);
                        times[r] = std::chrono::duration<double, std::milli>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count();
                        row.evals = sol.evals;
                    }
                    std::sort(times.begin(), times.end());
                    row.median_ms = times[times.size() / 2];
                } catch (const QuadratureError& e) {
                    row.ok = false;
                    row.error = e.what();
                    row.evals = e.partial().evals;
                } catch (const std::exception& e) {
                    row.ok = false;
                    row.error = e.what();
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

} // namespace gw
