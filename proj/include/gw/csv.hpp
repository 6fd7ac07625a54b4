#ifndef GW_CSV_HPP
#define GW_CSV_HPP

#include <string>
#include <vector>

#include "gw/benchmark.hpp"
#include "gw/sweep.hpp"

namespace gw {

// Column layouts (documented in the README):
//   sweep: axis_value,method,e_total_abs,e_rho_re,e_rho_im,e_rho_abs,
//          e_x_re,e_x_im,e_x_abs,phase_x,validity_flags,evals,wall_time_s
//   bench: frequency_hz,rel_tol,method,median_ms,evals,status
// Numeric fields are printed with 17 significant digits (exact double
// round-trip), locale-independent. Path "-" writes to stdout.
std::string sweep_csv_header();
std::string bench_csv_header();

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<BenchmarkRow>& rows);

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
void emit_csv(const std::vector<BenchmarkRow>& rows, const std::string& path);

} // namespace gw

#endif
