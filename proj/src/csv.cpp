#include "gw/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace gw {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(std::int64_t v) { return std::to_string(v); }

std::string quoted_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_to(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        if (!std::cout) throw std::runtime_error("csv: failed writing to stdout");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("csv: write failed for '" + path + "'");
}

} // namespace

std::string sweep_csv_header() {
    return "axis_value,method,e_total_abs,e_rho_re,e_rho_im,e_rho_abs,"
           "e_x_re,e_x_im,e_x_abs,phase_x,validity_flags,evals,wall_time_s";
}

std::string bench_csv_header() {
    return "frequency_hz,rel_tol,method,median_ms,evals,status";
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = sweep_csv_header();
    out += "\r\n";
    for (const auto& r : rows) {
        const double total =
            std::sqrt(std::norm(r.e_rho) + std::norm(r.e_x));
        out += num(r.axis_value);
        out += ',';
        out += method_name(r.method);
        out += ',';
        out += num(total);
        out += ',';
        out += num(r.e_rho.real());
        out += ',';
        out += num(r.e_rho.imag());
        out += ',';
        out += num(std::abs(r.e_rho));
        out += ',';
        out += num(r.e_x.real());
        out += ',';
        out += num(r.e_x.imag());
        out += ',';
        out += num(std::abs(r.e_x));
        out += ',';
        out += num(std::arg(r.e_x));
        out += ',';
        out += quoted_if_needed(r.validity);
        out += ',';
        out += num(r.evals);
        out += ',';
        out += num(r.wall_time);
        out += "\r\n";
    }
    return out;
}

std::string to_csv(const std::vector<BenchmarkRow>& rows) {
    std::string out = bench_csv_header();
    out += "\r\n";
    for (const auto& r : rows) {
        out += num(r.frequency);
        out += ',';
        out += num(r.tolerance);
        out += ',';
        out += quadrature_method_name(r.method);
        out += ',';
        out += num(r.median_ms);
        out += ',';
        out += num(r.evals);
        out += ',';
        out += quoted_if_needed(r.ok ? std::string("ok") : "error:" + r.error);
        out += "\r\n";
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: empty table");
    write_to(to_csv(rows), path);
}

void emit_csv(const std::vector<BenchmarkRow>& rows, const std::string& path) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: empty table");
    write_to(to_csv(rows), path);
}

} // namespace gw
