#include "gw/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gw {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || v.empty())
        throw ConfigError("config: key '" + key + "' expects a number, got '" + v + "'");
    return x;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || v.empty())
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + v + "'");
    return x;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(parse_double(key, item));
    if (out.empty()) throw ConfigError("config: key '" + key + "' expects a non-empty list");
    return out;
}

} // namespace

Config parse_config(const std::string& text, const std::string& origin) {
    Config c;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "f_min") c.f_min = parse_double(key, val);
        else if (key == "f_max") c.f_max = parse_double(key, val);
        else if (key == "X0") c.x0 = parse_double(key, val);
        else if (key == "X") c.x = parse_double(key, val);
        else if (key == "I") c.current = parse_double(key, val);
        else if (key == "two_h") c.two_h = parse_double(key, val);
        else if (key == "sigma") c.sigma = parse_double(key, val);
        else if (key == "eps_r") c.eps_r = parse_double(key, val);
        else if (key == "mu") c.mu = parse_double(key, val);
        else if (key == "axis") c.axis = val;
        else if (key == "points") c.points = static_cast<int>(parse_int(key, val));
        else if (key == "scale") c.scale = val;
        else if (key == "methods") c.methods = split_list(val);
        else if (key == "rel_tol") c.rel_tol = parse_double(key, val);
        else if (key == "quadrature") c.quadrature = val;
        else if (key == "max_evals") c.max_evals = parse_int(key, val);
        else if (key == "initial_panels") c.initial_panels = static_cast<int>(parse_int(key, val));
        else if (key == "d") c.fixed_d = parse_double(key, val);
        else if (key == "f") c.fixed_f = parse_double(key, val);
        else if (key == "d_min") c.d_min = parse_double(key, val);
        else if (key == "d_max") c.d_max = parse_double(key, val);
        else if (key == "naive_exclusion") c.naive_exclusion = parse_double(key, val);
        else if (key == "pseudo_nd_limit") c.pseudo_nd_limit = parse_double(key, val);
        else if (key == "pseudo_grazing_limit_deg")
            c.pseudo_grazing_limit_deg = parse_double(key, val);
        else if (key == "bench_frequencies") c.bench_frequencies = parse_double_list(key, val);
        else if (key == "bench_tolerances") c.bench_tolerances = parse_double_list(key, val);
        else if (key == "bench_repetitions")
            c.bench_repetitions = static_cast<int>(parse_int(key, val));
        else if (key == "bench_rho") c.bench_rho = parse_double(key, val);
        else if (key == "bench_max_evals") c.bench_max_evals = parse_int(key, val);
        else
            throw ConfigError("config: " + origin + ":" + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
    }
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), path);
}

Scenario scenario_from_config(const Config& c) {
    try {
        const Source src(c.current, c.two_h);
        const Geometry geom(c.x0, c.x, c.axis == "dist" ? c.d_min : c.fixed_d);
        const Medium ground(c.eps_r, c.sigma, c.mu);
        const double f = (c.axis == "dist") ? c.fixed_f : c.f_min;
        return Scenario(src, geom, ground, f);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: invalid scenario parameters: ") + e.what());
    }
}

SweepSpec sweep_from_config(const Config& c) {
    SweepSpec s;
    if (c.axis == "freq") {
        s.axis = SweepAxis::Frequency;
        s.start = c.f_min;
        s.stop = c.f_max;
    } else if (c.axis == "dist") {
        s.axis = SweepAxis::Distance;
        s.start = c.d_min;
        s.stop = c.d_max;
    } else {
        throw ConfigError("config: axis must be 'freq' or 'dist', got '" + c.axis + "'");
    }
    s.points = c.points;
    if (c.scale == "linear") s.scale = SweepScale::Linear;
    else if (c.scale == "log") s.scale = SweepScale::Log;
    else throw ConfigError("config: scale must be 'linear' or 'log', got '" + c.scale + "'");

    for (const auto& name : c.methods) {
        const auto m = method_from_name(name);
        if (!m) throw ConfigError("config: unknown method '" + name + "'");
        s.methods.push_back(*m);
    }
    if (c.quadrature == "simpson") s.quadrature.method = QuadratureMethod::AdaptiveSimpson;
    else if (c.quadrature == "trapezoid") s.quadrature.method = QuadratureMethod::Trapezoidal;
    else throw ConfigError("config: quadrature must be 'simpson' or 'trapezoid'");
    s.quadrature.rel_tol = c.rel_tol;
    s.quadrature.max_evals = c.max_evals;
    s.quadrature.initial_panels = c.initial_panels;
    s.naive_exclusion = c.naive_exclusion;
    s.pseudo.nd_limit = c.pseudo_nd_limit;
    s.pseudo.grazing_limit_deg = c.pseudo_grazing_limit_deg;
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return s;
}

BenchmarkSpec benchmark_from_config(const Config& c) {
    BenchmarkSpec b;
    b.frequencies = c.bench_frequencies;
    b.tolerances = c.bench_tolerances;
    b.repetitions = c.bench_repetitions;
    b.rho = c.bench_rho;
    b.max_evals = c.bench_max_evals;
    b.initial_panels = c.initial_panels;
    try {
        b.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return b;
}

} // namespace gw
