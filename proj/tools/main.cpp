// groundwave: field sweeps and quadrature benchmarks for a vertical dipole
// above lossy ground. See README.md for the config format and CSV schema.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gw/benchmark.hpp"
#include "gw/config.hpp"
#include "gw/csv.hpp"
#include "gw/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct CommonArgs {
    std::string config_path;
    std::string out = "-";
    bool strict = false;
};

int do_sweep(const CommonArgs& common, const std::string& axis_override,
             const std::string& methods_override, double rel_tol_override,
             const std::string& quadrature_override) {
    gw::Config cfg;
    gw::SweepSpec spec;
    gw::Scenario scenario = [] {
        // placeholder; replaced below (Scenario has no default constructor)
        return gw::Scenario(gw::Source(1.0, 0.1), gw::Geometry(1.0, 1.0, 1.0),
                            gw::Medium(1.0, 0.0), 1e6);
    }();
    try {
        cfg = gw::load_config(common.config_path);
        if (!axis_override.empty()) cfg.axis = axis_override;
        if (!methods_override.empty()) {
            cfg.methods.clear();
            std::string item;
            std::stringstream ss(methods_override);
            while (std::getline(ss, item, ',')) cfg.methods.push_back(item);
        }
        if (rel_tol_override > 0.0) cfg.rel_tol = rel_tol_override;
        if (!quadrature_override.empty()) cfg.quadrature = quadrature_override;
        spec = gw::sweep_from_config(cfg);
        scenario = gw::scenario_from_config(cfg);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }

    const auto rows = gw::run_sweep(spec, scenario);
    bool any_error = false;
    for (const auto& r : rows) any_error = any_error || !r.ok;
    try {
        gw::emit_csv(rows, common.out);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitSolver;
    }
    if (any_error) {
        std::cerr << "groundwave: some sweep points recorded solver errors (see validity_flags)\n";
        if (common.strict) return kExitSolver;
    }
    return kExitOk;
}

int do_bench(const CommonArgs& common) {
    gw::BenchmarkSpec spec;
    try {
        const gw::Config cfg = gw::load_config(common.config_path);
        spec = gw::benchmark_from_config(cfg);
        const gw::Scenario scenario = gw::scenario_from_config(cfg);
        const auto rows = gw::run_benchmark(spec, scenario);
        bool any_error = false;
        for (const auto& r : rows) any_error = any_error || !r.ok;
        gw::emit_csv(rows, common.out);
        if (any_error) {
            std::cerr << "groundwave: some benchmark cells did not converge\n";
            if (common.strict) return kExitSolver;
        }
        return kExitOk;
    } catch (const gw::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitSolver;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertical dipole over lossy ground: sweeps and quadrature benchmarks"};
    app.require_subcommand(1);

    CommonArgs sweep_args;
    std::string axis_override;
    std::string methods_override;
    double rel_tol_override = -1.0;
    std::string quadrature_override;

    auto* sweep = app.add_subcommand("sweep", "Run a frequency or distance sweep, emit CSV");
    sweep->add_option("--config", sweep_args.config_path, "Configuration file")->required();
    sweep->add_option("--axis", axis_override, "Override sweep axis: freq|dist");
    sweep->add_option("--methods", methods_override,
                      "Override method list, e.g. ni,spm,etalon,etalon_surf");
    sweep->add_option("--out", sweep_args.out, "Output CSV path ('-' = stdout)");
    sweep->add_option("--rel-tol", rel_tol_override, "Override quadrature relative tolerance");
    sweep->add_option("--quadrature", quadrature_override, "Override method: simpson|trapezoid");
    sweep->add_flag("--strict", sweep_args.strict, "Exit 3 if any point records a solver error");

    CommonArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run the quadrature timing matrix, emit CSV");
    bench->add_option("--config", bench_args.config_path, "Configuration file")->required();
    bench->add_option("--out", bench_args.out, "Output CSV path ('-' = stdout)");
    bench->add_flag("--strict", bench_args.strict, "Exit 3 if any cell fails to converge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    if (sweep->parsed())
        return do_sweep(sweep_args, axis_override, methods_override, rel_tol_override,
                        quadrature_override);
    return do_bench(bench_args);
}
