#pragma once

// Command-line front end. Four subcommands: simulate (trajectory to CSV),
// quantify (score a user-supplied state), plot (CSV to SVG), verify
// (randomized monotonicity sweep). All I/O goes through the streams
// passed to run_cli so the whole surface is drivable in-process.
//
// Exit codes: 0 ok, 1 property violation, 2 I/O or parse failure,
// 3 numerical drift, 4 invalid input.

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cohlab/cli/config.hpp"
#include "cohlab/cli/csv.hpp"
#include "cohlab/cli/presets.hpp"
#include "cohlab/cli/svg.hpp"
#include "cohlab/cohlab.hpp"

namespace cohlab::cli {

// Filesystem trouble (missing input, unwritable output). Shares exit
// code 2 with ParseError.
class IoError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void print_kv(std::ostream& out, const char* key, double value) {
    out << key << '=' << format_g17(value) << '\n';
}

inline std::string join_g17(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += format_g17(values[i]);
    }
    return s;
}

// Density-matrix text file: one row per line, comma-separated complex
// literals; '#' comments and blank lines allowed.
inline DensityMatrix read_density_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open density file '" + path + "'");
    }
    std::vector<std::vector<Complex>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        std::vector<Complex> row;
        std::size_t pos = 0;
        const std::string stripped = trim(line);
        while (pos <= stripped.size()) {
            const std::size_t comma = stripped.find(',', pos);
            const std::string field = stripped.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                row.push_back(parse_complex(field));
            } catch (const ParseError& e) {
                throw ParseError("density file line " + std::to_string(lineno) + ": " +
                                 e.what());
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n < 2) {
        throw ParseError("density file '" + path + "': expected at least 2 rows");
    }
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ParseError("density file '" + path + "': row " + std::to_string(i + 1) +
                             " has " + std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return DensityMatrix(std::move(m));
}

}  // namespace detail

namespace detail {

struct SimulateArgs {
    std::string preset;
    std::string config_path;
    std::string out_path;
    int steps = 0;
    double area_max = 0.0;
    double detuning1 = 0.0;
    double detuning2 = 0.0;
    bool interacting = false;
    std::string interaction;
    std::uint64_t seed = 42;
};

inline void cmd_simulate(const SimulateArgs& a, bool preset_given, bool config_given,
                         bool steps_given, bool area_given, bool det1_given,
                         bool det2_given, bool inter_given, bool mode_given,
                         std::ostream& out) {
    PulseConfig cfg;
    Preset preset = Preset::Custom;
    if (preset_given) {
        preset = parse_preset(a.preset);
        if (preset != Preset::Custom) {
            cfg = preset_config(preset);
        }
    } else if (const char* env = std::getenv("COHERENCE_LAB_STEPS")) {
        cfg.steps = parse_int(env, "COHERENCE_LAB_STEPS");
    }
    if (config_given) {
        load_config_file(a.config_path, cfg);
    }
    if (steps_given) cfg.steps = a.steps;
    if (area_given) cfg.area_max = a.area_max;
    if (det1_given) cfg.qubit1.detuning = a.detuning1;
    if (det2_given) cfg.qubit2.detuning = a.detuning2;
    if (inter_given) cfg.interacting = a.interacting;
    if (mode_given) {
        cfg.interaction =
            a.interaction == "sum" ? InteractionMode::Sum : InteractionMode::Product;
    }
    const RunManifest manifest(preset, cfg, a.out_path, a.seed);
    validate_config(manifest.config);
    const Trajectory traj = evolve(manifest.config);
    std::ofstream f(manifest.output_path);
    if (!f) {
        throw IoError("cannot open output file '" + manifest.output_path + "'");
    }
    write_trajectory_csv(f, traj);
    f.flush();
    if (!f.good()) {
        throw IoError("failed writing '" + manifest.output_path + "'");
    }
    out << "wrote " << manifest.output_path << " (" << traj.samples.size()
        << " samples, preset " << preset_name(manifest.preset) << ")\n";
}

inline void print_quantifier_block(std::ostream& out, const DensityMatrix& rho,
                                   bool force, std::ostream& err) {
    if (force) {
        err << "warning: pure-state guard bypassed (purity = "
            << format_g17(purity(rho))
            << "); the diagonal no longer determines the off-diagonal structure,"
               " so this c_pdd value is one of many the same diagonal admits\n";
        const double spread = cohlab::detail::normalized_diag_spread(diagonal(rho));
        print_kv(out, "c_pdd", 1.0 - spread);
        print_kv(out, "distance_to_max", spread);
    } else {
        print_kv(out, "c_pdd", c_pdd(rho).value);
        print_kv(out, "distance_to_max", distance_to_max(rho));
    }
    print_kv(out, "c_l1", c_l1_normalized(rho).value);
    print_kv(out, "c_re", c_re_normalized(rho).value);
}

inline void cmd_quantify(const std::vector<std::string>& amplitudes,
                         const std::string& density_path, bool force,
                         std::ostream& out, std::ostream& err) {
    if (!density_path.empty()) {
        if (!amplitudes.empty()) {
            throw InvalidState("quantify: give either amplitudes or --density, not both");
        }
        const DensityMatrix rho = read_density_file(density_path);
        out << "n=" << rho.dim() << '\n';
        out << "populations=" << join_g17(diagonal(rho).values()) << '\n';
        print_kv(out, "purity", purity(rho));
        print_quantifier_block(out, rho, force, err);
        return;
    }
    if (amplitudes.size() < 2) {
        throw InvalidState("quantify: need at least 2 amplitudes (or --density FILE)");
    }
    if (force) {
        err << "note: --force only applies to --density input; amplitudes define a pure state\n";
    }
    Vector v(static_cast<Eigen::Index>(amplitudes.size()));
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = parse_complex(amplitudes[i]);
    }
    const double norm = v.norm();
    const StateVector psi = StateVector::normalized(std::move(v));
    const DensityMatrix rho = state_to_density(psi);
    out << "n=" << psi.dim() << '\n';
    print_kv(out, "norm", norm);
    out << "populations=" << join_g17(diagonal(rho).values()) << '\n';
    print_quantifier_block(out, rho, false, err);
}

inline void cmd_plot(const std::string& csv_path, const std::string& svg_path,
                     std::ostream& out) {
    std::ifstream in(csv_path);
    if (!in) {
        throw IoError("cannot open '" + csv_path + "'");
    }
    const Trajectory traj = read_trajectory_csv(in);
    std::ofstream f(svg_path);
    if (!f) {
        throw IoError("cannot open output file '" + svg_path + "'");
    }
    write_plot_svg(f, traj);
    f.flush();
    if (!f.good()) {
        throw IoError("failed writing '" + svg_path + "'");
    }
    out << "wrote " << svg_path << " (" << traj.samples.size() << " samples)\n";
}

inline int cmd_verify(std::uint64_t seed, std::uint64_t cases, bool invert,
                      std::ostream& out) {
    SweepOptions opts;
    opts.seed = seed;
    opts.cases_per_dim = cases;
    opts.invert_verdicts = invert;
    const SweepReport report = run_monotonicity_sweep(opts);
    out << "checked " << report.cases_run << " cases (dimensions " << opts.min_dim
        << ".." << opts.max_dim << ", seed " << seed << ")\n";
    if (report.ok()) {
        out << "all verdicts consistent\n";
        return 0;
    }
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 3);
    for (std::size_t k = 0; k < shown; ++k) {
        const SweepFailure& f = report.failures[k];
        out << "inconsistent verdict: dim=" << f.dim << " case=" << f.case_index << '\n';
        out << "  source populations=" << join_g17(f.source_populations) << '\n';
        out << "  target populations=" << join_g17(f.target_populations) << '\n';
        out << "  c_pdd(source)=" << format_g17(f.c_source)
            << " c_pdd(target)=" << format_g17(f.c_target) << '\n';
    }
    out << report.failures.size() << " inconsistent verdicts\n";
    return 1;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coherence quantifiers and two-qubit pulse simulation"};
    app.require_subcommand(1);

    detail::SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "integrate a pulse and write a CSV");
    CLI::Option* o_preset =
        simulate->add_option("--preset", sim.preset, "fig1a, fig1b, fig2a or fig2b");
    CLI::Option* o_config =
        simulate->add_option("--config", sim.config_path, "key=value config file");
    simulate->add_option("--out", sim.out_path, "output CSV path")->required();
    CLI::Option* o_steps = simulate->add_option("--steps", sim.steps, "RK4 grid steps");
    CLI::Option* o_area =
        simulate->add_option("--area-max", sim.area_max, "pulse-area span in radians");
    CLI::Option* o_det1 =
        simulate->add_option("--detuning1", sim.detuning1, "qubit 1 detuning (Rabi units)");
    CLI::Option* o_det2 =
        simulate->add_option("--detuning2", sim.detuning2, "qubit 2 detuning (Rabi units)");
    CLI::Option* o_inter =
        simulate->add_option("--interacting", sim.interacting, "couple the qubits");
    CLI::Option* o_mode = simulate->add_option("--interaction", sim.interaction,
                                               "coupling form: product or sum")
                              ->check(CLI::IsMember({"product", "sum"}));
    simulate->add_option("--seed", sim.seed, "recorded in the run manifest");

    std::vector<std::string> amplitudes;
    std::string density_path;
    bool force = false;
    CLI::App* quantify =
        app.add_subcommand("quantify", "score a pure state or a density-matrix file");
    quantify->add_option("amplitudes", amplitudes, "complex amplitudes, e.g. 0.6 0.8i");
    quantify->add_option("--density", density_path, "density-matrix text file");
    quantify->add_flag("--force", force,
                       "with --density: apply the pure-state formula to a mixed state");

    std::string plot_csv;
    std::string plot_out;
    CLI::App* plot = app.add_subcommand("plot", "render a trajectory CSV as SVG");
    plot->add_option("csv", plot_csv, "input CSV from simulate")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();

    std::uint64_t verify_seed = 42;
    std::uint64_t verify_cases = 10000;
    bool invert = false;
    CLI::App* verify =
        app.add_subcommand("verify", "randomized monotonicity sweep over dimensions 2..8");
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--cases", verify_cases, "cases per dimension");
    verify->add_flag("--invert-verdicts", invert)->group("");

    int rc = 0;
    simulate->callback([&] {
        detail::cmd_simulate(sim, o_preset->count() > 0, o_config->count() > 0,
                             o_steps->count() > 0, o_area->count() > 0,
                             o_det1->count() > 0, o_det2->count() > 0,
                             o_inter->count() > 0, o_mode->count() > 0, out);
    });
    quantify->callback(
        [&] { detail::cmd_quantify(amplitudes, density_path, force, out, err); });
    plot->callback([&] { detail::cmd_plot(plot_csv, plot_out, out); });
    verify->callback([&] { rc = detail::cmd_verify(verify_seed, verify_cases, invert, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cohlab");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 4;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PurityDrift& e) {
        err << "error: " << e.what() << " (rerun with more --steps)\n";
        return 3;
    } catch (const NotPureState& e) {
        err << "error: " << e.what()
            << " (c_pdd is defined for pure states; --force with --density bypasses"
               " the guard for demonstration)\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    }
    return rc;
}

}  // namespace cohlab::cli
