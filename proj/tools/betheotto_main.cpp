#include "betheotto/ensemble.hpp"
#include "betheotto/oracle.hpp"
#include "betheotto/otto.hpp"
#include "betheotto/spectrum.hpp"
#include "betheotto/sweep.hpp"
#include "betheotto/table.hpp"
#include "betheotto/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace betheotto;

// exit codes shared with the test-suite contract
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitSolverFailure = 3;

void emit(const SweepTable& table, const std::string& output) {
    if (output.empty() || output == "-") {
        write_csv(table, std::cout);
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    write_csv(table, out);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) parts.push_back(item);
    return parts;
}

QuantumNumbers parse_state(std::string text) {
    std::erase_if(text, [](char ch) { return ch == '(' || ch == ')' || ch == ' '; });
    QuantumNumbers qn;
    for (const std::string& token : split(text, ',')) {
        if (token.empty()) throw std::invalid_argument("malformed state tuple: " + text);
        qn.push_back(std::stoi(token));
    }
    if (qn.empty()) throw std::invalid_argument("empty state tuple");
    return qn;
}

std::vector<QuantumNumbers> parse_states(const std::string& text) {
    std::vector<QuantumNumbers> states;
    for (const std::string& part : split(text, ';'))
        if (!part.empty()) states.push_back(parse_state(part));
    if (states.empty()) throw std::invalid_argument("no states given");
    return states;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
    std::vector<std::pair<double, double>> pairs;
    for (const std::string& part : split(text, ';')) {
        if (part.empty()) continue;
        const auto halves = split(part, ':');
        if (halves.size() != 2)
            throw std::invalid_argument("temperature pairs look like T2:T4, got: " + part);
        pairs.emplace_back(std::stod(halves[0]), std::stod(halves[1]));
    }
    if (pairs.empty()) throw std::invalid_argument("no temperature pairs given");
    return pairs;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> values;
    for (const std::string& part : split(text, ','))
        if (!part.empty()) values.push_back(std::stod(part));
    if (values.empty()) throw std::invalid_argument("empty value list");
    return values;
}

struct Cli {
    CycleConfig cycle;
    CGrid grid;
    std::string output = "-";
    std::string figure;
    int threads = 0;
    double tolerance = 1e-10;

    // spectrum-specific
    double spectrum_length = 1.0;

    // sweep-specific raw strings
    std::string states_arg = "(1,1);(1,2);(1,3);(2,2);(2,3);(3,3)";
    std::string pairs_arg = "2.5:0.5;10:2;50:8";
    std::string t2_arg = "50,100,150,200,250";
    int coarse_points = 64;

    VerifyOptions verify;
};

void add_cycle_options(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--n", cli.cycle.n_particles, "particle number N")->capture_default_str();
    cmd->add_option("--c", cli.cycle.interaction, "interaction strength c")->capture_default_str();
    cmd->add_option("--mass", cli.cycle.mass, "particle mass")->capture_default_str();
    cmd->add_option("--l1", cli.cycle.trap_small, "small trap size L1")->capture_default_str();
    cmd->add_option("--l2", cli.cycle.trap_large, "large trap size L2")->capture_default_str();
    cmd->add_option("--t2", cli.cycle.hot_temperature, "hot bath temperature T2")
        ->capture_default_str();
    cmd->add_option("--t4", cli.cycle.cold_temperature, "cold bath temperature T4")
        ->capture_default_str();
    cmd->add_option("--n-cut", cli.cycle.n_cut, "quantum-number cutoff")->capture_default_str();
    cmd->add_option("--tol", cli.tolerance, "solver tolerance (residual max-norm)")
        ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--c-min", cli.grid.c_min, "grid lower end")->capture_default_str();
    cmd->add_option("--c-max", cli.grid.c_max, "grid upper end")->capture_default_str();
    cmd->add_option("--points", cli.grid.points, "number of grid points")->capture_default_str();
    cmd->add_flag_callback(
        "--linear", [&cli] { cli.grid.spacing = GridSpacing::linear; },
        "linear instead of logarithmic spacing");
}

void add_figure_option(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--figure", cli.figure, "parameter preset: fig2, fig3a, fig3b or fig4")
        ->check(CLI::IsMember({"fig2", "fig3a", "fig3b", "fig4"}));
}

// Presets replay the published parameter sets; anything the user passed
// explicitly (flag or config file) wins over the preset value.
void apply_figure_preset(CLI::App* cmd, Cli& cli) {
    if (cli.figure.empty()) return;
    const auto keep = [cmd](const std::string& flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt && opt->count() > 0;
    };
    if (!keep("--t4")) cli.cycle.cold_temperature = 8.0;
    if (!keep("--l1")) cli.cycle.trap_small = 1.0;
    if (!keep("--l2")) cli.cycle.trap_large = 2.0;
    if (!keep("--mass")) cli.cycle.mass = 1.0;
    if (!keep("--n-cut")) cli.cycle.n_cut = 20;
    if (!keep("--c-min")) cli.grid.c_min = 1e-2;
    if (!keep("--c-max")) cli.grid.c_max = 1e4;
    if (!keep("--points")) cli.grid.points = 61;
    if (cli.figure == "fig2" || cli.figure == "fig3a") {
        if (!keep("--t2")) cli.cycle.hot_temperature = 50.0;
    } else if (cli.figure == "fig3b") {
        if (!keep("--pairs")) cli.pairs_arg = "2.5:0.5;10:2;50:8";
    } else if (cli.figure == "fig4") {
        if (!keep("--t2-values")) cli.t2_arg = "50,100,150,200,250";
        if (!keep("--t2")) cli.cycle.hot_temperature = 50.0;
    }
}

SweepTable spectrum_table(const Cli& cli) {
    SpectrumParams p{cli.cycle.n_particles, cli.spectrum_length, cli.cycle.interaction,
                     cli.cycle.mass};
    p.validate();
    SolverOptions opts;
    opts.tolerance = cli.tolerance;

    std::vector<std::string> columns = {"n_tuple", "c", "L"};
    for (int i = 1; i <= p.n_particles; ++i) columns.push_back("k_" + std::to_string(i));
    columns.push_back("energy");
    columns.push_back("residual_norm");
    SweepTable table(columns);

    for (const QuantumNumbers& qn : enumerate_states(p.n_particles, cli.cycle.n_cut)) {
        const BetheSolution sol = solve_bethe(qn, p, opts);
        std::vector<Cell> row;
        row.reserve(columns.size());
        row.emplace_back(format_quantum_numbers(qn));
        row.emplace_back(p.interaction);
        row.emplace_back(p.box_length);
        for (double k : sol.k) row.emplace_back(k);
        row.emplace_back(sol.energy);
        row.emplace_back(sol.residual_norm);
        table.append_row(std::move(row));
    }
    return table;
}

SweepTable cycle_table(const Cli& cli) {
    CycleConfig cfg = cli.cycle;
    cfg.solver.tolerance = cli.tolerance;
    const CycleResult r = run_cycle(cfg);
    SweepTable table({"Q1", "W1", "Q2", "W2", "W_out", "efficiency", "valid_engine",
                      "eta_numerator", "eta_denominator", "S1", "S2", "S3", "S4", "U1", "U2",
                      "U3", "U4", "tail_warning"});
    std::vector<Cell> row = {r.Q1,
                             r.W1,
                             r.Q2,
                             r.W2,
                             r.W_out,
                             r.efficiency ? Cell{*r.efficiency} : Cell{std::monostate{}},
                             r.valid_engine,
                             r.eta_numerator,
                             r.eta_denominator,
                             r.corner_entropy[0],
                             r.corner_entropy[1],
                             r.corner_entropy[2],
                             r.corner_entropy[3],
                             r.corner_energy[0],
                             r.corner_energy[1],
                             r.corner_energy[2],
                             r.corner_energy[3],
                             r.tail_warning};
    table.append_row(std::move(row));
    return table;
}

SweepTable dip_table(const Cli& cli) {
    CycleConfig cfg = cli.cycle;
    cfg.solver.tolerance = cli.tolerance;
    const DipResult dip = find_dip(cli.grid.c_min, cli.grid.c_max, cfg, cli.coarse_points);
    SweepTable table({"c_star", "eta_min", "c_lo", "c_hi", "interior"});
    table.append_row({dip.c_star, dip.eta_min, dip.c_lo, dip.c_hi, dip.interior});
    return table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bethe-ansatz spectra and quantum Otto cycles for repulsive bosons in a box"};
    app.set_version_flag("--version", "betheotto 1.0.0");
    app.set_config("--config", "", "read options from a config file (flags take precedence)");
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--threads", cli.threads,
                   "cap worker threads (default: machine parallelism, or BETHEOTTO_THREADS)")
        ->envname("BETHEOTTO_THREADS");
    app.add_option("--output", cli.output, "output file ('-' for stdout)")->capture_default_str();

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "solve and dump every level up to the cutoff");
    spectrum_cmd->add_option("--n", cli.cycle.n_particles, "particle number N")
        ->capture_default_str();
    spectrum_cmd->add_option("--c", cli.cycle.interaction, "interaction strength c")
        ->capture_default_str();
    spectrum_cmd->add_option("--length", cli.spectrum_length, "box size L")->capture_default_str();
    spectrum_cmd->add_option("--mass", cli.cycle.mass, "particle mass")->capture_default_str();
    spectrum_cmd->add_option("--n-cut", cli.cycle.n_cut, "quantum-number cutoff")
        ->capture_default_str();
    spectrum_cmd->add_option("--tol", cli.tolerance, "solver tolerance")->capture_default_str();

    CLI::App* cycle_cmd = app.add_subcommand("cycle", "run one Otto cycle");
    add_cycle_options(cycle_cmd, cli);

    CLI::App* sweep_cmd = app.add_subcommand("sweep-c", "efficiency across an interaction grid");
    add_cycle_options(sweep_cmd, cli);
    add_grid_options(sweep_cmd, cli);
    add_figure_option(sweep_cmd, cli);

    CLI::App* dip_cmd = app.add_subcommand("dip", "locate the efficiency dip");
    add_cycle_options(dip_cmd, cli);
    add_grid_options(dip_cmd, cli);
    add_figure_option(dip_cmd, cli);
    dip_cmd->add_option("--coarse-points", cli.coarse_points, "coarse scan resolution")
        ->capture_default_str();

    CLI::App* t2_cmd = app.add_subcommand("sweep-t2", "dip locus against the hot-bath temperature");
    add_cycle_options(t2_cmd, cli);
    add_grid_options(t2_cmd, cli);
    add_figure_option(t2_cmd, cli);
    t2_cmd->add_option("--t2-values", cli.t2_arg, "comma-separated hot temperatures")
        ->capture_default_str();
    t2_cmd->add_option("--coarse-points", cli.coarse_points, "coarse scan resolution")
        ->capture_default_str();

    CLI::App* ratio_cmd = app.add_subcommand("ratio", "per-level ratio curves and their minima");
    add_cycle_options(ratio_cmd, cli);
    add_grid_options(ratio_cmd, cli);
    add_figure_option(ratio_cmd, cli);
    ratio_cmd->add_option("--states", cli.states_arg, "semicolon-separated tuples, e.g. (1,1);(1,2)")
        ->capture_default_str();

    CLI::App* two_level_cmd =
        app.add_subcommand("two-level", "exact vs two-level efficiency across temperatures");
    add_cycle_options(two_level_cmd, cli);
    add_grid_options(two_level_cmd, cli);
    add_figure_option(two_level_cmd, cli);
    two_level_cmd->add_option("--pairs", cli.pairs_arg, "temperature pairs T2:T4;T2:T4;...")
        ->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle and invariant suite");
    verify_cmd->add_flag("--quick", cli.verify.quick, "N = 2 subset, small diagonalization");
    verify_cmd->add_flag("--inject-bad-jacobian", cli.verify.inject_bad_jacobian,
                         "debug: corrupt the Jacobian so the FD check must fail")
        ->group("");

    // let --output/--threads appear after the subcommand name too
    for (CLI::App* sub : {spectrum_cmd, cycle_cmd, sweep_cmd, dip_cmd, t2_cmd, ratio_cmd,
                          two_level_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadConfig;
    }

    if (cli.threads > 0)
        setenv("BETHEOTTO_THREADS", std::to_string(cli.threads).c_str(), 1);

    try {
        cli.cycle.solver.tolerance = cli.tolerance;
        if (spectrum_cmd->parsed()) {
            emit(spectrum_table(cli), cli.output);
        } else if (cycle_cmd->parsed()) {
            emit(cycle_table(cli), cli.output);
        } else if (sweep_cmd->parsed()) {
            apply_figure_preset(sweep_cmd, cli);
            emit(sweep_c(cli.grid, cli.cycle), cli.output);
        } else if (dip_cmd->parsed()) {
            apply_figure_preset(dip_cmd, cli);
            emit(dip_table(cli), cli.output);
        } else if (t2_cmd->parsed()) {
            apply_figure_preset(t2_cmd, cli);
            emit(sweep_T2(parse_doubles(cli.t2_arg), cli.cycle, cli.grid.c_min, cli.grid.c_max,
                          cli.coarse_points),
                 cli.output);
        } else if (ratio_cmd->parsed()) {
            apply_figure_preset(ratio_cmd, cli);
            emit(ratio_curves(parse_states(cli.states_arg), cli.grid, cli.cycle), cli.output);
        } else if (two_level_cmd->parsed()) {
            apply_figure_preset(two_level_cmd, cli);
            emit(two_level_comparison(cli.grid, parse_pairs(cli.pairs_arg), cli.cycle),
                 cli.output);
        } else if (verify_cmd->parsed()) {
            const auto results = run_verification(cli.verify, std::cout);
            return all_passed(results) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolverFailure;
    }
    return kExitOk;
}
