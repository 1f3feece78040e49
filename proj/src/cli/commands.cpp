// Copyright 2026 The udmlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "udmlab/cli/commands.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "udmlab/circuits.hpp"
#include "udmlab/cli/report.hpp"
#include "udmlab/format.hpp"
#include "udmlab/maps.hpp"

namespace udmlab::cli {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 6> kStabilizerLabels{"0", "1", "+", "-", "+i", "-i"};

struct Context {
    Tolerances tol;
    std::uint64_t seed = 0;
};

Context context(const Scenario& s, const Options& opt) {
    Context ctx{s.tol, opt.seed.value_or(s.seed)};
    if (opt.tol_override)
        apply_tolerance_overrides(ctx.tol, *opt.tol_override);
    if (opt.tol_cp) {
        if (!(*opt.tol_cp >= 0.0))
            throw InputError("--tol-cp must be nonnegative");
        ctx.tol.cp = *opt.tol_cp;
    }
    return ctx;
}

json header(const std::string& command, const Context& ctx, const Options& opt) {
    json j{{"command", command}, {"seed", ctx.seed}, {"tolerances", tolerances_to_json(ctx.tol)}};
    if (opt.tol_override)
        j["tolerance_override_env"] = *opt.tol_override;
    return j;
}

TimeGrid grid_for(const Scenario& s, const Options& opt) {
    const TimeGrid g = s.effective_grid();
    if (!opt.steps)
        return g;
    if (*opt.steps < 1)
        throw InputError("--steps must be a positive integer");
    return TimeGrid(g.t_start(), g.t_end(), *opt.steps);
}

PureState random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(2);
    for (int i = 0; i < 2; ++i)
        v(i) = Complex(gauss(rng), gauss(rng));
    return PureState::normalized(v);
}

DensityMatrix random_qubit_mixed(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    const double p = weight(rng);
    const Matrix a = densify(random_qubit(rng)).matrix();
    const Matrix b = densify(random_qubit(rng)).matrix();
    return DensityMatrix(p * a + (1.0 - p) * b);
}

struct ProductInput {
    DensityMatrix first;
    DensityMatrix second;
};

ProductInput require_product(const Scenario& s, const std::string& command) {
    if (!s.input.first || !s.input.second)
        throw InputError(command +
                         ": input is entangled; a universal dynamical map exists only when the "
                         "joint initial state is a product rho_Q1(t0) (x) rho_Q2(t0) with "
                         "rho_Q2(t0) fixed");
    return {densify(*s.input.first), densify(*s.input.second)};
}

json map_report(const DynamicalMap& m, const DensityMatrix& system, const Context& ctx,
                std::mt19937_64& rng) {
    const auto c = choi(m);
    const auto verdict = is_cptp(m, ctx.tol.cp);
    json j{{"superoperator", report::matrix(m.superoperator())},
           {"choi_eigenvalues", report::reals(c.eigenvalues)},
           {"min_choi_eigenvalue", report::number(verdict.min_choi_eigenvalue)},
           {"cp", verdict.cp},
           {"tp", verdict.tp},
           {"tp_defect", report::number(verdict.tp_defect)},
           {"interval", json::array({report::number(m.interval().start),
                                     report::number(m.interval().end)})},
           {"which_qubit", static_cast<int>(m.which_qubit())}};
    if (m.environment())
        j["environment"] = report::matrix(m.environment()->matrix());
    j["output_state"] = report::matrix(apply_map(m, system.matrix()));

    if (verdict.cp) {
        const auto kraus = kraus_decompose(c, ctx.tol);
        double residual = 0.0;
        std::vector<Matrix> probes;
        for (const auto& psi : stabilizer_states())
            probes.push_back(densify(psi).matrix());
        for (int i = 0; i < 8; ++i)
            probes.push_back(random_qubit_mixed(rng).matrix());
        for (const auto& rho : probes)
            residual = std::max(residual, (apply_kraus(kraus, rho) - apply_map(m, rho)).cwiseAbs().maxCoeff());
        j["kraus_count"] = kraus.operators.size();
        j["kraus_weights"] = json::array();
        for (double w : kraus.weights)
            j["kraus_weights"].push_back(report::number(w));
        j["kraus_reconstruction_residual"] = report::number(residual);
        j["completeness_residual"] = report::number(completeness_residual(kraus));
    } else {
        j["kraus_count"] = nullptr;
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write '" + path + "'");
    f << text;
}

}  // namespace

CommandResult cmd_analyze_gate(const Scenario& s, const Options& opt) {
    const Context ctx = context(s, opt);
    const Gate& g = s.require_gate();
    const auto verdict = is_entangling(g, ctx.tol.schmidt);

    json report = header("analyze-gate", ctx, opt);
    report["generator_label"] = s.generator_label.value_or("");
    report["duration"] = report::number(g.duration());
    report["unitary"] = report::matrix(g.unitary());
    report["generator"] = report::matrix(g.generator());
    report["principal_generator"] = report::matrix(generator_from_unitary(g.unitary(), g.duration(), ctx.tol));
    report["operator_schmidt_values"] = report::reals(verdict.schmidt_values);
    report["operator_schmidt_rank"] = verdict.operator_schmidt_rank;
    report["entangling"] = verdict.entangling;

    // A product input that leaves the gate entangled, searched over
    // stabilizer pairs in a fixed order.
    report["entangled_stabilizer_input"] = nullptr;
    const auto& stab = stabilizer_states();
    for (size_t a = 0; a < stab.size() && report["entangled_stabilizer_input"].is_null(); ++a) {
        for (size_t b = 0; b < stab.size(); ++b) {
            const double tau = pure_entanglement(apply(g, tensor(stab[a], stab[b])));
            if (tau > ctx.tol.separable) {
                report["entangled_stabilizer_input"] = {
                    {"qubit1", kStabilizerLabels[a]}, {"qubit2", kStabilizerLabels[b]},
                    {"tau", report::number(tau)}};
                break;
            }
        }
    }

    std::mt19937_64 rng(ctx.seed);
    constexpr int trials = 64;
    double max_tau = 0.0;
    for (int i = 0; i < trials; ++i) {
        const PureState in = tensor(random_qubit(rng), random_qubit(rng));
        max_tau = std::max(max_tau, pure_entanglement(apply(g, in)));
    }
    report["random_product_sweep"] = {{"trials", trials}, {"max_tau", report::number(max_tau)}};
    return {report, std::nullopt};
}

CommandResult cmd_trajectory(const Scenario& s, const Options& opt) {
    const Context ctx = context(s, opt);
    const Gate& g = s.require_gate();
    const TimeGrid grid = grid_for(s, opt);
    const auto traj = evolve_trajectory(g.generator(), densify(s.input.state), grid);
    const auto profile = entanglement_profile(traj, ctx.tol.reconstruction);
    const auto instant = find_entangled_instant(traj, ctx.tol.entanglement);

    double max_neg = 0.0, max_drift = 0.0;
    const double purity0 = profile.front().purity;
    for (const auto& p : profile) {
        max_neg = std::max(max_neg, p.negativity);
        max_drift = std::max(max_drift, std::abs(p.purity - purity0));
    }

    json report = header("trajectory", ctx, opt);
    report["generator_label"] = s.generator_label.value_or("");
    report["input"] = s.input.label;
    report["grid"] = {{"t_start", report::number(grid.t_start())},
                      {"t_end", report::number(grid.t_end())},
                      {"steps", grid.steps()},
                      {"epsilon", report::number(grid.epsilon())}};
    report["t1"] = instant ? json(report::number(instant->t)) : json(nullptr);
    report["negativity_at_t1"] = instant ? json(report::number(instant->negativity)) : json(nullptr);
    report["max_negativity"] = report::number(max_neg);
    report["initial_purity"] = report::number(purity0);
    report["max_purity_drift"] = report::number(max_drift);
    report["final_state"] = report::matrix(traj.back().matrix());

    std::ostringstream csv;
    write_profile_csv(csv, profile);
    return {report, csv.str()};
}

CommandResult cmd_map(const Scenario& s, const Options& opt) {
    const Context ctx = context(s, opt);
    const Gate& g = s.require_gate();
    const auto input = require_product(s, "map");
    const TimeGrid grid = grid_for(s, opt);
    const double t = grid.t_end() - grid.t_start();
    std::mt19937_64 rng(ctx.seed);

    json report = header("map", ctx, opt);
    report["generator_label"] = s.generator_label.value_or("");
    report["input"] = s.input.label;
    report["t"] = report::number(t);

    const auto pair = local_pair_maps(g.generator(), input.first, input.second, t);
    report["qubit1"] = map_report(pair.first, input.first, ctx, rng);
    if (opt.both_qubits) {
        report["qubit2"] = map_report(pair.second, input.second, ctx, rng);
        report["superoperator_distance"] = report::number(superoperator_distance(pair.first, pair.second));
    }
    return {report, std::nullopt};
}

CommandResult cmd_divisibility(const Scenario& s, const Options& opt) {
    const Context ctx = context(s, opt);
    const Gate& g = s.require_gate();
    const auto input = require_product(s, "divisibility");
    const TimeGrid grid = grid_for(s, opt);
    const std::optional<double> t1_abs = opt.t1 ? opt.t1 : s.t1;
    if (!t1_abs)
        throw InputError("divisibility: needs 't1' in the scenario or --t1");
    if (!(*t1_abs > grid.t_start()) || !(*t1_abs < grid.t_end()))
        throw InputError("divisibility: t1 must lie strictly inside (t_start, t_end); got " +
                         format_number(*t1_abs));
    const double t1 = *t1_abs - grid.t_start();
    const double t_star = grid.t_end() - grid.t_start();

    const auto e_short = induced_map(g.generator(), input.second, t1, Qubit::first);
    const auto e_long = induced_map(g.generator(), input.second, t_star, Qubit::first);
    const auto inter = intermediate_map(e_short, e_long, ctx.tol);
    const auto witness = udm_witness_subinterval(g.generator(), densify(s.input.state), t1, t_star, ctx.tol);

    std::string verdict = "markovian";
    if ((inter.determinate && !inter.cp) || witness.fires)
        verdict = "non-markovian";
    else if (!inter.determinate)
        verdict = "indeterminate";

    json report = header("divisibility", ctx, opt);
    report["generator_label"] = s.generator_label.value_or("");
    report["input"] = s.input.label;
    report["t1"] = report::number(*t1_abs);
    report["t_star"] = report::number(grid.t_end());
    report["intermediate_map"] = {
        {"determinate", inter.determinate},
        {"short_map_rank", inter.short_rank},
        {"cp", inter.determinate ? json(inter.cp) : json(nullptr)},
        {"min_choi_eigenvalue", report::number(inter.min_choi_eigenvalue)},
        {"superoperator", report::matrix(inter.candidate.superoperator())}};
    report["witness"] = {{"trace_distance", report::number(witness.trace_distance)},
                         {"negativity_at_t1", report::number(witness.negativity_at_t1)},
                         {"fires", witness.fires},
                         {"reduced_correlated", report::matrix(witness.reduced_correlated)},
                         {"reduced_decorrelated", report::matrix(witness.reduced_decorrelated)}};
    report["verdict"] = verdict;
    return {report, std::nullopt};
}

CommandResult cmd_qft(const Scenario& s, const Options& opt) {
    const Context ctx = context(s, opt);
    int n = 0;
    if (opt.qft_n)
        n = *opt.qft_n;
    else if (s.qft)
        n = s.qft->n;
    else
        throw InputError("qft: needs --n or a 'qft' section in the scenario");
    if (n < 2 || n > 8)
        throw InputError("qft: n must be in 2..8, got " + std::to_string(n));

    std::string label(static_cast<size_t>(n), '0');
    PureState input = PureState::basis(label);
    if (opt.qft_input) {
        if (opt.qft_input->size() != static_cast<size_t>(n))
            throw InputError("qft: --input must be a bit string of length n");
        label = *opt.qft_input;
        input = PureState::basis(label);
    } else if (s.qft && s.qft->input && s.qft->n == n) {
        label = s.qft->label;
        input = *s.qft->input;
    }

    const Circuit c = build_qft(n);
    const Matrix u = circuit_unitary(c);
    const auto run = run_circuit(c, input, ctx.tol.separable);

    json audit = json::array();
    std::ostringstream csv;
    csv << "position,gate,qubits,measure,input_value,output_value,input_entangled,output_entangled\n";
    for (const auto& r : run.audit.records) {
        const char* measure = r.measure == AuditMeasure::pair_negativity ? "pair_negativity"
                                                                         : "qubit_linear_entropy";
        audit.push_back({{"position", r.position},
                         {"gate", r.gate},
                         {"qubits", r.qubits},
                         {"measure", measure},
                         {"input_value", report::number(r.input_value)},
                         {"output_value", report::number(r.output_value)},
                         {"input_entangled", r.input_entangled},
                         {"output_entangled", r.output_entangled}});
        std::string qubits;
        for (size_t i = 0; i < r.qubits.size(); ++i)
            qubits += (i ? ";" : "") + std::to_string(r.qubits[i]);
        csv << r.position << ',' << r.gate << ',' << qubits << ',' << measure << ','
            << format_number(r.input_value) << ',' << format_number(r.output_value) << ','
            << (r.input_entangled ? "true" : "false") << ','
            << (r.output_entangled ? "true" : "false") << '\n';
    }

    json report = header("qft", ctx, opt);
    report["n"] = n;
    report["input"] = label;
    report["circuit"] = circuit_to_json(c);
    report["dft_residual"] = report::number(linalg::frobenius_distance(u, dft_matrix(n)));
    report["audit"] = std::move(audit);
    report["all_separable"] = run.audit.all_separable();
    report["output_amplitudes"] = report::vector(run.output.amplitudes());
    return {report, csv.str()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"udmlab: reduced dynamics of qubits inside entangling gates"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, csv_path;
    Options opt;
    std::optional<int> steps, qft_n;
    std::optional<double> tol_cp, t1;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> qft_input;

    using Handler = std::function<CommandResult(const Scenario&, const Options&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    const auto add = [&](const char* name, const char* help, Handler h, bool needs_scenario) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* sc = sub->add_option("--scenario", scenario_path, "Scenario JSON file");
        if (needs_scenario)
            sc->required();
        sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
        sub->add_option("--tol-cp", tol_cp, "Choi eigenvalue tolerance for CP verdicts");
        sub->add_option("--steps", steps, "Override the grid step count");
        sub->add_option("--seed", seed, "Seed for randomized sweeps");
        sub->add_flag("--both-qubits", opt.both_qubits, "Report the maps of both qubits");
        commands.emplace_back(sub, std::move(h));
        return sub;
    };
    add("analyze-gate", "Operator Schmidt analysis of a two-qubit gate", cmd_analyze_gate, true);
    add("trajectory", "Entanglement profile of the joint state over a time grid", cmd_trajectory, true)
        ->add_option("--csv", csv_path, "Write the t,negativity,tau,purity series here");
    add("map", "Reduced dynamical map induced by a product input", cmd_map, true);
    add("divisibility", "CP-divisibility and no-UDM witness at an intermediate time", cmd_divisibility, true)
        ->add_option("--t1", t1, "Intermediate time (overrides the scenario)");
    CLI::App* qft = add("qft", "Build and audit a QFT circuit", cmd_qft, false);
    qft->add_option("--n", qft_n, "Number of qubits (2..8)");
    qft->add_option("--input", qft_input, "Computational basis input, e.g. 010");
    qft->add_option("--csv", csv_path, "Write the per-gate audit here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    opt.steps = steps;
    opt.tol_cp = tol_cp;
    opt.seed = seed;
    opt.t1 = t1;
    opt.qft_n = qft_n;
    opt.qft_input = qft_input;
    if (const char* env = std::getenv("UDMLAB_TOL_OVERRIDE"); env && *env)
        opt.tol_override = std::string(env);

    try {
        const Scenario scenario = scenario_path.empty() ? Scenario{} : load_scenario(scenario_path);
        for (const auto& [sub, handler] : commands) {
            if (!sub->parsed())
                continue;
            const CommandResult result = handler(scenario, opt);
            const std::string text = result.report.dump(2) + "\n";
            if (out_path.empty())
                out << text;
            else
                write_text(out_path, text);
            if (result.csv && !csv_path.empty())
                write_text(csv_path, *result.csv);
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace udmlab::cli
