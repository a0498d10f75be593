// Copyright 2026 The belldisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "belldisc/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "belldisc/circuit.h"
#include "belldisc/circuit_io.h"
#include "belldisc/error.h"
#include "belldisc/paperdata.h"
#include "belldisc/tomography.h"

namespace belldisc::cli {

namespace {

constexpr double kFidelityTolerance = 5e-4;
constexpr double kDeviationTolerance = 2e-3;

std::string fixed(double value, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << value;
    return s.str();
}

std::string join_path(const std::string &dir, const std::string &file) {
    return (std::filesystem::path(dir) / file).string();
}

/// "psi+" -> "psi_plus".
std::string bell_slug(BellKind kind) {
    std::string name(bell_name(kind));
    const bool plus = name.back() == '+';
    name.pop_back();
    return name + (plus ? "_plus" : "_minus");
}

std::string noise_description(const NoiseModel &noise) {
    if (noise.is_ideal()) {
        return "none";
    }
    std::ostringstream s;
    s << "depol:" << noise.single_qubit_depolarizing << ',' << noise.cnot_depolarizing
      << ",readout:" << noise.readout_flip;
    return s.str();
}

nlohmann::json noise_json(const NoiseModel &noise) {
    return {{"single_qubit_depolarizing", noise.single_qubit_depolarizing},
            {"cnot_depolarizing", noise.cnot_depolarizing},
            {"readout_flip", noise.readout_flip}};
}

// ---------------------------------------------------------------------------
// discriminate

struct ExperimentResult {
    CheckKind check;
    std::string expected;
    CountsHistogram counts;
    ProbabilityMap exact;
};

std::string expected_outcome(BellKind kind, CheckKind check) {
    // Reverse EPR returns the pair to |phase parity>; the ancilla holds the
    // bit revealed by the check.
    const int ancilla = check == CheckKind::Parity ? parity_bit(kind) : phase_bit(kind);
    return std::to_string(phase_bit(kind)) + std::to_string(parity_bit(kind)) + std::to_string(ancilla);
}

std::string check_name(CheckKind check) {
    return check == CheckKind::Parity ? "parity" : "phase";
}

std::string probability_csv(const ExperimentResult &r) {
    std::ostringstream s;
    s << "outcome,probability,exact\n";
    for (const auto &[bits, exact] : r.exact) {
        s << bits << ',' << fixed(r.counts.frequency(bits), 9) << ',' << fixed(exact, 9) << '\n';
    }
    return s.str();
}

int cmd_discriminate(const RunConfig &cfg, std::ostream &out) {
    const BellKind kind = parse_bell_kind(cfg.bell_kind);
    std::vector<ExperimentResult> results;
    std::uint64_t stream = 0;
    for (CheckKind check : {CheckKind::Parity, CheckKind::Phase}) {
        const Circuit circuit = check_experiment(kind, check, /*with_reverse_epr=*/true, /*measure=*/true);
        results.push_back({check, expected_outcome(kind, check),
                           sample(circuit, cfg.shots, cfg.noise, derive_seed(cfg.seed, stream++)),
                           exact_distribution(circuit, cfg.noise)});
    }

    if (!cfg.output_dir.empty()) {
        for (const ExperimentResult &r : results) {
            const std::string stem = "discriminate_" + bell_slug(kind) + "_" + check_name(r.check);
            write_text_file_atomic(join_path(cfg.output_dir, stem + ".csv"), probability_csv(r));
            write_text_file_atomic(join_path(cfg.output_dir, stem + "_counts.json"),
                                   counts_to_json(r.counts).dump(2) + "\n");
        }
    }

    if (cfg.format == OutputFormat::Json) {
        nlohmann::json doc;
        doc["bell"] = cfg.bell_kind;
        doc["shots"] = cfg.shots;
        doc["seed"] = cfg.seed;
        doc["noise"] = noise_json(cfg.noise);
        doc["experiments"] = nlohmann::json::array();
        for (const ExperimentResult &r : results) {
            nlohmann::json e;
            e["check"] = check_name(r.check);
            e["expected_outcome"] = r.expected;
            e["probabilities"] = r.counts.frequencies();
            e["exact"] = r.exact;
            e["counts"] = counts_to_json(r.counts);
            doc["experiments"].push_back(std::move(e));
        }
        out << doc.dump(2) << '\n';
        return 0;
    }
    if (cfg.format == OutputFormat::Csv) {
        out << "check,outcome,probability,exact\n";
        for (const ExperimentResult &r : results) {
            for (const auto &[bits, exact] : r.exact) {
                out << check_name(r.check) << ',' << bits << ',' << fixed(r.counts.frequency(bits), 9) << ','
                    << fixed(exact, 9) << '\n';
            }
        }
        return 0;
    }

    out << "Bell state " << cfg.bell_kind << ", " << cfg.shots << " shots, seed " << cfg.seed << ", noise "
        << noise_description(cfg.noise) << '\n';
    for (const ExperimentResult &r : results) {
        out << '\n'
            << check_name(r.check) << " check, qubits (system0 system1 ancilla), expected " << r.expected
            << ":\n";
        for (const auto &[bits, exact] : r.exact) {
            const double p = r.counts.frequency(bits);
            if (r.counts.count(bits) == 0 && exact < 1e-12) {
                continue;
            }
            out << "  \"" << bits << "\": " << fixed(p) << "  (exact " << fixed(exact) << ")\n";
        }
        double ancilla_one = 0.0;
        for (const auto &[bits, count] : r.counts.counts()) {
            if (bits.back() == '1') {
                ancilla_one += static_cast<double>(count);
            }
        }
        ancilla_one /= static_cast<double>(r.counts.shots());
        out << "  ancilla: P(0) = " << fixed(1.0 - ancilla_one) << ", P(1) = " << fixed(ancilla_one) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tomo

std::string bars_csv(const DensityMatrix &rho) {
    std::ostringstream s;
    s << "row";
    for (std::size_t c = 0; c < rho.dim(); ++c) {
        s << ',' << c + 1;
    }
    s << '\n';
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        s << r + 1;
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            s << ',' << fixed(rho(r, c).real());
        }
        s << '\n';
    }
    return s.str();
}

int cmd_tomo(const RunConfig &cfg, std::ostream &out) {
    const BellKind kind = parse_bell_kind(cfg.bell_kind);
    constexpr QubitPair kSystem{0, 1};
    constexpr int kAncilla = 2;

    Circuit circuit = bell_prep(kind, kSystem, 3);
    int ancilla_bit = 0;
    if (cfg.stage == "phase") {
        circuit.append(ancilla_target_phase_check(kSystem, kAncilla));
        ancilla_bit = phase_bit(kind);
    } else if (cfg.stage == "parity") {
        circuit.append(parity_check_circuit(kSystem, kAncilla));
        ancilla_bit = parity_bit(kind);
    }
    const std::string ideal_name = std::string(bell_name(kind)) + std::to_string(ancilla_bit);
    const std::string label = bell_slug(kind) + "_" + std::to_string(ancilla_bit) + "." + cfg.stage;
    const DensityMatrix ideal = DensityMatrix::pure(ideal_state_from_name(ideal_name));

    const TomographyReport report = run_tomography(circuit, ideal, cfg.shots, cfg.noise, cfg.seed);
    const nlohmann::json doc = report_to_json(report, label, ideal_name);

    if (!cfg.output_dir.empty()) {
        write_text_file_atomic(join_path(cfg.output_dir, "tomo_" + label + ".json"), doc.dump(2) + "\n");
        write_text_file_atomic(join_path(cfg.output_dir, "tomo_" + label + "_bars.csv"), bars_csv(report.raw));
    }

    if (cfg.format == OutputFormat::Json) {
        out << doc.dump(2) << '\n';
        return 0;
    }
    if (cfg.format == OutputFormat::Csv) {
        out << "label,fidelity,fidelity_physical,avg_dev,max_dev,purity,clipped\n"
            << label << ',' << fixed(report.fidelity_to_ideal) << ',' << fixed(report.fidelity_physical) << ','
            << fixed(report.deviation.average_abs_deviation) << ',' << fixed(report.deviation.max_abs_deviation)
            << ',' << fixed(report.purity) << ',' << (report.clipped ? "true" : "false") << '\n';
        return 0;
    }

    out << "tomography of " << label << " (ideal |" << ideal_name << ">): 27 settings x " << cfg.shots
        << " shots, seed " << cfg.seed << ", noise " << noise_description(cfg.noise) << '\n';
    out << "  fidelity            " << fixed(report.fidelity_to_ideal) << '\n';
    out << "  fidelity (physical) " << fixed(report.fidelity_physical) << '\n';
    out << "  average deviation   " << fixed(report.deviation.average_abs_deviation) << '\n';
    out << "  maximum deviation   " << fixed(report.deviation.max_abs_deviation) << '\n';
    out << "  purity              " << fixed(report.purity) << '\n';
    out << "  clipped             " << (report.clipped ? "yes" : "no") << '\n';
    out << "  Re[rho]:\n";
    for (std::size_t r = 0; r < report.raw.dim(); ++r) {
        out << "   ";
        for (std::size_t c = 0; c < report.raw.dim(); ++c) {
            out << ' ' << std::setw(8) << fixed(report.raw(r, c).real(), 4);
        }
        out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce

int cmd_reproduce(const RunConfig &cfg, std::ostream &out) {
    std::vector<LabeledMatrix> dataset;
    if (cfg.data_dir.empty()) {
        dataset = embedded_dataset();
    } else {
        for (const PublishedTarget &t : published_targets()) {
            dataset.push_back(load_matrix(join_path(cfg.data_dir, t.label + ".json")));
        }
    }
    const std::vector<MetricsRow> rows = reproduce_metrics(dataset);

    std::map<std::string, PublishedTarget> targets;
    for (const PublishedTarget &t : published_targets()) {
        targets.emplace(t.label, t);
    }

    std::vector<bool> passed;
    for (const MetricsRow &row : rows) {
        auto it = targets.find(row.label);
        bool ok = it != targets.end();
        if (ok) {
            const PublishedTarget &t = it->second;
            ok = std::abs(row.fidelity - t.fidelity) <= kFidelityTolerance;
            if (t.avg_dev) {
                ok = ok && std::abs(row.avg_dev - *t.avg_dev) <= kDeviationTolerance;
            }
            if (t.max_dev) {
                ok = ok && std::abs(row.max_dev - *t.max_dev) <= kDeviationTolerance;
            }
        }
        passed.push_back(ok);
    }
    const auto n_pass = static_cast<std::size_t>(std::count(passed.begin(), passed.end(), true));

    auto target_text = [&](const std::string &label, auto member) -> std::string {
        auto it = targets.find(label);
        if (it == targets.end()) {
            return "";
        }
        const auto &value = it->second.*member;
        if constexpr (std::is_same_v<std::decay_t<decltype(value)>, double>) {
            return fixed(value, 4);
        } else {
            return value ? fixed(*value, 3) : std::string("-");
        }
    };

    if (cfg.format == OutputFormat::Csv) {
        std::string csv = metrics_to_csv(rows);
        std::istringstream lines(csv);
        std::string line;
        std::getline(lines, line);
        out << line << ",target_fidelity,target_avg_dev,target_max_dev,status\n";
        for (std::size_t i = 0; std::getline(lines, line); ++i) {
            auto t = [&](auto m) {
                std::string s = target_text(rows[i].label, m);
                return s == "-" ? std::string() : s;
            };
            out << line << ',' << t(&PublishedTarget::fidelity) << ',' << t(&PublishedTarget::avg_dev) << ','
                << t(&PublishedTarget::max_dev) << ',' << (passed[i] ? "PASS" : "FAIL") << '\n';
        }
    } else if (cfg.format == OutputFormat::Json) {
        nlohmann::json doc = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const MetricsRow &r = rows[i];
            doc.push_back({{"label", r.label},
                           {"fidelity", r.fidelity},
                           {"avg_dev", r.avg_dev},
                           {"max_dev", r.max_dev},
                           {"purity", r.purity},
                           {"fidelity_physical", r.fidelity_physical},
                           {"clipped", r.clipped},
                           {"pass", static_cast<bool>(passed[i])}});
        }
        out << doc.dump(2) << '\n';
    } else {
        out << std::left << std::setw(20) << "label" << std::right << std::setw(10) << "fidelity" << std::setw(9)
            << "target" << std::setw(9) << "avg_dev" << std::setw(8) << "target" << std::setw(9) << "max_dev"
            << std::setw(8) << "target" << std::setw(9) << "purity" << std::setw(11) << "F(phys)"
            << "  status\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const MetricsRow &r = rows[i];
            out << std::left << std::setw(20) << r.label << std::right << std::setw(10) << fixed(r.fidelity, 4)
                << std::setw(9) << target_text(r.label, &PublishedTarget::fidelity) << std::setw(9)
                << fixed(r.avg_dev, 4) << std::setw(8) << target_text(r.label, &PublishedTarget::avg_dev)
                << std::setw(9) << fixed(r.max_dev, 4) << std::setw(8)
                << target_text(r.label, &PublishedTarget::max_dev) << std::setw(9) << fixed(r.purity, 4)
                << std::setw(11) << fixed(r.fidelity_physical, 4) << "  " << (passed[i] ? "PASS" : "FAIL")
                << '\n';
        }
        out << n_pass << '/' << rows.size() << " PASS (fidelity within " << kFidelityTolerance
            << ", deviations within " << kDeviationTolerance << ")\n";
    }
    return n_pass == rows.size() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// transpile

int cmd_transpile(const RunConfig &cfg, std::ostream &out) {
    const Circuit input = read_circuit_file(cfg.input_file);
    const CouplingMap map =
        cfg.coupling_map_file.empty() ? CouplingMap::default_star() : read_coupling_map_file(cfg.coupling_map_file);
    const Circuit output = transpile(input, map);

    const Circuit reference = input.without_measurements().widened(output.n_qubits());
    const double distance = distance_up_to_global_phase(unitary_of(reference), unitary_of(output.without_measurements()));
    const bool equivalent = distance < tol::kAlgebraic;

    if (!cfg.output_dir.empty()) {
        write_text_file_atomic(cfg.output_dir, format_circuit(output));
    }
    if (cfg.format == OutputFormat::Json) {
        out << nlohmann::json{{"gates_before", gate_count(input)},
                              {"gates_after", gate_count(output)},
                              {"equivalent", equivalent},
                              {"distance", distance},
                              {"circuit", format_circuit(output)}}
                   .dump(2)
            << '\n';
    } else {
        out << gate_count(input) << " → " << gate_count(output)
            << " gates, equivalent: " << (equivalent ? "yes" : "no") << '\n';
        if (cfg.output_dir.empty()) {
            out << format_circuit(output);
        }
    }
    return equivalent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// export

int cmd_export(const RunConfig &cfg, std::ostream &out) {
    for (const LabeledMatrix &m : embedded_dataset()) {
        write_text_file_atomic(join_path(cfg.output_dir, m.label + ".json"), matrix_to_json(m).dump(2) + "\n");
    }
    out << "wrote " << embedded_dataset().size() << " matrices to " << cfg.output_dir << '\n';
    return 0;
}

}  // namespace

NoiseModel parse_noise_spec(std::string_view spec) {
    NoiseModel noise;
    if (spec == "none") {
        return noise;
    }
    std::vector<std::string> tokens;
    std::string token;
    std::istringstream in{std::string(spec)};
    while (std::getline(in, token, ',')) {
        tokens.push_back(token);
    }
    auto number = [&](const std::string &text) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != text.size()) {
            throw Error(ErrorKind::InvalidArgument, "bad number '" + text + "' in noise spec");
        }
        return value;
    };
    bool seen_depol = false;
    bool seen_readout = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string &t = tokens[i];
        if (t.rfind("depol:", 0) == 0 && !seen_depol && i + 1 < tokens.size()) {
            noise.single_qubit_depolarizing = number(t.substr(6));
            noise.cnot_depolarizing = number(tokens[++i]);
            seen_depol = true;
        } else if (t.rfind("readout:", 0) == 0 && !seen_readout) {
            noise.readout_flip = number(t.substr(8));
            seen_readout = true;
        } else {
            throw Error(ErrorKind::InvalidArgument, "cannot parse noise spec '" + std::string(spec) + "'");
        }
    }
    if (!seen_depol && !seen_readout) {
        throw Error(ErrorKind::InvalidArgument, "empty noise spec");
    }
    noise.validate();
    return noise;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulation, tomography and verification toolkit for nondestructive Bell-state discrimination",
                 "belldisc"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char *env = std::getenv(kSeedEnvVar)) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception &) {
            err << "error: " << kSeedEnvVar << " must be an unsigned integer\n";
            return 2;
        }
    }
    std::string noise_text = "none";
    std::string format_text = "text";

    const auto noise_check = [](const std::string &text) -> std::string {
        try {
            parse_noise_spec(text);
        } catch (const Error &e) {
            return e.what();
        }
        return {};
    };
    const std::vector<std::string> bells = {"psi+", "psi-", "phi+", "phi-"};

    auto add_sampling = [&](CLI::App *sub) {
        sub->add_option("--shots", cfg.shots, "Shots per circuit")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--seed", cfg.seed, std::string("Root seed (default from ") + kSeedEnvVar + ")")
            ->capture_default_str();
        sub->add_option("--noise", noise_text, "none | depol:p1,p2 | readout:r, comma-chained")
            ->check(CLI::Validator(noise_check, "NOISE"))
            ->capture_default_str();
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    CLI::App *discriminate = app.add_subcommand("discriminate", "Run the phase and parity check experiments");
    discriminate->add_option("--bell", cfg.bell_kind, "Bell state")->required()->check(CLI::IsMember(bells));
    add_sampling(discriminate);
    discriminate->add_option("--out", cfg.output_dir, "Directory for probability tables and counts");
    add_format(discriminate);

    CLI::App *tomo = app.add_subcommand("tomo", "Three-qubit state tomography of a stage of the experiment");
    tomo->add_option("--bell", cfg.bell_kind, "Bell state")->required()->check(CLI::IsMember(bells));
    tomo->add_option("--stage", cfg.stage, "prep | phase | parity")
        ->check(CLI::IsMember({"prep", "phase", "parity"}))
        ->capture_default_str();
    add_sampling(tomo);
    tomo->add_option("--out", cfg.output_dir, "Directory for the report and bar-chart data");
    add_format(tomo);

    CLI::App *reproduce = app.add_subcommand("reproduce", "Recompute metrics of the published density matrices");
    reproduce->add_option("--data-dir", cfg.data_dir, "Load <label>.json matrices instead of the embedded set");
    add_format(reproduce);

    CLI::App *transpile_cmd = app.add_subcommand("transpile", "Rewrite a circuit onto a coupling map");
    transpile_cmd->add_option("input", cfg.input_file, "Circuit file")->required();
    transpile_cmd->add_option("--coupling-map", cfg.coupling_map_file, "Coupling map JSON (default: 5-qubit star)");
    transpile_cmd->add_option("--out", cfg.output_dir, "Write the transpiled circuit to this file");
    add_format(transpile_cmd);

    CLI::App *export_cmd = app.add_subcommand("export", "Write the embedded matrices as JSON files");
    export_cmd->add_option("--out", cfg.output_dir, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n";
        CLI::App *shown = &app;
        for (CLI::App *sub : app.get_subcommands({})) {
            if (sub->parsed()) {
                shown = sub;
            }
        }
        err << shown->help();
        return 2;
    }

    cfg.noise = parse_noise_spec(noise_text);
    cfg.format = format_text == "json" ? OutputFormat::Json
                 : format_text == "csv" ? OutputFormat::Csv
                                        : OutputFormat::Text;

    try {
        if (discriminate->parsed()) {
            cfg.subcommand = "discriminate";
            return cmd_discriminate(cfg, out);
        }
        if (tomo->parsed()) {
            cfg.subcommand = "tomo";
            return cmd_tomo(cfg, out);
        }
        if (reproduce->parsed()) {
            cfg.subcommand = "reproduce";
            return cmd_reproduce(cfg, out);
        }
        if (transpile_cmd->parsed()) {
            cfg.subcommand = "transpile";
            return cmd_transpile(cfg, out);
        }
        if (export_cmd->parsed()) {
            cfg.subcommand = "export";
            return cmd_export(cfg, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace belldisc::cli
