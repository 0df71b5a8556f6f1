// Copyright 2026 The jonesdqc1 Authors
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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>
#include "jonesdqc1/braid.hpp"
#include "jonesdqc1/discriminate.hpp"
#include "jonesdqc1/dqc1.hpp"
#include "jonesdqc1/errors.hpp"
#include "jonesdqc1/fibrep.hpp"
#include "jonesdqc1/jones.hpp"
#include "jonesdqc1/oracle.hpp"

namespace jonesdqc1::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char *kToolName = "jonesdqc1";

struct NoiseFlags {
    std::string model = "coherent";
    double fidelity = 0.99;
    double attenuation = 1.0;
    double readout_std = 0.01;
};

struct Config {
    std::string braid_text;
    int strands = 0;
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    double epsilon = 1.0;
    int repeats = 200;
    NoiseFlags noise;
    std::string cloud_out;
    int crossings = 3;
    int reps = 3;
    bool knots_only = false;
    std::string out_dir;
};

ojson metadata(const std::string &command, std::uint64_t seed, ojson config) {
    return {{"tool", kToolName}, {"version", JONESDQC1_VERSION}, {"command", command}, {"seed", seed},
            {"config", std::move(config)}};
}

/// Text and CSV outputs carry the metadata block as a leading '#' comment line.
std::string metadata_comment(const ojson &meta) { return "# " + meta.dump() + "\n"; }

BraidWord read_braid(const Config &c) {
    std::string_view text = c.braid_text;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_braid_json(text);
    }
    if (c.strands < 1) {
        throw ParseError(ParseError::Kind::syntax, 0, "--strands is required for text braids");
    }
    return parse_braid(text, c.strands);
}

NoiseModel noise_model(const Config &c) {
    NoiseModel m;
    m.gate_fidelity = c.noise.fidelity;
    m.coherent = c.noise.model == "coherent";
    m.attenuation = c.noise.attenuation;
    m.readout_noise_std = c.noise.readout_std;
    m.seed = c.seed;
    m.validate();
    return m;
}

ojson noise_config(const Config &c) {
    return {{"noise", c.noise.model},
            {"fidelity", c.noise.fidelity},
            {"attenuation", c.noise.attenuation},
            {"readout_std", c.noise.readout_std}};
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << content;
}

int cmd_eval(const Config &c, std::ostream &out) {
    const BraidWord braid = read_braid(c);
    const JonesResult r = eval_exact(braid);
    ojson meta = metadata("eval", c.seed, {{"braid", braid.str()}, {"strands", braid.strands()}, {"format", c.format}});
    if (c.format == "csv") {
        out << metadata_comment(meta) << results_to_csv({{braid, r}});
    } else {
        out << ojson{{"metadata", meta}, {"result", ojson::parse(result_to_json(braid, r))}}.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const Config &c, std::ostream &out) {
    const BraidWord braid = read_braid(c);
    const ojson result = ojson::parse(oracle_to_json(braid));
    ojson meta =
        metadata("oracle", c.seed, {{"braid", braid.str()}, {"strands", braid.strands()}, {"format", c.format}});
    if (c.format == "csv") {
        out << metadata_comment(meta) << "braid,strands,components,bracket_re,bracket_im,jones_re,jones_im\n";
        out << "\"" << braid.str() << "\"," << result["strands"] << "," << result["components"] << ","
            << result["bracket_re"] << "," << result["bracket_im"] << "," << result["jones_re"] << ","
            << result["jones_im"] << "\n";
    } else {
        out << ojson{{"metadata", meta}, {"result", result}}.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const Config &c, std::ostream &out) {
    const BraidWord braid = read_braid(c);
    const FibBasis basis = enumerate_fib_basis(braid.strands());
    const int w = writhe(braid);
    const int n = basis.register_qubits();
    if (c.repeats < 1) {
        throw DomainError("--repeats must be >= 1");
    }

    std::vector<MeasurementRecord> records;
    int repeats = c.repeats;
    if (c.noise.model == "none") {
        records.push_back(run_exact(braid, basis, c.epsilon));
        repeats = 1;
    } else {
        records = run_noisy(braid, basis, c.epsilon, noise_model(c), c.repeats);
    }
    std::vector<Complex> values;
    for (const auto &rec : records) {
        values.push_back(jones_from_m(rec.m_estimate, w, n, braid.strands()).value);
    }
    const JonesResult exact = eval_exact(braid);

    ojson config = {{"braid", braid.str()}, {"strands", braid.strands()}, {"epsilon", c.epsilon},
                    {"repeats", repeats},   {"format", c.format}};
    config.update(noise_config(c));
    const ojson meta = metadata("simulate", c.seed, config);

    std::string csv = "repeat,sx,sy,re_m,im_m,re_v,im_v\n";
    ojson samples = ojson::array();
    for (size_t r = 0; r < records.size(); r++) {
        const auto &rec = records[r];
        samples.push_back({{"repeat", r},
                           {"sx", rec.sx},
                           {"sy", rec.sy},
                           {"re_m", rec.m_estimate.real()},
                           {"im_m", rec.m_estimate.imag()},
                           {"re_v", values[r].real()},
                           {"im_v", values[r].imag()}});
        csv += std::to_string(r);
        for (const char *key : {"sx", "sy", "re_m", "im_m", "re_v", "im_v"}) {
            csv += "," + samples.back()[key].dump();
        }
        csv += "\n";
    }
    if (!c.cloud_out.empty()) {
        write_file(c.cloud_out, metadata_comment(meta) + csv);
    }
    if (c.format == "csv") {
        out << metadata_comment(meta) << csv;
        return kExitOk;
    }

    Complex mean = 0.0;
    for (const auto &v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    ojson summary = {{"count", values.size()}, {"mean_re", mean.real()}, {"mean_im", mean.imag()}};
    if (values.size() >= 3) {
        const EllipseStats e = ellipse_fit(values);
        summary["covariance"] = {{e.covariance(0, 0), e.covariance(0, 1)}, {e.covariance(1, 0), e.covariance(1, 1)}};
        summary["covariance_padded"] = e.padded;
    } else {
        summary["covariance"] = nullptr;
        summary["covariance_padded"] = nullptr;
    }
    out << ojson{{"metadata", meta},
                 {"exact", ojson::parse(result_to_json(braid, exact))},
                 {"summary", summary},
                 {"samples", samples}}
               .dump(2)
        << "\n";
    return kExitOk;
}

int cmd_discriminate(const Config &c, std::ostream &out) {
    const NoiseModel noise = noise_model(c);
    const Panel panel = select_panel(c.strands, c.crossings, c.reps, c.seed,
                                     c.knots_only ? ClosureFilter::knots_only : ClosureFilter::all_closures);
    const DiscriminationReport report = run_discrimination(panel, c.epsilon, noise, c.repeats);

    ojson config = {{"strands", c.strands},   {"crossings", c.crossings}, {"reps", c.reps},
                    {"knots_only", c.knots_only}, {"epsilon", c.epsilon},   {"repeats", c.repeats},
                    {"format", c.format}};
    config.update(noise_config(c));
    const ojson meta = metadata("discriminate", c.seed, config);
    const std::string report_json =
        ojson{{"metadata", meta}, {"report", ojson::parse(report_to_json(report))}}.dump(2) + "\n";

    if (!c.out_dir.empty()) {
        std::filesystem::create_directories(c.out_dir);
        const std::filesystem::path dir(c.out_dir);
        write_file(dir / "report.json", report_json);
        write_file(dir / "clouds.csv", metadata_comment(meta) + clouds_to_csv(report));
        write_file(dir / "ellipses.csv", metadata_comment(meta) + ellipses_to_csv(report));
    }
    if (c.format == "csv") {
        out << metadata_comment(meta) << clouds_to_csv(report);
    } else {
        out << report_json;
    }
    return kExitOk;
}

int cmd_basis(const Config &c, std::ostream &out) {
    const FibBasis basis = enumerate_fib_basis(c.strands);
    const ojson meta = metadata("basis", c.seed, {{"strands", c.strands}, {"format", c.format}});
    if (c.format == "json") {
        ojson members = ojson::array();
        for (const auto &s : basis.members()) {
            members.push_back({{"string", s.str()},
                               {"encoded", encode(s, basis)},
                               {"subspace", s.subspace() == Subspace::P ? "P" : "S"}});
        }
        out << ojson{{"metadata", meta},
                     {"result",
                      {{"strands", basis.strands()},
                       {"register_qubits", basis.register_qubits()},
                       {"p_count", basis.p_count()},
                       {"s_count", basis.s_count()},
                       {"members", members}}}}
                   .dump(2)
            << "\n";
    } else {
        out << metadata_comment(meta) << basis_listing(basis);
    }
    return kExitOk;
}

int cmd_unitary(const Config &c, std::ostream &out) {
    const BraidWord braid = read_braid(c);
    const FibBasis basis = enumerate_fib_basis(braid.strands());
    const ojson meta = metadata("unitary", c.seed, {{"braid", braid.str()}, {"strands", braid.strands()}});
    out << ojson{{"metadata", meta}, {"result", ojson::parse(matrix_to_json(braid_unitary(braid, basis)))}}.dump()
        << "\n";
    return kExitOk;
}

void add_format(CLI::App *sub, Config &c, std::vector<std::string> choices) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(choices)));
}

void add_braid(CLI::App *sub, Config &c) {
    sub->add_option("braid", c.braid_text,
                    "Braid word: tokens s<k>, s<k>^-1, k, -k (empty = identity), or JSON {\"strands\":m,\"word\":[...]}");
    sub->add_option("--strands,-m", c.strands, "Number of strands");
}

void add_noise(CLI::App *sub, Config &c) {
    sub->add_option("--noise", c.noise.model, "Noise model (default coherent)")
        ->check(CLI::IsMember({"coherent", "depolarizing", "none"}));
    sub->add_option("--fidelity", c.noise.fidelity, "Per-gate process fidelity (default 0.99)");
    sub->add_option("--attenuation", c.noise.attenuation, "End-to-end signal scale (default 1.0)");
    sub->add_option("--readout-std", c.noise.readout_std, "Gaussian readout noise std (default 0.01)");
    sub->add_option("--epsilon", c.epsilon, "Control-qubit polarization in (0,1] (default 1.0)");
    sub->add_option("--repeats", c.repeats, "Monte Carlo repeats (default 200)");
    sub->add_option("--seed", c.seed, "RNG seed (default 1729)");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Jones polynomial at t = exp(2 pi i/5) via one-clean-qubit simulation", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", JONESDQC1_VERSION);
    Config c;

    auto *eval = app.add_subcommand("eval", "Exact Jones value from the weighted trace");
    add_braid(eval, c);
    add_format(eval, c, {"json", "csv"});

    auto *simulate = app.add_subcommand("simulate", "DQC1 density-matrix simulation, optionally noisy");
    add_braid(simulate, c);
    add_noise(simulate, c);
    add_format(simulate, c, {"json", "csv"});
    simulate->add_option("--cloud-out", c.cloud_out, "Also write the per-repeat CSV cloud to this file");

    auto *oracle = app.add_subcommand("oracle", "Kauffman bracket state sum");
    add_braid(oracle, c);
    add_format(oracle, c, {"json", "csv"});

    auto *discriminate = app.add_subcommand("discriminate", "Knot-discrimination experiment");
    discriminate->add_option("--strands,-m", c.strands, "Number of strands (default 4)");
    discriminate->add_option("--crossings", c.crossings, "Crossings per braid (default 3)");
    discriminate->add_option("--reps", c.reps, "Braids per knot class (default 3)");
    discriminate->add_flag("--knots-only", c.knots_only, "Cluster one-component closures only");
    discriminate->add_option("--out-dir", c.out_dir, "Write report.json, clouds.csv, ellipses.csv here");
    add_noise(discriminate, c);
    add_format(discriminate, c, {"json", "csv"});

    auto *basis = app.add_subcommand("basis", "List the encoded Fibonacci basis");
    basis->add_option("--strands,-m", c.strands, "Number of strands")->required();
    add_format(basis, c, {"text", "json"});

    auto *unitary = app.add_subcommand("unitary", "Braid unitary as JSON (row-major [re, im] pairs)");
    add_braid(unitary, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) {
            return cmd_eval(c, out);
        }
        if (*simulate) {
            return cmd_simulate(c, out);
        }
        if (*oracle) {
            return cmd_oracle(c, out);
        }
        if (*discriminate) {
            if (c.strands == 0) {
                c.strands = 4;
            }
            return cmd_discriminate(c, out);
        }
        if (*basis) {
            if (c.format == "json" && basis->count("--format") == 0) {
                c.format = "text";
            }
            return cmd_basis(c, out);
        }
        if (*unitary) {
            return cmd_unitary(c, out);
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InsufficientDataError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace jonesdqc1::cli
