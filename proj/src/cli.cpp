// Copyright 2026 The nohide Authors
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

#include "nohide/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nohide/nohiding.hpp"
#include "nohide/report.hpp"
#include "nohide/simulator.hpp"
#include "nohide/zx.hpp"

namespace nohide::cli {
namespace {

// Bad user input, as opposed to a failure inside the library.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string variant = "eq2";
    std::vector<double> p_values;
    std::string grid = "default";
    std::string shots = "exact";
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "json";
    std::string circuit_file;
};

tomo::Shots parse_shots(const std::string& s) {
    if (s == "exact") return tomo::kExact;
    std::uint64_t n = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || end != s.data() + s.size() || n == 0) {
        throw ConfigError("--shots must be a positive integer or 'exact', got '" + s + "'");
    }
    return n;
}

RandomizerTag variant_of(const RunConfig& cfg) {
    try {
        return parse_tag(cfg.variant);
    } catch (const std::invalid_argument&) {
        throw ConfigError("--variant must be eq1, eq2 or eq6, got '" + cfg.variant + "'");
    }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
    } else {
        report::write_atomic(cfg.out, text);
    }
}

std::string dump(const report::json& j) { return j.dump(2) + "\n"; }

void cmd_perfect(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format != "json") throw ConfigError("perfect only writes json");
    const RandomizerTag tag = variant_of(cfg);
    const tomo::Shots shots = parse_shots(cfg.shots);
    PerfectResult r = run_perfect(tag, default_input_state(), shots, cfg.seed);
    emit(cfg, dump(report::perfect_json(r, tag, shots, cfg.seed)), out);
}

void cmd_imperfect(const RunConfig& cfg, std::ostream& out) {
    SweepOptions opt;
    opt.tag = variant_of(cfg);
    opt.shots = parse_shots(cfg.shots);
    opt.seed = cfg.seed;
    std::vector<double> ps = cfg.p_values;
    if (ps.empty()) {
        if (cfg.grid == "none") throw ConfigError("--grid none needs at least one --p");
        ps = default_p_grid();
    }
    for (double p : ps) {
        if (!(p >= 0 && p <= 1)) throw ConfigError("--p values must lie in [0, 1]");
    }
    auto records = run_sweep(ps, opt);
    if (cfg.format == "csv") {
        emit(cfg, report::sweep_csv(records), out);
    } else {
        emit(cfg, dump(report::sweep_json(records)), out);
    }
}

void cmd_zx(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format != "json") throw ConfigError("zx only writes json");
    const RandomizerTag tag = variant_of(cfg);
    zx::Derivation der = zx::scripted_derivation();
    report::json stages = report::json::array();
    for (const auto& d : der.after_stage) stages.push_back(report::diagram_json(d));

    zx::Diagram before = zx::circuit_to_zx(build_full_circuit(tag, /*decomposed=*/true));
    zx::SimplifyResult simp = zx::simplify(before);

    report::json j = {
        {"derivation",
         {{"before", report::diagram_json(der.initial)},
          {"after", report::diagram_json(der.final)},
          {"stages", std::move(stages)},
          {"trace", report::trace_json(der.trace)}}},
        {"simplify",
         {{"variant", std::string(tag_name(tag))},
          {"before", report::diagram_json(before)},
          {"after", report::diagram_json(simp.diagram)},
          {"trace", report::trace_json(simp.trace)}}}};
    emit(cfg, dump(j), out);
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    std::ifstream f(cfg.circuit_file, std::ios::binary);
    if (!f) throw ConfigError("cannot read circuit file '" + cfg.circuit_file + "'");
    std::ostringstream text;
    text << f.rdbuf();
    Circuit c = parse_circuit(text.str());  // ParseError is a config error
    StateVector s = run_statevector(c, StateVector::zeros(c.num_qubits()));
    emit(cfg, dump(report::statevector_json(s)), out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"No-hiding experiment laboratory: simulation, tomography and ZX rewriting"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool sweep) {
        sub->add_option("--variant", cfg.variant, "Randomizer: eq1, eq2 or eq6")
            ->check(CLI::IsMember({"eq1", "eq2", "eq6"}));
        sub->add_option("--shots", cfg.shots, "Shots per basis, or 'exact'");
        sub->add_option("--seed", cfg.seed, "Master seed");
        sub->add_option("--out", cfg.out, "Output path (default: stdout)");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        if (sweep) {
            sub->add_option("--p", cfg.p_values, "Bleaching probability (repeatable)")
                ->check(CLI::Range(0.0, 1.0));
            sub->add_option("--grid", cfg.grid, "default or none")
                ->check(CLI::IsMember({"default", "none"}));
        }
    };
    auto* perfect = app.add_subcommand("perfect", "Erasure + decoder, tomography of both outputs");
    common(perfect, false);
    auto* imperfect = app.add_subcommand("imperfect", "Imperfect-bleaching sweep over p");
    common(imperfect, true);
    auto* zxc = app.add_subcommand("zx", "Scripted diagrammatic derivation and simplification");
    common(zxc, false);
    auto* sim = app.add_subcommand("simulate", "Run a circuit file from |0...0>");
    sim->add_option("file", cfg.circuit_file, "Circuit text file")->required();
    sim->add_option("--out", cfg.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*perfect) cmd_perfect(cfg, out);
        else if (*imperfect) cmd_imperfect(cfg, out);
        else if (*zxc) cmd_zx(cfg, out);
        else if (*sim) cmd_simulate(cfg, out);
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        err << cfg.circuit_file << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
        return kExitConfig;
    } catch (const zx::DerivationError& e) {
        err << "error: " << e.what() << " (stage " << e.stage() << ")\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace nohide::cli
