// Copyright 2026 The Jaqal Toolchain Authors
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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jaqal/emit.hpp"
#include "jaqal/formatter.hpp"
#include "jaqal/gates.hpp"
#include "jaqal/pipeline.hpp"
#include "jaqal/simulator.hpp"

namespace jaqal::cli {

namespace {

struct CliConfig {
    std::string command;
    std::string input;
    std::string out;
    std::uint64_t seed = 0;
    std::string gatedefs;
    int max_qubits = 16;
    std::string align = "start";
    std::string format = "text";
    bool sxx_literal = false;
    bool quantize_angles = false;
};

std::optional<std::string> read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string &path, const std::string &bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << bytes;
    return static_cast<bool>(f);
}

void report(std::ostream &err, const std::vector<Diagnostic> &diagnostics, const std::string &file) {
    for (const auto &d : diagnostics) err << render_diagnostic(d, file) << "\n";
}

class Command {
   public:
    Command(const CliConfig &config, std::ostream &out, std::ostream &err) : cfg_(config), out_(out), err_(err) {}

    int execute() {
        auto source = read_file(cfg_.input);
        if (!source) {
            err_ << "jaqal: cannot read '" << cfg_.input << "'\n";
            return kUsageError;
        }
        if (cfg_.command == "fmt") return emit(format_program(parse_source(*source)));

        GateLibrary lib = load_library();
        FlattenOptions flatten_options;
        flatten_options.align = cfg_.align == "end" ? Alignment::End : Alignment::Start;
        CompiledProgram program = compile(*source, lib, flatten_options);
        report(err_, program.warnings, cfg_.input);

        if (cfg_.command == "check") return kOk;
        if (cfg_.command == "expand") {
            return emit(emit_flat(program.schedule, cfg_.format == "json" ? EmitFormat::Json : EmitFormat::Text));
        }
        RunOutput result = run(program.schedule, lib, cfg_.seed, RunOptions{cfg_.max_qubits});
        int code = emit(result.rendered);
        if (code == kOk && !cfg_.out.empty()) {
            nlohmann::ordered_json meta;
            meta["seed"] = cfg_.seed;
            meta["prng"] = Xoshiro256StarStar::kAlgorithm;
            meta["register_size"] = program.schedule.register_size;
            meta["records"] = result.records.size();
            write_file(cfg_.out + ".meta.json", meta.dump(2) + "\n");
        }
        return code;
    }

    std::string diagnostic_file() const { return diagnostic_file_; }

   private:
    GateLibrary load_library() {
        LibraryOptions options{cfg_.sxx_literal, cfg_.quantize_angles};
        std::string path = cfg_.gatedefs;
        if (path.empty()) {
            if (const char *env = std::getenv("JAQAL_GATEDEFS")) path = env;
        }
        if (path.empty()) return GateLibrary::builtin(options);
        diagnostic_file_ = path;
        GateLibrary lib = load_gatedefs_file(path, options);
        diagnostic_file_.clear();
        return lib;
    }

    int emit(const std::string &bytes) {
        if (cfg_.out.empty()) {
            out_ << bytes;
            out_.flush();
            return kOk;
        }
        if (!write_file(cfg_.out, bytes)) {
            err_ << "jaqal: cannot write '" << cfg_.out << "'\n";
            return kUsageError;
        }
        return kOk;
    }

    const CliConfig &cfg_;
    std::ostream &out_;
    std::ostream &err_;
    std::string diagnostic_file_;
};

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CliConfig cfg;
    CLI::App app{"Jaqal toolchain: check, format, expand and simulate Jaqal programs", "jaqal"};
    app.add_option("command", cfg.command, "check | fmt | expand | run")
        ->required()
        ->check(CLI::IsMember({"check", "fmt", "expand", "run"}));
    app.add_option("file", cfg.input, "Jaqal source file")->required();
    app.add_option("--seed", cfg.seed, "sampling seed (run)");
    app.add_option("--out", cfg.out, "write output to this file instead of standard output");
    app.add_option("--gatedefs", cfg.gatedefs, "gate-definition JSON file (default: $JAQAL_GATEDEFS)");
    app.add_option("--max-qubits", cfg.max_qubits, "largest register the simulator accepts")
        ->check(CLI::Range(1, 30));
    app.add_option("--align", cfg.align, "timing inside parallel blocks")->check(CLI::IsMember({"start", "end"}));
    app.add_option("--format", cfg.format, "expand output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--sxx-literal", cfg.sxx_literal, "use exp(-i*pi/2*XX) for Sxx");
    app.add_flag("--quantize-angles", cfg.quantize_angles, "round angles to 40-bit fixed point");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "jaqal: " << e.what() << "\n" << "usage: jaqal <check|fmt|expand|run> <file> [options]\n";
        return kUsageError;
    }

    Command command(cfg, out, err);
    try {
        return command.execute();
    } catch (const JaqalError &e) {
        std::string file = command.diagnostic_file().empty() ? cfg.input : command.diagnostic_file();
        report(err, e.diagnostics(), file);
        return kProgramError;
    } catch (const std::exception &e) {
        err << "jaqal: internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace jaqal::cli
