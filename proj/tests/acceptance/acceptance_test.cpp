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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "jaqal/parser.hpp"
#include "jaqal/pipeline.hpp"
#include "jaqal/simulator.hpp"
#include "jaqal/timeline.hpp"
#include "oracles.hpp"

using namespace jaqal;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const GateLibrary &lib() {
    static const GateLibrary l = GateLibrary::builtin();
    return l;
}

const std::vector<std::string> kCorpus = {"bell_macro.jaqal", "bell_loop.jaqal", "gst.jaqal", "output_format.jaqal"};
const std::vector<std::string> kIllegal = {"illegal/divide_pi_32.jaqal", "illegal/negated_angle.jaqal",
                                           "illegal/multiply_pi.jaqal", "illegal/divide_pi_8.jaqal",
                                           "illegal/crz_macro.jaqal"};

const char *kHadamard = "macro hadamard target {\n    Sy target\n    Px target\n}\n";
const char *kCnot =
    "macro cnot control target {\n    Sy control\n    Sxx control target\n    <Sxd control | Sxd target>\n"
    "    Syd control\n}\n";

Check output_format() {
    Check c;
    auto t0 = Clock::now();
    auto out = run(compile(testing_util::corpus("output_format.jaqal"), lib()).schedule, lib(), 0);
    double t = seconds_since(t0);
    c.require(out.rendered == "10\n10\n01\n01\n", "got bytes '" + out.rendered + "'");
    c.require(t < 1.0, "took " + std::to_string(t) + " s");
    return c;
}

Check slice_resolution() {
    Check c;
    auto a = analyze(parse_source("register q[7]\nmap ancilla q[1:7:2]\n"), lib());
    const auto &q = a.table.aliases.at("ancilla").qubits;
    c.require(q == std::vector<int>({1, 3, 5}), "ancilla resolved to a different set");
    c.require(q == oracle::python_slice(7, 1, 7, 2), "disagrees with brute-force enumeration");
    return c;
}

Check corpus_suite() {
    Check c;
    auto t0 = Clock::now();
    for (const auto &name : kCorpus) {
        try {
            auto program = compile(testing_util::corpus(name), lib());
            c.require(program.warnings.empty(), name + " produced diagnostics");
            auto out = run(program.schedule, lib(), 0);
            c.require(out.records.size() == program.schedule.measure_count, name + " record count");
        } catch (const JaqalError &e) {
            c.require(false, name + ": " + e.what());
        }
    }
    for (const auto &name : kIllegal) {
        std::string src = testing_util::corpus(name);
        try {
            parse_source(src);
            c.require(false, name + " was accepted");
        } catch (const JaqalError &e) {
            const SourceSpan &s = e.span();
            char at = s.byte_offset < src.size() ? src[s.byte_offset] : '\0';
            bool arithmetic = at == '/' || at == '*' || at == '-' || at == '+';
            c.require(e.code() == ErrorCode::IllegalCharacter && arithmetic,
                      name + " failed elsewhere: " + e.what());
        }
    }
    c.require(check_source(testing_util::corpus("randomness_stub.jaqal"), lib()).empty(),
              "comment-only loop body rejected");
    double t = seconds_since(t0);
    c.require(t < 5.0, "took " + std::to_string(t) + " s");
    return c;
}

double max_diff(const ComplexMatrix &m, const oracle::Mat &o) {
    double d = 0;
    for (std::size_t r = 0; r < o.n; ++r)
        for (std::size_t k = 0; k < o.n; ++k) d = std::max(d, std::abs(m(r, k) - o.at(r, k)));
    return d;
}

Check gate_math() {
    Check c;
    std::mt19937_64 gen(20200330);
    std::uniform_real_distribution<double> angle(-2 * pi, 2 * pi);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double phi = angle(gen), theta = angle(gen);
        worst = std::max(worst, max_diff(lib().unitary("R", std::vector<double>{phi, theta}), oracle::rotation(phi, theta)));
        worst = std::max(worst,
                         max_diff(lib().unitary("MS", std::vector<double>{phi, theta}), oracle::molmer_sorensen(phi, theta)));
    }
    c.require(worst <= 1e-12, "oracle deviation " + std::to_string(worst));
    double unitarity = 0;
    for (int draw = 0; draw < 100; ++draw) {
        for (const auto &e : lib().entries()) {
            if (!e.unitary) continue;
            std::vector<double> a(static_cast<std::size_t>(e.signature.num_angles()));
            for (auto &x : a) x = angle(gen);
            unitarity = std::max(unitarity, lib().unitary(e.signature.name, a).unitarity_error());
        }
    }
    c.require(unitarity <= 1e-12, "unitarity error " + std::to_string(unitarity));
    return c;
}

ComplexMatrix composed(const std::string &src) {
    FlattenOptions opts;
    opts.enforce_preparation = false;
    return circuit_unitary(compile(src, lib(), opts).schedule, lib());
}

Check macro_equivalence() {
    Check c;
    double s = 1 / std::sqrt(2.0);
    ComplexMatrix h{{s, s}, {s, -s}};
    double fh = phase_insensitive_overlap(composed(std::string(kHadamard) + "register q[1]\nhadamard q[0]\n"), h);
    // control q[0] is bit 0 of the index, target q[1] is bit 1
    ComplexMatrix cnot(4);
    for (std::size_t k = 0; k < 4; ++k) cnot((k & 1) ? k ^ 2 : k, k) = 1.0;
    double fc = phase_insensitive_overlap(composed(std::string(kCnot) + "register q[2]\ncnot q[0] q[1]\n"), cnot);
    c.require(fh >= 1 - 1e-10, "hadamard overlap " + std::to_string(fh));
    c.require(fc >= 1 - 1e-10, "cnot overlap " + std::to_string(fc));
    return c;
}

Check bell_statistics() {
    Check c;
    auto out = run(compile(testing_util::corpus("bell_loop.jaqal"), lib()).schedule, lib(), 0);
    std::size_t zeros = 0, lines = 0;
    bool only_correlated = true;
    std::istringstream in(out.rendered);
    for (std::string line; std::getline(in, line); ++lines) {
        if (line == "00") ++zeros;
        else if (line != "11") only_correlated = false;
    }
    double frac = static_cast<double>(zeros) / 1024.0;
    c.require(lines == 1024, std::to_string(lines) + " lines");
    c.require(only_correlated, "uncorrelated record");
    c.require(frac >= 0.45 && frac <= 0.55, "00 fraction " + std::to_string(frac));
    std::string golden = testing_util::read_text(std::string(JAQAL_GOLDEN_DIR) + "/bell_loop_seed0.txt");
    c.require(!golden.empty() && golden == out.rendered, "differs from golden output");
    return c;
}

Check scheduling() {
    Check c;
    GateLibrary timed = load_gatedefs(R"({"gates": [{"name": "Rx", "duration": 0.5}]})");
    auto s = compile("register q[3]\nprepare_all\n< Rx q[1] 0.1 | Sx q[2] >\nmeasure_all\n", timed).schedule;
    c.require(s.slices.size() == 3 && s.slices[1].entries.size() == 2, "parallel block is not one slice");
    if (!c.ok) return c;
    const auto &slice = s.slices[1];
    c.require(slice.entries[0].start_offset == 0.0 && slice.entries[1].start_offset == 0.0, "gates do not start at 0");
    auto tl = compute_timeline(s, timed);
    double t0 = tl.slice_starts[1], end = t0 + slice.duration;
    bool padded = false;
    for (const auto &e : tl.events) {
        if (e.slice == 1 && e.qubit == 1 && e.is_padding) {
            padded = e.start == t0 + timed.duration("Rx") && e.start + e.duration == end;
        }
    }
    c.require(padded, "q[1] has no idle pad to the slice end");
    try {
        compile("register q[3]\nprepare_all\n< Sxx q[0] q[1] | Sx q[2] >\nmeasure_all\n", lib());
        c.require(false, "Sxx in parallel accepted");
    } catch (const JaqalError &e) {
        c.require(e.code() == ErrorCode::TwoQubitNotAlone, std::string("wrong error: ") + e.what());
    }
    return c;
}

Check automaton() {
    Check c;
    const std::vector<std::string> rejected = {
        "register q[1]\nSx q[0]\nprepare_all\nmeasure_all\n",
        "register q[1]\nprepare_all\nmeasure_all\nSx q[0]\n",
        "register q[1]\nprepare_all\nmeasure_all\nmeasure_all\n",
    };
    for (const auto &src : rejected) {
        try {
            compile(src, lib());
            c.require(false, "accepted:\n" + src);
        } catch (const JaqalError &e) {
            c.require(e.code() == ErrorCode::UnpreparedGate, std::string("wrong error: ") + e.what());
        }
    }
    auto gst = compile(testing_util::corpus("gst.jaqal"), lib()).schedule;
    std::string alpha = slice_alphabet(gst, lib());
    auto measures = static_cast<std::size_t>(std::count(alpha.begin(), alpha.end(), 'M'));
    auto out = run(gst, lib(), 0);
    c.require(measures == 9 && gst.measure_count == 9, "GST has " + std::to_string(measures) + " measure_all");
    c.require(out.records.size() == 9, "GST produced " + std::to_string(out.records.size()) + " records");
    return c;
}

Check determinism() {
    Check c;
    fs::path dir = fs::temp_directory_path() / ("jaqal_accept_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    for (const auto &name : kCorpus) {
        std::string outs[2];
        for (int i = 0; i < 2; ++i) {
            fs::path out = dir / (std::to_string(i) + ".txt");
            std::string cmd = std::string("\"") + JAQAL_BINARY + "\" run \"" + testing_util::corpus_path(name) +
                              "\" --seed 7 --out \"" + out.string() + "\"";
            int rc = std::system(cmd.c_str());
            c.require(rc == 0, name + ": exit status " + std::to_string(rc));
            outs[i] = testing_util::read_text(out.string());
        }
        c.require(!outs[0].empty() && outs[0] == outs[1], name + " differs between runs");
    }
    fs::remove_all(dir);
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"output-format golden bytes", output_format},
        {"slice resolution", slice_resolution},
        {"corpus parse suite", corpus_suite},
        {"gate-math oracle suite", gate_math},
        {"macro equivalence", macro_equivalence},
        {"bell statistics", bell_statistics},
        {"parallel scheduling", scheduling},
        {"prepare/measure automaton", automaton},
        {"run determinism", determinism},
    };
    int failures = 0;
    for (const auto &[name, fn] : criteria) {
        Check c;
        try {
            c = fn();
        } catch (const std::exception &e) {
            c.ok = false;
            c.why << "exception: " << e.what();
        }
        if (c.ok) {
            std::cout << "PASS " << name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << name << ": " << c.why.str() << "\n";
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
