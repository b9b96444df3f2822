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

#include <gtest/gtest.h>

#include <random>

#include "jaqal/formatter.hpp"
#include "jaqal/parser.hpp"
#include "oracles.hpp"

using namespace jaqal;

namespace {

// Random syntactically valid program text with irregular layout.
class ProgramGenerator {
   public:
    explicit ProgramGenerator(std::uint64_t seed) : gen_(seed) {}

    std::string program() {
        std::string out = pick({"", "// header\n", "\n\n"});
        out += "register q[4]" + ws() + "\n";
        if (coin()) out += "map a q[1:4:2]\n";
        if (coin()) out += "let t" + ws() + "0.25\n";
        if (coin()) out += "macro m x y {" + statement(false, 1) + "\n}\n";
        int n = 1 + static_cast<int>(gen_() % 5);
        for (int i = 0; i < n; ++i) out += statement(false, 0) + pick({"\n", " // c\n", "\n\n", ";"}) ;
        return out;
    }

   private:
    bool coin() { return gen_() % 2 == 0; }
    std::string pick(std::initializer_list<const char *> options) {
        auto it = options.begin();
        std::advance(it, gen_() % options.size());
        return *it;
    }
    std::string ws() { return pick({" ", "  ", "\t", " /* x */ "}); }

    std::string gate() {
        switch (gen_() % 5) {
            case 0: return "Sx q[" + std::to_string(gen_() % 4) + "]";
            case 1: return "Rz" + ws() + "q[0] -1.5";
            case 2: return "R q[2] 0.1 t";
            case 3: return "Sxx q[0] q[3]";
            default: return "prepare_all";
        }
    }

    std::string block(bool parallel, int depth) {
        int n = 1 + static_cast<int>(gen_() % 3);
        bool multiline = coin();
        std::string sep = multiline ? "\n" : (parallel ? " | " : "; ");
        std::string out = parallel ? "<" : "{";
        if (multiline) out += "\n";
        for (int i = 0; i < n; ++i) {
            if (i) out += sep;
            out += statement(parallel, depth + 1);
        }
        out += multiline ? "\n" : " ";
        out += parallel ? ">" : "}";
        return out;
    }

    std::string statement(bool in_parallel, int depth) {
        if (depth >= 3) return gate();
        switch (gen_() % 6) {
            case 0: return in_parallel ? gate() : "loop " + std::to_string(1 + gen_() % 3) + " " + block(false, depth);
            case 1: return in_parallel ? block(false, depth) : block(true, depth);
            default: return gate();
        }
    }

    std::mt19937_64 gen_;
};

}  // namespace

TEST(Formatter, CanonicalLayout) {
    std::string src =
        "register q[2]   // two\nmacro h t {Sy t; Px t}\n< Sx q[0] | { Sx q[1] ; Sy q[1] } >\nloop 2 { h q[0] }\n";
    std::string expected =
        "register q[2]\n"
        "macro h t {\n"
        "    Sy t\n"
        "    Px t\n"
        "}\n"
        "<\n"
        "    Sx q[0]\n"
        "    {\n"
        "        Sx q[1]\n"
        "        Sy q[1]\n"
        "    }\n"
        ">\n"
        "loop 2 {\n"
        "    h q[0]\n"
        "}\n";
    EXPECT_EQ(format_program(parse_source(src)), expected);
}

TEST(Formatter, KeepsLiteralSpelling) {
    std::string out = format_program(parse_source("let x 0.50\nlet y -0007\nmap a q[1:7:2]\nmap b q[::3]\n"));
    EXPECT_EQ(out, "let x 0.50\nlet y -0007\nmap a q[1:7:2]\nmap b q[::3]\n");
}

TEST(Formatter, EmptyProgram) { EXPECT_EQ(format_program(parse_source("// nothing\n")), ""); }

TEST(Formatter, CorpusRoundTrip) {
    for (const char *name : {"bell_macro.jaqal", "bell_loop.jaqal", "gst.jaqal", "output_format.jaqal",
                             "randomness_stub.jaqal", "named_constants.jaqal"}) {
        auto ast = parse_source(testing_util::corpus(name));
        std::string once = format_program(ast);
        EXPECT_TRUE(structurally_equal(ast, parse_source(once))) << name;
        EXPECT_EQ(format_program(parse_source(once)), once) << name;
    }
}

TEST(Formatter, RandomProgramsRoundTrip) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::string src = ProgramGenerator(seed).program();
        AstProgram ast;
        ASSERT_NO_THROW(ast = parse_source(src)) << src;
        std::string once = format_program(ast);
        AstProgram again;
        ASSERT_NO_THROW(again = parse_source(once)) << once;
        EXPECT_TRUE(structurally_equal(ast, again)) << src << "\n---\n" << once;
        EXPECT_EQ(format_program(again), once);
        EXPECT_EQ(once.back(), '\n');
        EXPECT_EQ(once.find('\r'), std::string::npos);
    }
}
