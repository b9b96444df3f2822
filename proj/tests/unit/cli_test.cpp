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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "jaqal/pipeline.hpp"
#include "oracles.hpp"

using namespace jaqal;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("jaqal_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        ::unsetenv("JAQAL_GATEDEFS");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, RunOutputFormatExample) {
    auto r = invoke({"run", testing_util::corpus_path("output_format.jaqal")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "10\n10\n01\n01\n");
    EXPECT_EQ(r.err, "");
}

TEST_F(CliTest, CheckReportsArithmetic) {
    std::string bad = write("bad.jaqal", "register q[1]\nprepare_all\nRy q[0] pi/32\nmeasure_all\n");
    auto r = invoke({"check", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    EXPECT_NE(r.err.find(bad + ":3:11: error[ILLEGAL_CHARACTER]"), std::string::npos) << r.err;
}

TEST_F(CliTest, CheckCleanAndWarnings) {
    EXPECT_EQ(invoke({"check", testing_util::corpus_path("gst.jaqal")}).code, 0);
    std::string warn = write("w.jaqal", "register q[1]\nprepare_all\nprepare_all\nmeasure_all\n");
    auto r = invoke({"check", warn});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning[REDUNDANT_PREPARE]"), std::string::npos);
}

TEST_F(CliTest, ExpandJson) {
    auto r = invoke({"expand", testing_util::corpus_path("bell_macro.jaqal"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["register_size"], 2);
    EXPECT_EQ(doc["slices"].size(), 8u);
}

TEST_F(CliTest, ExpandAlignEnd) {
    std::string src = write("p.jaqal", "register q[2]\nprepare_all\n< Sx q[0] | { Sx q[1]; Sx q[1] } >\nmeasure_all\n");
    EXPECT_EQ(invoke({"expand", src}).out, "prepare_all\nSx 0 | Sx 1 | Sx 1 @1\nmeasure_all\n");
    EXPECT_EQ(invoke({"expand", src, "--align", "end"}).out, "prepare_all\nSx 0 @1 | Sx 1 | Sx 1 @1\nmeasure_all\n");
}

TEST_F(CliTest, FmtIsIdempotent) {
    auto once = invoke({"fmt", testing_util::corpus_path("gst.jaqal")});
    ASSERT_EQ(once.code, 0);
    std::string f = write("f.jaqal", once.out);
    EXPECT_EQ(invoke({"fmt", f}).out, once.out);
}

TEST_F(CliTest, OutFileAndSidecar) {
    std::string out = path("bell.txt");
    auto r = invoke({"run", testing_util::corpus_path("bell_loop.jaqal"), "--seed", "7", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "");
    std::string bytes = testing_util::read_text(out);
    EXPECT_EQ(bytes.size(), 1024u * 3);
    EXPECT_EQ(bytes.find('\r'), std::string::npos);
    auto meta = nlohmann::json::parse(testing_util::read_text(out + ".meta.json"));
    EXPECT_EQ(meta["seed"], 7);
    EXPECT_EQ(meta["prng"], "xoshiro256**/splitmix64");
    EXPECT_EQ(meta["records"], 1024);
}

TEST_F(CliTest, NoOutputOnFailure) {
    std::string bad = write("bad.jaqal", "register q[1]\nSx q[0]\n");
    std::string out = path("never.txt");
    EXPECT_EQ(invoke({"run", bad, "--out", out}).code, 1);
    EXPECT_FALSE(fs::exists(out));
    EXPECT_FALSE(fs::exists(out + ".meta.json"));
    std::string big = write("big.jaqal", "register q[17]\nprepare_all\nmeasure_all\n");
    EXPECT_EQ(invoke({"run", big, "--out", out}).code, 1);
    EXPECT_FALSE(fs::exists(out));
    EXPECT_EQ(invoke({"run", big, "--max-qubits", "17", "--out", out}).code, 0);
    EXPECT_TRUE(fs::exists(out));
}

TEST_F(CliTest, UsageErrors) {
    std::string ok = testing_util::corpus_path("bell_loop.jaqal");
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate", ok}).code, 2);
    EXPECT_EQ(invoke({"run"}).code, 2);
    EXPECT_EQ(invoke({"run", ok, "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"run", ok, "--seed", "x"}).code, 2);
    EXPECT_EQ(invoke({"run", ok, "--align", "middle"}).code, 2);
    EXPECT_EQ(invoke({"expand", ok, "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"run", ok, "--max-qubits", "0"}).code, 2);
    EXPECT_EQ(invoke({"run", path("missing.jaqal")}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, Gatedefs) {
    std::string defs = write("g.json", R"({"gates": [{"name": "Rx", "duration": 0.5}]})");
    std::string src = write("p.jaqal", "register q[3]\nprepare_all\n< Rx q[1] 0.1 | Sx q[2] >\nmeasure_all\n");
    auto flat = invoke({"expand", src, "--gatedefs", defs, "--format", "json"});
    ASSERT_EQ(flat.code, 0) << flat.err;
    auto doc = nlohmann::json::parse(flat.out);
    EXPECT_DOUBLE_EQ(doc["slices"][1]["duration"].get<double>(), 1.0);

    ::setenv("JAQAL_GATEDEFS", write("bad.json", "{oops").c_str(), 1);
    auto bad = invoke({"expand", src});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("GATEDEF_PARSE_ERROR"), std::string::npos) << bad.err;
    EXPECT_NE(bad.err.find("bad.json"), std::string::npos) << bad.err;
    EXPECT_EQ(invoke({"expand", src, "--gatedefs", defs}).code, 0);
    ::unsetenv("JAQAL_GATEDEFS");
}

TEST_F(CliTest, SxxLiteral) {
    // MS(0, pi) maps |00> to -i|11>
    auto r = invoke({"run", testing_util::corpus_path("bell_loop.jaqal"), "--sxx-literal"});
    ASSERT_EQ(r.code, 0);
    std::string expected;
    for (int i = 0; i < 1024; ++i) expected += "11\n";
    EXPECT_EQ(r.out, expected);
}

TEST_F(CliTest, RunIsDeterministic) {
    for (const char *name : {"bell_macro.jaqal", "bell_loop.jaqal", "gst.jaqal", "named_constants.jaqal"}) {
        auto a = invoke({"run", testing_util::corpus_path(name), "--seed", "7"});
        auto b = invoke({"run", testing_util::corpus_path(name), "--seed", "7"});
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << name;
    }
}

TEST(Pipeline, CheckSourceNeverThrows) {
    auto lib = GateLibrary::builtin();
    EXPECT_TRUE(check_source(testing_util::corpus("bell_loop.jaqal"), lib).empty());
    auto d = check_source("register q[1]\nSx q[5]\nFoo q[0]\n", lib);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].code, ErrorCode::IndexOutOfRange);
    EXPECT_EQ(render_diagnostic(d[1], "x.jaqal"), "x.jaqal:3:1: error[UNDEFINED_NAME]: 'Foo' is not a known gate or macro");
    EXPECT_EQ(check_source("/*", lib).at(0).code, ErrorCode::UnterminatedBlockComment);
}
