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

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "jaqal/emit.hpp"
#include "jaqal/pipeline.hpp"

using namespace jaqal;

namespace {

Schedule sched(std::string_view src) { return compile(src, GateLibrary::builtin()).schedule; }

}  // namespace

TEST(Emit, Text) {
    auto s = sched("register q[3]\nprepare_all\n< Rx q[0] 0.25 | { Sx q[1]; Sy q[1] } >\nMS q[0] q[2] 0 1.5\nmeasure_all\n");
    EXPECT_EQ(emit_flat(s, EmitFormat::Text),
              "prepare_all\n"
              "Rx 0 0.25 | Sx 1 | Sy 1 @1\n"
              "MS 0 2 0 1.5\n"
              "measure_all\n");
}

TEST(Emit, Json) {
    auto s = sched("register q[2]\nprepare_all\n< Sx q[0] | Rz q[1] -1 >\nmeasure_all\n");
    std::string out = emit_flat(s, EmitFormat::Json);
    EXPECT_EQ(out.back(), '\n');
    EXPECT_EQ(out.substr(0, 37), R"({"register_size":2,"slices":[{"durati)");
    auto doc = nlohmann::json::parse(out);
    ASSERT_EQ(doc["slices"].size(), 3u);
    const auto &par = doc["slices"][1];
    EXPECT_DOUBLE_EQ(par["duration"].get<double>(), 1.0);
    ASSERT_EQ(par["entries"].size(), 2u);
    EXPECT_EQ(par["entries"][1]["gate"], "Rz");
    EXPECT_EQ(par["entries"][1]["qubits"], nlohmann::json::array({1}));
    EXPECT_DOUBLE_EQ(par["entries"][1]["args"][0].get<double>(), -1.0);
    EXPECT_DOUBLE_EQ(par["entries"][1]["start"].get<double>(), 0.0);
    std::vector<std::string> keys;
    for (auto it = par["entries"][0].begin(); it != par["entries"][0].end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys.size(), 4u);
}

TEST(Emit, JsonKeyOrder) {
    auto out = emit_flat(sched("register q[1]\nprepare_all\nSx q[0]\nmeasure_all\n"), EmitFormat::Json);
    auto pos = [&](const char *k) { return out.find(k); };
    EXPECT_LT(pos("\"register_size\""), pos("\"slices\""));
    EXPECT_LT(pos("\"duration\""), pos("\"entries\""));
    EXPECT_LT(pos("\"gate\""), pos("\"qubits\""));
    EXPECT_LT(pos("\"qubits\""), pos("\"args\""));
    EXPECT_LT(pos("\"args\""), pos("\"start\""));
}

TEST(Emit, ShortestNumbers) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(-2.5), "-2.5");
    EXPECT_EQ(format_number(0.09817477042), "0.09817477042");
    for (double v : {M_PI, 1e-300, 123456.789, -0.0}) EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(Emit, Deterministic) {
    auto s = sched("register q[2]\nloop 3 { prepare_all\n Sxx q[0] q[1]\n measure_all }\n");
    EXPECT_EQ(emit_flat(s, EmitFormat::Json), emit_flat(s, EmitFormat::Json));
    EXPECT_EQ(emit_flat(s, EmitFormat::Text), emit_flat(s, EmitFormat::Text));
}

TEST(Emit, EmptyBodyEmitsNothing) { EXPECT_EQ(emit_flat(sched("register q[1]\n"), EmitFormat::Text), ""); }

TEST(Emit, LoopUnrollsToConsecutiveSlices) {
    auto s = sched("register q[1]\nprepare_all\nSx q[0]\nloop 8 { Sy q[0] }\nSx q[0]\nmeasure_all\n");
    std::string eight;
    for (int i = 0; i < 8; ++i) eight += "Sy 0\n";
    EXPECT_EQ(emit_flat(s, EmitFormat::Text), "prepare_all\nSx 0\n" + eight + "Sx 0\nmeasure_all\n");
}
