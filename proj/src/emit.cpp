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

#include "jaqal/emit.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

namespace jaqal {

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

namespace {

std::string emit_text(const Schedule &schedule) {
    std::string out;
    for (const auto &slice : schedule.slices) {
        bool first = true;
        for (const auto &entry : slice.entries) {
            if (!first) out += " | ";
            first = false;
            out += entry.gate.gate_name;
            for (int q : entry.gate.qubits) out += " " + std::to_string(q);
            for (double a : entry.gate.numeric_args) out += " " + format_number(a);
            if (entry.start_offset != 0.0) out += " @" + format_number(entry.start_offset);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const Schedule &schedule) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["register_size"] = schedule.register_size;
    ordered_json slices = ordered_json::array();
    for (const auto &slice : schedule.slices) {
        ordered_json s;
        s["duration"] = slice.duration;
        ordered_json entries = ordered_json::array();
        for (const auto &entry : slice.entries) {
            ordered_json e;
            e["gate"] = entry.gate.gate_name;
            e["qubits"] = entry.gate.qubits;
            e["args"] = entry.gate.numeric_args;
            e["start"] = entry.start_offset;
            entries.push_back(std::move(e));
        }
        s["entries"] = std::move(entries);
        slices.push_back(std::move(s));
    }
    doc["slices"] = std::move(slices);
    return doc.dump() + "\n";
}

}  // namespace

std::string emit_flat(const Schedule &schedule, EmitFormat format) {
    return format == EmitFormat::Json ? emit_json(schedule) : emit_text(schedule);
}

}  // namespace jaqal
