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

#include "jaqal/timeline.hpp"

#include <algorithm>
#include <map>

namespace jaqal {

std::vector<TimelineEvent> Timeline::for_qubit(int qubit) const {
    std::vector<TimelineEvent> out;
    for (const auto &e : events) {
        if (e.qubit == qubit) out.push_back(e);
    }
    return out;
}

namespace {

// Padding takes the name of an idle gate with exactly its length when one
// exists, preferring the idle partner of the gate that ends the slice.
std::string padding_name(const GateLibrary &lib, const std::string &longest_gate, double length) {
    if (const auto *idle = lib.find("I_" + longest_gate); idle && idle->is_idle && idle->num_qubits == 1 &&
                                                          idle->duration == length) {
        return idle->name;
    }
    for (const auto &entry : lib.entries()) {
        const auto &sig = entry.signature;
        if (sig.is_idle && sig.num_qubits == 1 && sig.duration == length) return sig.name;
    }
    return "idle";
}

}  // namespace

Timeline compute_timeline(const Schedule &schedule, const GateLibrary &lib) {
    Timeline out;
    double t = 0.0;
    for (std::size_t s = 0; s < schedule.slices.size(); ++s) {
        const TimeSlice &slice = schedule.slices[s];
        out.slice_starts.push_back(t);

        std::map<int, std::vector<TimelineEvent>> per_qubit;
        std::string longest;
        double longest_end = -1.0;
        for (const auto &entry : slice.entries) {
            const GateSignature &sig = lib.signature(entry.gate.gate_name);
            double end = entry.start_offset + entry.duration;
            if (end > longest_end) {
                longest_end = end;
                longest = sig.name;
            }
            auto add = [&](int q) {
                per_qubit[q].push_back(TimelineEvent{q, sig.name, t + entry.start_offset, entry.duration, s, false});
            };
            if (sig.is_unitary()) {
                for (int q : entry.gate.qubits) add(q);
            } else {
                for (int q = 0; q < schedule.register_size; ++q) add(q);
            }
        }

        double slice_end = t + slice.duration;
        for (auto &[q, events] : per_qubit) {
            std::stable_sort(events.begin(), events.end(),
                             [](const TimelineEvent &a, const TimelineEvent &b) { return a.start < b.start; });
            double cursor = t;
            auto pad_to = [&](double until) {
                if (until > cursor) {
                    double len = until - cursor;
                    out.events.push_back(TimelineEvent{q, padding_name(lib, longest, len), cursor, len, s, true});
                }
            };
            for (auto &e : events) {
                pad_to(e.start);
                cursor = std::max(cursor, e.start + e.duration);
                out.events.push_back(std::move(e));
            }
            pad_to(slice_end);
        }
        t = slice_end;
    }
    out.total_duration = t;
    return out;
}

}  // namespace jaqal
