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

#ifndef JAQAL_FLATTEN_HPP
#define JAQAL_FLATTEN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jaqal/gates.hpp"
#include "jaqal/sema.hpp"

namespace jaqal {

/// One primitive gate with everything resolved to physical values.
struct GateInstance {
    std::string gate_name;
    std::vector<int> qubits;
    std::vector<double> numeric_args;  // radians
    SourceSpan origin_span;
};

struct ScheduledGate {
    GateInstance gate;
    double start_offset = 0.0;  // relative to the slice start
    double duration = 0.0;
};

/// A set of gates that execute together. Every top-level gate becomes a
/// singleton slice; every top-level parallel block becomes one slice whose
/// nested sequential sub-blocks appear as chains of entries. Entries are
/// stored in program order, so entries on the same qubit are in time order.
struct TimeSlice {
    std::vector<ScheduledGate> entries;
    double duration = 0.0;
};

struct Schedule {
    std::vector<TimeSlice> slices;
    int register_size = 0;
    std::size_t measure_count = 0;
    std::vector<Diagnostic> warnings;
};

enum class Alignment { Start, End };

struct FlattenOptions {
    /// Start: members of a parallel block start together. End: they finish together.
    Alignment align = Alignment::Start;
    /// Upper bound on emitted gate entries (SCHEDULE_TOO_LARGE).
    std::size_t max_entries = 10'000'000;
    /// Check the prepare_all / gates / measure_all discipline.
    bool enforce_preparation = true;
};

/// Expands macros, unrolls loops, substitutes aliases and constants, and
/// validates the result against the hardware rules. Throws JaqalError at the
/// first violation.
Schedule flatten(const CheckedProgram &checked, const SymbolTable &table, const GateLibrary &lib,
                 const FlattenOptions &options = {});

/// Maps each slice to 'P' (prepare_all), 'M' (measure_all) or 'G'.
std::string slice_alphabet(const Schedule &schedule, const GateLibrary &lib);

}  // namespace jaqal

#endif
