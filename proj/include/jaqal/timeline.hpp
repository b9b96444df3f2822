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

#ifndef JAQAL_TIMELINE_HPP
#define JAQAL_TIMELINE_HPP

#include <string>
#include <vector>

#include "jaqal/flatten.hpp"

namespace jaqal {

struct TimelineEvent {
    int qubit = 0;
    std::string name;  // gate name, `I_<gate>` or `idle` for padding
    double start = 0.0;
    double duration = 0.0;
    std::size_t slice = 0;
    bool is_padding = false;
};

/// Per-qubit view of a schedule. Within each slice every qubit the slice
/// touches is covered from the slice start to its end: gaps before, between
/// or after its gates are filled with padding events. prepare_all and
/// measure_all touch every qubit.
struct Timeline {
    std::vector<TimelineEvent> events;  // by slice, then qubit, then start
    std::vector<double> slice_starts;
    double total_duration = 0.0;

    std::vector<TimelineEvent> for_qubit(int qubit) const;
};

Timeline compute_timeline(const Schedule &schedule, const GateLibrary &lib);

}  // namespace jaqal

#endif
