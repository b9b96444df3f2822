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

#ifndef JAQAL_EMIT_HPP
#define JAQAL_EMIT_HPP

#include <string>

#include "jaqal/flatten.hpp"

namespace jaqal {

enum class EmitFormat { Text, Json };

/// Text: one line per slice, entries joined by " | ", each entry written as
/// `<gate> <qubits...> <args...>` with ` @<start>` appended when it does not
/// start with the slice.
///
/// Json: {"register_size": n, "slices": [{"duration": d, "entries":
/// [{"gate": g, "qubits": [...], "args": [...], "start": s}]}]}, keys in
/// that order, followed by a newline.
std::string emit_flat(const Schedule &schedule, EmitFormat format);

/// Shortest decimal text that reads back as the same double.
std::string format_number(double value);

}  // namespace jaqal

#endif
