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

#ifndef JAQAL_PIPELINE_HPP
#define JAQAL_PIPELINE_HPP

#include <string_view>
#include <vector>

#include "jaqal/flatten.hpp"
#include "jaqal/parser.hpp"
#include "jaqal/sema.hpp"

namespace jaqal {

struct CompiledProgram {
    Analysis analysis;
    Schedule schedule;
    std::vector<Diagnostic> warnings;  // from analysis and flattening
};

/// tokenize -> parse -> analyze -> flatten. Throws JaqalError.
CompiledProgram compile(std::string_view source, const GateLibrary &lib, const FlattenOptions &options = {});

/// Runs `compile` and reports every diagnostic instead of throwing.
std::vector<Diagnostic> check_source(std::string_view source, const GateLibrary &lib,
                                     const FlattenOptions &options = {});

}  // namespace jaqal

#endif
