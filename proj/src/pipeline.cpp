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

#include "jaqal/pipeline.hpp"

namespace jaqal {

CompiledProgram compile(std::string_view source, const GateLibrary &lib, const FlattenOptions &options) {
    CompiledProgram out{analyze(parse_source(source), lib), {}, {}};
    out.schedule = flatten(out.analysis.program, out.analysis.table, lib, options);
    out.warnings = out.analysis.program.warnings;
    out.warnings.insert(out.warnings.end(), out.schedule.warnings.begin(), out.schedule.warnings.end());
    return out;
}

std::vector<Diagnostic> check_source(std::string_view source, const GateLibrary &lib, const FlattenOptions &options) {
    try {
        return compile(source, lib, options).warnings;
    } catch (const JaqalError &e) {
        return e.diagnostics();
    }
}

}  // namespace jaqal
