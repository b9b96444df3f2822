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

#ifndef JAQAL_FORMATTER_HPP
#define JAQAL_FORMATTER_HPP

#include <string>

#include "jaqal/ast.hpp"

namespace jaqal {

/// Canonical rendering: one statement per line, four-space indentation,
/// multi-line blocks without separators, LF endings and a trailing newline.
/// Headers and body statements are emitted in their original source order.
std::string format_program(const AstProgram &program);

}  // namespace jaqal

#endif
