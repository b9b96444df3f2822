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

#ifndef JAQAL_PARSER_HPP
#define JAQAL_PARSER_HPP

#include <string_view>
#include <vector>

#include "jaqal/ast.hpp"
#include "jaqal/lexer.hpp"

namespace jaqal {

/// Recursive-descent parser over a token stream produced by `tokenize`.
/// Stops at the first syntax error and throws JaqalError.
AstProgram parse(const std::vector<Token> &tokens);

/// tokenize + parse.
AstProgram parse_source(std::string_view source);

}  // namespace jaqal

#endif
