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

#ifndef JAQAL_AST_HPP
#define JAQAL_AST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jaqal/diagnostic.hpp"

namespace jaqal {

/// A signed integer or float literal. `text` is kept verbatim so printing
/// never changes how a number was written.
struct NumberLiteral {
    std::variant<std::int64_t, double> value;
    std::string text;
    SourceSpan span;

    bool is_integer() const { return std::holds_alternative<std::int64_t>(value); }
    double as_double() const;
};

/// An integer position that may be written as a literal or as a `let` name.
struct IntOrName {
    std::variant<std::int64_t, std::string> value;
    SourceSpan span;

    bool is_name() const { return std::holds_alternative<std::string>(value); }
    const std::string &name() const { return std::get<std::string>(value); }
    std::int64_t literal() const { return std::get<std::int64_t>(value); }
    std::string text() const;
};

struct SliceExpr {
    std::optional<IntOrName> start;
    std::optional<IntOrName> stop;
    std::optional<IntOrName> step;
    bool has_second_colon = false;
};

struct RegisterDecl {
    std::string name;
    SourceSpan name_span;
    IntOrName size;
    SourceSpan span;
};

struct MapDecl {
    std::string name;
    SourceSpan name_span;
    std::string target;
    SourceSpan target_span;
    std::optional<IntOrName> index;  // `map a q[2]`
    std::optional<SliceExpr> slice;  // `map a q[1:7:2]`
    SourceSpan span;
};

struct LetDecl {
    std::string name;
    SourceSpan name_span;
    NumberLiteral value;
    SourceSpan span;
};

using HeaderStatement = std::variant<RegisterDecl, MapDecl, LetDecl>;

const SourceSpan &span_of(const HeaderStatement &header);
const std::string &declared_name(const HeaderStatement &header);

struct NameRef {
    std::string name;
    SourceSpan span;
};

struct IndexedRef {
    std::string name;
    IntOrName index;
    SourceSpan span;
};

/// One whitespace-separated gate argument.
using GateArg = std::variant<NameRef, IndexedRef, NumberLiteral>;

const SourceSpan &span_of(const GateArg &arg);

struct Statement;

struct GateCall {
    std::string name;
    SourceSpan name_span;
    std::vector<GateArg> args;
    SourceSpan span;
};

struct Block {
    bool parallel = false;
    std::vector<Statement> statements;
    SourceSpan span;
};

struct Loop {
    IntOrName count;
    Block body;
    SourceSpan span;
};

struct MacroParam {
    std::string name;
    SourceSpan span;
};

struct MacroDef {
    std::string name;
    SourceSpan name_span;
    std::vector<MacroParam> params;
    Block body;
    SourceSpan span;
};

struct Statement {
    std::variant<GateCall, Block, Loop, MacroDef> node;

    const SourceSpan &span() const;
};

struct AstProgram {
    std::vector<HeaderStatement> headers;
    std::vector<Statement> body;
};

/// Span-free S-expression rendering; two programs are structurally equal iff
/// their dumps are equal.
std::string dump_ast(const AstProgram &program);

bool structurally_equal(const AstProgram &a, const AstProgram &b);

}  // namespace jaqal

#endif
