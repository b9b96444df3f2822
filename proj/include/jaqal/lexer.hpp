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

#ifndef JAQAL_LEXER_HPP
#define JAQAL_LEXER_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "jaqal/diagnostic.hpp"

namespace jaqal {

enum class TokenKind {
    Keyword,
    Ident,
    IntLiteral,
    FloatLiteral,
    LBrace,
    RBrace,
    LAngle,
    RAngle,
    LBracket,
    RBracket,
    Colon,
    Semicolon,
    Pipe,
    Newline,
    Eof,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string text;
    SourceSpan span;
};

inline constexpr std::array<std::string_view, 5> kKeywords = {"register", "map", "let", "macro", "loop"};

bool is_keyword(std::string_view word);

/// True iff `word` would lex as a single IDENT token.
bool is_identifier(std::string_view word);

/// Splits Jaqal source into tokens. Comments vanish; a block comment that
/// spans a line break leaves a single NEWLINE behind so the statements on
/// either side stay separate. The stream always ends with EOF.
///
/// Throws JaqalError on the first lexical error.
std::vector<Token> tokenize(std::string_view source);

}  // namespace jaqal

#endif
