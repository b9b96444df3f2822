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

#include "jaqal/lexer.hpp"

#include <algorithm>

namespace jaqal {

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string describe_byte(unsigned char c) {
    if (c >= 0x21 && c < 0x7f) {
        return std::string("'") + static_cast<char>(c) + "'";
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "byte 0x";
    out += kHex[c >> 4];
    out += kHex[c & 0xf];
    return out;
}

class Lexer {
   public:
    explicit Lexer(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        while (pos_ < src_.size()) {
            step();
        }
        tokens_.push_back(Token{TokenKind::Eof, "", span_here(0)});
        return std::move(tokens_);
    }

   private:
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    SourceSpan span_here(std::size_t length) const { return SourceSpan{line_, col_, pos_, length}; }

    // Advances over bytes that contain no line break.
    void advance(std::size_t n) {
        pos_ += n;
        col_ += n;
    }

    void newline_advance(std::size_t n) {
        pos_ += n;
        ++line_;
        col_ = 1;
    }

    [[noreturn]] void fail(ErrorCode code, std::string message, SourceSpan span) {
        throw JaqalError(make_error(code, std::move(message), span));
    }

    void emit(TokenKind kind, std::size_t length) {
        tokens_.push_back(Token{kind, std::string(src_.substr(pos_, length)), span_here(length)});
        advance(length);
    }

    void step() {
        char c = peek();
        switch (c) {
            case ' ':
            case '\t':
                advance(1);
                return;
            case '\n':
                tokens_.push_back(Token{TokenKind::Newline, "\n", span_here(1)});
                newline_advance(1);
                return;
            case '\r':
                if (peek(1) == '\n') {
                    tokens_.push_back(Token{TokenKind::Newline, "\r\n", span_here(2)});
                    newline_advance(2);
                    return;
                }
                fail(ErrorCode::IllegalCharacter, "carriage return without line feed", span_here(1));
            case '/':
                if (peek(1) == '/') {
                    skip_line_comment();
                    return;
                }
                if (peek(1) == '*') {
                    skip_block_comment();
                    return;
                }
                fail(ErrorCode::IllegalCharacter,
                     "unexpected '/': Jaqal has no arithmetic expressions", span_here(1));
            case '{': emit(TokenKind::LBrace, 1); return;
            case '}': emit(TokenKind::RBrace, 1); return;
            case '<': emit(TokenKind::LAngle, 1); return;
            case '>': emit(TokenKind::RAngle, 1); return;
            case '[': emit(TokenKind::LBracket, 1); return;
            case ']': emit(TokenKind::RBracket, 1); return;
            case ':': emit(TokenKind::Colon, 1); return;
            case ';': emit(TokenKind::Semicolon, 1); return;
            case '|': emit(TokenKind::Pipe, 1); return;
            default: break;
        }
        if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
            lex_number();
            return;
        }
        if (c == '.' && is_digit(peek(1))) {
            fail(ErrorCode::MalformedNumber, "number must have digits before '.'", number_extent(pos_));
        }
        if (is_ident_start(c)) {
            std::size_t n = 1;
            while (is_ident_char(peek(n))) ++n;
            std::string_view word = src_.substr(pos_, n);
            emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident, n);
            return;
        }
        if (c == '*' || c == '+' || c == '-') {
            fail(ErrorCode::IllegalCharacter,
                 std::string("unexpected '") + c + "': Jaqal has no arithmetic expressions", span_here(1));
        }
        auto uc = static_cast<unsigned char>(c);
        std::size_t len = 1;
        if (uc >= 0xc0) {
            len = uc >= 0xf0 ? 4 : uc >= 0xe0 ? 3 : 2;
            len = std::min(len, src_.size() - pos_);
        }
        fail(ErrorCode::IllegalCharacter,
             uc >= 0x80 ? "non-ASCII character outside a comment" : "illegal character " + describe_byte(uc),
             span_here(len));
    }

    // Span of the maximal run of number-ish characters starting at `start`.
    SourceSpan number_extent(std::size_t start) const {
        std::size_t end = start;
        if (end < src_.size() && src_[end] == '-') ++end;
        while (end < src_.size() && (is_ident_char(src_[end]) || src_[end] == '.')) ++end;
        return SourceSpan{line_, col_ + (start - pos_), start, std::max<std::size_t>(end - start, 1)};
    }

    void lex_number() {
        std::size_t n = c_is_minus() ? 1 : 0;
        while (is_digit(peek(n))) ++n;
        bool is_float = false;
        if (peek(n) == '.') {
            if (!is_digit(peek(n + 1))) {
                fail(ErrorCode::MalformedNumber, "number must have digits after '.'", number_extent(pos_));
            }
            is_float = true;
            ++n;
            while (is_digit(peek(n))) ++n;
        }
        if (is_ident_char(peek(n)) || peek(n) == '.') {
            SourceSpan extent = number_extent(pos_);
            fail(ErrorCode::MalformedNumber,
                 "malformed number '" + std::string(src_.substr(extent.byte_offset, extent.length)) + "'", extent);
        }
        emit(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, n);
    }

    bool c_is_minus() const { return peek() == '-'; }

    void skip_line_comment() {
        while (pos_ < src_.size()) {
            char c = peek();
            if (c == '\n' || (c == '\r' && peek(1) == '\n')) return;
            advance(1);
        }
    }

    void skip_block_comment() {
        SourceSpan start = span_here(2);
        advance(2);
        bool saw_newline = false;
        SourceSpan first_newline;
        while (pos_ < src_.size()) {
            if (peek() == '*' && peek(1) == '/') {
                advance(2);
                if (saw_newline) {
                    tokens_.push_back(Token{TokenKind::Newline, "\n", first_newline});
                }
                return;
            }
            if (peek() == '\n') {
                if (!saw_newline) first_newline = span_here(1);
                saw_newline = true;
                newline_advance(1);
            } else {
                advance(1);
            }
        }
        fail(ErrorCode::UnterminatedBlockComment, "block comment is never closed with '*/'", start);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::vector<Token> tokens_;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword: return "KEYWORD";
        case TokenKind::Ident: return "IDENT";
        case TokenKind::IntLiteral: return "INT_LITERAL";
        case TokenKind::FloatLiteral: return "FLOAT_LITERAL";
        case TokenKind::LBrace: return "LBRACE";
        case TokenKind::RBrace: return "RBRACE";
        case TokenKind::LAngle: return "LANGLE";
        case TokenKind::RAngle: return "RANGLE";
        case TokenKind::LBracket: return "LBRACKET";
        case TokenKind::RBracket: return "RBRACKET";
        case TokenKind::Colon: return "COLON";
        case TokenKind::Semicolon: return "SEMICOLON";
        case TokenKind::Pipe: return "PIPE";
        case TokenKind::Newline: return "NEWLINE";
        case TokenKind::Eof: return "EOF";
    }
    return "?";
}

bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_identifier(std::string_view word) {
    if (word.empty() || !is_ident_start(word.front())) return false;
    if (!std::all_of(word.begin(), word.end(), is_ident_char)) return false;
    return !is_keyword(word);
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace jaqal
