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

#include "jaqal/parser.hpp"

#include <charconv>
#include <cmath>

namespace jaqal {

namespace {

enum class Context { Top, Sequential, Parallel };

class Parser {
   public:
    explicit Parser(const std::vector<Token> &tokens) : tokens_(tokens) {
        if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
            throw std::invalid_argument("token stream must end with EOF");
        }
    }

    AstProgram program() {
        AstProgram out;
        bool seen_body = false;
        while (true) {
            skip_separators(Context::Top);
            if (at(TokenKind::Eof)) break;
            if (at_keyword("register") || at_keyword("map") || at_keyword("let")) {
                if (seen_body) {
                    fail(ErrorCode::HeaderAfterBody,
                         "'" + peek().text + "' statement after the first body statement", peek().span);
                }
                out.headers.push_back(header());
            } else if (at_keyword("macro")) {
                out.body.push_back(Statement{macro_def()});
            } else {
                out.body.push_back(statement(Context::Top));
                seen_body = true;
            }
            expect_terminator(Context::Top);
        }
        return out;
    }

   private:
    // --- token plumbing ---------------------------------------------------

    const Token &peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    bool at(TokenKind kind) const { return peek().kind == kind; }
    bool at_keyword(std::string_view word) const { return at(TokenKind::Keyword) && peek().text == word; }

    const Token &advance() {
        const Token &t = peek();
        if (t.kind != TokenKind::Eof) ++pos_;
        last_ = t.span;
        return t;
    }

    [[noreturn]] void fail(ErrorCode code, std::string message, const SourceSpan &span) const {
        throw JaqalError(make_error(code, std::move(message), span));
    }

    [[noreturn]] void unexpected(std::string_view expected) const {
        const Token &t = peek();
        std::string found = t.kind == TokenKind::Eof       ? "end of input"
                            : t.kind == TokenKind::Newline ? "line break"
                                                           : "'" + t.text + "'";
        fail(ErrorCode::UnexpectedToken, "expected " + std::string(expected) + ", found " + found, t.span);
    }

    const Token &expect(TokenKind kind, std::string_view what) {
        if (!at(kind)) unexpected(what);
        return advance();
    }

    // --- separators -------------------------------------------------------

    void skip_separators(Context ctx) {
        while (true) {
            if (at(TokenKind::Newline)) {
                advance();
            } else if (at(TokenKind::Semicolon)) {
                if (ctx == Context::Parallel) {
                    fail(ErrorCode::SemicolonInParallel, "statements in a parallel block are separated by '|'",
                         peek().span);
                }
                advance();
            } else if (at(TokenKind::Pipe)) {
                if (ctx != Context::Parallel) {
                    fail(ErrorCode::PipeInSequential, "'|' separates statements only inside '< >' blocks",
                         peek().span);
                }
                advance();
            } else {
                return;
            }
        }
    }

    // After a complete statement: a separator, the enclosing block's closer,
    // or end of input at top level.
    void expect_terminator(Context ctx) {
        switch (peek().kind) {
            case TokenKind::Newline:
            case TokenKind::Semicolon:
            case TokenKind::Pipe:
                skip_separators(ctx);
                return;
            case TokenKind::Eof:
                if (ctx == Context::Top) return;
                break;
            case TokenKind::RBrace:
                if (ctx == Context::Sequential) return;
                break;
            case TokenKind::RAngle:
                if (ctx == Context::Parallel) return;
                break;
            default:
                break;
        }
        unexpected(ctx == Context::Parallel ? "'|', line break or '>'"
                   : ctx == Context::Sequential ? "';', line break or '}'"
                                                : "';' or line break");
    }

    // --- literals ---------------------------------------------------------

    std::int64_t int_value(const Token &t) const {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(ErrorCode::MalformedNumber, "integer literal '" + t.text + "' is out of range", t.span);
        }
        return v;
    }

    double float_value(const Token &t) const {
        double v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(v)) {
            fail(ErrorCode::MalformedNumber, "float literal '" + t.text + "' is out of range", t.span);
        }
        return v;
    }

    NumberLiteral number() {
        const Token &t = advance();
        if (t.kind == TokenKind::IntLiteral) return NumberLiteral{int_value(t), t.text, t.span};
        return NumberLiteral{float_value(t), t.text, t.span};
    }

    IntOrName int_or_name(std::string_view what) {
        if (at(TokenKind::IntLiteral)) {
            const Token &t = advance();
            return IntOrName{int_value(t), t.span};
        }
        if (at(TokenKind::Ident)) {
            const Token &t = advance();
            return IntOrName{t.text, t.span};
        }
        if (at(TokenKind::FloatLiteral)) {
            fail(ErrorCode::NonIntegerIndex, std::string(what) + " must be an integer", peek().span);
        }
        unexpected(what);
    }

    // --- headers ----------------------------------------------------------

    HeaderStatement header() {
        const Token &kw = advance();
        SourceSpan start = kw.span;
        if (kw.text == "register") {
            RegisterDecl r;
            const Token &name = expect(TokenKind::Ident, "register name");
            r.name = name.text;
            r.name_span = name.span;
            expect(TokenKind::LBracket, "'['");
            r.size = int_or_name("register size");
            expect(TokenKind::RBracket, "']'");
            r.span = SourceSpan::cover(start, last_);
            return r;
        }
        if (kw.text == "map") {
            MapDecl m;
            const Token &name = expect(TokenKind::Ident, "alias name");
            m.name = name.text;
            m.name_span = name.span;
            const Token &target = expect(TokenKind::Ident, "register or alias name");
            m.target = target.text;
            m.target_span = target.span;
            if (at(TokenKind::LBracket)) {
                advance();
                std::optional<IntOrName> first;
                if (!at(TokenKind::Colon)) first = int_or_name("index");
                if (at(TokenKind::Colon)) {
                    advance();
                    SliceExpr s;
                    s.start = first;
                    if (!at(TokenKind::Colon) && !at(TokenKind::RBracket)) s.stop = int_or_name("slice stop");
                    if (at(TokenKind::Colon)) {
                        advance();
                        s.has_second_colon = true;
                        if (!at(TokenKind::RBracket)) s.step = int_or_name("slice step");
                    }
                    m.slice = s;
                } else {
                    m.index = first;
                }
                expect(TokenKind::RBracket, "']'");
            }
            m.span = SourceSpan::cover(start, last_);
            return m;
        }
        LetDecl l;
        const Token &name = expect(TokenKind::Ident, "constant name");
        l.name = name.text;
        l.name_span = name.span;
        if (!at(TokenKind::IntLiteral) && !at(TokenKind::FloatLiteral)) unexpected("number literal");
        l.value = number();
        l.span = SourceSpan::cover(start, last_);
        return l;
    }

    // --- body -------------------------------------------------------------

    Statement statement(Context ctx) {
        const Token &t = peek();
        switch (t.kind) {
            case TokenKind::LBrace:
                if (ctx == Context::Sequential) {
                    fail(ErrorCode::SameTypeNesting, "sequential block nested directly in a sequential block",
                         t.span);
                }
                return Statement{block(false)};
            case TokenKind::LAngle:
                if (ctx == Context::Parallel) {
                    fail(ErrorCode::SameTypeNesting, "parallel block nested directly in a parallel block", t.span);
                }
                return Statement{block(true)};
            case TokenKind::Ident:
                return Statement{gate_call()};
            case TokenKind::Keyword:
                if (t.text == "loop") {
                    if (ctx == Context::Parallel) {
                        fail(ErrorCode::LoopInParallel, "loops are not allowed inside parallel blocks", t.span);
                    }
                    return Statement{loop()};
                }
                if (t.text == "macro") {
                    fail(ErrorCode::MacroInBlock, "macro definitions are not allowed inside gate blocks", t.span);
                }
                fail(ErrorCode::HeaderInBlock, "'" + t.text + "' statements are not allowed inside gate blocks",
                     t.span);
            default:
                unexpected("statement");
        }
    }

    GateCall gate_call() {
        GateCall g;
        const Token &name = advance();
        g.name = name.text;
        g.name_span = name.span;
        while (true) {
            if (at(TokenKind::Ident)) {
                const Token &ref = advance();
                if (at(TokenKind::LBracket)) {
                    advance();
                    IntOrName index = int_or_name("index");
                    expect(TokenKind::RBracket, "']'");
                    g.args.emplace_back(IndexedRef{ref.text, index, SourceSpan::cover(ref.span, last_)});
                } else {
                    g.args.emplace_back(NameRef{ref.text, ref.span});
                }
            } else if (at(TokenKind::IntLiteral) || at(TokenKind::FloatLiteral)) {
                g.args.emplace_back(number());
            } else {
                break;
            }
        }
        g.span = SourceSpan::cover(name.span, last_);
        return g;
    }

    Block block(bool parallel) {
        Block b;
        b.parallel = parallel;
        SourceSpan start = advance().span;
        Context ctx = parallel ? Context::Parallel : Context::Sequential;
        TokenKind closer = parallel ? TokenKind::RAngle : TokenKind::RBrace;
        while (true) {
            skip_separators(ctx);
            if (at(closer)) break;
            if (at(TokenKind::Eof)) unexpected(parallel ? "'>'" : "'}'");
            b.statements.push_back(statement(ctx));
            expect_terminator(ctx);
        }
        advance();
        b.span = SourceSpan::cover(start, last_);
        if (b.statements.empty()) {
            fail(ErrorCode::EmptyBlock, parallel ? "empty parallel block" : "empty sequential block", b.span);
        }
        return b;
    }

    // The body of a loop or macro: '{' on the same line as the header.
    Block required_body(std::string_view owner) {
        if (at(TokenKind::LBrace)) return block(false);
        if (at(TokenKind::Newline)) {
            std::size_t ahead = 0;
            while (peek(ahead).kind == TokenKind::Newline) ++ahead;
            if (peek(ahead).kind == TokenKind::LBrace) {
                fail(ErrorCode::BraceOnNextLine,
                     "'{' must be on the same line as the " + std::string(owner) + " header", peek(ahead).span);
            }
        }
        if (at(TokenKind::LAngle)) {
            fail(ErrorCode::UnexpectedToken,
                 "the body of a " + std::string(owner) + " must be a sequential '{ }' block", peek().span);
        }
        fail(ErrorCode::BareStatementAfterLoopOrMacro,
             "a " + std::string(owner) + " requires a '{ }' block for its body", peek().span);
    }

    Loop loop() {
        Loop l;
        SourceSpan start = advance().span;
        l.count = int_or_name("loop count");
        l.body = required_body("loop");
        l.span = SourceSpan::cover(start, last_);
        return l;
    }

    MacroDef macro_def() {
        MacroDef m;
        SourceSpan start = advance().span;
        const Token &name = expect(TokenKind::Ident, "macro name");
        m.name = name.text;
        m.name_span = name.span;
        while (at(TokenKind::Ident)) {
            const Token &p = advance();
            m.params.push_back(MacroParam{p.text, p.span});
        }
        m.body = required_body("macro");
        m.span = SourceSpan::cover(start, last_);
        return m;
    }

    const std::vector<Token> &tokens_;
    std::size_t pos_ = 0;
    SourceSpan last_;
};

}  // namespace

AstProgram parse(const std::vector<Token> &tokens) { return Parser(tokens).program(); }

AstProgram parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace jaqal
