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

#include "jaqal/formatter.hpp"

#include <variant>

namespace jaqal {

namespace {

class Formatter {
   public:
    std::string run(const AstProgram &program) {
        // Macros may sit before, between or after headers, so merge the two
        // lists back into source order.
        std::size_t h = 0;
        std::size_t b = 0;
        while (h < program.headers.size() || b < program.body.size()) {
            bool take_header = b == program.body.size() ||
                               (h < program.headers.size() &&
                                span_of(program.headers[h]).byte_offset < program.body[b].span().byte_offset);
            if (take_header) {
                header(program.headers[h++]);
            } else {
                statement(program.body[b++], 0);
            }
        }
        return std::move(out_);
    }

   private:
    void indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 4, ' '); }

    static std::string slice_text(const SliceExpr &s) {
        std::string t;
        if (s.start) t += s.start->text();
        t += ':';
        if (s.stop) t += s.stop->text();
        if (s.has_second_colon || s.step) t += ':';
        if (s.step) t += s.step->text();
        return t;
    }

    void header(const HeaderStatement &header) {
        if (const auto *r = std::get_if<RegisterDecl>(&header)) {
            out_ += "register " + r->name + "[" + r->size.text() + "]\n";
        } else if (const auto *m = std::get_if<MapDecl>(&header)) {
            out_ += "map " + m->name + " " + m->target;
            if (m->index) out_ += "[" + m->index->text() + "]";
            if (m->slice) out_ += "[" + slice_text(*m->slice) + "]";
            out_ += "\n";
        } else {
            const auto &l = std::get<LetDecl>(header);
            out_ += "let " + l.name + " " + l.value.text + "\n";
        }
    }

    static std::string arg_text(const GateArg &arg) {
        if (const auto *n = std::get_if<NameRef>(&arg)) return n->name;
        if (const auto *ix = std::get_if<IndexedRef>(&arg)) return ix->name + "[" + ix->index.text() + "]";
        return std::get<NumberLiteral>(arg).text;
    }

    void block_body(const Block &block, int depth) {
        for (const auto &s : block.statements) statement(s, depth + 1);
    }

    void statement(const Statement &s, int depth) {
        indent(depth);
        if (const auto *g = std::get_if<GateCall>(&s.node)) {
            out_ += g->name;
            for (const auto &a : g->args) out_ += " " + arg_text(a);
            out_ += "\n";
        } else if (const auto *b = std::get_if<Block>(&s.node)) {
            out_ += b->parallel ? "<\n" : "{\n";
            block_body(*b, depth);
            indent(depth);
            out_ += b->parallel ? ">\n" : "}\n";
        } else if (const auto *l = std::get_if<Loop>(&s.node)) {
            out_ += "loop " + l->count.text() + " {\n";
            block_body(l->body, depth);
            indent(depth);
            out_ += "}\n";
        } else {
            const auto &m = std::get<MacroDef>(s.node);
            out_ += "macro " + m.name;
            for (const auto &p : m.params) out_ += " " + p.name;
            out_ += " {\n";
            block_body(m.body, depth);
            indent(depth);
            out_ += "}\n";
        }
    }

    std::string out_;
};

}  // namespace

std::string format_program(const AstProgram &program) { return Formatter().run(program); }

}  // namespace jaqal
