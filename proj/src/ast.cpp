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

#include "jaqal/ast.hpp"

#include <sstream>

namespace jaqal {

double NumberLiteral::as_double() const {
    if (const auto *i = std::get_if<std::int64_t>(&value)) return static_cast<double>(*i);
    return std::get<double>(value);
}

std::string IntOrName::text() const {
    if (is_name()) return name();
    return std::to_string(literal());
}

const SourceSpan &span_of(const HeaderStatement &header) {
    return std::visit([](const auto &h) -> const SourceSpan & { return h.span; }, header);
}

const std::string &declared_name(const HeaderStatement &header) {
    return std::visit([](const auto &h) -> const std::string & { return h.name; }, header);
}

const SourceSpan &span_of(const GateArg &arg) {
    return std::visit([](const auto &a) -> const SourceSpan & { return a.span; }, arg);
}

const SourceSpan &Statement::span() const {
    return std::visit([](const auto &s) -> const SourceSpan & { return s.span; }, node);
}

namespace {

struct Dumper {
    std::ostringstream out;

    void int_or_name(const IntOrName &v) {
        if (v.is_name()) {
            out << "(name " << v.name() << ")";
        } else {
            out << "(int " << v.literal() << ")";
        }
    }

    void opt(const std::optional<IntOrName> &v) {
        if (v) {
            int_or_name(*v);
        } else {
            out << "_";
        }
    }

    void number(const NumberLiteral &n) { out << (n.is_integer() ? "(int " : "(float ") << n.text << ")"; }

    void header(const HeaderStatement &h) {
        if (const auto *r = std::get_if<RegisterDecl>(&h)) {
            out << "(register " << r->name << " ";
            int_or_name(r->size);
            out << ")";
        } else if (const auto *m = std::get_if<MapDecl>(&h)) {
            out << "(map " << m->name << " " << m->target;
            if (m->index) {
                out << " (index ";
                int_or_name(*m->index);
                out << ")";
            }
            if (m->slice) {
                out << " (slice ";
                opt(m->slice->start);
                out << " ";
                opt(m->slice->stop);
                out << " ";
                opt(m->slice->step);
                out << ")";
            }
            out << ")";
        } else {
            const auto &l = std::get<LetDecl>(h);
            out << "(let " << l.name << " ";
            number(l.value);
            out << ")";
        }
    }

    void arg(const GateArg &a) {
        if (const auto *n = std::get_if<NameRef>(&a)) {
            out << "(ref " << n->name << ")";
        } else if (const auto *ix = std::get_if<IndexedRef>(&a)) {
            out << "(at " << ix->name << " ";
            int_or_name(ix->index);
            out << ")";
        } else {
            number(std::get<NumberLiteral>(a));
        }
    }

    void block(const Block &b) {
        out << (b.parallel ? "(par" : "(seq");
        for (const auto &s : b.statements) {
            out << " ";
            statement(s);
        }
        out << ")";
    }

    void statement(const Statement &s) {
        if (const auto *g = std::get_if<GateCall>(&s.node)) {
            out << "(gate " << g->name;
            for (const auto &a : g->args) {
                out << " ";
                arg(a);
            }
            out << ")";
        } else if (const auto *b = std::get_if<Block>(&s.node)) {
            block(*b);
        } else if (const auto *l = std::get_if<Loop>(&s.node)) {
            out << "(loop ";
            int_or_name(l->count);
            out << " ";
            block(l->body);
            out << ")";
        } else {
            const auto &m = std::get<MacroDef>(s.node);
            out << "(macro " << m.name << " (";
            for (std::size_t i = 0; i < m.params.size(); ++i) {
                out << (i ? " " : "") << m.params[i].name;
            }
            out << ") ";
            block(m.body);
            out << ")";
        }
    }
};

}  // namespace

std::string dump_ast(const AstProgram &program) {
    Dumper d;
    d.out << "(program (headers";
    for (const auto &h : program.headers) {
        d.out << " ";
        d.header(h);
    }
    d.out << ") (body";
    for (const auto &s : program.body) {
        d.out << " ";
        d.statement(s);
    }
    d.out << "))";
    return d.out.str();
}

bool structurally_equal(const AstProgram &a, const AstProgram &b) { return dump_ast(a) == dump_ast(b); }

}  // namespace jaqal
