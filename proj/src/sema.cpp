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

#include "jaqal/sema.hpp"

#include <algorithm>
#include <limits>

namespace jaqal {

namespace {

[[noreturn]] void fail(ErrorCode code, std::string message, const SourceSpan &span) {
    throw JaqalError(make_error(code, std::move(message), span));
}

const Binding *lookup_param(const MacroEnv *env, const std::string &name) {
    if (!env) return nullptr;
    auto it = env->find(name);
    return it == env->end() ? nullptr : &it->second;
}

std::vector<int> iota(int n) {
    std::vector<int> out(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

// Looks a bare name up as a value: parameter, alias, register or constant.
std::optional<Binding> lookup_value(const SymbolTable &table, const std::string &name, const MacroEnv *env) {
    if (const Binding *b = lookup_param(env, name)) return *b;
    if (auto it = table.aliases.find(name); it != table.aliases.end()) {
        if (it->second.is_array) return QubitArray{it->second.qubits};
        return QubitValue{it->second.qubits.front()};
    }
    if (table.reg && table.reg->name == name) return QubitArray{iota(table.reg->size)};
    if (auto it = table.constants.find(name); it != table.constants.end()) {
        return std::visit([](auto v) -> Binding { return v; }, it->second.value);
    }
    return std::nullopt;
}

[[noreturn]] void fail_unknown(const SymbolTable &table, const std::string &name, const SourceSpan &span) {
    if (table.macros.count(name)) {
        fail(ErrorCode::KindMismatch, "'" + name + "' is a macro, not a qubit or number", span);
    }
    fail(ErrorCode::UndefinedName, "'" + name + "' is not defined", span);
}

// nullopt when the value is an unbound macro parameter.
std::optional<std::int64_t> try_resolve_int(const SymbolTable &table, const IntOrName &value, const MacroEnv *env,
                                            ErrorCode non_integer) {
    if (!value.is_name()) return value.literal();
    auto b = lookup_value(table, value.name(), env);
    if (!b) fail_unknown(table, value.name(), value.span);
    if (const auto *i = std::get_if<std::int64_t>(&*b)) return *i;
    if (std::holds_alternative<Unbound>(*b)) return std::nullopt;
    if (std::holds_alternative<double>(*b)) {
        fail(non_integer, "'" + value.name() + "' is a floating-point constant; an integer is required", value.span);
    }
    fail(ErrorCode::KindMismatch, "'" + value.name() + "' is a qubit, not an integer", value.span);
}

}  // namespace

const MacroSig *SymbolTable::macro(const std::string &name) const {
    auto it = macros.find(name);
    return it == macros.end() ? nullptr : &it->second;
}

std::string binding_kind_name(const Binding &binding) {
    switch (binding.index()) {
        case 0: return "qubit";
        case 1: return "qubit array";
        case 2: return "integer";
        case 3: return "float";
        default: return "macro parameter";
    }
}

std::int64_t resolve_int(const SymbolTable &table, const IntOrName &value, const MacroEnv *env,
                         ErrorCode non_integer) {
    auto v = try_resolve_int(table, value, env, non_integer);
    if (!v) fail(ErrorCode::KindMismatch, "'" + value.text() + "' has no value here", value.span);
    return *v;
}

Binding resolve_arg(const SymbolTable &table, const GateArg &expr, const MacroEnv *env) {
    if (const auto *n = std::get_if<NumberLiteral>(&expr)) {
        return std::visit([](auto v) -> Binding { return v; }, n->value);
    }
    if (const auto *ref = std::get_if<NameRef>(&expr)) {
        auto b = lookup_value(table, ref->name, env);
        if (!b) fail_unknown(table, ref->name, ref->span);
        return *b;
    }
    const auto &ix = std::get<IndexedRef>(expr);
    auto base = lookup_value(table, ix.name, env);
    if (!base) fail_unknown(table, ix.name, ix.span);
    if (std::holds_alternative<Unbound>(*base)) return Unbound{};
    const auto *array = std::get_if<QubitArray>(&*base);
    if (!array) {
        fail(ErrorCode::NotAnArray, "'" + ix.name + "' is a " + binding_kind_name(*base) + " and cannot be indexed",
             ix.span);
    }
    auto index = try_resolve_int(table, ix.index, env, ErrorCode::NonIntegerIndex);
    if (!index) return Unbound{};
    if (*index < 0 || *index >= static_cast<std::int64_t>(array->indices.size())) {
        fail(ErrorCode::IndexOutOfRange,
             "index " + std::to_string(*index) + " is out of range for '" + ix.name + "' of size " +
                 std::to_string(array->indices.size()),
             ix.index.span);
    }
    return QubitValue{array->indices[static_cast<std::size_t>(*index)]};
}

int resolve_qubit(const SymbolTable &table, const GateArg &expr, const MacroEnv *env) {
    Binding b = resolve_arg(table, expr, env);
    if (const auto *q = std::get_if<QubitValue>(&b)) return q->index;
    if (std::holds_alternative<QubitArray>(b)) {
        fail(ErrorCode::UnindexedArray, "a single qubit is required; index the array", span_of(expr));
    }
    fail(ErrorCode::KindMismatch, "a qubit is required, found " + binding_kind_name(b), span_of(expr));
}

std::vector<int> apply_slice(std::span<const int> source, const SliceSpec &slice, const SourceSpan &span) {
    auto length = static_cast<std::int64_t>(source.size());
    for (const auto *field : {&slice.start, &slice.stop, &slice.step}) {
        if (*field && **field < 0) fail(ErrorCode::NegativeSliceField, "slice fields must be nonnegative", span);
    }
    std::int64_t step = slice.step.value_or(1);
    if (step < 1) fail(ErrorCode::NegativeSliceField, "slice step must be at least 1", span);
    std::int64_t stop = std::min(slice.stop.value_or(length), length);
    std::int64_t start = std::min(slice.start.value_or(0), stop);
    std::vector<int> out;
    for (std::int64_t i = start; i < stop; i += step) out.push_back(source[static_cast<std::size_t>(i)]);
    return out;
}

namespace {

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

class Analyzer {
   public:
    Analyzer(const AstProgram &ast, const GateLibrary &lib) : ast_(ast), lib_(lib) {}

    SymbolTable run() {
        collect_declaration_sites();
        declare_all();
        check_all();
        return std::move(table_);
    }

    std::vector<Diagnostic> diagnostics;

   private:
    struct Item {
        const HeaderStatement *header = nullptr;
        const Statement *statement = nullptr;
        std::size_t offset = 0;
    };

    std::vector<Item> items_in_source_order() const {
        std::vector<Item> items;
        for (const auto &h : ast_.headers) items.push_back({&h, nullptr, span_of(h).byte_offset});
        for (const auto &s : ast_.body) items.push_back({nullptr, &s, s.span().byte_offset});
        std::stable_sort(items.begin(), items.end(), [](const Item &a, const Item &b) { return a.offset < b.offset; });
        return items;
    }

    void error(ErrorCode code, std::string message, const SourceSpan &span) {
        diagnostics.push_back(make_error(code, std::move(message), span));
    }

    void absorb(const JaqalError &e) {
        diagnostics.insert(diagnostics.end(), e.diagnostics().begin(), e.diagnostics().end());
    }

    void collect_declaration_sites() {
        for (const auto &h : ast_.headers) declared_at_.emplace(declared_name(h), span_of(h).byte_offset);
        for (const auto &s : ast_.body) {
            if (const auto *m = std::get_if<MacroDef>(&s.node)) declared_at_.emplace(m->name, m->span.byte_offset);
        }
    }

    bool is_declared(const std::string &name) const {
        return table_.aliases.count(name) || table_.constants.count(name) || table_.macros.count(name) ||
               (table_.reg && table_.reg->name == name);
    }

    bool declare(const std::string &name, const SourceSpan &span) {
        if (lib_.contains(name)) {
            error(ErrorCode::DuplicateName, "'" + name + "' is already the name of a gate", span);
            return false;
        }
        if (is_declared(name)) {
            error(ErrorCode::DuplicateName, "'" + name + "' is already declared", span);
            return false;
        }
        return true;
    }

    // Turns UNDEFINED_NAME into USE_BEFORE_DEFINITION when the name is
    // declared later in the file.
    void absorb_header_error(const JaqalError &e, std::size_t offset) {
        for (Diagnostic d : e.diagnostics()) {
            if (d.code == ErrorCode::UndefinedName) {
                std::string name(d.message.substr(1, d.message.find('\'', 1) - 1));
                auto it = declared_at_.find(name);
                if (it != declared_at_.end() && it->second > offset) {
                    d.code = ErrorCode::UseBeforeDefinition;
                    d.message = "'" + name + "' is used before its declaration";
                }
            }
            diagnostics.push_back(std::move(d));
        }
    }

    void declare_all() {
        std::size_t macro_index = 0;
        for (const Item &item : items_in_source_order()) {
            if (item.header) {
                try {
                    declare_header(*item.header);
                } catch (const JaqalError &e) {
                    absorb_header_error(e, item.offset);
                }
                continue;
            }
            const auto *m = std::get_if<MacroDef>(&item.statement->node);
            if (!m) continue;
            for (std::size_t i = 0; i < m->params.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    if (m->params[i].name == m->params[j].name) {
                        error(ErrorCode::DuplicateName, "duplicate macro parameter '" + m->params[i].name + "'",
                              m->params[i].span);
                    }
                }
            }
            if (!declare(m->name, m->name_span)) continue;
            MacroSig sig;
            sig.name = m->name;
            for (const auto &p : m->params) sig.params.push_back(p.name);
            sig.body = std::make_shared<Block>(m->body);
            sig.definition_index = macro_index++;
            sig.span = m->span;
            table_.macros.emplace(m->name, std::move(sig));
        }
    }

    void declare_header(const HeaderStatement &header) {
        if (const auto *r = std::get_if<RegisterDecl>(&header)) {
            if (table_.reg) {
                error(ErrorCode::MultipleRegisters, "only one register may be declared", r->span);
                return;
            }
            std::int64_t size = resolve_int(table_, r->size, nullptr, ErrorCode::NonIntegerCount);
            if (size <= 0) {
                error(ErrorCode::NonpositiveRegisterSize, "register size must be positive", r->size.span);
                return;
            }
            if (size > std::numeric_limits<int>::max()) {
                error(ErrorCode::IndexOutOfRange, "register size is too large", r->size.span);
                return;
            }
            if (!declare(r->name, r->name_span)) return;
            table_.reg = RegisterInfo{r->name, static_cast<int>(size), r->span};
        } else if (const auto *m = std::get_if<MapDecl>(&header)) {
            Alias alias = map_target(*m);
            if (!declare(m->name, m->name_span)) return;
            alias.span = m->span;
            table_.aliases.emplace(m->name, std::move(alias));
        } else {
            const auto &l = std::get<LetDecl>(header);
            if (!declare(l.name, l.name_span)) return;
            table_.constants.emplace(l.name, Constant{l.value.value, l.span});
        }
    }

    Alias map_target(const MapDecl &m) {
        auto base = lookup_value(table_, m.target, nullptr);
        if (!base) fail_unknown(table_, m.target, m.target_span);
        if (const auto *q = std::get_if<QubitValue>(&*base)) {
            if (m.index || m.slice) {
                fail(ErrorCode::NotAnArray, "'" + m.target + "' names a single qubit and cannot be indexed",
                     m.target_span);
            }
            return Alias{{q->index}, false, {}};
        }
        const auto *array = std::get_if<QubitArray>(&*base);
        if (!array) {
            fail(ErrorCode::KindMismatch, "'" + m.target + "' is a " + binding_kind_name(*base) + ", not qubits",
                 m.target_span);
        }
        if (m.index) {
            IndexedRef ref{m.target, *m.index, m.span};
            return Alias{{resolve_qubit(table_, GateArg{ref}, nullptr)}, false, {}};
        }
        if (m.slice) {
            auto field = [&](const std::optional<IntOrName> &f) -> std::optional<std::int64_t> {
                if (!f) return std::nullopt;
                return resolve_int(table_, *f, nullptr, ErrorCode::NonIntegerIndex);
            };
            SliceSpec spec{field(m.slice->start), field(m.slice->stop), field(m.slice->step)};
            return Alias{apply_slice(array->indices, spec, m.span), true, {}};
        }
        return Alias{array->indices, true, {}};
    }

    // --- statement checks -------------------------------------------------

    void check_all() {
        const SourceSpan *first_body = nullptr;
        for (const auto &s : ast_.body) {
            if (const auto *m = std::get_if<MacroDef>(&s.node)) {
                const MacroSig *sig = table_.macro(m->name);
                if (!sig || sig->span.byte_offset != m->span.byte_offset) continue;
                MacroEnv env;
                for (const auto &p : m->params) {
                    env.emplace(p.name, Unbound{});
                    if (lib_.contains(p.name) || is_declared(p.name)) {
                        diagnostics.push_back(make_warning(
                            ErrorCode::ShadowedName, "macro parameter '" + p.name + "' shadows a global name", p.span));
                    }
                }
                check_block(m->body, &env, sig->definition_index, kNoLimit);
                continue;
            }
            if (!first_body) first_body = &s.span();
            check_statement(s, nullptr, kNoLimit, s.span().byte_offset);
        }
        if (first_body && !table_.reg) {
            error(ErrorCode::MissingRegister, "gates are used but no register is declared", *first_body);
        }
    }

    void check_block(const Block &b, const MacroEnv *env, std::size_t macro_limit, std::size_t offset_limit) {
        for (const auto &s : b.statements) check_statement(s, env, macro_limit, offset_limit);
    }

    // `macro_limit`: inside macro k only macros with index < k are callable.
    // `offset_limit`: at top level only macros declared before the call are.
    void check_statement(const Statement &s, const MacroEnv *env, std::size_t macro_limit, std::size_t offset_limit) {
        if (const auto *g = std::get_if<GateCall>(&s.node)) {
            check_call(*g, env, macro_limit, offset_limit);
        } else if (const auto *b = std::get_if<Block>(&s.node)) {
            check_block(*b, env, macro_limit, offset_limit);
        } else if (const auto *l = std::get_if<Loop>(&s.node)) {
            try {
                auto count = try_resolve_int(table_, l->count, env, ErrorCode::NonIntegerCount);
                if (count && *count <= 0) {
                    error(ErrorCode::NonpositiveLoopCount, "loop count must be at least 1", l->count.span);
                }
            } catch (const JaqalError &e) {
                absorb(e);
            }
            check_block(l->body, env, macro_limit, offset_limit);
        }
    }

    void check_call(const GateCall &g, const MacroEnv *env, std::size_t macro_limit, std::size_t offset_limit) {
        std::vector<Binding> args;
        bool resolved = true;
        for (const auto &a : g.args) {
            try {
                args.push_back(resolve_arg(table_, a, env));
            } catch (const JaqalError &e) {
                absorb(e);
                resolved = false;
            }
        }

        if (const MacroSig *m = table_.macro(g.name)) {
            bool in_macro = macro_limit != kNoLimit;
            if (in_macro && m->definition_index >= macro_limit) {
                error(ErrorCode::MacroSelfOrForwardReference,
                      "macro '" + g.name + "' is not defined yet here; macros may only use earlier macros",
                      g.name_span);
                return;
            }
            if (!in_macro && m->span.byte_offset > offset_limit) {
                error(ErrorCode::UseBeforeDefinition, "macro '" + g.name + "' is used before its definition",
                      g.name_span);
                return;
            }
            if (g.args.size() != m->params.size()) {
                error(ErrorCode::ArityMismatch,
                      "macro '" + g.name + "' takes " + std::to_string(m->params.size()) + " argument(s), got " +
                          std::to_string(g.args.size()),
                      g.span);
            }
            return;
        }

        const GateSignature *sig = lib_.find(g.name);
        if (!sig) {
            if (lookup_param(env, g.name) || is_declared(g.name)) {
                error(ErrorCode::KindMismatch, "'" + g.name + "' is not a gate or macro", g.name_span);
            } else {
                error(ErrorCode::UndefinedName, "'" + g.name + "' is not a known gate or macro", g.name_span);
            }
            return;
        }
        if (g.args.size() != sig->params.size()) {
            error(ErrorCode::ArityMismatch,
                  "gate '" + g.name + "' takes " + std::to_string(sig->params.size()) + " argument(s), got " +
                      std::to_string(g.args.size()),
                  g.span);
            return;
        }
        if (!resolved) return;
        for (std::size_t i = 0; i < args.size(); ++i) {
            check_kind(sig->params[i], args[i], g.args[i]);
        }
    }

    void check_kind(ParamKind want, const Binding &got, const GateArg &expr) {
        if (std::holds_alternative<Unbound>(got)) return;
        bool is_number = std::holds_alternative<std::int64_t>(got) || std::holds_alternative<double>(got);
        if (want == ParamKind::Qubit) {
            if (std::holds_alternative<QubitArray>(got)) {
                error(ErrorCode::UnindexedArray, "a single qubit is required; index the array", span_of(expr));
            } else if (is_number) {
                error(ErrorCode::KindMismatch, "a qubit is required, found " + binding_kind_name(got), span_of(expr));
            }
        } else if (!is_number) {
            error(ErrorCode::KindMismatch, "an angle is required, found " + binding_kind_name(got), span_of(expr));
        }
    }

    const AstProgram &ast_;
    const GateLibrary &lib_;
    SymbolTable table_;
    std::unordered_map<std::string, std::size_t> declared_at_;
};

}  // namespace

Analysis analyze(AstProgram ast, const GateLibrary &lib) {
    Analyzer analyzer(ast, lib);
    SymbolTable table = analyzer.run();
    bool has_error = std::any_of(analyzer.diagnostics.begin(), analyzer.diagnostics.end(),
                                 [](const Diagnostic &d) { return d.is_error(); });
    if (has_error) throw JaqalError(std::move(analyzer.diagnostics));
    return Analysis{std::move(table), CheckedProgram{std::move(ast), std::move(analyzer.diagnostics)}};
}

}  // namespace jaqal
