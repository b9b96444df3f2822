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

#include "jaqal/flatten.hpp"

#include <algorithm>
#include <set>

namespace jaqal {

namespace {

[[noreturn]] void fail(ErrorCode code, std::string message, const SourceSpan &span) {
    throw JaqalError(make_error(code, std::move(message), span));
}

// Entries of one branch of a parallel block, timed from the branch start.
struct Branch {
    std::vector<ScheduledGate> entries;
    double length = 0.0;
    std::set<int> qubits;
    const ScheduledGate *two_qubit = nullptr;

    void append(Branch &&next) {
        for (auto &e : next.entries) {
            e.start_offset += length;
            qubits.insert(e.gate.qubits.begin(), e.gate.qubits.end());
            entries.push_back(std::move(e));
        }
        length += next.length;
        refresh();
    }

    void refresh() {
        two_qubit = nullptr;
        for (const auto &e : entries) {
            if (e.gate.qubits.size() == 2) {
                two_qubit = &e;
                break;
            }
        }
    }
};

class Flattener {
   public:
    Flattener(const SymbolTable &table, const GateLibrary &lib, const FlattenOptions &options)
        : table_(table), lib_(lib), options_(options) {}

    Schedule run(const CheckedProgram &checked) {
        for (const auto &s : checked.ast.body) {
            if (std::holds_alternative<MacroDef>(s.node)) continue;
            sequential(s, nullptr);
        }
        Schedule out;
        out.slices = std::move(slices_);
        out.register_size = table_.register_size();
        check_preparation(out);
        return out;
    }

   private:
    // --- top-level (sequential) expansion ---------------------------------

    void sequential(const Statement &s, const MacroEnv *env) {
        if (const auto *g = std::get_if<GateCall>(&s.node)) {
            if (const MacroSig *m = table_.macro(g->name)) {
                MacroEnv inner = bind_macro(*g, *m, env);
                for (const auto &child : m->body->statements) sequential(child, &inner);
                return;
            }
            ScheduledGate entry = primitive(*g, env);
            TimeSlice slice;
            slice.duration = entry.duration;
            slice.entries.push_back(std::move(entry));
            push(std::move(slice));
        } else if (const auto *b = std::get_if<Block>(&s.node)) {
            if (!b->parallel) {
                for (const auto &child : b->statements) sequential(child, env);
                return;
            }
            Branch branch = parallel(*b, env);
            TimeSlice slice;
            slice.duration = branch.length;
            slice.entries = std::move(branch.entries);
            push(std::move(slice));
        } else if (const auto *l = std::get_if<Loop>(&s.node)) {
            std::int64_t count = loop_count(*l, env);
            for (std::int64_t i = 0; i < count; ++i) {
                for (const auto &child : l->body.statements) sequential(child, env);
            }
        }
    }

    void push(TimeSlice slice) {
        emitted_ += slice.entries.size();
        guard(slice.entries.empty() ? SourceSpan{} : slice.entries.front().gate.origin_span);
        slices_.push_back(std::move(slice));
    }

    void guard(const SourceSpan &span) const {
        if (emitted_ > options_.max_entries) {
            fail(ErrorCode::ScheduleTooLarge,
                 "schedule exceeds " + std::to_string(options_.max_entries) + " gate entries", span);
        }
    }

    // --- parallel blocks --------------------------------------------------

    Branch parallel(const Block &block, const MacroEnv *env) {
        std::vector<Branch> branches;
        std::set<int> used;
        for (const auto &child : block.statements) {
            Branch b = chain(child, env);
            for (int q : b.qubits) {
                if (used.count(q)) {
                    fail(ErrorCode::QubitConflictInParallel,
                         "qubit " + std::to_string(q) + " is used by more than one member of this parallel block",
                         child.span());
                }
            }
            used.insert(b.qubits.begin(), b.qubits.end());
            branches.push_back(std::move(b));
        }
        if (branches.size() > 1) {
            for (const auto &b : branches) {
                if (b.two_qubit) {
                    fail(ErrorCode::TwoQubitNotAlone,
                         "two-qubit gate '" + b.two_qubit->gate.gate_name + "' cannot run in parallel with other gates",
                         b.two_qubit->gate.origin_span);
                }
            }
        }
        Branch out;
        for (const auto &b : branches) out.length = std::max(out.length, b.length);
        for (auto &b : branches) {
            double shift = options_.align == Alignment::End ? out.length - b.length : 0.0;
            for (auto &e : b.entries) {
                e.start_offset += shift;
                out.entries.push_back(std::move(e));
            }
            out.qubits.insert(b.qubits.begin(), b.qubits.end());
        }
        out.refresh();
        return out;
    }

    // One statement inside a parallel block, timed from its own start.
    Branch chain(const Statement &s, const MacroEnv *env) {
        Branch out;
        if (const auto *g = std::get_if<GateCall>(&s.node)) {
            if (const MacroSig *m = table_.macro(g->name)) {
                MacroEnv inner = bind_macro(*g, *m, env);
                for (const auto &child : m->body->statements) out.append(chain(child, &inner));
                return out;
            }
            ScheduledGate entry = primitive(*g, env);
            const GateSignature &sig = lib_.signature(entry.gate.gate_name);
            if (!sig.is_unitary()) {
                fail(ErrorCode::PrepOrMeasureInParallel,
                     "'" + sig.name + "' acts on every qubit and cannot appear in a parallel block", g->span);
            }
            out.length = entry.duration;
            out.qubits.insert(entry.gate.qubits.begin(), entry.gate.qubits.end());
            out.entries.push_back(std::move(entry));
            ++emitted_;
            guard(g->span);
            out.refresh();
        } else if (const auto *b = std::get_if<Block>(&s.node)) {
            if (b->parallel) return parallel(*b, env);
            for (const auto &child : b->statements) out.append(chain(child, env));
        } else if (const auto *l = std::get_if<Loop>(&s.node)) {
            std::int64_t count = loop_count(*l, env);
            for (std::int64_t i = 0; i < count; ++i) {
                for (const auto &child : l->body.statements) out.append(chain(child, env));
            }
        }
        return out;
    }

    // --- leaves -----------------------------------------------------------

    std::int64_t loop_count(const Loop &l, const MacroEnv *env) const {
        std::int64_t count = resolve_int(table_, l.count, env, ErrorCode::NonIntegerCount);
        if (count <= 0) fail(ErrorCode::NonpositiveLoopCount, "loop count must be at least 1", l.count.span);
        return count;
    }

    MacroEnv bind_macro(const GateCall &g, const MacroSig &m, const MacroEnv *env) const {
        if (g.args.size() != m.params.size()) {
            fail(ErrorCode::ArityMismatch,
                 "macro '" + m.name + "' takes " + std::to_string(m.params.size()) + " argument(s), got " +
                     std::to_string(g.args.size()),
                 g.span);
        }
        MacroEnv inner;
        for (std::size_t i = 0; i < g.args.size(); ++i) inner[m.params[i]] = resolve_arg(table_, g.args[i], env);
        return inner;
    }

    ScheduledGate primitive(const GateCall &g, const MacroEnv *env) const {
        const GateSignature *sig = lib_.find(g.name);
        if (!sig) fail(ErrorCode::UndefinedName, "'" + g.name + "' is not a known gate or macro", g.name_span);
        if (g.args.size() != sig->params.size()) {
            fail(ErrorCode::ArityMismatch,
                 "gate '" + g.name + "' takes " + std::to_string(sig->params.size()) + " argument(s), got " +
                     std::to_string(g.args.size()),
                 g.span);
        }
        ScheduledGate out;
        out.gate.gate_name = sig->name;
        out.gate.origin_span = g.span;
        out.duration = sig->duration;
        for (std::size_t i = 0; i < g.args.size(); ++i) {
            if (sig->params[i] == ParamKind::Qubit) {
                int q = resolve_qubit(table_, g.args[i], env);
                if (std::find(out.gate.qubits.begin(), out.gate.qubits.end(), q) != out.gate.qubits.end()) {
                    fail(ErrorCode::DuplicateQubitArg,
                         "gate '" + g.name + "' is given qubit " + std::to_string(q) + " twice", g.span);
                }
                out.gate.qubits.push_back(q);
                continue;
            }
            Binding b = resolve_arg(table_, g.args[i], env);
            if (const auto *iv = std::get_if<std::int64_t>(&b)) {
                out.gate.numeric_args.push_back(static_cast<double>(*iv));
            } else if (const auto *dv = std::get_if<double>(&b)) {
                out.gate.numeric_args.push_back(*dv);
            } else {
                fail(ErrorCode::KindMismatch, "an angle is required, found " + binding_kind_name(b),
                     span_of(g.args[i]));
            }
        }
        return out;
    }

    // --- prepare / measure discipline -------------------------------------

    void check_preparation(Schedule &schedule) const {
        bool prepared = false;
        const SourceSpan *last_prepare = nullptr;
        for (const auto &slice : schedule.slices) {
            if (slice.entries.empty()) continue;
            const ScheduledGate &first = slice.entries.front();
            const GateSignature &sig = lib_.signature(first.gate.gate_name);
            if (sig.is_prepare) {
                if (prepared && options_.enforce_preparation) {
                    schedule.warnings.push_back(make_warning(ErrorCode::RedundantPrepare,
                                                             "prepare_all while the register is already prepared",
                                                             first.gate.origin_span));
                }
                prepared = true;
                last_prepare = &first.gate.origin_span;
                continue;
            }
            if (!prepared && options_.enforce_preparation) {
                fail(ErrorCode::UnpreparedGate,
                     "'" + first.gate.gate_name + "' runs before prepare_all" +
                         (schedule.measure_count ? " (measure_all leaves the qubits unprepared)" : ""),
                     first.gate.origin_span);
            }
            if (sig.is_measure) {
                ++schedule.measure_count;
                prepared = false;
            }
        }
        if (prepared && last_prepare && options_.enforce_preparation) {
            schedule.warnings.push_back(make_warning(ErrorCode::UnmeasuredTail,
                                                     "program ends without measure_all after this prepare_all",
                                                     *last_prepare));
        }
    }

    const SymbolTable &table_;
    const GateLibrary &lib_;
    const FlattenOptions &options_;
    std::vector<TimeSlice> slices_;
    std::size_t emitted_ = 0;
};

}  // namespace

Schedule flatten(const CheckedProgram &checked, const SymbolTable &table, const GateLibrary &lib,
                 const FlattenOptions &options) {
    return Flattener(table, lib, options).run(checked);
}

std::string slice_alphabet(const Schedule &schedule, const GateLibrary &lib) {
    std::string out;
    out.reserve(schedule.slices.size());
    for (const auto &slice : schedule.slices) {
        const GateSignature &sig = lib.signature(slice.entries.front().gate.gate_name);
        out += sig.is_prepare ? 'P' : sig.is_measure ? 'M' : 'G';
    }
    return out;
}

}  // namespace jaqal
