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

#ifndef JAQAL_SEMA_HPP
#define JAQAL_SEMA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "jaqal/ast.hpp"
#include "jaqal/gates.hpp"

namespace jaqal {

struct RegisterInfo {
    std::string name;
    int size = 0;
    SourceSpan span;
};

struct Alias {
    std::vector<int> qubits;  // physical indices
    bool is_array = false;    // false: `map a q[0]` names one qubit
    SourceSpan span;
};

using ConstantValue = std::variant<std::int64_t, double>;

struct Constant {
    ConstantValue value;
    SourceSpan span;
};

struct MacroSig {
    std::string name;
    std::vector<std::string> params;
    std::shared_ptr<const Block> body;
    std::size_t definition_index = 0;
    SourceSpan span;
};

/// Every declaration in the program. All categories share one namespace,
/// which also contains the gate library's names.
struct SymbolTable {
    std::optional<RegisterInfo> reg;
    std::map<std::string, Alias> aliases;
    std::map<std::string, Constant> constants;
    std::map<std::string, MacroSig> macros;

    int register_size() const { return reg ? reg->size : 0; }
    const MacroSig *macro(const std::string &name) const;
};

struct CheckedProgram {
    AstProgram ast;
    std::vector<Diagnostic> warnings;
};

struct Analysis {
    SymbolTable table;
    CheckedProgram program;
};

/// Builds the symbol table and runs every static check that does not need
/// expansion. Throws JaqalError carrying all errors (and warnings) found;
/// on success the warnings are in `program.warnings`.
Analysis analyze(AstProgram ast, const GateLibrary &lib);

// --- name resolution -------------------------------------------------------

struct QubitValue {
    int index = 0;
};
struct QubitArray {
    std::vector<int> indices;
};
/// A macro parameter whose argument is not known yet (definition-time checks).
struct Unbound {};

/// What an argument expression denotes once aliases, constants and macro
/// parameters are looked through.
using Binding = std::variant<QubitValue, QubitArray, std::int64_t, double, Unbound>;

/// Macro parameter name -> bound value at one expansion site.
using MacroEnv = std::unordered_map<std::string, Binding>;

std::string binding_kind_name(const Binding &binding);

/// Throws JaqalError (UNDEFINED_NAME, INDEX_OUT_OF_RANGE, NOT_AN_ARRAY,
/// NON_INTEGER_INDEX). Macro parameters in `env` shadow globals.
Binding resolve_arg(const SymbolTable &table, const GateArg &expr, const MacroEnv *env);

/// Resolves an argument that must denote exactly one physical qubit.
/// Additionally throws UNINDEXED_ARRAY for whole arrays and KIND_MISMATCH
/// for numbers.
int resolve_qubit(const SymbolTable &table, const GateArg &expr, const MacroEnv *env);

/// Resolves an integer position (loop count, index, size or slice field).
/// A float-valued constant raises `non_integer`.
std::int64_t resolve_int(const SymbolTable &table, const IntOrName &value, const MacroEnv *env,
                         ErrorCode non_integer);

/// Python-style slice of `source` restricted to nonnegative fields and a
/// positive step; `stop` is clamped to the source length.
struct SliceSpec {
    std::optional<std::int64_t> start;
    std::optional<std::int64_t> stop;
    std::optional<std::int64_t> step;
};
std::vector<int> apply_slice(std::span<const int> source, const SliceSpec &slice, const SourceSpan &span);

}  // namespace jaqal

#endif
