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

#ifndef JAQAL_GATES_HPP
#define JAQAL_GATES_HPP

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jaqal/complex_matrix.hpp"
#include "jaqal/diagnostic.hpp"

namespace jaqal {

enum class ParamKind { Qubit, Angle };

struct GateSignature {
    std::string name;
    std::vector<ParamKind> params;
    int num_qubits = 0;
    double duration = 0.0;  // abstract time units
    bool is_idle = false;
    bool is_prepare = false;
    bool is_measure = false;

    int num_angles() const { return static_cast<int>(params.size()) - num_qubits; }
    bool is_unitary() const { return !is_prepare && !is_measure; }
};

/// Builds a unitary from the gate's angle arguments (in parameter order).
/// Two-qubit matrices index the basis with the first qubit argument as the
/// most significant bit: row = 2*b(first) + b(second).
using UnitaryFn = std::function<ComplexMatrix(std::span<const double>)>;

struct LibraryOptions {
    /// Use exp(-i*(pi/2)*XX) for Sxx instead of MS(0, pi/2).
    bool sxx_literal = false;
    /// Round every angle to 40-bit fixed point over [0, 2*pi) before use.
    bool quantize_angles = false;
};

namespace gates {
ComplexMatrix rotation(double axis_angle, double rotation_angle);
ComplexMatrix rz(double angle);
ComplexMatrix molmer_sorensen(double axis_angle, double rotation_angle);
/// Nearest multiple of 2*pi / 2^40 in [0, 2*pi).
double quantize_angle(double angle);
}  // namespace gates

/// Name -> signature, duration and unitary constructor for every gate a
/// program may call. Immutable once handed to the pipeline.
class GateLibrary {
   public:
    struct Entry {
        GateSignature signature;
        UnitaryFn unitary;  // empty for prepare_all / measure_all
        bool derived_idle = false;
    };

    /// The built-in gate set plus an `I_<g>` idle for each
    /// one- and two-qubit gate.
    static GateLibrary builtin(LibraryOptions options = {});

    const GateSignature *find(std::string_view name) const;
    const Entry *find_entry(std::string_view name) const;
    /// Throws JaqalError(UNKNOWN_GATE).
    const GateSignature &signature(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }
    double duration(std::string_view name) const { return signature(name).duration; }

    /// Throws JaqalError with UNKNOWN_GATE, ANGLE_COUNT_MISMATCH or NONUNITARY.
    ComplexMatrix unitary(std::string_view name, std::span<const double> angles) const;

    /// Adds or replaces a gate. Adding a one- or two-qubit gate `g` also
    /// keeps `I_g` in step with it unless `I_g` was defined explicitly.
    void define(GateSignature signature, UnitaryFn unitary);

    /// Gate names in definition order.
    std::vector<std::string> names() const;
    const std::vector<Entry> &entries() const { return entries_; }
    const LibraryOptions &options() const { return options_; }

   private:
    void put(Entry entry);

    LibraryOptions options_;
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Loads a gate-definition document (JSON) on top of the built-in library.
/// Empty or whitespace-only text yields the built-in library unchanged.
///
///   {"gates": [{"name": "H", "params": ["qubit"], "duration": 1.0,
///               "unitary": {"matrix": [[[re, im], ...], ...]}}]}
///
/// `unitary` is one of {"builtin": name}, {"matrix": rows} or
/// {"identity": 2|4}; it may be omitted to re-time an existing gate.
GateLibrary load_gatedefs(std::string_view text, LibraryOptions options = {});
GateLibrary load_gatedefs_file(const std::filesystem::path &path, LibraryOptions options = {});

}  // namespace jaqal

#endif
