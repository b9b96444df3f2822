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

#ifndef JAQAL_SIMULATOR_HPP
#define JAQAL_SIMULATOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jaqal/complex_matrix.hpp"
#include "jaqal/flatten.hpp"
#include "jaqal/gates.hpp"
#include "jaqal/rng.hpp"

namespace jaqal {

/// Dense state vector over n qubits. Qubit i is bit i of the amplitude
/// index, matching the little-endian output lines.
class QuantumState {
   public:
    explicit QuantumState(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    bool prepared() const { return prepared_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    /// |0...0>, prepared.
    void prepare();
    /// Basis state |k>, prepared. For building composed unitaries.
    void set_basis_state(std::size_t k);

    /// Applies `u` to `qubits`. For two-qubit gates the first listed qubit is
    /// the most significant bit of the matrix index. Throws JaqalError with
    /// UNPREPARED_GATE or DIMENSION_MISMATCH.
    void apply_gate(const ComplexMatrix &u, std::span<const int> qubits);

    /// |a_k|^2 in index order. Throws UNPREPARED_GATE.
    std::vector<double> peek_probabilities() const;

    /// Samples a basis index with Born probabilities and returns its bits.
    /// The state is unusable afterwards until prepare().
    std::vector<std::uint8_t> measure_all(Xoshiro256StarStar &rng);

    double norm_squared() const;

   private:
    void require_prepared() const;

    int num_qubits_;
    bool prepared_ = false;
    std::vector<Complex> amplitudes_;
};

struct MeasurementRecord {
    std::vector<std::uint8_t> bits;  // bits[i] = outcome of qubit i

    bool operator==(const MeasurementRecord &) const = default;
};

struct RunOutput {
    std::vector<MeasurementRecord> records;
    std::string rendered;
};

struct RunOptions {
    int max_qubits = 16;
};

/// Executes a validated schedule. Identical (schedule, seed) pairs give
/// byte-identical output. Throws REGISTER_TOO_LARGE before doing any work
/// when the register exceeds `options.max_qubits`.
RunOutput run(const Schedule &schedule, const GateLibrary &lib, std::uint64_t seed, const RunOptions &options = {});

/// One line per record: '0'/'1' for qubits 0..n-1 then LF.
std::string render_records(const std::vector<MeasurementRecord> &records);

/// Full 2^n x 2^n unitary of a schedule that contains no prepare_all or
/// measure_all, with qubit i as bit i of the row/column index.
ComplexMatrix circuit_unitary(const Schedule &schedule, const GateLibrary &lib);

}  // namespace jaqal

#endif
