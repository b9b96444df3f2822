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

#include "jaqal/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace jaqal {

namespace {

constexpr int kHardQubitLimit = 30;

[[noreturn]] void fail(ErrorCode code, std::string message, const SourceSpan &span = {}) {
    throw JaqalError(make_error(code, std::move(message), span));
}

}  // namespace

QuantumState::QuantumState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kHardQubitLimit) {
        fail(ErrorCode::RegisterTooLarge, "cannot simulate " + std::to_string(num_qubits) + " qubits");
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex(0.0));
}

void QuantumState::prepare() { set_basis_state(0); }

void QuantumState::set_basis_state(std::size_t k) {
    if (k >= amplitudes_.size()) fail(ErrorCode::DimensionMismatch, "basis index out of range");
    std::fill(amplitudes_.begin(), amplitudes_.end(), Complex(0.0));
    amplitudes_[k] = 1.0;
    prepared_ = true;
}

void QuantumState::require_prepared() const {
    if (!prepared_) fail(ErrorCode::UnpreparedGate, "the register is not prepared");
}

void QuantumState::apply_gate(const ComplexMatrix &u, std::span<const int> qubits) {
    require_prepared();
    if (qubits.empty() || qubits.size() > 2 || u.dim() != (std::size_t{1} << qubits.size())) {
        fail(ErrorCode::DimensionMismatch, "a " + std::to_string(u.dim()) + "x" + std::to_string(u.dim()) +
                                               " matrix cannot act on " + std::to_string(qubits.size()) +
                                               " qubit(s)");
    }
    for (int q : qubits) {
        if (q < 0 || q >= num_qubits_) fail(ErrorCode::DimensionMismatch, "qubit index out of range");
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) fail(ErrorCode::DimensionMismatch, "qubits must be distinct");

    const std::size_t n = amplitudes_.size();
    if (qubits.size() == 1) {
        const std::size_t bit = std::size_t{1} << qubits[0];
        const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i & bit) continue;
            Complex a0 = amplitudes_[i];
            Complex a1 = amplitudes_[i | bit];
            amplitudes_[i] = u00 * a0 + u01 * a1;
            amplitudes_[i | bit] = u10 * a0 + u11 * a1;
        }
        return;
    }
    const std::size_t hi = std::size_t{1} << qubits[0];
    const std::size_t lo = std::size_t{1} << qubits[1];
    const std::size_t offsets[4] = {0, lo, hi, hi | lo};
    for (std::size_t i = 0; i < n; ++i) {
        if (i & (hi | lo)) continue;
        Complex in[4];
        for (int k = 0; k < 4; ++k) in[k] = amplitudes_[i | offsets[k]];
        for (int r = 0; r < 4; ++r) {
            Complex acc = 0.0;
            for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
            amplitudes_[i | offsets[r]] = acc;
        }
    }
}

std::vector<double> QuantumState::peek_probabilities() const {
    require_prepared();
    std::vector<double> out(amplitudes_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(amplitudes_[i]);
    return out;
}

double QuantumState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) total += std::norm(a);
    return total;
}

std::vector<std::uint8_t> QuantumState::measure_all(Xoshiro256StarStar &rng) {
    std::vector<double> probs = peek_probabilities();
    double u = rng.uniform();
    std::size_t chosen = probs.size();
    double cumulative = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        cumulative += probs[k];
        if (u < cumulative) {
            chosen = k;
            break;
        }
    }
    if (chosen == probs.size()) {
        // Rounding left u above the accumulated total; take the last
        // outcome that has any weight.
        chosen = 0;
        for (std::size_t k = probs.size(); k-- > 0;) {
            if (probs[k] > 0) {
                chosen = k;
                break;
            }
        }
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(num_qubits_));
    for (int i = 0; i < num_qubits_; ++i) bits[static_cast<std::size_t>(i)] = (chosen >> i) & 1U;
    prepared_ = false;
    return bits;
}

std::string render_records(const std::vector<MeasurementRecord> &records) {
    std::string out;
    for (const auto &r : records) {
        for (auto b : r.bits) out += b ? '1' : '0';
        out += '\n';
    }
    return out;
}

RunOutput run(const Schedule &schedule, const GateLibrary &lib, std::uint64_t seed, const RunOptions &options) {
    if (schedule.register_size > options.max_qubits) {
        fail(ErrorCode::RegisterTooLarge, "register of " + std::to_string(schedule.register_size) +
                                              " qubits exceeds the limit of " + std::to_string(options.max_qubits));
    }
    QuantumState state(schedule.register_size);
    Xoshiro256StarStar rng(seed);
    RunOutput out;
    out.records.reserve(schedule.measure_count);
    for (const auto &slice : schedule.slices) {
        // Branches of a slice touch disjoint qubits, so program order is a
        // valid execution order.
        for (const auto &entry : slice.entries) {
            const GateSignature &sig = lib.signature(entry.gate.gate_name);
            if (sig.is_prepare) {
                state.prepare();
            } else if (sig.is_measure) {
                if (!state.prepared()) {
                    fail(ErrorCode::UnpreparedGate, "measure_all on an unprepared register", entry.gate.origin_span);
                }
                out.records.push_back(MeasurementRecord{state.measure_all(rng)});
            } else {
                if (!state.prepared()) {
                    fail(ErrorCode::UnpreparedGate, "'" + sig.name + "' on an unprepared register",
                         entry.gate.origin_span);
                }
                state.apply_gate(lib.unitary(sig.name, entry.gate.numeric_args), entry.gate.qubits);
            }
        }
    }
    out.rendered = render_records(out.records);
    return out;
}

ComplexMatrix circuit_unitary(const Schedule &schedule, const GateLibrary &lib) {
    std::size_t dim = std::size_t{1} << schedule.register_size;
    ComplexMatrix u(dim);
    QuantumState state(schedule.register_size);
    for (std::size_t col = 0; col < dim; ++col) {
        state.set_basis_state(col);
        for (const auto &slice : schedule.slices) {
            for (const auto &entry : slice.entries) {
                const GateSignature &sig = lib.signature(entry.gate.gate_name);
                if (!sig.is_unitary()) {
                    fail(ErrorCode::KindMismatch, "'" + sig.name + "' has no unitary", entry.gate.origin_span);
                }
                state.apply_gate(lib.unitary(sig.name, entry.gate.numeric_args), entry.gate.qubits);
            }
        }
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = state.amplitudes()[row];
    }
    return u;
}

}  // namespace jaqal
