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

#ifndef JAQAL_TESTS_ORACLES_HPP
#define JAQAL_TESTS_ORACLES_HPP

// Reference implementations used only by tests. None of these call into the
// library's matrix, gate or simulator code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Mat {
    std::size_t n = 0;
    std::vector<C> a;

    explicit Mat(std::size_t dim = 0) : n(dim), a(dim * dim) {}
    C &at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const C &at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static Mat eye(std::size_t dim) {
        Mat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline Mat mul(const Mat &x, const Mat &y) {
    Mat out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k)
            for (std::size_t j = 0; j < x.n; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    return out;
}

inline Mat scale(const Mat &x, C s) {
    Mat out = x;
    for (auto &v : out.a) v *= s;
    return out;
}

inline Mat add(const Mat &x, const Mat &y) {
    Mat out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

inline Mat kron(const Mat &x, const Mat &y) {
    Mat out(x.n * y.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            for (std::size_t k = 0; k < y.n; ++k)
                for (std::size_t l = 0; l < y.n; ++l) out.at(i * y.n + k, j * y.n + l) = x.at(i, j) * y.at(k, l);
    return out;
}

inline double norm1(const Mat &x) {
    double best = 0;
    for (std::size_t j = 0; j < x.n; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < x.n; ++i) s += std::abs(x.at(i, j));
        best = std::max(best, s);
    }
    return best;
}

/// exp(A) by scaling and squaring around a truncated Taylor series.
inline Mat expm(const Mat &A) {
    int squarings = 0;
    double nrm = norm1(A);
    while (nrm > 0.25) {
        nrm /= 2;
        ++squarings;
    }
    Mat scaled = scale(A, std::ldexp(1.0, -squarings));
    Mat sum = Mat::eye(A.n);
    Mat term = Mat::eye(A.n);
    for (int k = 1; k <= 30; ++k) {
        term = scale(mul(term, scaled), 1.0 / k);
        sum = add(sum, term);
    }
    for (int i = 0; i < squarings; ++i) sum = mul(sum, sum);
    return sum;
}

inline Mat pauli_x() {
    Mat m(2);
    m.at(0, 1) = m.at(1, 0) = 1.0;
    return m;
}
inline Mat pauli_y() {
    Mat m(2);
    m.at(0, 1) = C(0, -1);
    m.at(1, 0) = C(0, 1);
    return m;
}
inline Mat pauli_z() {
    Mat m(2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

/// cos(phi) X + sin(phi) Y
inline Mat axis(double phi) { return add(scale(pauli_x(), std::cos(phi)), scale(pauli_y(), std::sin(phi))); }

/// exp(-i theta/2 (cos phi X + sin phi Y))
inline Mat rotation(double phi, double theta) { return expm(scale(axis(phi), C(0, -theta / 2))); }

/// exp(-i theta/2 Z)
inline Mat rz(double theta) { return expm(scale(pauli_z(), C(0, -theta / 2))); }

/// exp(-i theta/2 (A (x) A)), A = cos phi X + sin phi Y
inline Mat molmer_sorensen(double phi, double theta) {
    Mat a = axis(phi);
    return expm(scale(kron(a, a), C(0, -theta / 2)));
}

/// Embeds a 2x2 or 4x4 gate into an n-qubit operator where qubit q is bit q
/// of the index and the first listed qubit is the high bit of the gate index.
inline Mat embed(const Mat &gate, const std::vector<int> &qubits, int n) {
    std::size_t dim = std::size_t{1} << n;
    Mat out(dim);
    std::uint64_t mask = 0;
    for (int q : qubits) mask |= std::uint64_t{1} << q;
    auto local = [&](std::size_t idx) {
        std::size_t v = 0;
        for (int q : qubits) v = 2 * v + ((idx >> q) & 1);
        return v;
    };
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~mask) != (c & ~mask)) continue;
            out.at(r, c) = gate.at(local(r), local(c));
        }
    return out;
}

inline std::vector<C> apply(const Mat &m, const std::vector<C> &v) {
    std::vector<C> out(v.size());
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

/// Python's list(range(n))[start:stop:step] for nonnegative fields.
inline std::vector<int> python_slice(int n, std::optional<long> start, std::optional<long> stop,
                                     std::optional<long> step) {
    long st = step.value_or(1);
    long lo = std::min<long>(start.value_or(0), n);
    long hi = std::min<long>(stop.value_or(n), n);
    std::vector<int> out;
    for (long i = 0; i < n; ++i) {
        if (i >= lo && i < hi && (i - lo) % st == 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace oracle

namespace testing_util {

inline std::string corpus_path(const std::string &name) { return std::string(JAQAL_CORPUS_DIR) + "/" + name; }

inline std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string corpus(const std::string &name) { return read_text(corpus_path(name)); }

}  // namespace testing_util

#endif
