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

#include "jaqal/gates.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jaqal/diagnostic.hpp"
#include "jaqal/lexer.hpp"

namespace jaqal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitarityTolerance = 1e-12;
const Complex kI(0.0, 1.0);

GateSignature make_signature(std::string name, std::vector<ParamKind> params, double duration) {
    GateSignature s;
    s.name = std::move(name);
    s.params = std::move(params);
    for (auto p : s.params) s.num_qubits += p == ParamKind::Qubit ? 1 : 0;
    s.duration = duration;
    return s;
}

UnitaryFn fixed(ComplexMatrix m) {
    return [m = std::move(m)](std::span<const double>) { return m; };
}

UnitaryFn identity_fn(std::size_t dim) { return fixed(ComplexMatrix::identity(dim)); }

[[noreturn]] void gatedef_fail(ErrorCode code, const std::string &message) {
    throw JaqalError(make_error(code, message, SourceSpan{1, 1, 0, 0}));
}

}  // namespace

namespace gates {

ComplexMatrix rotation(double axis_angle, double rotation_angle) {
    double c = std::cos(rotation_angle / 2);
    double s = std::sin(rotation_angle / 2);
    return {{c, -kI * std::exp(-kI * axis_angle) * s}, {-kI * std::exp(kI * axis_angle) * s, c}};
}

ComplexMatrix rz(double angle) {
    return {{std::exp(-kI * angle / 2.0), 0.0}, {0.0, std::exp(kI * angle / 2.0)}};
}

ComplexMatrix molmer_sorensen(double axis_angle, double rotation_angle) {
    // cos(t/2) I - i sin(t/2) (A (x) A), A = cos(p) X + sin(p) Y.
    double c = std::cos(rotation_angle / 2);
    Complex s = -kI * std::sin(rotation_angle / 2);
    Complex e2 = std::exp(-2.0 * kI * axis_angle);
    ComplexMatrix m(4);
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = c;
    m(0, 3) = s * e2;
    m(3, 0) = s * std::conj(e2);
    m(1, 2) = m(2, 1) = s;
    return m;
}

double quantize_angle(double angle) {
    constexpr double kSteps = 1099511627776.0;  // 2^40
    double turns = angle / (2 * kPi);
    turns -= std::floor(turns);
    double step = std::nearbyint(turns * kSteps);
    if (step >= kSteps) step -= kSteps;
    return step * (2 * kPi / kSteps);
}

}  // namespace gates

GateLibrary GateLibrary::builtin(LibraryOptions options) {
    using enum ParamKind;
    GateLibrary lib;
    lib.options_ = options;

    GateSignature prep = make_signature("prepare_all", {}, 100.0);
    prep.is_prepare = true;
    lib.define(prep, {});

    auto rot = [](double axis) {
        return [axis](std::span<const double> a) { return gates::rotation(axis, a[0]); };
    };
    lib.define(make_signature("R", {Qubit, Angle, Angle}, 1.0),
               [](std::span<const double> a) { return gates::rotation(a[0], a[1]); });
    lib.define(make_signature("Rx", {Qubit, Angle}, 1.0), rot(0.0));
    lib.define(make_signature("Ry", {Qubit, Angle}, 1.0), rot(kPi / 2));
    lib.define(make_signature("Rz", {Qubit, Angle}, 0.0),
               [](std::span<const double> a) { return gates::rz(a[0]); });
    lib.define(make_signature("Px", {Qubit}, 1.0), fixed(gates::rotation(0.0, kPi)));
    lib.define(make_signature("Py", {Qubit}, 1.0), fixed(gates::rotation(kPi / 2, kPi)));
    lib.define(make_signature("Pz", {Qubit}, 0.0), fixed(gates::rz(kPi)));
    lib.define(make_signature("Sx", {Qubit}, 1.0), fixed(gates::rotation(0.0, kPi / 2)));
    lib.define(make_signature("Sy", {Qubit}, 1.0), fixed(gates::rotation(kPi / 2, kPi / 2)));
    lib.define(make_signature("Sz", {Qubit}, 0.0), fixed(gates::rz(kPi / 2)));
    lib.define(make_signature("Sxd", {Qubit}, 1.0), fixed(gates::rotation(0.0, -kPi / 2)));
    lib.define(make_signature("Syd", {Qubit}, 1.0), fixed(gates::rotation(kPi / 2, -kPi / 2)));
    lib.define(make_signature("Szd", {Qubit}, 0.0), fixed(gates::rz(-kPi / 2)));
    lib.define(make_signature("MS", {Qubit, Qubit, Angle, Angle}, 10.0),
               [](std::span<const double> a) { return gates::molmer_sorensen(a[0], a[1]); });
    // The literal reading exp(-i(pi/2) XX) equals MS(0, pi) = -i XX.
    lib.define(make_signature("Sxx", {Qubit, Qubit}, 10.0),
               fixed(gates::molmer_sorensen(0.0, options.sxx_literal ? kPi : kPi / 2)));

    GateSignature measure = make_signature("measure_all", {}, 100.0);
    measure.is_measure = true;
    lib.define(measure, {});
    return lib;
}

const GateSignature *GateLibrary::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &entries_[it->second].signature;
}

const GateLibrary::Entry *GateLibrary::find_entry(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &entries_[it->second];
}

const GateSignature &GateLibrary::signature(std::string_view name) const {
    if (const auto *s = find(name)) return *s;
    throw JaqalError(make_error(ErrorCode::UnknownGate, "unknown gate '" + std::string(name) + "'", {}));
}

ComplexMatrix GateLibrary::unitary(std::string_view name, std::span<const double> angles) const {
    const GateSignature &sig = signature(name);
    const Entry &entry = *find_entry(sig.name);
    if (!entry.unitary) {
        throw JaqalError(make_error(ErrorCode::UnknownGate, "'" + sig.name + "' has no unitary", {}));
    }
    if (static_cast<int>(angles.size()) != sig.num_angles()) {
        throw JaqalError(make_error(ErrorCode::AngleCountMismatch,
                                    "'" + sig.name + "' takes " + std::to_string(sig.num_angles()) +
                                        " angle(s), got " + std::to_string(angles.size()),
                                    {}));
    }
    ComplexMatrix m;
    if (options_.quantize_angles) {
        std::vector<double> q(angles.begin(), angles.end());
        for (auto &a : q) a = gates::quantize_angle(a);
        m = entry.unitary(q);
    } else {
        m = entry.unitary(angles);
    }
    if (m.dim() != (std::size_t{1} << sig.num_qubits) || m.unitarity_error() > kUnitarityTolerance) {
        throw JaqalError(make_error(ErrorCode::NonUnitary, "'" + sig.name + "' produced a non-unitary matrix", {}));
    }
    return m;
}

void GateLibrary::put(Entry entry) {
    auto it = index_.find(entry.signature.name);
    if (it != index_.end()) {
        entries_[it->second] = std::move(entry);
        return;
    }
    index_.emplace(entry.signature.name, entries_.size());
    entries_.push_back(std::move(entry));
}

void GateLibrary::define(GateSignature signature, UnitaryFn unitary) {
    bool pairs_idle = !signature.is_idle && signature.num_qubits > 0;
    std::string name = signature.name;
    int qubits = signature.num_qubits;
    double duration = signature.duration;
    put(Entry{std::move(signature), std::move(unitary), false});
    if (!pairs_idle) return;

    std::string idle_name = "I_" + name;
    auto it = index_.find(idle_name);
    if (it != index_.end() && !entries_[it->second].derived_idle) return;
    GateSignature idle = make_signature(idle_name, std::vector<ParamKind>(qubits, ParamKind::Qubit), duration);
    idle.is_idle = true;
    put(Entry{std::move(idle), identity_fn(std::size_t{1} << qubits), true});
}

std::vector<std::string> GateLibrary::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(e.signature.name);
    return out;
}

namespace {

std::vector<ParamKind> parse_params(const nlohmann::json &j, const std::string &gate) {
    if (!j.is_array()) gatedef_fail(ErrorCode::GatedefParseError, "gate '" + gate + "': params must be an array");
    std::vector<ParamKind> out;
    bool seen_angle = false;
    for (const auto &p : j) {
        if (p == "qubit") {
            if (seen_angle) {
                gatedef_fail(ErrorCode::GatedefBadArity, "gate '" + gate + "': qubit params must precede angles");
            }
            out.push_back(ParamKind::Qubit);
        } else if (p == "angle") {
            seen_angle = true;
            out.push_back(ParamKind::Angle);
        } else {
            gatedef_fail(ErrorCode::GatedefParseError, "gate '" + gate + "': params entries are \"qubit\" or \"angle\"");
        }
    }
    return out;
}

ComplexMatrix parse_matrix(const nlohmann::json &rows, const std::string &gate) {
    auto bad = [&] { gatedef_fail(ErrorCode::GatedefParseError, "gate '" + gate + "': malformed matrix"); };
    if (!rows.is_array() || rows.empty()) bad();
    std::size_t dim = rows.size();
    std::vector<Complex> data;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != dim) bad();
        for (const auto &entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) bad();
            data.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return ComplexMatrix(dim, std::move(data));
}

void load_entry(GateLibrary &lib, const GateLibrary &builtins, const nlohmann::json &g) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) {
        gatedef_fail(ErrorCode::GatedefParseError, "every gate needs a string \"name\"");
    }
    std::string name = g["name"].get<std::string>();
    if (!is_identifier(name)) gatedef_fail(ErrorCode::GatedefParseError, "'" + name + "' is not a valid gate name");

    const GateSignature *existing = lib.find(name);
    std::vector<ParamKind> params;
    if (g.contains("params")) {
        params = parse_params(g["params"], name);
    } else if (existing) {
        params = existing->params;
    } else {
        gatedef_fail(ErrorCode::GatedefParseError, "gate '" + name + "' needs \"params\"");
    }
    GateSignature sig = make_signature(name, params, 0.0);
    if (sig.num_qubits > 2) gatedef_fail(ErrorCode::GatedefBadArity, "gate '" + name + "' acts on more than 2 qubits");

    if (g.contains("duration")) {
        if (!g["duration"].is_number() || !std::isfinite(g["duration"].get<double>()) ||
            g["duration"].get<double>() < 0) {
            gatedef_fail(ErrorCode::GatedefParseError, "gate '" + name + "': duration must be a nonnegative number");
        }
        sig.duration = g["duration"].get<double>();
    } else if (existing) {
        sig.duration = existing->duration;
    } else {
        gatedef_fail(ErrorCode::GatedefParseError, "gate '" + name + "' needs \"duration\"");
    }

    auto bad_arity = [&](const std::string &why) {
        gatedef_fail(ErrorCode::GatedefBadArity, "gate '" + name + "': " + why);
    };

    if (!g.contains("unitary")) {
        if (!existing) gatedef_fail(ErrorCode::GatedefParseError, "new gate '" + name + "' needs \"unitary\"");
        if (existing->params != sig.params) bad_arity("params differ from the existing definition");
        const GateLibrary::Entry &entry = *lib.find_entry(name);
        sig.is_idle = existing->is_idle;
        sig.is_prepare = existing->is_prepare;
        sig.is_measure = existing->is_measure;
        UnitaryFn fn = entry.unitary;
        lib.define(sig, std::move(fn));
        return;
    }

    const auto &u = g["unitary"];
    if (!u.is_object() || u.size() != 1) {
        gatedef_fail(ErrorCode::GatedefParseError,
                     "gate '" + name + "': unitary must have exactly one of builtin, matrix, identity");
    }
    if (u.contains("builtin")) {
        if (!u["builtin"].is_string()) gatedef_fail(ErrorCode::GatedefParseError, "builtin must be a string");
        std::string base = u["builtin"].get<std::string>();
        const GateSignature *bsig = builtins.find(base);
        if (!bsig) gatedef_fail(ErrorCode::GatedefParseError, "gate '" + name + "': no builtin '" + base + "'");
        if (bsig->params != sig.params) bad_arity("params do not match builtin '" + base + "'");
        sig.is_idle = bsig->is_idle;
        sig.is_prepare = bsig->is_prepare;
        sig.is_measure = bsig->is_measure;
        lib.define(sig, builtins.find_entry(base)->unitary);
    } else if (u.contains("matrix")) {
        ComplexMatrix m = parse_matrix(u["matrix"], name);
        if (sig.num_angles() != 0) bad_arity("matrix gates cannot take angle params");
        if (sig.num_qubits == 0 || m.dim() != (std::size_t{1} << sig.num_qubits)) {
            bad_arity("matrix dimension " + std::to_string(m.dim()) + " does not match " +
                      std::to_string(sig.num_qubits) + " qubit param(s)");
        }
        if (m.unitarity_error() > kUnitarityTolerance) {
            gatedef_fail(ErrorCode::GatedefNonUnitary, "gate '" + name + "': matrix is not unitary");
        }
        lib.define(sig, fixed(std::move(m)));
    } else if (u.contains("identity")) {
        if (!u["identity"].is_number_integer()) gatedef_fail(ErrorCode::GatedefParseError, "identity must be 2 or 4");
        int dim = u["identity"].get<int>();
        if (dim != 2 && dim != 4) gatedef_fail(ErrorCode::GatedefParseError, "identity must be 2 or 4");
        if (sig.num_angles() != 0 || (std::size_t{1} << sig.num_qubits) != static_cast<std::size_t>(dim)) {
            bad_arity("identity dimension does not match params");
        }
        sig.is_idle = true;
        lib.define(sig, identity_fn(static_cast<std::size_t>(dim)));
    } else {
        gatedef_fail(ErrorCode::GatedefParseError,
                     "gate '" + name + "': unitary must have exactly one of builtin, matrix, identity");
    }
}

}  // namespace

GateLibrary load_gatedefs(std::string_view text, LibraryOptions options) {
    GateLibrary lib = GateLibrary::builtin(options);
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return lib;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        gatedef_fail(ErrorCode::GatedefParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) gatedef_fail(ErrorCode::GatedefParseError, "gate definitions must be a JSON object");
    if (!doc.contains("gates")) return lib;
    if (!doc["gates"].is_array()) gatedef_fail(ErrorCode::GatedefParseError, "\"gates\" must be an array");

    const GateLibrary builtins = GateLibrary::builtin(options);
    for (const auto &g : doc["gates"]) load_entry(lib, builtins, g);
    return lib;
}

GateLibrary load_gatedefs_file(const std::filesystem::path &path, LibraryOptions options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) gatedef_fail(ErrorCode::GatedefParseError, "cannot open gate definitions '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_gatedefs(buf.str(), options);
}

}  // namespace jaqal
