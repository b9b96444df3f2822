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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jaqal/emit.hpp"
#include "jaqal/formatter.hpp"
#include "jaqal/lexer.hpp"
#include "jaqal/parser.hpp"
#include "jaqal/pipeline.hpp"
#include "jaqal/simulator.hpp"

namespace py = pybind11;
using namespace jaqal;

namespace {

GateLibrary library(const std::optional<std::string> &gatedefs, bool sxx_literal) {
    return load_gatedefs(gatedefs.value_or(""), LibraryOptions{sxx_literal, false});
}

FlattenOptions flatten_options(const std::string &align) {
    FlattenOptions opts;
    if (align == "end") opts.align = Alignment::End;
    else if (align != "start") throw py::value_error("align must be 'start' or 'end'");
    return opts;
}

py::dict to_dict(const Diagnostic &d) {
    py::dict out;
    out["severity"] = d.is_error() ? "error" : "warning";
    out["code"] = std::string(code_name(d.code));
    out["message"] = d.message;
    out["line"] = d.span.line;
    out["column"] = d.span.column;
    out["offset"] = d.span.byte_offset;
    out["length"] = d.span.length;
    return out;
}

py::list to_list(const std::vector<Diagnostic> &diagnostics) {
    py::list out;
    for (const auto &d : diagnostics) out.append(to_dict(d));
    return out;
}

py::array_t<std::complex<double>> to_array(const ComplexMatrix &m) {
    py::array_t<std::complex<double>> out({m.dim(), m.dim()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) view(r, c) = m(r, c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_jaqal, m) {
    m.doc() = "Jaqal toolchain core bindings";

    static py::exception<JaqalError> error(m, "JaqalError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const JaqalError &e) {
            py::object instance = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            instance.attr("diagnostics") = to_list(e.diagnostics());
            instance.attr("code") = std::string(code_name(e.code()));
            PyErr_SetObject(error.ptr(), instance.ptr());
        }
    });

    m.def(
        "tokenize",
        [](const std::string &source) {
            py::list out;
            for (const auto &t : tokenize(source)) {
                out.append(py::make_tuple(std::string(token_kind_name(t.kind)), t.text, t.span.line, t.span.column));
            }
            return out;
        },
        py::arg("source"), "Token stream as (kind, text, line, column) tuples.");

    m.def(
        "format_source", [](const std::string &source) { return format_program(parse_source(source)); },
        py::arg("source"), "Canonical formatting of a Jaqal program.");

    m.def(
        "check",
        [](const std::string &source, const std::optional<std::string> &gatedefs, const std::string &align) {
            return to_list(check_source(source, library(gatedefs, false), flatten_options(align)));
        },
        py::arg("source"), py::arg("gatedefs") = py::none(), py::arg("align") = "start",
        "All diagnostics for a program as dicts; an empty list means clean.");

    m.def(
        "expand",
        [](const std::string &source, const std::string &format, const std::string &align,
           const std::optional<std::string> &gatedefs) {
            if (format != "text" && format != "json") throw py::value_error("format must be 'text' or 'json'");
            auto program = compile(source, library(gatedefs, false), flatten_options(align));
            return emit_flat(program.schedule, format == "json" ? EmitFormat::Json : EmitFormat::Text);
        },
        py::arg("source"), py::arg("format") = "text", py::arg("align") = "start", py::arg("gatedefs") = py::none());

    m.def(
        "run",
        [](const std::string &source, std::uint64_t seed, int max_qubits, const std::optional<std::string> &gatedefs,
           bool sxx_literal) {
            GateLibrary lib = library(gatedefs, sxx_literal);
            auto program = compile(source, lib);
            RunOutput out = run(program.schedule, lib, seed, RunOptions{max_qubits});
            py::list records;
            for (const auto &r : out.records) records.append(py::cast(std::vector<int>(r.bits.begin(), r.bits.end())));
            return py::make_tuple(out.rendered, records);
        },
        py::arg("source"), py::arg("seed") = 0, py::arg("max_qubits") = 16, py::arg("gatedefs") = py::none(),
        py::arg("sxx_literal") = false, "Simulates a program; returns (output text, list of bit lists).");

    m.def(
        "gate_unitary",
        [](const std::string &name, const std::vector<double> &angles, bool sxx_literal) {
            return to_array(GateLibrary::builtin(LibraryOptions{sxx_literal, false}).unitary(name, angles));
        },
        py::arg("name"), py::arg("angles") = std::vector<double>{}, py::arg("sxx_literal") = false);

    m.def(
        "circuit_unitary",
        [](const std::string &source, const std::optional<std::string> &gatedefs) {
            GateLibrary lib = library(gatedefs, false);
            FlattenOptions opts;
            opts.enforce_preparation = false;
            return to_array(circuit_unitary(compile(source, lib, opts).schedule, lib));
        },
        py::arg("source"), py::arg("gatedefs") = py::none(),
        "Unitary of a gate-only program; qubit i is bit i of the index.");

    m.def("gate_names", [](const std::optional<std::string> &gatedefs) { return library(gatedefs, false).names(); },
          py::arg("gatedefs") = py::none());
}
