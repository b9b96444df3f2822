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

#include "jaqal/diagnostic.hpp"

#include <algorithm>

namespace jaqal {

SourceSpan SourceSpan::cover(const SourceSpan &first, const SourceSpan &last) {
    SourceSpan out = first;
    std::size_t end = std::max(first.end_offset(), last.end_offset());
    out.length = end - first.byte_offset;
    return out;
}

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnterminatedBlockComment: return "UNTERMINATED_BLOCK_COMMENT";
        case ErrorCode::IllegalCharacter: return "ILLEGAL_CHARACTER";
        case ErrorCode::MalformedNumber: return "MALFORMED_NUMBER";
        case ErrorCode::HeaderAfterBody: return "HEADER_AFTER_BODY";
        case ErrorCode::HeaderInBlock: return "HEADER_IN_BLOCK";
        case ErrorCode::MacroInBlock: return "MACRO_IN_BLOCK";
        case ErrorCode::SemicolonInParallel: return "SEMICOLON_IN_PARALLEL";
        case ErrorCode::PipeInSequential: return "PIPE_IN_SEQUENTIAL";
        case ErrorCode::LoopInParallel: return "LOOP_IN_PARALLEL";
        case ErrorCode::SameTypeNesting: return "SAME_TYPE_NESTING";
        case ErrorCode::BraceOnNextLine: return "BRACE_ON_NEXT_LINE";
        case ErrorCode::BareStatementAfterLoopOrMacro: return "BARE_STATEMENT_AFTER_LOOP_OR_MACRO";
        case ErrorCode::EmptyBlock: return "EMPTY_BLOCK";
        case ErrorCode::UnexpectedToken: return "UNEXPECTED_TOKEN";
        case ErrorCode::DuplicateName: return "DUPLICATE_NAME";
        case ErrorCode::UndefinedName: return "UNDEFINED_NAME";
        case ErrorCode::UseBeforeDefinition: return "USE_BEFORE_DEFINITION";
        case ErrorCode::MultipleRegisters: return "MULTIPLE_REGISTERS";
        case ErrorCode::MissingRegister: return "MISSING_REGISTER";
        case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
        case ErrorCode::KindMismatch: return "KIND_MISMATCH";
        case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
        case ErrorCode::NonIntegerCount: return "NON_INTEGER_COUNT";
        case ErrorCode::NonIntegerIndex: return "NON_INTEGER_INDEX";
        case ErrorCode::NonpositiveLoopCount: return "NONPOSITIVE_LOOP_COUNT";
        case ErrorCode::NonpositiveRegisterSize: return "NONPOSITIVE_REGISTER_SIZE";
        case ErrorCode::NegativeSliceField: return "NEGATIVE_SLICE_FIELD";
        case ErrorCode::MacroSelfOrForwardReference: return "MACRO_SELF_OR_FORWARD_REFERENCE";
        case ErrorCode::UnindexedArray: return "UNINDEXED_ARRAY";
        case ErrorCode::NotAnArray: return "NOT_AN_ARRAY";
        case ErrorCode::ShadowedName: return "SHADOWED_NAME";
        case ErrorCode::QubitConflictInParallel: return "QUBIT_CONFLICT_IN_PARALLEL";
        case ErrorCode::TwoQubitNotAlone: return "TWO_QUBIT_NOT_ALONE";
        case ErrorCode::DuplicateQubitArg: return "DUPLICATE_QUBIT_ARG";
        case ErrorCode::PrepOrMeasureInParallel: return "PREP_OR_MEASURE_IN_PARALLEL";
        case ErrorCode::UnpreparedGate: return "UNPREPARED_GATE";
        case ErrorCode::RedundantPrepare: return "REDUNDANT_PREPARE";
        case ErrorCode::UnmeasuredTail: return "UNMEASURED_TAIL";
        case ErrorCode::ScheduleTooLarge: return "SCHEDULE_TOO_LARGE";
        case ErrorCode::UnknownGate: return "UNKNOWN_GATE";
        case ErrorCode::AngleCountMismatch: return "ANGLE_COUNT_MISMATCH";
        case ErrorCode::NonUnitary: return "NONUNITARY";
        case ErrorCode::GatedefParseError: return "GATEDEF_PARSE_ERROR";
        case ErrorCode::GatedefNonUnitary: return "GATEDEF_NONUNITARY";
        case ErrorCode::GatedefBadArity: return "GATEDEF_BAD_ARITY";
        case ErrorCode::RegisterTooLarge: return "REGISTER_TOO_LARGE";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    }
    return "UNKNOWN";
}

std::string render_diagnostic(const Diagnostic &diagnostic, std::string_view file) {
    std::string out;
    out.append(file);
    out += ':';
    out += std::to_string(diagnostic.span.line);
    out += ':';
    out += std::to_string(diagnostic.span.column);
    out += diagnostic.is_error() ? ": error[" : ": warning[";
    out.append(code_name(diagnostic.code));
    out += "]: ";
    out += diagnostic.message;
    return out;
}

Diagnostic make_error(ErrorCode code, std::string message, SourceSpan span) {
    return Diagnostic{Severity::Error, code, std::move(message), span};
}

Diagnostic make_warning(ErrorCode code, std::string message, SourceSpan span) {
    return Diagnostic{Severity::Warning, code, std::move(message), span};
}

namespace {

std::string summarize(const std::vector<Diagnostic> &diagnostics) {
    for (const auto &d : diagnostics) {
        if (d.is_error()) {
            return render_diagnostic(d, "<input>");
        }
    }
    return diagnostics.empty() ? "jaqal error" : render_diagnostic(diagnostics.front(), "<input>");
}

}  // namespace

JaqalError::JaqalError(Diagnostic diagnostic)
    : JaqalError(std::vector<Diagnostic>{std::move(diagnostic)}) {}

JaqalError::JaqalError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ErrorCode JaqalError::code() const {
    for (const auto &d : diagnostics_) {
        if (d.is_error()) return d.code;
    }
    return diagnostics_.front().code;
}

const SourceSpan &JaqalError::span() const {
    for (const auto &d : diagnostics_) {
        if (d.is_error()) return d.span;
    }
    return diagnostics_.front().span;
}

}  // namespace jaqal
