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

#ifndef JAQAL_DIAGNOSTIC_HPP
#define JAQAL_DIAGNOSTIC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jaqal {

/// Location of a token or syntax node in the original source bytes.
struct SourceSpan {
    std::size_t line = 1;    ///< 1-based
    std::size_t column = 1;  ///< 1-based, counted in bytes
    std::size_t byte_offset = 0;
    std::size_t length = 0;

    std::size_t end_offset() const { return byte_offset + length; }
    bool contains(std::size_t offset) const {
        return offset >= byte_offset && offset < byte_offset + (length == 0 ? 1 : length);
    }

    /// Smallest span covering both `first` and `last` (which must come in order).
    static SourceSpan cover(const SourceSpan &first, const SourceSpan &last);

    bool operator==(const SourceSpan &) const = default;
};

enum class Severity { Error, Warning };

/// Stable machine-readable diagnostic codes. The spelling returned by
/// `code_name` is part of the CLI output contract.
enum class ErrorCode {
    // lexer
    UnterminatedBlockComment,
    IllegalCharacter,
    MalformedNumber,
    // parser
    HeaderAfterBody,
    HeaderInBlock,
    MacroInBlock,
    SemicolonInParallel,
    PipeInSequential,
    LoopInParallel,
    SameTypeNesting,
    BraceOnNextLine,
    BareStatementAfterLoopOrMacro,
    EmptyBlock,
    UnexpectedToken,
    // semantic analysis
    DuplicateName,
    UndefinedName,
    UseBeforeDefinition,
    MultipleRegisters,
    MissingRegister,
    ArityMismatch,
    KindMismatch,
    IndexOutOfRange,
    NonIntegerCount,
    NonIntegerIndex,
    NonpositiveLoopCount,
    NonpositiveRegisterSize,
    NegativeSliceField,
    MacroSelfOrForwardReference,
    UnindexedArray,
    NotAnArray,
    ShadowedName,
    // flattening / scheduling
    QubitConflictInParallel,
    TwoQubitNotAlone,
    DuplicateQubitArg,
    PrepOrMeasureInParallel,
    UnpreparedGate,
    RedundantPrepare,
    UnmeasuredTail,
    ScheduleTooLarge,
    // gate library
    UnknownGate,
    AngleCountMismatch,
    NonUnitary,
    GatedefParseError,
    GatedefNonUnitary,
    GatedefBadArity,
    // simulator
    RegisterTooLarge,
    DimensionMismatch,
};

std::string_view code_name(ErrorCode code);

struct Diagnostic {
    Severity severity = Severity::Error;
    ErrorCode code = ErrorCode::UnexpectedToken;
    std::string message;
    SourceSpan span;

    bool is_error() const { return severity == Severity::Error; }
};

/// `<file>:<line>:<col>: <severity>[<code>]: <message>`
std::string render_diagnostic(const Diagnostic &diagnostic, std::string_view file);

Diagnostic make_error(ErrorCode code, std::string message, SourceSpan span);
Diagnostic make_warning(ErrorCode code, std::string message, SourceSpan span);

/// Thrown by every pipeline stage when the input program is rejected. Carries
/// at least one error diagnostic; may also carry warnings gathered so far.
class JaqalError : public std::runtime_error {
   public:
    explicit JaqalError(Diagnostic diagnostic);
    explicit JaqalError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic> &diagnostics() const { return diagnostics_; }
    /// Code of the first error diagnostic.
    ErrorCode code() const;
    const SourceSpan &span() const;

   private:
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace jaqal

#endif
