#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bgs {

struct SourceSpan {
    std::size_t start = 0;  // byte offsets, half-open
    std::size_t end = 0;
    std::size_t line = 0;   // 1-based; 0 means "no source position"
    std::size_t column = 0;

    bool known() const { return line != 0; }
};

enum class ErrorCode {
    SyntaxError,
    PragmaAfterDirective,
    UnknownLetterClass,
    UnboundVariable,
    DuplicateContextEntry,
    IllTypedSelfApplication,
    ArityOrDomainMismatch,
    LambdaInNonChurchRegime,
    ForbiddenConstructInRegime,
    UnprovableTruthClaim,
    NotConvertible,
    VarNotInContext,
    SubjectNotTruthValued,
    TypeMismatchInInstantiation,
    NonClosedReplacement,
    NonBooleanResidual,
    NotAnArrow,
    UntranslatableTransortalApplication,
    MixedUsage,
    NotBLVShape,
};

std::string_view errorCodeName(ErrorCode code);

struct Diagnostic {
    ErrorCode code;
    std::string message;
    std::optional<SourceSpan> span;
    std::string at;  // printed offending subterm, when there is one
};

// Every failure raised by the kernel carries a Diagnostic.
class KernelError : public std::runtime_error {
public:
    explicit KernelError(Diagnostic d);
    KernelError(ErrorCode code, std::string message, std::optional<SourceSpan> span = std::nullopt,
                std::string at = {});

    const Diagnostic& diagnostic() const { return diag_; }
    ErrorCode code() const { return diag_.code; }

private:
    Diagnostic diag_;
};

// Parse failures also report what the parser would have accepted.
class SyntaxError : public KernelError {
public:
    SyntaxError(SourceSpan span, std::vector<std::string> expected, std::string found);

    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::vector<std::string> expected_;
};

} // namespace bgs
