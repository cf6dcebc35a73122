#include "bgs/diagnostic.hpp"

namespace bgs {

std::string_view errorCodeName(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::PragmaAfterDirective: return "PragmaAfterDirective";
    case ErrorCode::UnknownLetterClass: return "UnknownLetterClass";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::DuplicateContextEntry: return "DuplicateContextEntry";
    case ErrorCode::IllTypedSelfApplication: return "IllTypedSelfApplication";
    case ErrorCode::ArityOrDomainMismatch: return "ArityOrDomainMismatch";
    case ErrorCode::LambdaInNonChurchRegime: return "LambdaInNonChurchRegime";
    case ErrorCode::ForbiddenConstructInRegime: return "ForbiddenConstructInRegime";
    case ErrorCode::UnprovableTruthClaim: return "UnprovableTruthClaim";
    case ErrorCode::NotConvertible: return "NotConvertible";
    case ErrorCode::VarNotInContext: return "VarNotInContext";
    case ErrorCode::SubjectNotTruthValued: return "SubjectNotTruthValued";
    case ErrorCode::TypeMismatchInInstantiation: return "TypeMismatchInInstantiation";
    case ErrorCode::NonClosedReplacement: return "NonClosedReplacement";
    case ErrorCode::NonBooleanResidual: return "NonBooleanResidual";
    case ErrorCode::NotAnArrow: return "NotAnArrow";
    case ErrorCode::UntranslatableTransortalApplication: return "UntranslatableTransortalApplication";
    case ErrorCode::MixedUsage: return "MixedUsage";
    case ErrorCode::NotBLVShape: return "NotBLVShape";
    }
    return "UnknownError";
}

namespace {

std::string render(const Diagnostic& d)
{
    std::string out;
    if (d.span && d.span->known())
        out += std::to_string(d.span->line) + ":" + std::to_string(d.span->column) + ": ";
    out += std::string(errorCodeName(d.code));
    if (!d.message.empty()) out += ": " + d.message;
    return out;
}

std::string describeExpected(const std::vector<std::string>& expected, const std::string& found)
{
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg + ", found " + found;
}

} // namespace

KernelError::KernelError(Diagnostic d) : std::runtime_error(render(d)), diag_(std::move(d)) {}

KernelError::KernelError(ErrorCode code, std::string message, std::optional<SourceSpan> span, std::string at)
    : KernelError(Diagnostic{code, std::move(message), span, std::move(at)})
{
}

SyntaxError::SyntaxError(SourceSpan span, std::vector<std::string> expected, std::string found)
    : KernelError(ErrorCode::SyntaxError, describeExpected(expected, found), span),
      expected_(std::move(expected))
{
}

} // namespace bgs
