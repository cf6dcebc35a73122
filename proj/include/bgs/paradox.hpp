#pragma once

#include <string>
#include <utility>
#include <variant>

#include "bgs/checker.hpp"
#include "bgs/equality.hpp"
#include "bgs/judgment.hpp"
#include "bgs/term.hpp"

namespace bgs {

// vr e. not(e @ e): the value-range of "does not fall under itself".
Term russellTerm();

struct Contradiction {
    std::pair<Term, Term> equation;  // S and not(S), for S = R @ R
    RewriteTrace trace;
    bool fixpointCheck;  // no truth value equals its own negation
};

struct TypeRejected {
    Diagnostic error;
};

struct NotDerivable {
    std::string reason;
    Diagnostic blockingRule;
};

struct ParadoxReport {
    Regime regime;
    Term russell;
    std::variant<Contradiction, TypeRejected, NotDerivable> verdict;
};

ParadoxReport deriveParadox(Regime regime);

// True iff neither truth value is identical to its own negation.
bool negationHasNoFixpoint();

// Types f(f) under f : fnType in the strict regime. Throws
// KernelError(NotAnArrow) when fnType is not a function type.
TypeReport checkSelfApplication(const Type& fnType);

} // namespace bgs
