#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bgs/term.hpp"

namespace bgs {

enum class RewriteRule { Beta, CapVR, CapFallback, BLVforward, BLVbackward, PairDesugar };

std::string_view ruleName(RewriteRule rule);

// One contraction. `before` and `after` are whole terms; the redex sits at
// `position` in `before` and its contractum at the same position in `after`.
struct RewriteStep {
    RewriteRule rule;
    Path position;
    Term before;
    Term after;
};

struct Normal {
    Term term;
};

struct Diverged {
    Term last;
};

struct RewriteTrace {
    Term initial;
    std::vector<RewriteStep> steps;
    std::variant<Normal, Diverged> outcome;

    bool normal() const { return std::holds_alternative<Normal>(outcome); }
    const Term& result() const;
};

using Contraction = std::pair<Term, RewriteStep>;

// a @ vr e. f  ->  f[a/e];  a @ r  ->  false  for r in {true, false, constant}.
// Any other range (a variable, something still reducible) is not a redex.
std::optional<Contraction> capStep(const Term& t);

// (\x. f)(a)  ->  f[a/x]
std::optional<Contraction> betaStep(const Term& t);

// pair(a, b)  ->  vr e. b @ (a @ e)
std::optional<Contraction> pairStep(const Term& t);

// Leftmost-outermost reduction with PairDesugar, CapVR, CapFallback and Beta,
// at most `fuel` steps. Quantifier bodies are not entered and Basic Law V is
// never applied. Throws std::invalid_argument if fuel is 0.
RewriteTrace normalize(const Term& t, unsigned fuel);

enum class BlvDirection { Forward, Backward };

// Forward: vr e. f == vr a. g  ->  forall x. f[x/e] == g[x/a]
// Backward: forall x. f == g  ->  vr x. f == vr x. g
// Top-level only; empty when the shape does not match.
std::optional<Term> blvRewrite(const Term& t, BlvDirection direction);

// Truth-table evaluation of a closed term after normalization. Returns
// Term::theTrue() or Term::theFalse(); throws KernelError(NonBooleanResidual)
// if a quantifier, definite article, stuck Cap, application or variable
// survives outside value-range bodies.
Term boolEval(const Term& t, unsigned fuel = 1000);

} // namespace bgs
