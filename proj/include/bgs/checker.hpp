#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bgs/diagnostic.hpp"
#include "bgs/judgment.hpp"
#include "bgs/term.hpp"
#include "bgs/type.hpp"

namespace bgs {

// Declared object (or, in the church regime, function) constants.
using Signature = std::map<std::string, Type, std::less<>>;

struct CheckOptions {
    Regime regime = Regime::Strict;
    Signature constants;
    unsigned fuel = 1000;                  // normalization budget for equality/truth claims
    std::size_t levelWarningThreshold = 3; // levels above this draw NonFregeanLevel
};

enum class WarningKind { NonFregeanLevel, UnknownLetterClass };

std::string_view warningKindName(WarningKind kind);

struct Warning {
    WarningKind kind;
    std::string message;
};

struct Accepted {
    std::optional<Type> inferred;  // set for HasType and AreEqual claims
    std::string rule;              // what justified the claim
};

struct Rejected {
    Diagnostic error;
};

struct TypeReport {
    Judgment judgment;
    Regime regime;
    std::variant<Accepted, Rejected> verdict;
    std::vector<Warning> warnings;
    // Unityped regime only: argument places that actually occur in the subject.
    std::optional<std::size_t> fregeanArity;

    bool accepted() const { return std::holds_alternative<Accepted>(verdict); }
    const Accepted& acceptance() const { return std::get<Accepted>(verdict); }
    const Diagnostic& error() const { return std::get<Rejected>(verdict).error; }
};

// Principal type of `t` under `ctx`; throws KernelError when ill-typed.
// Church-regime binders without annotation are inferred, defaulting to i
// when unconstrained.
Type inferType(const Context& ctx, const Term& t, const CheckOptions& opts);

// Throws unless `t` has `expected` (or a subtype of it) under `ctx`.
void checkType(const Context& ctx, const Term& t, const Type& expected, const CheckOptions& opts);

TypeReport checkJudgment(const Judgment& j, const CheckOptions& opts);

// Generality rule: discharges `var` from the context by quantifying over it.
// i variables are bound with forall, i -> i variables with forall2.
Judgment generalize(const Judgment& j, std::string_view var, const CheckOptions& opts);

// Replaces context variables by closed terms. A replacement for a function
// variable may instead be an open term over the argument places %xi (and
// %zeta for binary functions); each application of the variable is then
// replaced by the term with its arguments filling those places.
using Assignment = std::map<std::string, Term, std::less<>>;
Judgment instantiate(const Judgment& schema, const Assignment& assignment, const CheckOptions& opts);

inline constexpr std::string_view kFirstArgumentPlace = "%xi";
inline constexpr std::string_view kSecondArgumentPlace = "%zeta";

// Truth claims the kernel recognizes without proof search. Each returns the
// name of the justifying rule.
std::optional<std::string> recognizeTruth(const Term& subject);

// Conditional (or truth-value identity) between vr e. F == vr a. G and its
// forall-expansion, in either order.
bool isBasicLawVInstance(const Term& subject);

// Propositional tautology over atoms under Frege's connectives.
bool isTautology(const Term& subject);

} // namespace bgs
