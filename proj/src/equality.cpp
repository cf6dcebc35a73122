#include "bgs/equality.hpp"

#include <stdexcept>

#include "bgs/diagnostic.hpp"
#include "bgs/parser.hpp"

namespace bgs {

std::string_view ruleName(RewriteRule rule)
{
    switch (rule) {
    case RewriteRule::Beta: return "Beta";
    case RewriteRule::CapVR: return "CapVR";
    case RewriteRule::CapFallback: return "CapFallback";
    case RewriteRule::BLVforward: return "BLVforward";
    case RewriteRule::BLVbackward: return "BLVbackward";
    case RewriteRule::PairDesugar: return "PairDesugar";
    }
    return "?";
}

const Term& RewriteTrace::result() const
{
    if (const auto* n = std::get_if<Normal>(&outcome)) return n->term;
    return std::get<Diverged>(outcome).last;
}

namespace {

Contraction rootStep(RewriteRule rule, const Term& before, Term after)
{
    return {after, RewriteStep{rule, {}, before, after}};
}

} // namespace

std::optional<Contraction> capStep(const Term& t)
{
    if (!t.is(TermKind::Cap)) return std::nullopt;
    const Term& arg = t.left();
    const Term& range = t.right();
    switch (range.kind()) {
    case TermKind::ValueRange:
        return rootStep(RewriteRule::CapVR, t, substitute(range.body(), range.name(), arg));
    case TermKind::True:
    case TermKind::False:
    case TermKind::Const: return rootStep(RewriteRule::CapFallback, t, Term::theFalse());
    default: return std::nullopt;
    }
}

std::optional<Contraction> betaStep(const Term& t)
{
    if (!t.is(TermKind::App) || !t.left().is(TermKind::Lambda)) return std::nullopt;
    const Term& fn = t.left();
    return rootStep(RewriteRule::Beta, t, substitute(fn.body(), fn.name(), t.right()));
}

std::optional<Contraction> pairStep(const Term& t)
{
    if (!t.is(TermKind::Pair)) return std::nullopt;
    NameSet avoid = freeVars(t);
    std::string e = freshName("e", avoid);
    Term out = Term::valueRange(e, Term::cap(t.right(), Term::cap(t.left(), Term::var(e))));
    return rootStep(RewriteRule::PairDesugar, t, out);
}

namespace {

struct Redex {
    Path position;
    Contraction contraction;
};

std::optional<Contraction> contractAtRoot(const Term& t)
{
    switch (t.kind()) {
    case TermKind::Pair: return pairStep(t);
    case TermKind::Cap: return capStep(t);
    case TermKind::App: return betaStep(t);
    default: return std::nullopt;
    }
}

bool findRedex(const Term& t, Path& path, std::optional<Redex>& found)
{
    if (auto c = contractAtRoot(t)) {
        found = Redex{path, std::move(*c)};
        return true;
    }
    if (t.is(TermKind::ForAll1) || t.is(TermKind::ForAll2)) return false;
    for (std::size_t i = 0; i < t.arity(); ++i) {
        path.push_back(i);
        if (findRedex(t.child(i), path, found)) return true;
        path.pop_back();
    }
    return false;
}

std::optional<Redex> leftmostOutermost(const Term& t)
{
    Path path;
    std::optional<Redex> found;
    findRedex(t, path, found);
    return found;
}

} // namespace

RewriteTrace normalize(const Term& t, unsigned fuel)
{
    if (fuel == 0) throw std::invalid_argument("normalize: fuel must be at least 1");
    RewriteTrace trace{t, {}, Normal{t}};
    Term current = t;
    for (unsigned used = 0;; ++used) {
        auto redex = leftmostOutermost(current);
        if (!redex) {
            trace.outcome = Normal{current};
            return trace;
        }
        if (used == fuel) {
            trace.outcome = Diverged{current};
            return trace;
        }
        Term next = replaceAt(current, redex->position, redex->contraction.first);
        trace.steps.push_back(RewriteStep{redex->contraction.second.rule, redex->position, current, next});
        current = std::move(next);
    }
}

std::optional<Term> blvRewrite(const Term& t, BlvDirection direction)
{
    if (direction == BlvDirection::Forward) {
        if (!t.is(TermKind::Id) || !t.left().is(TermKind::ValueRange) || !t.right().is(TermKind::ValueRange))
            return std::nullopt;
        const Term& f = t.left();
        const Term& g = t.right();
        std::string x = freshName("x", freeVars(t));
        Term fx = substitute(f.body(), f.name(), Term::var(x));
        Term gx = substitute(g.body(), g.name(), Term::var(x));
        return Term::forall1(x, Term::id(fx, gx));
    }
    if (!t.is(TermKind::ForAll1) || !t.body().is(TermKind::Id)) return std::nullopt;
    const std::string& x = t.name();
    return Term::id(Term::valueRange(x, t.body().left()), Term::valueRange(x, t.body().right()));
}

namespace {

[[noreturn]] void residual(const Term& t)
{
    throw KernelError(ErrorCode::NonBooleanResidual,
                      std::string(termKindName(t.kind())) + " has no truth value", t.span(), printTerm(t));
}

// Either a truth value or an opaque object (value-range, constant).
struct Value {
    std::optional<bool> truth;
    std::optional<Term> object;
};

Value valueOf(const Term& t);

bool isTheTrue(const Term& t)
{
    Value v = valueOf(t);
    return v.truth.value_or(false);
}

Value valueOf(const Term& t)
{
    switch (t.kind()) {
    case TermKind::True: return {true, std::nullopt};
    case TermKind::False: return {false, std::nullopt};
    case TermKind::ValueRange:
    case TermKind::Const: return {std::nullopt, t};
    case TermKind::Horizontal: return {isTheTrue(t.operand()), std::nullopt};
    case TermKind::Not: return {!isTheTrue(t.operand()), std::nullopt};
    case TermKind::Cond: {
        bool antecedent = isTheTrue(t.left());
        bool consequent = isTheTrue(t.right());
        return {!antecedent || consequent, std::nullopt};
    }
    case TermKind::Id: {
        Value l = valueOf(t.left());
        Value r = valueOf(t.right());
        if (l.truth && r.truth) return {*l.truth == *r.truth, std::nullopt};
        if (l.object && r.object) return {alphaEq(*l.object, *r.object), std::nullopt};
        return {false, std::nullopt};
    }
    default: residual(t);
    }
}

} // namespace

Term boolEval(const Term& t, unsigned fuel)
{
    RewriteTrace trace = normalize(t, fuel);
    if (!trace.normal())
        throw KernelError(ErrorCode::NonBooleanResidual, "normalization ran out of fuel", t.span(), printTerm(t));
    return isTheTrue(trace.result()) ? Term::theTrue() : Term::theFalse();
}

} // namespace bgs
