#include "bgs/paradox.hpp"

#include "bgs/parser.hpp"

namespace bgs {

Term russellTerm()
{
    return Term::valueRange("e", Term::neg(Term::cap(Term::var("e"), Term::var("e"))));
}

bool negationHasNoFixpoint()
{
    for (const Term& v : {Term::theTrue(), Term::theFalse()})
        if (boolEval(Term::id(v, Term::neg(v))).is(TermKind::True)) return false;
    return true;
}

ParadoxReport deriveParadox(Regime regime)
{
    const Term r = russellTerm();
    CheckOptions opts;
    opts.regime = regime;

    try {
        inferType({}, r, opts);
    } catch (const KernelError& e) {
        if (regime == Regime::Church) return {regime, r, TypeRejected{e.diagnostic()}};
        return {regime, r,
                NotDerivable{"the Russell value-range cannot be formed: " + e.diagnostic().message, e.diagnostic()}};
    }

    // S = R @ R; a single CapVR step turns S into not(S).
    const Term s = Term::cap(r, r);
    RewriteTrace trace = normalize(s, 1);
    return {regime, r, Contradiction{{s, trace.result()}, std::move(trace), negationHasNoFixpoint()}};
}

TypeReport checkSelfApplication(const Type& fnType)
{
    if (!fnType.isArrow())
        throw KernelError(ErrorCode::NotAnArrow, printType(fnType) + " is not a function type");
    const Term f = Term::var("f");
    Judgment j{{{"f", fnType}}, HasType{Term::app(f, f), fnType.codomain()}};
    CheckOptions opts;
    opts.regime = Regime::Strict;
    return checkJudgment(j, opts);
}

} // namespace bgs
