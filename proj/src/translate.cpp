#include "bgs/translate.hpp"

#include <algorithm>

#include "bgs/parser.hpp"

namespace bgs {

namespace {

bool objectOnly(const Term& t)
{
    switch (t.kind()) {
    case TermKind::True:
    case TermKind::False:
    case TermKind::Const:
    case TermKind::Horizontal:
    case TermKind::Not:
    case TermKind::Cond:
    case TermKind::Id:
    case TermKind::The:
    case TermKind::ForAll1:
    case TermKind::ForAll2: return true;
    default: return false;
    }
}

Term translate(const Term& t)
{
    switch (t.kind()) {
    case TermKind::ValueRange: return Term::lambda(t.name(), translate(t.body())).withSpan(t.span());
    case TermKind::Cap:
        if (objectOnly(t.right()))
            throw KernelError(ErrorCode::UntranslatableTransortalApplication,
                              "@ with a " + std::string(termKindName(t.right().kind())) +
                                  " range falls back to the false and has no lambda image",
                              t.span().known() ? std::optional(t.span()) : std::nullopt, printTerm(t));
        return Term::app(translate(t.right()), translate(t.left())).withSpan(t.span());
    default: break;
    }
    if (t.arity() == 0) return t;
    std::vector<Term> kids;
    for (std::size_t i = 0; i < t.arity(); ++i) kids.push_back(translate(t.child(i)));
    return t.withChildren(std::move(kids));
}

struct Usage {
    bool asRange = false;
    bool asObject = false;
};

void scanUsage(const Term& t, const std::string& name, bool rangeSlot, Usage& u)
{
    if (t.is(TermKind::Var)) {
        if (t.name() == name) (rangeSlot ? u.asRange : u.asObject) = true;
        return;
    }
    if (t.isBinder() && t.name() == name) return;
    for (std::size_t i = 0; i < t.arity(); ++i)
        scanUsage(t.child(i), name, t.is(TermKind::Cap) && i == 1, u);
}

Context translateContext(const Context& ctx, const std::vector<Term>& subjects)
{
    Context out;
    for (const ContextEntry& e : ctx) {
        if (e.type != Type::iota()) {
            out.push_back(e);
            continue;
        }
        Usage u;
        for (const Term& s : subjects) scanUsage(desugarPair(s), e.name, false, u);
        if (u.asRange && u.asObject)
            throw KernelError(ErrorCode::MixedUsage,
                              "'" + e.name + "' is used both as an object and as the range of @");
        out.push_back({e.name, u.asRange ? Type::arrow(Type::iota(), Type::iota()) : e.type});
    }
    return out;
}

} // namespace

Term toLambda(const Term& t) { return translate(desugarPair(t)); }

Judgment translateJudgment(const Judgment& j, const CheckOptions& strictOpts)
{
    CheckOptions strict = strictOpts;
    strict.regime = Regime::Strict;
    TypeReport premise = checkJudgment(j, strict);
    if (!premise.accepted()) throw KernelError(premise.error());

    CheckOptions church = strict;
    church.regime = Regime::Church;

    std::vector<Term> subjects;
    mapClaim(j.claim, [&](const Term& t) {
        subjects.push_back(t);
        return t;
    });
    Context ctx = translateContext(j.context, subjects);

    if (const auto* h = std::get_if<HasType>(&j.claim)) {
        Term s = toLambda(h->subject);
        return Judgment{ctx, HasType{s, inferType(ctx, s, church)}};
    }
    if (const auto* q = std::get_if<AreEqual>(&j.claim)) {
        Term l = toLambda(q->left);
        Term r = toLambda(q->right);
        Type ty = inferType(ctx, l, church);
        checkType(ctx, r, ty, church);
        return Judgment{ctx, AreEqual{l, r, ty}};
    }
    Term s = toLambda(std::get<IsTrue>(j.claim).subject);
    checkType(ctx, s, Type::iota(), church);
    return Judgment{ctx, IsTrue{s}};
}

SortedJudgment blvAsFunext(const Judgment& schema)
{
    const auto* t = std::get_if<IsTrue>(&schema.claim);
    if (!t || !isBasicLawVInstance(t->subject))
        throw KernelError(ErrorCode::NotBLVShape, "not a Basic Law V instance: " + printJudgment(schema));

    const Type fn = Type::arrow(Type::iota(), Type::iota());
    const Term f = Term::var("f");
    const Term g = Term::var("g");
    const Term x = Term::var("x");
    Term pointwise = Term::forall1("x", Term::id(Term::app(f, x), Term::app(g, x)));
    Judgment out{{{"f", fn}, {"g", fn}}, IsTrue{Term::id(Term::id(f, g), pointwise)}};

    // Extensionality is an axiom on the church side; only its typing is checked.
    CheckOptions church;
    church.regime = Regime::Church;
    checkType(out.context, std::get<IsTrue>(out.claim).subject, Type::omicron(), church);
    return {out, fn};
}

} // namespace bgs
