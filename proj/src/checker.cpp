#include "bgs/checker.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "bgs/equality.hpp"
#include "bgs/parser.hpp"

namespace bgs {

std::string_view warningKindName(WarningKind kind)
{
    switch (kind) {
    case WarningKind::NonFregeanLevel: return "NonFregeanLevel";
    case WarningKind::UnknownLetterClass: return "UnknownLetterClass";
    }
    return "?";
}

namespace {

// Types with metavariables. Only the church regime ever creates metas.
struct MType;
using MTy = std::shared_ptr<const MType>;

struct MType {
    enum class Kind { Iota, Omicron, Arrow, Meta } kind;
    std::size_t meta = 0;
    MTy domain, codomain;
};

MTy fromType(const Type& t)
{
    switch (t.kind()) {
    case TypeKind::Iota: return std::make_shared<MType>(MType{MType::Kind::Iota});
    case TypeKind::Omicron: return std::make_shared<MType>(MType{MType::Kind::Omicron});
    case TypeKind::Arrow:
        return std::make_shared<MType>(MType{MType::Kind::Arrow, 0, fromType(t.domain()), fromType(t.codomain())});
    }
    return nullptr;
}

const MTy kIota = fromType(Type::iota());
const MTy kOmicron = fromType(Type::omicron());

MTy marrow(MTy d, MTy c) { return std::make_shared<MType>(MType{MType::Kind::Arrow, 0, std::move(d), std::move(c)}); }

[[noreturn]] void fail(ErrorCode code, std::string message, const Term& at)
{
    throw KernelError(code, std::move(message), at.span().known() ? std::optional(at.span()) : std::nullopt,
                      printTerm(at));
}

class Engine {
public:
    Engine(const Context& ctx, const CheckOptions& opts) : ctx_(ctx), opts_(opts) {}

    MTy infer(const Term& t)
    {
        switch (t.kind()) {
        case TermKind::Var: return variable(t);
        case TermKind::Const: {
            auto it = opts_.constants.find(t.name());
            if (it == opts_.constants.end()) fail(ErrorCode::UnboundVariable, "undeclared constant '" + t.name() + "'", t);
            return fromType(it->second);
        }
        case TermKind::True:
        case TermKind::False: return kOmicron;
        case TermKind::Horizontal:
        case TermKind::Not:
            requireObject(t.operand(), t);
            return kOmicron;
        case TermKind::Cond:
            requireObject(t.left(), t);
            requireObject(t.right(), t);
            return kOmicron;
        case TermKind::Id: return identity(t);
        case TermKind::The:
            requireObject(t.operand(), t);
            return kIota;
        case TermKind::ForAll1: return forall1(t);
        case TermKind::ForAll2: return forall2(t);
        case TermKind::ValueRange: return valueRange(t);
        case TermKind::Cap: return cap(t);
        case TermKind::App: return application(t);
        case TermKind::Pair: return infer(desugarPair(t));
        case TermKind::Lambda: return lambda(t);
        }
        fail(ErrorCode::ArityOrDomainMismatch, "unknown construct", t);
    }

    // actual <= expected, solving metas by equating them.
    bool subsume(const MTy& actualIn, const MTy& expectedIn)
    {
        MTy actual = resolve(actualIn);
        MTy expected = resolve(expectedIn);
        using K = MType::Kind;
        if (actual->kind == K::Meta && expected->kind == K::Meta && actual->meta == expected->meta) return true;
        if (actual->kind == K::Meta) return bind(actual->meta, expected);
        if (expected->kind == K::Meta) return bind(expected->meta, actual);
        if (actual->kind == K::Omicron && expected->kind == K::Iota) return true;
        if (actual->kind != expected->kind) return false;
        if (actual->kind != K::Arrow) return true;
        return subsume(expected->domain, actual->domain) && subsume(actual->codomain, expected->codomain);
    }

    Type zonk(const MTy& t)
    {
        MTy r = resolve(t);
        switch (r->kind) {
        case MType::Kind::Iota:
        case MType::Kind::Meta: return Type::iota();
        case MType::Kind::Omicron: return Type::omicron();
        case MType::Kind::Arrow: return Type::arrow(zonk(r->domain), zonk(r->codomain));
        }
        return Type::iota();
    }

private:
    MTy fresh()
    {
        metas_.push_back(nullptr);
        return std::make_shared<MType>(MType{MType::Kind::Meta, metas_.size() - 1});
    }

    MTy resolve(MTy t) const
    {
        while (t->kind == MType::Kind::Meta && metas_[t->meta]) t = metas_[t->meta];
        return t;
    }

    bool occurs(std::size_t meta, const MTy& t) const
    {
        MTy r = resolve(t);
        if (r->kind == MType::Kind::Meta) return r->meta == meta;
        if (r->kind == MType::Kind::Arrow) return occurs(meta, r->domain) || occurs(meta, r->codomain);
        return false;
    }

    bool bind(std::size_t meta, const MTy& t)
    {
        if (occurs(meta, t)) return false;
        metas_[meta] = t;
        return true;
    }

    bool isArrow(const MTy& t) const { return resolve(t)->kind == MType::Kind::Arrow; }
    bool isMeta(const MTy& t) const { return resolve(t)->kind == MType::Kind::Meta; }

    std::string show(const MTy& t) { return printType(zonk(t)); }

    MTy variable(const Term& t)
    {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->first == t.name()) return it->second;
        if (const ContextEntry* e = lookup(ctx_, t.name())) return fromType(e->type);
        fail(ErrorCode::UnboundVariable, "'" + t.name() + "' is not declared in the context", t);
    }

    void requireObject(const Term& operand, const Term& parent)
    {
        MTy ty = infer(operand);
        if (!subsume(ty, kIota))
            fail(ErrorCode::ArityOrDomainMismatch,
                 std::string(termKindName(parent.kind())) + " expects an object, got " + show(ty), operand);
    }

    MTy identity(const Term& t)
    {
        if (opts_.regime != Regime::Church) {
            requireObject(t.left(), t);
            requireObject(t.right(), t);
            return kOmicron;
        }
        // Church identity is sorted: both sides at one type.
        MTy l = infer(t.left());
        MTy r = infer(t.right());
        bool ok = (!isArrow(l) && !isArrow(r) && !isMeta(l) && !isMeta(r)) || subsume(l, r) || subsume(r, l);
        if (!ok)
            fail(ErrorCode::ArityOrDomainMismatch, "identity between " + show(l) + " and " + show(r), t);
        return kOmicron;
    }

    template <class F>
    MTy under(const std::string& name, MTy ty, F&& body)
    {
        scope_.emplace_back(name, std::move(ty));
        MTy out = body();
        scope_.pop_back();
        return out;
    }

    MTy forall1(const Term& t)
    {
        return under(t.name(), kIota, [&] {
            MTy body = infer(t.body());
            // The unityped rule only quantifies open sentences.
            MTy bound = opts_.regime == Regime::Unityped ? kOmicron : kIota;
            if (!subsume(body, bound))
                fail(ErrorCode::ArityOrDomainMismatch, "quantified body has type " + show(body), t.body());
            return kOmicron;
        });
    }

    MTy forall2(const Term& t)
    {
        if (opts_.regime == Regime::Unityped)
            fail(ErrorCode::ForbiddenConstructInRegime, "second-order quantification needs function types", t);
        return under(t.name(), marrow(kIota, kIota), [&] {
            MTy body = infer(t.body());
            if (!subsume(body, kIota))
                fail(ErrorCode::ArityOrDomainMismatch, "quantified body has type " + show(body), t.body());
            return kOmicron;
        });
    }

    MTy valueRange(const Term& t)
    {
        if (opts_.regime == Regime::Church) return abstraction(t, std::nullopt);
        if (opts_.regime == Regime::Unityped) {
            NameSet fv = freeVars(t.body());
            fv.erase(t.name());
            if (!fv.empty())
                fail(ErrorCode::ArityOrDomainMismatch,
                     "unityped abstraction is unary; body also depends on '" + *fv.begin() + "'", t);
        }
        return under(t.name(), kIota, [&] {
            MTy body = infer(t.body());
            if (!subsume(body, kIota))
                fail(ErrorCode::ArityOrDomainMismatch, "value-range of a non-object body of type " + show(body),
                     t.body());
            return kIota;
        });
    }

    MTy lambda(const Term& t)
    {
        if (opts_.regime != Regime::Church)
            fail(ErrorCode::LambdaInNonChurchRegime, "lambda abstraction exists only in the church regime", t);
        return abstraction(t, t.binderType());
    }

    MTy abstraction(const Term& t, const std::optional<Type>& annotation)
    {
        MTy dom = annotation ? fromType(*annotation) : fresh();
        return under(t.name(), dom, [&] { return marrow(dom, infer(t.body())); });
    }

    MTy cap(const Term& t)
    {
        switch (opts_.regime) {
        case Regime::Unityped:
            fail(ErrorCode::ForbiddenConstructInRegime,
                 "@ is defined through second-order quantification, which the unityped regime lacks", t);
        case Regime::Strict:
            requireObject(t.left(), t);
            requireObject(t.right(), t);
            return kIota;
        case Regime::Church: break;
        }
        const bool self = alphaEq(t.left(), t.right());
        MTy result = fresh();
        MTy range = infer(t.right());
        if (!subsume(range, marrow(kIota, result)))
            fail(self ? ErrorCode::IllTypedSelfApplication : ErrorCode::ArityOrDomainMismatch,
                 "range operand of @ must be a function i -> _, got " + show(range), t);
        MTy arg = infer(t.left());
        if (!subsume(arg, kIota))
            fail(self ? ErrorCode::IllTypedSelfApplication : ErrorCode::ArityOrDomainMismatch,
                 "argument of @ must be an object, got " + show(arg), t);
        return result;
    }

    MTy application(const Term& t)
    {
        if (opts_.regime == Regime::Unityped)
            fail(ErrorCode::ForbiddenConstructInRegime, "function application needs function types", t);
        const bool self = alphaEq(t.left(), t.right());
        const ErrorCode code = self ? ErrorCode::IllTypedSelfApplication : ErrorCode::ArityOrDomainMismatch;
        MTy fn = resolve(infer(t.left()));
        if (fn->kind == MType::Kind::Meta) {
            MTy shape = marrow(fresh(), fresh());
            bind(fn->meta, shape);
            fn = shape;
        }
        if (fn->kind != MType::Kind::Arrow) fail(code, "applied term has non-function type " + show(fn), t);
        MTy arg = infer(t.right());
        if (!subsume(arg, fn->domain))
            fail(code, "argument of type " + show(arg) + " where " + show(fn->domain) + " is expected", t);
        return fn->codomain;
    }

    const Context& ctx_;
    const CheckOptions& opts_;
    std::vector<MTy> metas_;
    std::vector<std::pair<std::string, MTy>> scope_;
};

const Term* findFreeVar(const Term& t, std::string_view name, std::vector<std::string>& bound)
{
    if (t.is(TermKind::Var))
        return t.name() == name && std::find(bound.begin(), bound.end(), t.name()) == bound.end() ? &t : nullptr;
    if (t.isBinder()) bound.push_back(t.name());
    const Term* hit = nullptr;
    for (std::size_t i = 0; i < t.arity() && !hit; ++i) hit = findFreeVar(t.child(i), name, bound);
    if (t.isBinder()) bound.pop_back();
    return hit;
}

void validateContext(const Judgment& j, const CheckOptions& opts)
{
    for (std::size_t i = 0; i < j.context.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k)
            if (j.context[k].name == j.context[i].name)
                throw KernelError(ErrorCode::DuplicateContextEntry, "'" + j.context[i].name + "' declared twice");
        if (opts.regime == Regime::Unityped && j.context[i].type.isArrow())
            throw KernelError(ErrorCode::ForbiddenConstructInRegime,
                              "'" + j.context[i].name + "' has a function type; the unityped regime has only objects");
    }
    NameSet declared;
    for (const auto& e : j.context) declared.insert(e.name);
    for (const std::string& v : claimFreeVars(j.claim)) {
        if (declared.count(v)) continue;
        const Term* occurrence = nullptr;
        mapClaim(j.claim, [&](const Term& t) {
            std::vector<std::string> bound;
            if (!occurrence) occurrence = findFreeVar(t, v, bound);
            return t;
        });
        if (occurrence) fail(ErrorCode::UnboundVariable, "'" + v + "' is not declared in the context", *occurrence);
        throw KernelError(ErrorCode::UnboundVariable, "'" + v + "' is not declared in the context");
    }
}

std::vector<Warning> collectWarnings(const Judgment& j, const CheckOptions& opts)
{
    std::vector<Warning> out;
    auto checkLevel = [&](const std::string& what, const Type& ty) {
        std::size_t lv = level(ty);
        if (lv > opts.levelWarningThreshold)
            out.push_back({WarningKind::NonFregeanLevel,
                           what + " has type " + printType(ty) + " of level " + std::to_string(lv)});
    };
    for (const auto& e : j.context) {
        if (!tryLetterKind(e.name))
            out.push_back({WarningKind::UnknownLetterClass, "'" + e.name + "' matches no letter convention"});
        checkLevel("'" + e.name + "'", e.type);
    }
    if (const auto* h = std::get_if<HasType>(&j.claim)) checkLevel("the subject", h->type);
    if (const auto* q = std::get_if<AreEqual>(&j.claim)) checkLevel("the equation", q->type);
    return out;
}

// ---------------------------------------------------------------------------
// Truth recognition

void collectAtoms(const Term& t, std::vector<Term>& atoms)
{
    switch (t.kind()) {
    case TermKind::True:
    case TermKind::False: return;
    case TermKind::Horizontal:
    case TermKind::Not: collectAtoms(t.operand(), atoms); return;
    case TermKind::Cond:
        collectAtoms(t.left(), atoms);
        collectAtoms(t.right(), atoms);
        return;
    default:
        for (const Term& a : atoms)
            if (alphaEq(a, t)) return;
        atoms.push_back(t);
    }
}

bool evalUnder(const Term& t, const std::vector<Term>& atoms, unsigned valuation)
{
    switch (t.kind()) {
    case TermKind::True: return true;
    case TermKind::False: return false;
    case TermKind::Horizontal: return evalUnder(t.operand(), atoms, valuation);
    case TermKind::Not: return !evalUnder(t.operand(), atoms, valuation);
    case TermKind::Cond: return !evalUnder(t.left(), atoms, valuation) || evalUnder(t.right(), atoms, valuation);
    default:
        if (t.is(TermKind::Id) && alphaEq(t.left(), t.right())) return true;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (alphaEq(atoms[i], t)) return (valuation >> i) & 1u;
        return false;
    }
}

bool matchInstance(const Term& pattern, const Term& target, const std::string& hole, std::vector<std::string>& sp,
                   std::vector<std::string>& st, std::optional<Term>& witness)
{
    if (pattern.is(TermKind::Var) && pattern.name() == hole &&
        std::find(sp.begin(), sp.end(), hole) == sp.end()) {
        for (const std::string& v : freeVars(target))
            if (std::find(st.begin(), st.end(), v) != st.end()) return false;
        if (witness) return alphaEq(*witness, target);
        witness = target;
        return true;
    }
    if (pattern.kind() != target.kind() || pattern.arity() != target.arity()) return false;
    if (pattern.is(TermKind::Var)) {
        auto depth = [](const std::vector<std::string>& s, const std::string& n) -> std::optional<std::size_t> {
            for (std::size_t i = s.size(); i-- > 0;)
                if (s[i] == n) return s.size() - 1 - i;
            return std::nullopt;
        };
        auto dp = depth(sp, pattern.name());
        auto dt = depth(st, target.name());
        if (dp || dt) return dp == dt;
        return pattern.name() == target.name();
    }
    if (pattern.is(TermKind::Const)) return pattern.name() == target.name();
    if (pattern.isBinder()) {
        if (pattern.binderType() != target.binderType()) return false;
        sp.push_back(pattern.name());
        st.push_back(target.name());
        bool ok = matchInstance(pattern.body(), target.body(), hole, sp, st, witness);
        sp.pop_back();
        st.pop_back();
        return ok;
    }
    for (std::size_t i = 0; i < pattern.arity(); ++i)
        if (!matchInstance(pattern.child(i), target.child(i), hole, sp, st, witness)) return false;
    return true;
}

// (forall y. B) => B[X/y], possibly under outer quantifiers.
bool isUniversalInstantiation(const Term& subject)
{
    const Term* t = &subject;
    while (t->is(TermKind::ForAll1) || t->is(TermKind::ForAll2)) t = &t->body();
    if (!t->is(TermKind::Cond) || !t->left().is(TermKind::ForAll1)) return false;
    const Term& general = t->left();
    std::vector<std::string> sp, st;
    std::optional<Term> witness;
    return matchInstance(general.body(), t->right(), general.name(), sp, st, witness);
}

} // namespace

bool isTautology(const Term& subject)
{
    std::vector<Term> atoms;
    collectAtoms(subject, atoms);
    if (atoms.size() > 16) return false;
    for (unsigned v = 0; v < (1u << atoms.size()); ++v)
        if (!evalUnder(subject, atoms, v)) return false;
    return true;
}

bool isBasicLawVInstance(const Term& subject)
{
    if (!subject.is(TermKind::Cond) && !subject.is(TermKind::Id)) return false;
    auto expands = [](const Term& ids, const Term& general) {
        auto forward = blvRewrite(ids, BlvDirection::Forward);
        return forward && alphaEq(*forward, general);
    };
    return expands(subject.left(), subject.right()) || expands(subject.right(), subject.left());
}

std::optional<std::string> recognizeTruth(const Term& subjectIn)
{
    const Term subject = desugarPair(subjectIn);
    if (subject.is(TermKind::Id) && alphaEq(subject.left(), subject.right())) return "identity-reflexivity";
    if (isTautology(subject)) return "tautology";
    if (isBasicLawVInstance(subject)) return "basic-law-v";
    if (isUniversalInstantiation(subject)) return "universal-instantiation";
    if (subject.is(TermKind::ForAll1) || subject.is(TermKind::ForAll2)) {
        if (auto inner = recognizeTruth(subject.body())) return "generalization/" + *inner;
    }
    return std::nullopt;
}

Type inferType(const Context& ctx, const Term& t, const CheckOptions& opts)
{
    Engine engine(ctx, opts);
    return engine.zonk(engine.infer(t));
}

void checkType(const Context& ctx, const Term& t, const Type& expected, const CheckOptions& opts)
{
    Engine engine(ctx, opts);
    MTy actual = engine.infer(t);
    if (!engine.subsume(actual, fromType(expected)))
        fail(ErrorCode::ArityOrDomainMismatch,
             "has type " + printType(engine.zonk(actual)) + ", not " + printType(expected), t);
}

namespace {

Accepted checkClaim(const Judgment& j, const CheckOptions& opts)
{
    const Context& ctx = j.context;
    if (const auto* h = std::get_if<HasType>(&j.claim)) {
        Engine engine(ctx, opts);
        MTy actual = engine.infer(h->subject);
        if (!engine.subsume(actual, fromType(h->type)))
            fail(ErrorCode::ArityOrDomainMismatch,
                 "has type " + printType(engine.zonk(actual)) + ", not " + printType(h->type), h->subject);
        return Accepted{engine.zonk(actual), "typing"};
    }

    if (const auto* q = std::get_if<AreEqual>(&j.claim)) {
        checkType(ctx, q->left, q->type, opts);
        checkType(ctx, q->right, q->type, opts);
        RewriteTrace l = normalize(q->left, opts.fuel);
        RewriteTrace r = normalize(q->right, opts.fuel);
        if (!l.normal() || !r.normal())
            throw KernelError(ErrorCode::NotConvertible, "normalization ran out of fuel");
        if (alphaEq(l.result(), r.result())) return Accepted{q->type, "normalization"};
        for (auto dir : {BlvDirection::Forward, BlvDirection::Backward}) {
            auto lr = blvRewrite(l.result(), dir);
            auto rr = blvRewrite(r.result(), dir);
            if ((lr && alphaEq(*lr, r.result())) || (rr && alphaEq(*rr, l.result())))
                return Accepted{q->type, "basic-law-v"};
        }
        throw KernelError(ErrorCode::NotConvertible,
                          printTerm(l.result()) + " and " + printTerm(r.result()) + " have different normal forms");
    }

    const Term& subject = std::get<IsTrue>(j.claim).subject;
    checkType(ctx, subject, Type::iota(), opts);
    if (isClosed(subject)) {
        try {
            if (boolEval(subject, opts.fuel).is(TermKind::True)) return Accepted{std::nullopt, "boolean-evaluation"};
            throw KernelError(ErrorCode::UnprovableTruthClaim, "the claim evaluates to the false",
                              subject.span().known() ? std::optional(subject.span()) : std::nullopt,
                              printTerm(subject));
        } catch (const KernelError& e) {
            if (e.code() != ErrorCode::NonBooleanResidual) throw;
        }
    }
    if (auto rule = recognizeTruth(subject)) return Accepted{std::nullopt, *rule};
    throw KernelError(ErrorCode::UnprovableTruthClaim, "not a recognized axiom or theorem schema instance",
                      subject.span().known() ? std::optional(subject.span()) : std::nullopt, printTerm(subject));
}

std::size_t fregeanArity(const Judgment& j)
{
    NameSet fv = claimFreeVars(j.claim);
    return static_cast<std::size_t>(std::count_if(j.context.begin(), j.context.end(),
                                                  [&](const ContextEntry& e) { return fv.count(e.name) > 0; }));
}

} // namespace

TypeReport checkJudgment(const Judgment& j, const CheckOptions& opts)
{
    TypeReport report{j, opts.regime, Accepted{}, collectWarnings(j, opts), std::nullopt};
    if (opts.regime == Regime::Unityped) report.fregeanArity = fregeanArity(j);
    try {
        validateContext(j, opts);
        Accepted ok = checkClaim(j, opts);
        report.verdict = std::move(ok);
    } catch (const KernelError& e) {
        report.verdict = Rejected{e.diagnostic()};
    }
    return report;
}

Judgment generalize(const Judgment& j, std::string_view var, const CheckOptions& opts)
{
    auto it = std::find_if(j.context.begin(), j.context.end(), [&](const ContextEntry& e) { return e.name == var; });
    if (it == j.context.end())
        throw KernelError(ErrorCode::VarNotInContext, "'" + std::string(var) + "' is not in the context");

    const bool objectVar = it->type == Type::iota();
    const bool functionVar = it->type == Type::arrow(Type::iota(), Type::iota());
    if (!objectVar && !functionVar)
        throw KernelError(ErrorCode::ArityOrDomainMismatch,
                          "quantifiers bind variables of type i or i -> i, not " + printType(it->type));

    Context rest;
    for (const auto& e : j.context)
        if (e.name != var) rest.push_back(e);
    auto quantify = [&](const Term& body) {
        return functionVar ? Term::forall2(std::string(var), body) : Term::forall1(std::string(var), body);
    };

    if (const auto* h = std::get_if<HasType>(&j.claim)) {
        validateContext(j, opts);
        Type inferred = inferType(j.context, h->subject, opts);
        if (!isSubtype(inferred, Type::omicron()))
            throw KernelError(ErrorCode::SubjectNotTruthValued,
                              "subject has type " + printType(inferred) + ", not o",
                              h->subject.span().known() ? std::optional(h->subject.span()) : std::nullopt,
                              printTerm(h->subject));
        return Judgment{rest, HasType{quantify(h->subject), Type::omicron()}};
    }
    if (const auto* t = std::get_if<IsTrue>(&j.claim)) {
        TypeReport premise = checkJudgment(j, opts);
        if (!premise.accepted()) throw KernelError(premise.error());
        return Judgment{rest, IsTrue{quantify(t->subject)}};
    }
    throw KernelError(ErrorCode::SubjectNotTruthValued, "an equation is not a truth-valued subject");
}

namespace {

// Replaces each full application f(t1)...(tn) by `body` with the arguments in
// its argument places.
Term fillArgumentPlaces(const Term& t, const std::string& fn, const Term& body, std::size_t arity)
{
    if (t.is(TermKind::App) || t.is(TermKind::Var)) {
        std::vector<Term> args;
        const Term* head = &t;
        while (head->is(TermKind::App)) {
            args.push_back(head->right());
            head = &head->left();
        }
        if (head->is(TermKind::Var) && head->name() == fn) {
            if (args.size() != arity)
                throw KernelError(ErrorCode::TypeMismatchInInstantiation,
                                  "'" + fn + "' must be applied to " + std::to_string(arity) + " argument(s)",
                                  t.span().known() ? std::optional(t.span()) : std::nullopt, printTerm(t));
            std::reverse(args.begin(), args.end());
            Term out = body;
            const std::string_view places[] = {kFirstArgumentPlace, kSecondArgumentPlace};
            for (std::size_t i = 0; i < arity; ++i)
                out = substitute(out, places[i], fillArgumentPlaces(args[i], fn, body, arity));
            return out;
        }
    }
    if (t.arity() == 0) return t;
    if (t.isBinder() && t.name() == fn) return t;
    std::vector<Term> kids;
    for (std::size_t i = 0; i < t.arity(); ++i) kids.push_back(fillArgumentPlaces(t.child(i), fn, body, arity));
    return t.withChildren(std::move(kids));
}

} // namespace

Judgment instantiate(const Judgment& schema, const Assignment& assignment, const CheckOptions& opts)
{
    Claim claim = schema.claim;
    for (const auto& [name, replacement] : assignment) {
        const ContextEntry* entry = lookup(schema.context, name);
        if (!entry) throw KernelError(ErrorCode::VarNotInContext, "'" + name + "' is not in the schema's context");

        NameSet fv = freeVars(replacement);
        const bool usesFirst = fv.erase(std::string(kFirstArgumentPlace)) > 0;
        const bool usesSecond = fv.erase(std::string(kSecondArgumentPlace)) > 0;
        if (!fv.empty())
            throw KernelError(ErrorCode::NonClosedReplacement,
                              "replacement for '" + name + "' has free variable '" + *fv.begin() + "'",
                              std::nullopt, printTerm(replacement));

        if (!usesFirst && !usesSecond) {
            try {
                checkType({}, replacement, entry->type, opts);
            } catch (const KernelError& e) {
                throw KernelError(ErrorCode::TypeMismatchInInstantiation,
                                  "replacement for '" + name + "' : " + printType(entry->type) + " " +
                                      e.diagnostic().message,
                                  std::nullopt, printTerm(replacement));
            }
            claim = mapClaim(claim, [&](const Term& t) { return substitute(t, name, replacement); });
            continue;
        }

        // Open replacement: a function term given by its argument places.
        const std::size_t arity = usesSecond ? 2 : 1;
        Context places{{std::string(kFirstArgumentPlace), Type::iota()}};
        if (arity == 2) places.push_back({std::string(kSecondArgumentPlace), Type::iota()});
        Type result = entry->type;
        for (std::size_t i = 0; i < arity; ++i) {
            if (!result.isArrow() || result.domain() != Type::iota())
                throw KernelError(ErrorCode::TypeMismatchInInstantiation,
                                  "'" + name + "' : " + printType(entry->type) + " has no " +
                                      std::to_string(arity) + " object argument place(s)",
                                  std::nullopt, printTerm(replacement));
            result = result.codomain();
        }
        try {
            checkType(places, replacement, result, opts);
        } catch (const KernelError& e) {
            throw KernelError(ErrorCode::TypeMismatchInInstantiation,
                              "replacement for '" + name + "' " + e.diagnostic().message, std::nullopt,
                              printTerm(replacement));
        }
        claim = mapClaim(claim, [&](const Term& t) { return fillArgumentPlaces(t, name, replacement, arity); });
    }

    Context rest;
    for (const auto& e : schema.context)
        if (!assignment.count(e.name)) rest.push_back(e);
    Judgment out{rest, claim};
    TypeReport report = checkJudgment(out, opts);
    if (!report.accepted()) throw KernelError(report.error());
    return out;
}

} // namespace bgs
