#include <doctest.h>

#include "bgs/checker.hpp"
#include "bgs/equality.hpp"
#include "bgs/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bgs;

namespace {

const Type I = Type::iota();
const Type O = Type::omicron();
const Type II = Type::arrow(I, I);

CheckOptions in(Regime r)
{
    CheckOptions o;
    o.regime = r;
    return o;
}

TypeReport check(const char* judgment, Regime r = Regime::Strict)
{
    return checkJudgment(parseJudgment(judgment), in(r));
}

ErrorCode rejection(const char* judgment, Regime r = Regime::Strict)
{
    TypeReport rep = check(judgment, r);
    REQUIRE_MESSAGE(!rep.accepted(), judgment);
    return rep.error().code;
}

std::string ruleOf(const char* judgment, Regime r = Regime::Strict)
{
    TypeReport rep = check(judgment, r);
    REQUIRE_MESSAGE(rep.accepted(), judgment << ": " << (rep.accepted() ? "" : rep.error().message));
    return rep.acceptance().rule;
}

template <class F>
ErrorCode codeOf(F&& f)
{
    try {
        f();
    } catch (const KernelError& e) {
        return e.code();
    }
    FAIL("no KernelError thrown");
    return ErrorCode::SyntaxError;
}

Type infer(const char* ctx, const char* term, Regime r)
{
    Context c = parseJudgment(std::string(ctx) + " |- true true").context;
    return inferType(c, parseTerm(term), in(r));
}

} // namespace

TEST_SUITE("checker")
{
    TEST_CASE("strict typing")
    {
        CHECK(infer("", "vr e. not(e @ e)", Regime::Strict) == I);
        CHECK(infer("a : i", "not(a)", Regime::Strict) == O);
        CHECK(infer("a : i, b : i", "a => b", Regime::Strict) == O);
        CHECK(infer("a : i", "the(a)", Regime::Strict) == I);
        CHECK(infer("a : i, b : i", "a @ b", Regime::Strict) == I);
        CHECK(infer("f : i -> i", "forall x. f(x)", Regime::Strict) == O);
        CHECK(infer("", "forall2 f. forall x. f(x) == x", Regime::Strict) == O);
        CHECK(infer("", "pair(true, false)", Regime::Strict) == I);
        CHECK(infer("M : (i -> i) -> i, f : i -> i", "M(f)", Regime::Strict) == I);
        CHECK(rejection("M : (i -> i) -> i |- M(vr e. e) : i") == ErrorCode::ArityOrDomainMismatch);
        CHECK(rejection("f : i -> i |- f(f) : i") == ErrorCode::IllTypedSelfApplication);
        CHECK(rejection("f : i -> i, a : i |- a(f) : i") == ErrorCode::ArityOrDomainMismatch);
        CHECK(rejection("f : i -> i |- not(f) : o") == ErrorCode::ArityOrDomainMismatch);
        CHECK(rejection("|- \\x. x : i -> i") == ErrorCode::LambdaInNonChurchRegime);
        CHECK(rejection("|- x : i") == ErrorCode::UnboundVariable);
        CHECK(rejection("a : i, a : o |- a : i") == ErrorCode::DuplicateContextEntry);
        CHECK(rejection("a : i |- a : o") == ErrorCode::ArityOrDomainMismatch);
    }

    TEST_CASE("rejections carry the offending span")
    {
        TypeReport rep = check("f : i -> i |- not(f(f)) : o");
        REQUIRE_FALSE(rep.accepted());
        REQUIRE(rep.error().span);
        CHECK(rep.error().span->start == 18);
        CHECK(rep.error().at == "f(f)");
    }

    TEST_CASE("subsumption")
    {
        CHECK(ruleOf("a : i |- not(a) : i") == "typing");
        CHECK(check("a : i |- not(a) : i").acceptance().inferred == O);
        CHECK(ruleOf("g : i -> i, h : o -> i |- h(not(true)) : i") == "typing");
        CHECK(ruleOf("M : (i -> o) -> i, f : i -> o |- M(f) : i") == "typing");
        CHECK(rejection("M : (i -> o) -> i, f : i -> i |- M(f) : i") == ErrorCode::ArityOrDomainMismatch);
        gen::Rng rng(3);
        gen::StrictGen g{rng};
        Context ctx{{"a", I}, {"b", I}, {"f", II}};
        for (int i = 0; i < 300; ++i) {
            Term t = g.term(4);
            if (inferType(ctx, t, in(Regime::Strict)) == O) CHECK_NOTHROW(checkType(ctx, t, I, in(Regime::Strict)));
        }
    }

    TEST_CASE("strict closed object terms contain no free variables or lambdas")
    {
        gen::Rng rng(4);
        gen::StrictGen g{rng};
        g.allowFree = false;
        for (int i = 0; i < 300; ++i) {
            Term t = g.term(5);
            REQUIRE_NOTHROW(checkType({}, t, I, in(Regime::Strict)));
            CHECK(isClosed(t));
            CHECK_FALSE(containsKind(t, TermKind::Lambda));
        }
    }

    TEST_CASE("principal types are deterministic")
    {
        gen::Rng rng(5);
        gen::StrictGen g{rng};
        Context ctx{{"a", I}, {"b", I}, {"f", II}};
        for (int i = 0; i < 200; ++i) {
            Term t = g.term(4);
            for (Regime r : {Regime::Strict, Regime::Church}) {
                try {
                    Type first = inferType(ctx, t, in(r));
                    CHECK(inferType(ctx, t, in(r)) == first);
                } catch (const KernelError&) {
                    CHECK_THROWS_AS(inferType(ctx, t, in(r)), KernelError);
                }
            }
        }
    }

    TEST_CASE("church typing")
    {
        TypeReport russell = check("|- vr e. not(e @ e) : i", Regime::Church);
        REQUIRE_FALSE(russell.accepted());
        CHECK(russell.error().code == ErrorCode::IllTypedSelfApplication);
        CHECK(russell.error().at == "e @ e");

        CHECK(infer("", "\\x. x", Regime::Church) == II);
        CHECK(infer("", "\\x : o. x", Regime::Church) == Type::arrow(O, O));
        CHECK(infer("", "vr e. not(e)", Regime::Church) == Type::arrow(I, O));
        CHECK(infer("a : i", "a @ vr e. not(e)", Regime::Church) == O);
        CHECK(infer("", "\\f. \\x. f(x)", Regime::Church) == Type::arrow(II, II));
        CHECK(infer("", "\\z. z(true)(false)", Regime::Church) ==
              Type::arrow(Type::arrow(O, Type::arrow(O, I)), I));
        CHECK(infer("f : i -> i, g : i -> i", "f == g", Regime::Church) == O);
        CHECK(infer("", "(\\x. x)(true)", Regime::Church) == O);
        CHECK(rejection("|- \\x. x(x) : i", Regime::Church) == ErrorCode::IllTypedSelfApplication);
        CHECK(rejection("f : i -> i, a : i |- f == a : o", Regime::Church) == ErrorCode::ArityOrDomainMismatch);
        CHECK(rejection("|- true @ false : i", Regime::Church) == ErrorCode::ArityOrDomainMismatch);
    }

    TEST_CASE("unityped typing")
    {
        CHECK(infer("x : i", "not(x)", Regime::Unityped) == O);
        CHECK(infer("", "vr e. not(e)", Regime::Unityped) == I);
        CHECK(infer("a : i", "forall x. x == a", Regime::Unityped) == O);
        CHECK(rejection("a : i |- vr e. e == a : i", Regime::Unityped) == ErrorCode::ArityOrDomainMismatch);
        CHECK(rejection("a : i, b : i |- a @ b : i", Regime::Unityped) == ErrorCode::ForbiddenConstructInRegime);
        CHECK(rejection("f : i -> i |- true : o", Regime::Unityped) == ErrorCode::ForbiddenConstructInRegime);
        CHECK(rejection("|- forall2 f. true : o", Regime::Unityped) == ErrorCode::ForbiddenConstructInRegime);
        CHECK(rejection("|- \\x. x : i", Regime::Unityped) == ErrorCode::LambdaInNonChurchRegime);
        CHECK(rejection("|- forall x. the(x) : o", Regime::Unityped) == ErrorCode::ArityOrDomainMismatch);

        TypeReport weak = check("x : i, y : i |- not(x) : o", Regime::Unityped);
        REQUIRE(weak.accepted());
        REQUIRE(weak.fregeanArity);
        CHECK(*weak.fregeanArity == 1);
        CHECK_FALSE(check("x : i |- not(x) : o").fregeanArity);
    }

    TEST_CASE("warnings")
    {
        TypeReport high = check("F : (((i -> i) -> i) -> i) -> i |- F : (((i -> i) -> i) -> i) -> i");
        REQUIRE(high.accepted());
        REQUIRE(high.warnings.size() == 2);
        CHECK(high.warnings[0].kind == WarningKind::NonFregeanLevel);
        CHECK(high.warnings[1].kind == WarningKind::NonFregeanLevel);

        TypeReport letter = check("q7 : i |- q7 : i");
        REQUIRE(letter.accepted());
        REQUIRE(letter.warnings.size() == 1);
        CHECK(letter.warnings[0].kind == WarningKind::UnknownLetterClass);

        CHECK(check("a : i |- a : i").warnings.empty());
    }

    TEST_CASE("truth claims")
    {
        CHECK(ruleOf("A : o, B : o |- A => (B => A) true") == "tautology");
        CHECK(ruleOf("|- true => (false => true) true") == "boolean-evaluation");
        CHECK(ruleOf("a : i |- a == a true") == "identity-reflexivity");
        CHECK(ruleOf("f : i -> i, g : i -> i |- ((vr e. f(e)) == vr a. g(a)) => (forall x. f(x) == g(x)) true") ==
              "basic-law-v");
        CHECK(ruleOf("f : i -> i, g : i -> i |- (forall x. f(x) == g(x)) => ((vr e. f(e)) == vr a. g(a)) true") ==
              "basic-law-v");
        CHECK(ruleOf("f : i -> i, g : i -> i |- ((vr e. f(e)) == vr a. g(a)) == (forall x. f(x) == g(x)) true") ==
              "basic-law-v");
        CHECK(ruleOf("x : i, f : i -> i |- (forall a. f(a)) => f(x) true") == "universal-instantiation");
        CHECK(ruleOf("|- forall2 f. forall x. (forall a. f(a)) => f(x) true") == "universal-instantiation");
        CHECK(ruleOf("a : i |- forall x. x == x true") == "generalization/identity-reflexivity");
        CHECK(rejection("A : o, B : o |- A => B true") == ErrorCode::UnprovableTruthClaim);
        CHECK(rejection("|- true => false true") == ErrorCode::UnprovableTruthClaim);
        CHECK(rejection("x : i, f : i -> i |- (forall a. f(a)) => f(f(a)) true") == ErrorCode::UnboundVariable);
        CHECK(rejection("x : i, f : i -> i |- (forall a. f(x)) => f(a) true") == ErrorCode::UnboundVariable);
        CHECK(rejection("f : i -> i |- f true") == ErrorCode::ArityOrDomainMismatch);
    }

    TEST_CASE("tautology recognizer")
    {
        CHECK(isTautology(parseTerm("a => a")));
        CHECK(isTautology(parseTerm("(a => b => c) => (a => b) => a => c")));
        CHECK(isTautology(parseTerm("not(not(a)) => a")));
        CHECK(isTautology(parseTerm("horiz(a) => horiz(horiz(a))")));
        CHECK(isTautology(parseTerm("(a @ b) == (a @ b)")));
        CHECK_FALSE(isTautology(parseTerm("a => not(a)")));
        CHECK_FALSE(isTautology(parseTerm("a")));
    }

    TEST_CASE("equality claims")
    {
        CHECK(ruleOf("a : i |- a @ vr e. not(e) = not(a) : i") == "normalization");
        CHECK(ruleOf("|- pair(true, false) = vr z. false @ true @ z : i") == "normalization");
        CHECK(ruleOf("|- (vr e. not(e)) == vr a. not(a) = forall x. not(x) == not(x) : o") == "basic-law-v");
        CHECK(rejection("a : i |- a = not(a) : i") == ErrorCode::NotConvertible);
        CHECK(rejection("|- (vr e. not(e @ e)) @ (vr e. not(e @ e)) = true : i") == ErrorCode::NotConvertible);
    }

    TEST_CASE("generalize")
    {
        Judgment g = generalize(parseJudgment("x : i |- x == x : o"), "x", in(Regime::Strict));
        CHECK(g.categorical());
        CHECK(printJudgment(g) == "|- forall x. x == x : o");

        Judgment two = generalize(parseJudgment("x : i, y : i |- x == y : o"), "x", in(Regime::Strict));
        CHECK(printJudgment(two) == "y : i |- forall x. x == y : o");

        Judgment fn = generalize(parseJudgment("f : i -> i |- forall x. f(x) == f(x) : o"), "f", in(Regime::Strict));
        CHECK(printJudgment(fn) == "|- forall2 f. forall x. f(x) == f(x) : o");

        Judgment truth = generalize(parseJudgment("x : i |- x == x true"), "x", in(Regime::Strict));
        CHECK(printJudgment(truth) == "|- forall x. x == x true");
        CHECK(checkJudgment(truth, in(Regime::Strict)).accepted());

        CHECK(codeOf([] { generalize(parseJudgment("x : i |- x : i"), "x", in(Regime::Strict)); }) ==
              ErrorCode::SubjectNotTruthValued);
        CHECK(codeOf([] { generalize(parseJudgment("x : i |- x == x : o"), "y", in(Regime::Strict)); }) ==
              ErrorCode::VarNotInContext);
    }

    TEST_CASE("instantiate")
    {
        Judgment schema = parseJudgment("x : i, f : i -> i |- (forall a. f(a)) => f(x) true");
        Judgment inst = instantiate(schema, {{"f", parseTerm("not(%xi)")}, {"x", Term::theTrue()}},
                                    in(Regime::Strict));
        CHECK(inst.categorical());
        CHECK(printJudgment(inst) == "|- (forall a. not(a)) => not(true) true");

        Judgment blv = parseJudgment(
            "f : i -> i, g : i -> i |- ((vr e. f(e)) == vr a. g(a)) => (forall x. f(x) == g(x)) true");
        Judgment refl = instantiate(blv, {{"f", parseTerm("%xi")}, {"g", parseTerm("%xi")}}, in(Regime::Strict));
        CHECK(refl.categorical());
        CHECK(printJudgment(refl) == "|- (vr e. e) == (vr a. a) => forall x. x == x true");
        CHECK(checkJudgment(refl, in(Regime::Strict)).accepted());

        Judgment closedFn = instantiate(parseJudgment("M : (i -> i) -> i, f : i -> i, a : i |- M(f) == a : o"),
                                        {{"a", parseTerm("vr e. e")}}, in(Regime::Strict));
        CHECK(printJudgment(closedFn) == "M : (i -> i) -> i, f : i -> i |- M(f) == vr e. e : o");

        CHECK(codeOf([&] { instantiate(schema, {{"x", parseTerm("y")}}, in(Regime::Strict)); }) ==
              ErrorCode::NonClosedReplacement);
        CHECK(codeOf([&] { instantiate(schema, {{"q", Term::theTrue()}}, in(Regime::Strict)); }) ==
              ErrorCode::VarNotInContext);
        CHECK(codeOf([&] { instantiate(schema, {{"f", Term::theTrue()}}, in(Regime::Strict)); }) ==
              ErrorCode::TypeMismatchInInstantiation);
        CHECK(codeOf([&] { instantiate(schema, {{"f", parseTerm("%xi == %zeta")}}, in(Regime::Strict)); }) ==
              ErrorCode::TypeMismatchInInstantiation);
    }

    TEST_CASE("generalize then instantiate recovers the body")
    {
        gen::Rng rng(6);
        gen::StrictGen g{rng};
        g.allowFree = false;
        int tried = 0;
        for (int i = 0; i < 400 && tried < 100; ++i) {
            Term body = g.term(3, {"x"});
            if (!occursFree(body, "x")) continue;
            Term subject = Term::neg(body);
            Judgment j{{{"x", I}}, HasType{subject, O}};
            Judgment q = generalize(j, "x", in(Regime::Strict));
            const Term& quantified = std::get<HasType>(q.claim).subject;
            REQUIRE(quantified.is(TermKind::ForAll1));
            Term witness = g.term(2);
            Term opened = substitute(quantified.body(), quantified.name(), witness);
            Judgment inst = instantiate(j, {{"x", witness}}, in(Regime::Strict));
            Term direct = std::get<HasType>(inst.claim).subject;
            CHECK(alphaEq(normalize(opened, 200).result(), normalize(direct, 200).result()));
            ++tried;
        }
        CHECK(tried >= 50);
    }
}
