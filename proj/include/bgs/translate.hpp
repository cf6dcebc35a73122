#pragma once

#include "bgs/checker.hpp"
#include "bgs/judgment.hpp"
#include "bgs/term.hpp"
#include "bgs/type.hpp"

namespace bgs {

// Strict concept-script term to church lambda term: value-ranges become
// lambdas and a @ r becomes the application r(a). Pairs are desugared
// first. Throws KernelError(UntranslatableTransortalApplication) when the
// range of some @ is an object that cannot be a value-range (a truth value,
// a constant, a sentence or a description).
Term toLambda(const Term& t);

// Moves a strict-regime judgment to the church regime. Object variables used
// only as @ ranges become i -> i hypotheses. The translated judgment is
// re-checked in the church regime; its HasType/AreEqual type is the church
// type of the translated subject.
Judgment translateJudgment(const Judgment& j, const CheckOptions& strictOpts = {});

// Function extensionality read off Basic Law V. The kernel's identity is
// unsorted, so the sort of the identity between functions rides along.
struct SortedJudgment {
    Judgment judgment;
    Type identitySort;
};

// f, g : i -> i |- (f == g) == (forall x. f(x) == g(x)) true
// Throws KernelError(NotBLVShape) unless the schema is a Basic Law V instance.
SortedJudgment blvAsFunext(const Judgment& schema);

} // namespace bgs
