#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bgs/diagnostic.hpp"
#include "bgs/type.hpp"

namespace bgs {

enum class TermKind {
    Var,
    True,
    False,
    Const,
    Horizontal,
    Not,
    Cond,
    Id,
    The,
    ForAll1,
    ForAll2,
    ValueRange,
    Cap,   // arg @ range
    App,
    Pair,  // surface sugar, removed by desugarPair
    Lambda,
};

std::string_view termKindName(TermKind kind);

// Immutable concept-script term. Binders carry their surface name; alpha
// equivalence is decided by alphaEq, never by comparing names.
class Term {
public:
    static Term var(std::string name);
    static Term theTrue();
    static Term theFalse();
    static Term constant(std::string name);
    static Term horizontal(Term arg);
    static Term neg(Term arg);
    static Term cond(Term antecedent, Term consequent);
    static Term id(Term left, Term right);
    static Term the(Term arg);
    static Term forall1(std::string binder, Term body);
    static Term forall2(std::string binder, Term body);
    static Term valueRange(std::string binder, Term body);
    static Term cap(Term arg, Term range);
    static Term app(Term fn, Term arg);
    static Term pair(Term left, Term right);
    static Term lambda(std::string binder, Term body, std::optional<Type> binderType = std::nullopt);

    TermKind kind() const;
    bool is(TermKind k) const { return kind() == k; }
    bool isBinder() const;

    // Variable/constant name, or the bound name of a binder.
    const std::string& name() const;
    std::size_t arity() const;
    const Term& child(std::size_t i) const;

    const Term& body() const { return child(0); }   // binders
    const Term& operand() const { return child(0); } // unary primitives
    const Term& left() const { return child(0); }    // binary nodes
    const Term& right() const { return child(1); }

    // Optional domain annotation on a Lambda binder (church regime only).
    const std::optional<Type>& binderType() const;

    const SourceSpan& span() const;
    Term withSpan(SourceSpan span) const;

    // Same head (kind, name, annotation), new children.
    Term withChildren(std::vector<Term> children) const;
    Term withBinder(std::string name, Term body) const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make(TermKind kind, std::string name, std::vector<Term> children,
                     std::optional<Type> binderType = std::nullopt);

    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    TermKind kind;
    std::string name;
    std::size_t arity = 0;
    std::array<std::optional<Term>, 2> children;
    std::optional<Type> binderType;
    SourceSpan span;
};

inline TermKind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline std::size_t Term::arity() const { return node_->arity; }
inline const std::optional<Type>& Term::binderType() const { return node_->binderType; }
inline const SourceSpan& Term::span() const { return node_->span; }

enum class LetterKind {
    RomanObject,
    GreekObject,
    GothicObject,
    RomanFn1,
    GreekFn1,
    GothicFn1,
    RomanFn2,
    GreekFn2,
    AuxiliaryName,
};

std::string_view letterKindName(LetterKind kind);

// Classifies an ASCII identifier by Frege's letter conventions: `!` marks
// Gothic letters, `%` Greek ones and `$` auxiliary names. Trailing primes are
// ignored. Throws KernelError(UnknownLetterClass) when nothing matches.
LetterKind letterKind(std::string_view name);
std::optional<LetterKind> tryLetterKind(std::string_view name);

using NameSet = std::set<std::string, std::less<>>;

NameSet freeVars(const Term& t);
bool isClosed(const Term& t);
bool occursFree(const Term& t, std::string_view name);

// First of base, base', base'', ... not in `avoid`.
std::string freshName(const std::string& base, const NameSet& avoid);

// Capture-avoiding replacement of the free occurrences of `name` by `replacement`.
Term substitute(const Term& t, std::string_view name, const Term& replacement);

bool alphaEq(const Term& a, const Term& b);

// Replaces every pair(a, b) by vr e. b @ (a @ e), innermost first.
Term desugarPair(const Term& t);
bool containsKind(const Term& t, TermKind kind);

std::size_t termSize(const Term& t);
std::size_t termDepth(const Term& t);

using Path = std::vector<std::size_t>;
const Term& subtermAt(const Term& t, const Path& path);
Term replaceAt(const Term& t, const Path& path, const Term& replacement);

} // namespace bgs
