#include "bgs/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bgs {

std::string_view termKindName(TermKind kind)
{
    switch (kind) {
    case TermKind::Var: return "Var";
    case TermKind::True: return "TheTrue";
    case TermKind::False: return "TheFalse";
    case TermKind::Const: return "Const";
    case TermKind::Horizontal: return "Horizontal";
    case TermKind::Not: return "Not";
    case TermKind::Cond: return "Cond";
    case TermKind::Id: return "Id";
    case TermKind::The: return "The";
    case TermKind::ForAll1: return "ForAll1";
    case TermKind::ForAll2: return "ForAll2";
    case TermKind::ValueRange: return "ValueRange";
    case TermKind::Cap: return "Cap";
    case TermKind::App: return "App";
    case TermKind::Pair: return "Pair";
    case TermKind::Lambda: return "Lambda";
    }
    return "?";
}

Term Term::make(TermKind kind, std::string name, std::vector<Term> children, std::optional<Type> binderType)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->arity = children.size();
    for (std::size_t i = 0; i < children.size(); ++i) node->children[i] = std::move(children[i]);
    node->binderType = std::move(binderType);
    return Term{std::move(node)};
}

Term Term::var(std::string name) { return make(TermKind::Var, std::move(name), {}); }

Term Term::theTrue()
{
    static const Term t = make(TermKind::True, "", {});
    return t;
}

Term Term::theFalse()
{
    static const Term t = make(TermKind::False, "", {});
    return t;
}

Term Term::constant(std::string name) { return make(TermKind::Const, std::move(name), {}); }
Term Term::horizontal(Term arg) { return make(TermKind::Horizontal, "", {std::move(arg)}); }
Term Term::neg(Term arg) { return make(TermKind::Not, "", {std::move(arg)}); }
Term Term::cond(Term a, Term c) { return make(TermKind::Cond, "", {std::move(a), std::move(c)}); }
Term Term::id(Term l, Term r) { return make(TermKind::Id, "", {std::move(l), std::move(r)}); }
Term Term::the(Term arg) { return make(TermKind::The, "", {std::move(arg)}); }
Term Term::forall1(std::string b, Term body) { return make(TermKind::ForAll1, std::move(b), {std::move(body)}); }
Term Term::forall2(std::string b, Term body) { return make(TermKind::ForAll2, std::move(b), {std::move(body)}); }
Term Term::valueRange(std::string b, Term body) { return make(TermKind::ValueRange, std::move(b), {std::move(body)}); }
Term Term::cap(Term arg, Term range) { return make(TermKind::Cap, "", {std::move(arg), std::move(range)}); }
Term Term::app(Term fn, Term arg) { return make(TermKind::App, "", {std::move(fn), std::move(arg)}); }
Term Term::pair(Term l, Term r) { return make(TermKind::Pair, "", {std::move(l), std::move(r)}); }

Term Term::lambda(std::string b, Term body, std::optional<Type> binderType)
{
    return make(TermKind::Lambda, std::move(b), {std::move(body)}, std::move(binderType));
}

bool Term::isBinder() const
{
    switch (kind()) {
    case TermKind::ForAll1:
    case TermKind::ForAll2:
    case TermKind::ValueRange:
    case TermKind::Lambda: return true;
    default: return false;
    }
}

const Term& Term::child(std::size_t i) const
{
    if (i >= node_->arity) throw std::out_of_range("term child index out of range");
    return *node_->children[i];
}

Term Term::withSpan(SourceSpan span) const
{
    auto node = std::make_shared<Node>(*node_);
    node->span = span;
    return Term{std::move(node)};
}

Term Term::withChildren(std::vector<Term> children) const
{
    if (children.size() != arity()) throw std::logic_error("withChildren: arity mismatch");
    bool same = true;
    for (std::size_t i = 0; i < children.size(); ++i)
        same = same && children[i].node_ == node_->children[i]->node_;
    if (same) return *this;
    auto node = std::make_shared<Node>(*node_);
    for (std::size_t i = 0; i < children.size(); ++i) node->children[i] = std::move(children[i]);
    return Term{std::move(node)};
}

Term Term::withBinder(std::string name, Term body) const
{
    if (!isBinder()) throw std::logic_error("withBinder on a non-binder");
    auto node = std::make_shared<Node>(*node_);
    node->name = std::move(name);
    node->children[0] = std::move(body);
    return Term{std::move(node)};
}

// ---------------------------------------------------------------------------
// Letter conventions

std::string_view letterKindName(LetterKind kind)
{
    switch (kind) {
    case LetterKind::RomanObject: return "RomanObject";
    case LetterKind::GreekObject: return "GreekObject";
    case LetterKind::GothicObject: return "GothicObject";
    case LetterKind::RomanFn1: return "RomanFn1";
    case LetterKind::GreekFn1: return "GreekFn1";
    case LetterKind::GothicFn1: return "GothicFn1";
    case LetterKind::RomanFn2: return "RomanFn2";
    case LetterKind::GreekFn2: return "GreekFn2";
    case LetterKind::AuxiliaryName: return "AuxiliaryName";
    }
    return "?";
}

namespace {

bool oneOf(std::string_view s, std::initializer_list<std::string_view> options)
{
    return std::find(options.begin(), options.end(), s) != options.end();
}

bool isUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool isLower(char c) { return c >= 'a' && c <= 'z'; }

} // namespace

std::optional<LetterKind> tryLetterKind(std::string_view name)
{
    while (!name.empty() && name.back() == '\'') name.remove_suffix(1);
    if (name.empty()) return std::nullopt;

    const char head = name.front();
    std::string_view rest = name.substr(1);

    if (head == '!' && rest.size() == 1) {
        if (rest[0] >= 'a' && rest[0] <= 'e') return LetterKind::GothicObject;
        if (rest[0] >= 'f' && rest[0] <= 'h') return LetterKind::GothicFn1;
        return std::nullopt;
    }
    if (head == '%') {
        if (oneOf(rest, {"alpha", "beta", "gamma", "delta", "epsilon"})) return LetterKind::GreekObject;
        if (oneOf(rest, {"Gamma", "Delta", "Epsilon", "Zeta", "Eta", "Theta", "Iota", "Kappa", "Lambda",
                         "Mu", "Nu", "Xi", "Omicron", "Pi", "Rho"}))
            return LetterKind::GreekObject;
        if (oneOf(rest, {"Phi", "Chi", "Psi"})) return LetterKind::GreekFn1;
        if (oneOf(rest, {"mu", "Omega"})) return LetterKind::GreekFn2;
        return std::nullopt;
    }
    if (head == '$') {
        if (rest.empty() || !isUpper(rest[0])) return std::nullopt;
        for (char c : rest)
            if (!isUpper(c) && !isLower(c)) return std::nullopt;
        return LetterKind::AuxiliaryName;
    }
    if (name.size() != 1) return std::nullopt;
    if (head == 'f' || head == 'g' || head == 'h' || head == 'F' || head == 'G' || head == 'H')
        return LetterKind::RomanFn1;
    if (head == 'M') return LetterKind::RomanFn2;
    if (isLower(head) && head != 'm') return LetterKind::RomanObject;
    return std::nullopt;
}

LetterKind letterKind(std::string_view name)
{
    if (auto k = tryLetterKind(name)) return *k;
    throw KernelError(ErrorCode::UnknownLetterClass,
                      "'" + std::string(name) + "' matches no letter convention");
}

// ---------------------------------------------------------------------------
// Binding

namespace {

void collectFree(const Term& t, std::vector<std::string>& bound, NameSet& out)
{
    switch (t.kind()) {
    case TermKind::Var:
        if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
        return;
    default: break;
    }
    if (t.isBinder()) {
        bound.push_back(t.name());
        collectFree(t.body(), bound, out);
        bound.pop_back();
        return;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) collectFree(t.child(i), bound, out);
}

} // namespace

NameSet freeVars(const Term& t)
{
    NameSet out;
    std::vector<std::string> bound;
    collectFree(t, bound, out);
    return out;
}

bool isClosed(const Term& t) { return freeVars(t).empty(); }

bool occursFree(const Term& t, std::string_view name)
{
    if (t.is(TermKind::Var)) return t.name() == name;
    if (t.isBinder()) return t.name() != name && occursFree(t.body(), name);
    for (std::size_t i = 0; i < t.arity(); ++i)
        if (occursFree(t.child(i), name)) return true;
    return false;
}

std::string freshName(const std::string& base, const NameSet& avoid)
{
    std::string candidate = base;
    while (avoid.count(candidate)) candidate += '\'';
    return candidate;
}

namespace {

Term substituteImpl(const Term& t, std::string_view name, const Term& replacement, const NameSet& replacementFree)
{
    if (t.is(TermKind::Var)) return t.name() == name ? replacement : t;
    if (t.arity() == 0) return t;
    if (t.isBinder()) {
        if (t.name() == name || !occursFree(t.body(), name)) return t;
        if (replacementFree.count(t.name())) {
            NameSet avoid = replacementFree;
            avoid.merge(freeVars(t.body()));
            avoid.insert(std::string(name));
            std::string renamed = freshName(t.name(), avoid);
            Term body = substituteImpl(t.body(), t.name(), Term::var(renamed), {renamed});
            return t.withBinder(renamed, substituteImpl(body, name, replacement, replacementFree));
        }
        return t.withChildren({substituteImpl(t.body(), name, replacement, replacementFree)});
    }
    std::vector<Term> kids;
    kids.reserve(t.arity());
    for (std::size_t i = 0; i < t.arity(); ++i)
        kids.push_back(substituteImpl(t.child(i), name, replacement, replacementFree));
    return t.withChildren(std::move(kids));
}

using Scope = std::vector<std::string>;

// Index of the innermost binding of `name`, counted from the innermost binder.
std::optional<std::size_t> boundIndex(const Scope& scope, const std::string& name)
{
    for (std::size_t i = scope.size(); i-- > 0;)
        if (scope[i] == name) return scope.size() - 1 - i;
    return std::nullopt;
}

bool alphaEqImpl(const Term& a, const Term& b, Scope& sa, Scope& sb)
{
    if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
    switch (a.kind()) {
    case TermKind::Var: {
        auto ia = boundIndex(sa, a.name());
        auto ib = boundIndex(sb, b.name());
        if (ia || ib) return ia == ib;
        return a.name() == b.name();
    }
    case TermKind::Const: return a.name() == b.name();
    default: break;
    }
    if (a.isBinder()) {
        if (a.binderType() != b.binderType()) return false;
        sa.push_back(a.name());
        sb.push_back(b.name());
        bool eq = alphaEqImpl(a.body(), b.body(), sa, sb);
        sa.pop_back();
        sb.pop_back();
        return eq;
    }
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!alphaEqImpl(a.child(i), b.child(i), sa, sb)) return false;
    return true;
}

} // namespace

Term substitute(const Term& t, std::string_view name, const Term& replacement)
{
    return substituteImpl(t, name, replacement, freeVars(replacement));
}

bool alphaEq(const Term& a, const Term& b)
{
    Scope sa, sb;
    return alphaEqImpl(a, b, sa, sb);
}

bool containsKind(const Term& t, TermKind kind)
{
    if (t.is(kind)) return true;
    for (std::size_t i = 0; i < t.arity(); ++i)
        if (containsKind(t.child(i), kind)) return true;
    return false;
}

Term desugarPair(const Term& t)
{
    if (t.arity() == 0) return t;
    std::vector<Term> kids;
    kids.reserve(t.arity());
    for (std::size_t i = 0; i < t.arity(); ++i) kids.push_back(desugarPair(t.child(i)));
    if (!t.is(TermKind::Pair)) return t.withChildren(std::move(kids));

    NameSet avoid = freeVars(kids[0]);
    avoid.merge(freeVars(kids[1]));
    std::string e = freshName("e", avoid);
    return Term::valueRange(e, Term::cap(kids[1], Term::cap(kids[0], Term::var(e)))).withSpan(t.span());
}

std::size_t termSize(const Term& t)
{
    std::size_t n = 1;
    for (std::size_t i = 0; i < t.arity(); ++i) n += termSize(t.child(i));
    return n;
}

std::size_t termDepth(const Term& t)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < t.arity(); ++i) d = std::max(d, termDepth(t.child(i)));
    return d + 1;
}

const Term& subtermAt(const Term& t, const Path& path)
{
    const Term* cur = &t;
    for (std::size_t i : path) cur = &cur->child(i);
    return *cur;
}

namespace {

Term replaceAtImpl(const Term& t, const Path& path, std::size_t depth, const Term& replacement)
{
    if (depth == path.size()) return replacement;
    std::vector<Term> kids;
    for (std::size_t i = 0; i < t.arity(); ++i)
        kids.push_back(i == path[depth] ? replaceAtImpl(t.child(i), path, depth + 1, replacement) : t.child(i));
    if (path[depth] >= t.arity()) throw std::out_of_range("replaceAt: bad path");
    return t.withChildren(std::move(kids));
}

} // namespace

Term replaceAt(const Term& t, const Path& path, const Term& replacement)
{
    return replaceAtImpl(t, path, 0, replacement);
}

} // namespace bgs
