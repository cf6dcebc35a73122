#pragma once

#include <random>
#include <string>
#include <vector>

#include "bgs/term.hpp"
#include "bgs/type.hpp"

namespace gen {

using bgs::Term;
using bgs::Type;

class Rng {
public:
    explicit Rng(unsigned seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

    template <class T>
    const T& pick(const std::vector<T>& xs)
    {
        return xs[below(xs.size())];
    }

private:
    std::mt19937 engine_;
};

inline Type type(Rng& rng, int depth)
{
    if (depth <= 0 || rng.chance(0.35)) return rng.chance(0.7) ? Type::iota() : Type::omicron();
    return Type::arrow(type(rng, depth - 1), type(rng, depth - 1));
}

// Arrow types whose nesting depth is at most `depth` (>= 1).
inline Type arrowType(Rng& rng, int depth)
{
    return Type::arrow(type(rng, depth - 1), type(rng, depth - 1));
}

// Unrestricted syntax, every constructor, for printer/parser round trips.
struct SyntaxGen {
    Rng& rng;
    std::vector<std::string> names{"a", "b", "x", "y", "e", "e'", "z_1", "q7", "%alpha", "!a", "!f", "$Foo", "f", "M"};
    std::vector<std::string> constants{"c", "k0"};

    Term term(int depth)
    {
        if (depth <= 0 || rng.chance(0.2)) return leaf();
        switch (rng.below(15)) {
        case 0: return Term::horizontal(term(depth - 1));
        case 1: return Term::neg(term(depth - 1));
        case 2: return Term::cond(term(depth - 1), term(depth - 1));
        case 3: return Term::id(term(depth - 1), term(depth - 1));
        case 4: return Term::the(term(depth - 1));
        case 5: return Term::forall1(rng.pick(names), term(depth - 1));
        case 6: return Term::forall2(rng.pick(names), term(depth - 1));
        case 7: return Term::valueRange(rng.pick(names), term(depth - 1));
        case 8:
        case 9: return Term::cap(term(depth - 1), term(depth - 1));
        case 10: return Term::app(term(depth - 1), term(depth - 1));
        case 11: return Term::pair(term(depth - 1), term(depth - 1));
        case 12:
            return Term::lambda(rng.pick(names), term(depth - 1),
                                rng.chance(0.5) ? std::optional(type(rng, 2)) : std::nullopt);
        default: return leaf();
        }
    }

    Term leaf()
    {
        switch (rng.below(6)) {
        case 0: return Term::theTrue();
        case 1: return Term::theFalse();
        case 2:
            if (!constants.empty()) return Term::constant(rng.pick(constants));
            return Term::var(rng.pick(names));
        default: return Term::var(rng.pick(names));
        }
    }
};

// Strict-regime object terms. Every term produced is well-typed under the
// context {a : i, b : i, f : i -> i} in the strict regime, and @ is usually
// applied to a value-range so that there is something to compute.
struct StrictGen {
    Rng& rng;
    bool allowFree = true;       // may use a, b and f
    bool allowQuantifiers = true;
    bool allowThe = true;
    std::vector<std::string> binders{"e", "x", "y", "a'", "z"};

    Term term(int depth, std::vector<std::string> scope = {})
    {
        if (depth <= 0 || rng.chance(0.15)) return leaf(scope);
        switch (rng.below(14)) {
        case 0: return Term::horizontal(term(depth - 1, scope));
        case 1: return Term::neg(term(depth - 1, scope));
        case 2: return Term::cond(term(depth - 1, scope), term(depth - 1, scope));
        case 3: return Term::id(term(depth - 1, scope), term(depth - 1, scope));
        case 4:
            if (allowThe) return Term::the(term(depth - 1, scope));
            return Term::neg(term(depth - 1, scope));
        case 5:
            if (allowQuantifiers) {
                const std::string x = rng.pick(binders);
                scope.push_back(x);
                return Term::forall1(x, term(depth - 1, scope));
            }
            return leaf(scope);
        case 6:
        case 7: return valueRange(depth, scope);
        case 8:
        case 9:
        case 10: return Term::cap(term(depth - 1, scope), valueRange(depth - 1, scope));
        case 11: return Term::cap(term(depth - 1, scope), term(depth - 1, scope));
        case 12: return Term::pair(term(depth - 1, scope), term(depth - 1, scope));
        default:
            if (allowFree) return Term::app(Term::var("f"), term(depth - 1, scope));
            return leaf(scope);
        }
    }

    Term valueRange(int depth, std::vector<std::string> scope)
    {
        const std::string e = rng.pick(binders);
        scope.push_back(e);
        if (depth <= 1 || rng.chance(0.3)) {
            // Bodies that mention the binder in a computing position.
            switch (rng.below(4)) {
            case 0: return Term::valueRange(e, Term::neg(Term::var(e)));
            case 1: return Term::valueRange(e, Term::var(e));
            case 2: return Term::valueRange(e, Term::id(Term::var(e), leaf(scope)));
            default: return Term::valueRange(e, Term::cond(leaf(scope), Term::var(e)));
            }
        }
        return Term::valueRange(e, term(depth - 1, scope));
    }

    Term leaf(const std::vector<std::string>& scope)
    {
        std::size_t choices = 2 + scope.size() + (allowFree ? 2 : 0);
        std::size_t k = rng.below(choices);
        if (k == 0) return Term::theTrue();
        if (k == 1) return Term::theFalse();
        k -= 2;
        if (k < scope.size()) return Term::var(scope[k]);
        return Term::var(k == scope.size() ? "a" : "b");
    }
};

} // namespace gen
