#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "bgs/term.hpp"
#include "bgs/type.hpp"

namespace bgs {

enum class Regime { Strict, Unityped, Church };

std::string_view regimeName(Regime r);
std::optional<Regime> parseRegime(std::string_view name);

struct ContextEntry {
    std::string name;
    Type type;
};

using Context = std::vector<ContextEntry>;

const ContextEntry* lookup(const Context& ctx, std::string_view name);

struct HasType {
    Term subject;
    Type type;
};

struct IsTrue {
    Term subject;
};

struct AreEqual {
    Term left;
    Term right;
    Type type;
};

using Claim = std::variant<HasType, IsTrue, AreEqual>;

// A context of typed variables and a claim. Categorical when the context is
// empty, general hypothetical otherwise.
struct Judgment {
    Context context;
    Claim claim;

    bool categorical() const { return context.empty(); }
};

// Free variables of every term mentioned by the claim.
NameSet claimFreeVars(const Claim& claim);

// Applies `f` to every term of the claim, keeping its shape.
template <class F>
Claim mapClaim(const Claim& claim, F&& f)
{
    return std::visit(
        [&](const auto& c) -> Claim {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, HasType>) return HasType{f(c.subject), c.type};
            else if constexpr (std::is_same_v<C, IsTrue>) return IsTrue{f(c.subject)};
            else return AreEqual{f(c.left), f(c.right), c.type};
        },
        claim);
}

} // namespace bgs
