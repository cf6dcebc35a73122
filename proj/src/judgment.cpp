#include "bgs/judgment.hpp"

namespace bgs {

std::string_view regimeName(Regime r)
{
    switch (r) {
    case Regime::Strict: return "strict";
    case Regime::Unityped: return "unityped";
    case Regime::Church: return "church";
    }
    return "?";
}

std::optional<Regime> parseRegime(std::string_view name)
{
    if (name == "strict") return Regime::Strict;
    if (name == "unityped") return Regime::Unityped;
    if (name == "church") return Regime::Church;
    return std::nullopt;
}

const ContextEntry* lookup(const Context& ctx, std::string_view name)
{
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
        if (it->name == name) return &*it;
    return nullptr;
}

NameSet claimFreeVars(const Claim& claim)
{
    NameSet out;
    mapClaim(claim, [&](const Term& t) {
        out.merge(freeVars(t));
        return t;
    });
    return out;
}

} // namespace bgs
