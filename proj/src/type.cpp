#include "bgs/type.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgs {

Type Type::iota()
{
    static const Type t{std::make_shared<const Node>(Node{TypeKind::Iota, nullptr, nullptr})};
    return t;
}

Type Type::omicron()
{
    static const Type t{std::make_shared<const Node>(Node{TypeKind::Omicron, nullptr, nullptr})};
    return t;
}

Type Type::arrow(Type domain, Type codomain)
{
    return Type{std::make_shared<const Node>(Node{TypeKind::Arrow,
                                                  std::make_shared<const Type>(std::move(domain)),
                                                  std::make_shared<const Type>(std::move(codomain))})};
}

const Type& Type::domain() const
{
    if (!isArrow()) throw std::logic_error("domain() of a non-arrow type");
    return *node_->domain;
}

const Type& Type::codomain() const
{
    if (!isArrow()) throw std::logic_error("codomain() of a non-arrow type");
    return *node_->codomain;
}

bool operator==(const Type& a, const Type& b)
{
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (!a.isArrow()) return true;
    return a.domain() == b.domain() && a.codomain() == b.codomain();
}

std::size_t level(const Type& ty)
{
    if (!ty.isArrow()) return 0;
    return std::max(level(ty.domain()) + 1, level(ty.codomain()));
}

bool isSubtype(const Type& sub, const Type& super)
{
    if (sub.kind() == TypeKind::Omicron && super.kind() == TypeKind::Iota) return true;
    if (sub.kind() != super.kind()) return false;
    if (!sub.isArrow()) return true;
    return isSubtype(super.domain(), sub.domain()) && isSubtype(sub.codomain(), super.codomain());
}

std::size_t typeSize(const Type& ty)
{
    if (!ty.isArrow()) return 1;
    return 1 + typeSize(ty.domain()) + typeSize(ty.codomain());
}

std::string printType(const Type& ty)
{
    switch (ty.kind()) {
    case TypeKind::Iota: return "i";
    case TypeKind::Omicron: return "o";
    case TypeKind::Arrow: {
        std::string dom = printType(ty.domain());
        if (ty.domain().isArrow()) dom = "(" + dom + ")";
        return dom + " -> " + printType(ty.codomain());
    }
    }
    return "?";
}

} // namespace bgs
