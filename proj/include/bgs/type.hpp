#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace bgs {

enum class TypeKind { Iota, Omicron, Arrow };

// Simple types over individuals. Omicron (the two truth values) is a
// subtype of Iota; Arrow is the function type. Values are immutable and
// cheap to copy.
class Type {
public:
    static Type iota();
    static Type omicron();
    static Type arrow(Type domain, Type codomain);

    TypeKind kind() const { return node_->kind; }
    bool isArrow() const { return node_->kind == TypeKind::Arrow; }
    bool isObject() const { return !isArrow(); }

    // Only valid on arrows.
    const Type& domain() const;
    const Type& codomain() const;

    friend bool operator==(const Type& a, const Type& b);
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

private:
    struct Node {
        TypeKind kind;
        std::shared_ptr<const Type> domain;
        std::shared_ptr<const Type> codomain;
    };
    explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Position in the function hierarchy: objects are level 0, and an arrow sits
// one above its domain (or at its codomain's level, whichever is higher).
std::size_t level(const Type& ty);

// Structural subtyping generated by Omicron <= Iota, contravariant in the
// domain and covariant in the codomain of arrows.
bool isSubtype(const Type& sub, const Type& super);

std::size_t typeSize(const Type& ty);

// "i", "o", "->" right-associative.
std::string printType(const Type& ty);

} // namespace bgs
