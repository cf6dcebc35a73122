#include "bgs/parser.hpp"

namespace bgs {

namespace {

// Syntactic slot a subterm is printed into.
enum class Slot { Open, CondLeft, IdOperand, CapLeft, CapRight, Callee };

// Binding strength of a node's own syntax: 0 binder, 1 =>, 2 ==, 3 @, 4 call/atom.
int strength(const Term& t)
{
    if (t.isBinder()) return 0;
    switch (t.kind()) {
    case TermKind::Cond: return 1;
    case TermKind::Id: return 2;
    case TermKind::Cap: return 3;
    default: return 4;
    }
}

bool needsParens(const Term& t, Slot slot, bool tail)
{
    const int s = strength(t);
    if (s == 0) return !tail || slot == Slot::Callee;
    switch (slot) {
    case Slot::Open: return false;
    case Slot::CondLeft: return s <= 1;
    case Slot::IdOperand: return s <= 2;
    case Slot::CapLeft: return s <= 3;
    case Slot::CapRight: return s <= 2;
    case Slot::Callee: return s <= 3;
    }
    return false;
}

class Printer {
public:
    std::string out;

    void print(const Term& t, Slot slot, bool tail)
    {
        if (needsParens(t, slot, tail)) {
            out += '(';
            print(t, Slot::Open, true);
            out += ')';
            return;
        }
        switch (t.kind()) {
        case TermKind::Var:
        case TermKind::Const: out += t.name(); return;
        case TermKind::True: out += "true"; return;
        case TermKind::False: out += "false"; return;
        case TermKind::Horizontal: call("horiz", t.operand()); return;
        case TermKind::Not: call("not", t.operand()); return;
        case TermKind::The: call("the", t.operand()); return;
        case TermKind::Pair:
            out += "pair(";
            print(t.left(), Slot::Open, true);
            out += ", ";
            print(t.right(), Slot::Open, true);
            out += ')';
            return;
        case TermKind::Cond:
            print(t.left(), Slot::CondLeft, false);
            out += " => ";
            print(t.right(), Slot::Open, tail);
            return;
        case TermKind::Id:
            print(t.left(), Slot::IdOperand, false);
            out += " == ";
            print(t.right(), Slot::IdOperand, tail);
            return;
        case TermKind::Cap:
            print(t.left(), Slot::CapLeft, false);
            out += " @ ";
            print(t.right(), Slot::CapRight, tail);
            return;
        case TermKind::App:
            print(t.left(), Slot::Callee, false);
            out += '(';
            print(t.right(), Slot::Open, true);
            out += ')';
            return;
        case TermKind::ValueRange: binder("vr ", t, tail); return;
        case TermKind::ForAll1: binder("forall ", t, tail); return;
        case TermKind::ForAll2: binder("forall2 ", t, tail); return;
        case TermKind::Lambda: binder("\\", t, tail); return;
        }
    }

private:
    void call(const char* kw, const Term& arg)
    {
        out += kw;
        out += '(';
        print(arg, Slot::Open, true);
        out += ')';
    }

    void binder(const char* head, const Term& t, bool tail)
    {
        out += head;
        out += t.name();
        if (t.binderType()) out += " : " + printType(*t.binderType());
        out += ". ";
        print(t.body(), Slot::Open, tail);
    }
};

} // namespace

std::string printTerm(const Term& t)
{
    Printer p;
    p.print(t, Slot::Open, true);
    return p.out;
}

std::string printClaim(const Claim& c)
{
    return std::visit(
        [](const auto& claim) -> std::string {
            using C = std::decay_t<decltype(claim)>;
            if constexpr (std::is_same_v<C, HasType>)
                return printTerm(claim.subject) + " : " + printType(claim.type);
            else if constexpr (std::is_same_v<C, IsTrue>)
                return printTerm(claim.subject) + " true";
            else
                return printTerm(claim.left) + " = " + printTerm(claim.right) + " : " + printType(claim.type);
        },
        c);
}

std::string printJudgment(const Judgment& j)
{
    std::string out;
    for (std::size_t i = 0; i < j.context.size(); ++i) {
        if (i) out += ", ";
        out += j.context[i].name + " : " + printType(j.context[i].type);
    }
    out += j.context.empty() ? "|- " : " |- ";
    return out + printClaim(j.claim);
}

} // namespace bgs
