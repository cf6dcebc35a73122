#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bgs/diagnostic.hpp"
#include "bgs/judgment.hpp"
#include "bgs/term.hpp"
#include "bgs/type.hpp"

namespace bgs {

// Concrete syntax (.bgs)
//
//   term    ::= binder | cond
//   binder  ::= ("vr" | "forall" | "forall2") IDENT "." term
//             | "\" IDENT [":" type] "." term
//   cond    ::= ideq ["=>" term]                    right-associative
//   ideq    ::= cap ["==" (binder | cap)]           non-associative
//   cap     ::= call ["@" (binder | cap)]           right-associative
//   call    ::= primary {"(" term ")"}              ordinary application
//   primary ::= IDENT | "true" | "false" | "(" term ")"
//             | ("not" | "horiz" | "the") "(" term ")"
//             | "pair" "(" term "," term ")"
//   type    ::= base ["->" type]
//   base    ::= "i" | "o" | "(" type ")"
//
//   judgment ::= [IDENT ":" type {"," IDENT ":" type}] "|-" claim
//   claim    ::= term ":" type | term "true" | term "=" term ":" type
//
//   script    ::= {pragma | comment | directive ";"}
//   pragma    ::= "#regime" ("strict" | "unityped" | "church")
//   comment   ::= "#" ... end of line
//   directive ::= "const" IDENT ":" type | "check" judgment | "eval" term
//               | "paradox" | "translate" (judgment | term)

struct RegimePragma {
    Regime regime;
    SourceSpan span;
};

struct ConstDecl {
    std::string name;
    Type type;
    SourceSpan span;
};

struct CheckDirective {
    Judgment judgment;
    SourceSpan span;
};

struct EvalDirective {
    Term term;
    SourceSpan span;
};

struct ParadoxDirective {
    SourceSpan span;
};

struct TranslateDirective {
    std::variant<Term, Judgment> subject;
    SourceSpan span;
};

using Directive =
    std::variant<RegimePragma, ConstDecl, CheckDirective, EvalDirective, ParadoxDirective, TranslateDirective>;

struct Script {
    std::vector<Directive> directives;
};

// Identifiers listed in `constants` and not captured by a binder parse as
// Const nodes; every other identifier is a Var.
Term parseTerm(std::string_view text, const NameSet& constants = {});
Type parseType(std::string_view text);
Judgment parseJudgment(std::string_view text, const NameSet& constants = {});

// Names declared with `const` are in scope for the directives after them.
Script parseScript(std::string_view text);

std::string printTerm(const Term& t);
std::string printClaim(const Claim& c);
std::string printJudgment(const Judgment& j);

bool isReservedWord(std::string_view word);

} // namespace bgs
