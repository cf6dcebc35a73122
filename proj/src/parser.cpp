#include "bgs/parser.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace bgs {

namespace {

constexpr std::array kReserved{"vr", "forall", "forall2", "not", "horiz", "the", "pair", "true", "false"};

enum class Tok { Ident, Punct, Hash, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

bool identStart(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool identChar(char c) { return identStart(c) || (c >= '0' && c <= '9'); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skipSpace();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", spanFrom(pos_, line_, col_)});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipSpace()
    {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' || src_[pos_] == '\n'))
            advance();
    }

    SourceSpan spanFrom(std::size_t start, std::size_t line, std::size_t col) const
    {
        return SourceSpan{start, pos_, line, col};
    }

    Token next()
    {
        const std::size_t start = pos_, line = line_, col = col_;
        const char c = src_[pos_];

        if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            return {Tok::Hash, std::string(src_.substr(start, pos_ - start)), spanFrom(start, line, col)};
        }

        if (identStart(c) || ((c == '!' || c == '%' || c == '$') && pos_ + 1 < src_.size() && identStart(src_[pos_ + 1]))) {
            advance();
            while (pos_ < src_.size() && identChar(src_[pos_])) advance();
            while (pos_ < src_.size() && src_[pos_] == '\'') advance();
            return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), spanFrom(start, line, col)};
        }

        static constexpr std::array<std::string_view, 4> twoChar{"=>", "==", "->", "|-"};
        if (pos_ + 1 < src_.size()) {
            std::string_view two = src_.substr(pos_, 2);
            if (std::find(twoChar.begin(), twoChar.end(), two) != twoChar.end()) {
                advance();
                advance();
                return {Tok::Punct, std::string(two), spanFrom(start, line, col)};
            }
        }
        static constexpr std::string_view single = "().,:;=@\\";
        if (single.find(c) != std::string_view::npos) {
            advance();
            return {Tok::Punct, std::string(1, c), spanFrom(start, line, col)};
        }

        advance();
        throw SyntaxError(spanFrom(start, line, col), {"a token"}, "'" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

SourceSpan join(const SourceSpan& a, const SourceSpan& b)
{
    return SourceSpan{a.start, b.end, a.line, a.column};
}

class Parser {
public:
    Parser(std::vector<Token> toks, NameSet constants) : toks_(std::move(toks)), constants_(std::move(constants)) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool atEnd() const { return peek().kind == Tok::End; }

    bool isPunct(std::string_view p, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
    }
    bool isWord(std::string_view w, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Tok::Ident && peek(ahead).text == w;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.span, std::move(expected), std::move(found));
    }

    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    Token expectPunct(std::string_view p)
    {
        if (!isPunct(p)) fail({"'" + std::string(p) + "'"});
        return take();
    }

    Token expectIdent()
    {
        if (peek().kind != Tok::Ident || isReservedWord(peek().text)) fail({"identifier"});
        return take();
    }

    SourceSpan lastSpan() const { return toks_[pos_ == 0 ? 0 : pos_ - 1].span; }

    void addConstant(const std::string& name) { constants_.insert(name); }

    // -- types --------------------------------------------------------------

    Type type()
    {
        Type dom = baseType();
        if (isPunct("->")) {
            take();
            return Type::arrow(dom, type());
        }
        return dom;
    }

    Type baseType()
    {
        if (isWord("i")) {
            take();
            return Type::iota();
        }
        if (isWord("o")) {
            take();
            return Type::omicron();
        }
        if (isPunct("(")) {
            take();
            Type t = type();
            expectPunct(")");
            return t;
        }
        fail({"'i'", "'o'", "'('"});
    }

    // -- terms --------------------------------------------------------------

    bool atBinder() const
    {
        return isWord("vr") || isWord("forall") || isWord("forall2") || isPunct("\\");
    }

    Term term()
    {
        if (atBinder()) return binder();
        return cond();
    }

    Term binder()
    {
        Token head = take();
        Token name = expectIdent();
        std::optional<Type> annotation;
        if (head.text == "\\" && isPunct(":")) {
            take();
            annotation = type();
        }
        expectPunct(".");
        bound_.push_back(name.text);
        Term body = term();
        bound_.pop_back();

        Term t = [&] {
            if (head.text == "vr") return Term::valueRange(name.text, body);
            if (head.text == "forall") return Term::forall1(name.text, body);
            if (head.text == "forall2") return Term::forall2(name.text, body);
            return Term::lambda(name.text, body, annotation);
        }();
        return t.withSpan(join(head.span, lastSpan()));
    }

    Term cond()
    {
        Term lhs = ideq();
        if (!isPunct("=>")) return lhs;
        take();
        Term rhs = term();
        return Term::cond(lhs, rhs).withSpan(join(lhs.span(), rhs.span()));
    }

    Term ideq()
    {
        Term lhs = cap();
        if (!isPunct("==")) return lhs;
        take();
        Term rhs = atBinder() ? binder() : cap();
        if (isPunct("==")) fail({"'=>'", "')'", "end of term"});
        return Term::id(lhs, rhs).withSpan(join(lhs.span(), rhs.span()));
    }

    Term cap()
    {
        Term lhs = call();
        if (!isPunct("@")) return lhs;
        take();
        Term rhs = atBinder() ? binder() : cap();
        return Term::cap(lhs, rhs).withSpan(join(lhs.span(), rhs.span()));
    }

    Term call()
    {
        Term fn = primary();
        while (isPunct("(")) {
            take();
            Term arg = term();
            expectPunct(")");
            fn = Term::app(fn, arg).withSpan(join(fn.span(), lastSpan()));
        }
        return fn;
    }

    Term parenthesized()
    {
        expectPunct("(");
        Term t = term();
        expectPunct(")");
        return t;
    }

    Term primary()
    {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            const SourceSpan start = t.span;
            if (t.text == "true") {
                take();
                return Term::theTrue().withSpan(start);
            }
            if (t.text == "false") {
                take();
                return Term::theFalse().withSpan(start);
            }
            if (t.text == "not" || t.text == "horiz" || t.text == "the") {
                std::string kw = take().text;
                Term arg = parenthesized();
                Term node = kw == "not" ? Term::neg(arg) : kw == "horiz" ? Term::horizontal(arg) : Term::the(arg);
                return node.withSpan(join(start, lastSpan()));
            }
            if (t.text == "pair") {
                take();
                expectPunct("(");
                Term a = term();
                expectPunct(",");
                Term b = term();
                expectPunct(")");
                return Term::pair(a, b).withSpan(join(start, lastSpan()));
            }
            if (!isReservedWord(t.text)) {
                std::string name = take().text;
                bool bound = std::find(bound_.begin(), bound_.end(), name) != bound_.end();
                if (!bound && constants_.count(name)) return Term::constant(name).withSpan(start);
                return Term::var(name).withSpan(start);
            }
        }
        if (isPunct("(")) {
            take();
            Term inner = term();
            expectPunct(")");
            return inner;
        }
        fail({"identifier", "'true'", "'false'", "'not'", "'horiz'", "'the'", "'pair'", "'('", "binder"});
    }

    // -- judgments ----------------------------------------------------------

    Judgment judgment()
    {
        Context ctx;
        if (!isPunct("|-")) {
            for (;;) {
                Token name = expectIdent();
                expectPunct(":");
                Type ty = type();
                ctx.push_back({name.text, ty});
                if (!isPunct(",")) break;
                take();
            }
        }
        expectPunct("|-");
        Term subject = term();
        if (isWord("true")) {
            take();
            return Judgment{ctx, IsTrue{subject}};
        }
        if (isPunct(":")) {
            take();
            return Judgment{ctx, HasType{subject, type()}};
        }
        if (isPunct("=")) {
            take();
            Term rhs = term();
            expectPunct(":");
            return Judgment{ctx, AreEqual{subject, rhs, type()}};
        }
        fail({"':'", "'true'", "'='"});
    }

    // True if a '|-' occurs before the next ';' (or end of input).
    bool judgmentAhead() const
    {
        for (std::size_t i = pos_; i < toks_.size(); ++i) {
            const Token& t = toks_[i];
            if (t.kind == Tok::End || (t.kind == Tok::Punct && t.text == ";")) return false;
            if (t.kind == Tok::Punct && t.text == "|-") return true;
        }
        return false;
    }

    void expectEnd()
    {
        if (!atEnd()) fail({"end of input"});
    }

    // -- scripts ------------------------------------------------------------

    Script script()
    {
        Script s;
        bool sawPragma = false;
        bool sawWork = false;
        while (!atEnd()) {
            if (peek().kind == Tok::Hash) {
                Token h = take();
                if (auto pragma = pragmaOf(h)) {
                    if (sawWork)
                        throw KernelError(ErrorCode::PragmaAfterDirective,
                                          "regime pragma must precede check/eval/paradox/translate directives",
                                          h.span);
                    if (sawPragma)
                        throw KernelError(ErrorCode::PragmaAfterDirective, "duplicate regime pragma", h.span);
                    sawPragma = true;
                    s.directives.push_back(*pragma);
                }
                continue;
            }
            const SourceSpan start = peek().span;
            if (isWord("const")) {
                take();
                Token name = expectIdent();
                expectPunct(":");
                Type ty = type();
                expectPunct(";");
                addConstant(name.text);
                s.directives.push_back(ConstDecl{name.text, ty, join(start, lastSpan())});
            } else if (isWord("check")) {
                take();
                Judgment j = judgment();
                expectPunct(";");
                s.directives.push_back(CheckDirective{std::move(j), join(start, lastSpan())});
                sawWork = true;
            } else if (isWord("eval")) {
                take();
                Term t = term();
                expectPunct(";");
                s.directives.push_back(EvalDirective{t, join(start, lastSpan())});
                sawWork = true;
            } else if (isWord("paradox")) {
                take();
                expectPunct(";");
                s.directives.push_back(ParadoxDirective{join(start, lastSpan())});
                sawWork = true;
            } else if (isWord("translate")) {
                take();
                TranslateDirective d{Term::theTrue(), {}};
                if (judgmentAhead()) d.subject = judgment();
                else d.subject = term();
                expectPunct(";");
                d.span = join(start, lastSpan());
                s.directives.push_back(std::move(d));
                sawWork = true;
            } else {
                fail({"'const'", "'check'", "'eval'", "'paradox'", "'translate'", "'#regime'"});
            }
        }
        return s;
    }

    std::optional<RegimePragma> pragmaOf(const Token& h) const
    {
        std::string_view text = h.text;
        constexpr std::string_view kw = "#regime";
        if (text.substr(0, kw.size()) != kw) return std::nullopt;
        if (text.size() > kw.size() && text[kw.size()] != ' ' && text[kw.size()] != '\t') return std::nullopt;
        std::string_view arg = text.substr(kw.size());
        while (!arg.empty() && (arg.front() == ' ' || arg.front() == '\t')) arg.remove_prefix(1);
        while (!arg.empty() && (arg.back() == ' ' || arg.back() == '\t' || arg.back() == '\r')) arg.remove_suffix(1);
        auto regime = parseRegime(arg);
        if (!regime) {
            SourceSpan at = h.span;
            throw SyntaxError(at, {"'strict'", "'unityped'", "'church'"}, "'" + std::string(arg) + "'");
        }
        return RegimePragma{*regime, h.span};
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    NameSet constants_;
    std::vector<std::string> bound_;
};

Parser makeParser(std::string_view text, const NameSet& constants, bool allowHash)
{
    std::vector<Token> toks = Lexer(text).run();
    if (!allowHash)
        for (const Token& t : toks)
            if (t.kind == Tok::Hash) throw SyntaxError(t.span, {"a term token"}, "'#'");
    return Parser(std::move(toks), constants);
}

} // namespace

bool isReservedWord(std::string_view word)
{
    return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

Term parseTerm(std::string_view text, const NameSet& constants)
{
    Parser p = makeParser(text, constants, false);
    Term t = p.term();
    p.expectEnd();
    return t;
}

Type parseType(std::string_view text)
{
    Parser p = makeParser(text, {}, false);
    Type t = p.type();
    p.expectEnd();
    return t;
}

Judgment parseJudgment(std::string_view text, const NameSet& constants)
{
    Parser p = makeParser(text, constants, false);
    Judgment j = p.judgment();
    p.expectEnd();
    return j;
}

Script parseScript(std::string_view text)
{
    Parser p = makeParser(text, {}, true);
    return p.script();
}

} // namespace bgs
