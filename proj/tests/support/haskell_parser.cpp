/* Copyright 2026 The tgp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "haskell_parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgp/grammar.hpp"

namespace tgp::testing {

namespace {

struct Fail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- lexer ----

enum class Tok { Ident, Int, Float, Char, Str, Sym, End };

struct Token {
    Tok kind;
    std::string text;
};

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto readEscape = [&](std::string& into) {
        char c = s[++i];
        switch (c) {
        case 'n': into += '\n'; ++i; return;
        case 't': into += '\t'; ++i; return;
        case 'r': into += '\r'; ++i; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + static_cast<unsigned>(s[i++] - '0');
            into += encodeUtf8(static_cast<char32_t>(v));
            return;
        }
        into += c;
        ++i;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            bool isFloat = false;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j + 1 < s.size() && s[j] == '.' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                isFloat = true;
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                isFloat = true;
                ++j;
                if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            out.push_back({isFloat ? Tok::Float : Tok::Int, std::string(s.substr(i, j - i))});
            i = j;
        } else if (c == '\'') {
            std::string v;
            ++i;
            if (s[i] == '\\') {
                readEscape(v);
            } else {
                std::size_t len = 1;
                auto b = static_cast<unsigned char>(s[i]);
                if (b >= 0xF0) len = 4;
                else if (b >= 0xE0) len = 3;
                else if (b >= 0xC0) len = 2;
                v = std::string(s.substr(i, len));
                i += len;
            }
            if (s[i] != '\'') throw Fail("bad char literal");
            ++i;
            out.push_back({Tok::Char, v});
        } else if (c == '"') {
            std::string v;
            ++i;
            while (s[i] != '"') {
                if (s[i] == '\\') readEscape(v);
                else v += s[i++];
            }
            ++i;
            out.push_back({Tok::Str, v});
        } else {
            static const char* multi[] = {"->", "&&", "||", "==", "..", "::"};
            std::string sym(1, c);
            for (const char* m : multi) {
                if (s.substr(i, 2) == m) sym = m;
            }
            out.push_back({Tok::Sym, sym});
            i += sym.size();
        }
    }
    out.push_back({Tok::End, ""});
    return out;
}

// ---- untyped syntax ----

struct Ast {
    enum Kind { Var, Lit, App, Lambda, ListLit, PairLit, If, Annot } kind;
    Type annot;                        // Annot
    std::string name;                  // Var / App head / Lambda param
    Token lit{Tok::End, ""};           // Lit
    bool negative = false;
    std::vector<std::shared_ptr<Ast>> kids;
};
using AstPtr = std::shared_ptr<Ast>;

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    AstPtr expr()
    {
        if (isIdent("if")) {
            ++p_;
            auto c = expr();
            expectIdent("then");
            auto a = expr();
            expectIdent("else");
            auto b = expr();
            return node(Ast::If, "if", {c, a, b});
        }
        if (isSym("\\")) {
            ++p_;
            std::string param = t_[p_++].text;
            expectSym("->");
            auto body = expr();
            auto n = node(Ast::Lambda, param, {body});
            return n;
        }
        return infix(0);
    }

    bool atEnd() const { return t_[p_].kind == Tok::End; }

private:
    struct OpInfo {
        int prec;
        bool right;
    };

    static std::optional<OpInfo> opInfo(const std::string& s)
    {
        static const std::map<std::string, OpInfo> ops = {{"||", {2, true}}, {"&&", {3, true}}, {"==", {4, false}},
                                                          {"<", {4, false}},  {">", {4, false}},  {":", {5, true}},
                                                          {"+", {6, false}},  {"-", {6, false}},  {"*", {7, false}},
                                                          {"/", {7, false}}};
        auto it = ops.find(s);
        if (it == ops.end()) return std::nullopt;
        return it->second;
    }

    AstPtr infix(int minPrec)
    {
        auto lhs = application();
        while (t_[p_].kind == Tok::Sym) {
            auto info = opInfo(t_[p_].text);
            if (!info || info->prec < minPrec) break;
            std::string op = t_[p_++].text;
            AstPtr rhs = (isIdent("if") || isSym("\\")) ? expr() : infix(info->right ? info->prec : info->prec + 1);
            lhs = node(Ast::App, op, {lhs, rhs});
        }
        return lhs;
    }

    AstPtr application()
    {
        auto head = atom();
        if (head->kind != Ast::Var || !isFunctionName(head->name)) return head;
        std::vector<AstPtr> args;
        while (startsAtom()) args.push_back(atom());
        if (args.empty()) return head;
        return node(Ast::App, head->name, args);
    }

    static bool isFunctionName(const std::string& n)
    {
        return !(n.size() > 1 && n[0] == 'x' && std::isdigit(static_cast<unsigned char>(n[1]))) && n != "y" && n != "z" &&
               n != "w" && n != "v" && n != "True" && n != "False";
    }

    bool startsAtom() const
    {
        const Token& k = t_[p_];
        if (k.kind == Tok::Ident) return k.text != "then" && k.text != "else" && k.text != "if";
        if (k.kind == Tok::Sym) return k.text == "(" || k.text == "[";
        return k.kind != Tok::End;
    }

    AstPtr atom()
    {
        const Token k = t_[p_++];
        switch (k.kind) {
        case Tok::Ident:
            if (k.text == "True" || k.text == "False") return lit(k, false);
            return node(Ast::Var, k.text, {});
        case Tok::Int:
        case Tok::Float:
        case Tok::Char:
        case Tok::Str: return lit(k, false);
        case Tok::Sym: break;
        case Tok::End: throw Fail("unexpected end of input");
        }
        if (k.text == "-") {
            const Token n = t_[p_++];
            if (n.kind != Tok::Int && n.kind != Tok::Float) throw Fail("number expected after '-'");
            return lit(n, true);
        }
        if (k.text == "(") {
            auto first = expr();
            if (isSym(",")) {
                ++p_;
                auto second = expr();
                expectSym(")");
                return node(Ast::PairLit, "", {first, second});
            }
            if (isSym("::")) {
                ++p_;
                auto n = node(Ast::Annot, "", {first});
                n->annot = type();
                expectSym(")");
                return n;
            }
            expectSym(")");
            return first;
        }
        if (k.text == "[") {
            std::vector<AstPtr> items;
            if (!isSym("]")) {
                items.push_back(expr());
                while (isSym(",")) {
                    ++p_;
                    items.push_back(expr());
                }
            }
            expectSym("]");
            return node(Ast::ListLit, "", items);
        }
        throw Fail("unexpected symbol " + k.text);
    }

    Type type()
    {
        const Token k = t_[p_++];
        if (k.kind == Tok::Ident) {
            if (k.text == "Int") return Type::Int();
            if (k.text == "Float") return Type::Float();
            if (k.text == "Bool") return Type::Bool();
            if (k.text == "Char") return Type::Char();
            if (k.text == "String") return Type::String();
        } else if (k.text == "[") {
            Type e = type();
            expectSym("]");
            return Type::List(e);
        } else if (k.text == "(") {
            Type a = type();
            expectSym(",");
            Type b = type();
            expectSym(")");
            return Type::Pair(a, b);
        }
        throw Fail("bad type " + k.text);
    }

    static AstPtr node(Ast::Kind kind, std::string name, std::vector<AstPtr> kids)
    {
        auto n = std::make_shared<Ast>();
        n->kind = kind;
        n->name = std::move(name);
        n->kids = std::move(kids);
        return n;
    }

    static AstPtr lit(Token k, bool negative)
    {
        auto n = std::make_shared<Ast>();
        n->kind = Ast::Lit;
        n->lit = std::move(k);
        n->negative = negative;
        return n;
    }

    bool isIdent(const char* s) const { return t_[p_].kind == Tok::Ident && t_[p_].text == s; }
    bool isSym(const char* s) const { return t_[p_].kind == Tok::Sym && t_[p_].text == s; }
    void expectIdent(const char* s)
    {
        if (!isIdent(s)) throw Fail(std::string("expected ") + s);
        ++p_;
    }
    void expectSym(const char* s)
    {
        if (!isSym(s)) throw Fail(std::string("expected ") + s + " got " + t_[p_].text);
        ++p_;
    }

    std::vector<Token> t_;
    std::size_t p_ = 0;
};

// ---- elaboration ----

std::vector<Op> candidates(const std::string& name)
{
    static const std::map<std::string, std::vector<Op>> table = {
        {"+", {Op::AddInt, Op::AddFloat}},
        {"-", {Op::SubInt, Op::SubFloat}},
        {"*", {Op::MultInt, Op::MultFloat}},
        {"/", {Op::DivFloat}},
        {"==", {Op::EqInt, Op::EqChar}},
        {"<", {Op::LtInt}},
        {">", {Op::GtInt}},
        {"&&", {Op::And}},
        {"||", {Op::Or}},
        {":", {Op::Cons}},
        {"div", {Op::DivInt}},
        {"mod", {Op::ModInt}},
        {"max", {Op::MaxInt}},
        {"min", {Op::MinInt}},
        {"not", {Op::Not}},
        {"sqrt", {Op::Sqrt}},
        {"head", {Op::Head}},
        {"reverse", {Op::Reverse}},
        {"concat", {Op::Concat}},
        {"fst", {Op::Fst}},
        {"snd", {Op::Snd}},
        {"isLetter", {Op::IsLetter}},
        {"isDigit", {Op::IsDigit}},
        {"fromIntegral", {Op::IntToFloat}},
        {"floor", {Op::Floor}},
        {"length", {Op::Len}},
        {"take", {Op::Take}},
        {"range", {Op::Range}},
        {"sum", {Op::SumInts, Op::SumFloats}},
        {"product", {Op::ProductInts, Op::ProductFloats}},
        {"unlines", {Op::Unlines}},
        {"show", {Op::ShowInt}},
        {"zip", {Op::Zip}},
        {"map", {Op::Map}},
        {"filter", {Op::Filter}},
        {"if", {Op::If}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw Fail("unknown function " + name);
    return it->second;
}

bool isLiteral(const Ast& a)
{
    if (a.kind == Ast::Lit) return true;
    if (a.kind == Ast::ListLit || a.kind == Ast::PairLit) {
        for (const auto& k : a.kids) {
            if (!isLiteral(*k)) return false;
        }
        return true;
    }
    return false;
}

class Elaborator {
public:
    explicit Elaborator(std::span<const Type> args) : args_(args) {}

    Tree run(const Ast& a, const std::optional<Type>& expected)
    {
        if (isLiteral(a)) {
            Value v = literal(a, expected);
            std::optional<Type> t = expected ? expected : v.inferType();
            if (!t || !v.hasType(*t)) throw Fail("cannot type literal");
            return Tree::constant(v, *t);
        }
        switch (a.kind) {
        case Ast::Var: return variable(a.name, expected);
        case Ast::ListLit:
            if (a.kids.size() != 1) throw Fail("non-literal list with several elements");
            return apply(Op::Singleton, {a.kids[0]}, expected);
        case Ast::PairLit: return apply(Op::ToPair, a.kids, expected);
        case Ast::If: return apply(Op::If, a.kids, expected);
        case Ast::Annot:
            if (expected && *expected != a.annot) throw Fail("annotation mismatch");
            return run(*a.kids[0], a.annot);
        case Ast::App: {
            std::string lastError;
            for (Op op : candidates(a.name)) {
                try {
                    return apply(op, a.kids, expected);
                } catch (const Fail& e) {
                    lastError = e.what();
                }
            }
            throw Fail("no overload of " + a.name + " fits: " + lastError);
        }
        case Ast::Lambda:
        case Ast::Lit: break;
        }
        throw Fail("lambda outside a function slot");
    }

private:
    Tree variable(const std::string& name, const std::optional<Type>& expected)
    {
        Tree t;
        if (name.size() > 1 && name[0] == 'x') {
            int i = std::stoi(name.substr(1));
            if (i < 0 || static_cast<std::size_t>(i) >= args_.size()) throw Fail("argument out of range");
            t = Tree::arg(i, args_[static_cast<std::size_t>(i)]);
        } else {
            for (auto it = params_.rbegin(); it != params_.rend(); ++it) {
                if (it->first == name) {
                    t = Tree::param(it->second);
                    break;
                }
            }
            if (t.empty()) throw Fail("unbound variable " + name);
        }
        if (expected && t.type() != *expected) throw Fail("variable type mismatch");
        return t;
    }

    Tree apply(Op op, const std::vector<AstPtr>& kids, const std::optional<Type>& expected)
    {
        const FunctionSymbol& sym = symbolFor(op);
        if (sym.params.size() != kids.size()) throw Fail("arity mismatch for " + std::string(opName(op)));
        Bindings b;
        if (expected && !match(sym.ret, *expected, b)) throw Fail("result type mismatch");
        std::vector<Tree> built(kids.size());
        auto slot = [&](const Type& p) -> std::optional<Type> {
            Type s = substitute(p, b);
            return s.isConcrete() ? std::optional<Type>(s) : std::nullopt;
        };
        // Data arguments first so lambda parameter types are known.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < kids.size(); ++i) {
                const Type& p = sym.params[i];
                if (p.isFunction() != (pass == 1)) continue;
                if (p.isFunction()) {
                    built[i] = lambda(*kids[i], substitute(p.arg(), b), slot(p.ret()));
                } else {
                    built[i] = run(*kids[i], slot(p));
                }
                if (!match(p, built[i].type(), b)) throw Fail("argument type mismatch");
            }
        }
        Tree t = Tree::apply(instantiate(sym, b), std::move(built));
        if (expected && t.type() != *expected) throw Fail("result type mismatch");
        return t;
    }

    Tree lambda(const Ast& a, const Type& param, const std::optional<Type>& ret)
    {
        if (a.kind != Ast::Lambda) throw Fail("lambda expected");
        if (!param.isConcrete()) throw Fail("lambda parameter type unknown");
        params_.emplace_back(a.name, param);
        Tree body;
        try {
            body = run(*a.kids[0], ret);
        } catch (...) {
            params_.pop_back();
            throw;
        }
        params_.pop_back();
        return Tree::lambda(param, body);
    }

    static Value literal(const Ast& a, const std::optional<Type>& expected)
    {
        if (a.kind == Ast::ListLit) {
            std::optional<Type> elem;
            if (expected) {
                if (expected->kind() != TypeKind::List) throw Fail("list literal where non-list expected");
                elem = expected->elem();
            }
            std::vector<Value> items;
            for (const auto& k : a.kids) items.push_back(literal(*k, elem));
            return Value::List(std::move(items));
        }
        if (a.kind == Ast::PairLit) {
            std::optional<Type> f, s;
            if (expected) {
                if (expected->kind() != TypeKind::Pair) throw Fail("pair literal where non-pair expected");
                f = expected->first();
                s = expected->second();
            }
            return Value::Pair(literal(*a.kids[0], f), literal(*a.kids[1], s));
        }
        const Token& k = a.lit;
        switch (k.kind) {
        case Tok::Int: {
            long long v = std::stoll(k.text);
            return Value::Int(static_cast<std::int32_t>(a.negative ? -v : v));
        }
        case Tok::Float: {
            float v = std::stof(k.text);
            return Value::Float(a.negative ? -v : v);
        }
        case Tok::Char: return Value::Char(decodeUtf8(k.text).at(0));
        case Tok::Str: return Value::String(k.text);
        case Tok::Ident: return Value::Bool(k.text == "True");
        default: break;
        }
        throw Fail("bad literal");
    }

    std::span<const Type> args_;
    std::vector<std::pair<std::string, Type>> params_;
};

}  // namespace

Tree parseHaskell(std::string_view source, std::span<const Type> argTypes, const Type& outputType)
{
    if (auto w = source.find("\n  where"); w != std::string_view::npos) source = source.substr(0, w);
    auto eq = source.find(" = ");
    if (source.substr(0, 8) != "solution" || eq == std::string_view::npos) throw std::runtime_error("not a solution definition");
    try {
        Parser p(lex(source.substr(eq + 3)));
        AstPtr ast = p.expr();
        if (!p.atEnd()) throw Fail("trailing tokens");
        return Elaborator(argTypes).run(*ast, outputType);
    } catch (const Fail& e) {
        throw std::runtime_error(std::string("haskell parse: ") + e.what());
    }
}

}  // namespace tgp::testing
