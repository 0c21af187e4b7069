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

#include "tgp/render.hpp"

#include <functional>

namespace tgp {

namespace {

enum class Prec { Atom, App, Infix, Open };

struct Piece {
    std::string text;
    Prec prec;
};

const char* infixSymbol(Op op)
{
    switch (op) {
    case Op::AddInt:
    case Op::AddFloat: return "+";
    case Op::SubInt:
    case Op::SubFloat: return "-";
    case Op::MultInt:
    case Op::MultFloat: return "*";
    case Op::DivFloat: return "/";
    case Op::And: return "&&";
    case Op::Or: return "||";
    case Op::EqChar:
    case Op::EqInt: return "==";
    case Op::GtInt: return ">";
    case Op::LtInt: return "<";
    case Op::Cons: return ":";
    default: return nullptr;
    }
}

const char* prefixName(Op op)
{
    switch (op) {
    case Op::DivInt: return "div";
    case Op::ModInt: return "mod";
    case Op::MaxInt: return "max";
    case Op::MinInt: return "min";
    case Op::Not: return "not";
    case Op::Sqrt: return "sqrt";
    case Op::Head: return "head";
    case Op::Reverse: return "reverse";
    case Op::Concat: return "concat";
    case Op::Fst: return "fst";
    case Op::Snd: return "snd";
    case Op::IsLetter: return "isLetter";
    case Op::IsDigit: return "isDigit";
    case Op::IntToFloat: return "fromIntegral";
    case Op::Floor: return "floor";
    case Op::Len: return "length";
    case Op::Take: return "take";
    case Op::Range: return "range";
    case Op::SumInts:
    case Op::SumFloats: return "sum";
    case Op::ProductInts:
    case Op::ProductFloats: return "product";
    case Op::Unlines: return "unlines";
    case Op::ShowInt: return "show";
    case Op::Zip: return "zip";
    case Op::Map: return "map";
    case Op::Filter: return "filter";
    default: return nullptr;
    }
}

std::string paren(const Piece& p, Prec above)
{
    return p.prec > above ? "(" + p.text + ")" : p.text;
}

const char* paramName(int level)
{
    static const char* names[] = {"y", "z", "w", "v"};
    return names[std::min(level, 3)];
}

std::string haskellType(const Type& t)
{
    switch (t.kind()) {
    case TypeKind::Int: return "Int";
    case TypeKind::Float: return "Float";
    case TypeKind::Bool: return "Bool";
    case TypeKind::Char: return "Char";
    case TypeKind::List: return "[" + haskellType(t.elem()) + "]";
    case TypeKind::Pair: return "(" + haskellType(t.first()) + ", " + haskellType(t.second()) + ")";
    default: return t.str();
    }
}

bool usesRange(const Tree& t)
{
    if (t.kind() == NodeKind::Apply && t.node().sig->op == Op::Range) return true;
    for (const auto& c : t.children()) {
        if (usesRange(c)) return true;
    }
    return false;
}

Piece render(const Tree& t, int level)
{
    const Node& n = t.node();
    switch (n.kind) {
    case NodeKind::Arg: return {"x" + std::to_string(n.argIndex), Prec::Atom};
    case NodeKind::Param: return {paramName(level - 1), Prec::Atom};
    case NodeKind::Const: {
        std::string s = n.value.str();
        if (n.value.inferType() != std::optional<Type>(n.type)) return {"(" + s + " :: " + haskellType(n.type) + ")", Prec::Atom};
        if (!s.empty() && s[0] == '-') s = "(" + s + ")";
        return {s, Prec::Atom};
    }
    case NodeKind::Lambda: {
        Piece body = render(n.children[0], level + 1);
        return {std::string("\\") + paramName(level) + " -> " + body.text, Prec::Open};
    }
    case NodeKind::Apply: break;
    }
    Op op = n.sig->op;
    std::vector<Piece> kids;
    for (const auto& c : n.children) kids.push_back(render(c, level));
    if (op == Op::If)
        return {"if " + kids[0].text + " then " + kids[1].text + " else " + kids[2].text, Prec::Open};
    if (op == Op::Singleton) return {"[" + kids[0].text + "]", Prec::Atom};
    if (op == Op::ToPair) return {"(" + kids[0].text + ", " + kids[1].text + ")", Prec::Atom};
    if (const char* sym = infixSymbol(op))
        return {paren(kids[0], Prec::App) + " " + sym + " " + paren(kids[1], Prec::App), Prec::Infix};
    std::string out = prefixName(op);
    for (const auto& k : kids) out += " " + paren(k, Prec::Atom);
    return {out, Prec::App};
}

}  // namespace

std::string renderExpression(const Tree& tree)
{
    return render(tree, 0).text;
}

std::string renderSource(const Tree& tree, const BenchmarkSpec& spec)
{
    std::string out = "solution";
    for (std::size_t i = 0; i < spec.argTypes.size(); ++i) out += " x" + std::to_string(i);
    out += " = " + renderExpression(tree);
    if (usesRange(tree)) out += "\n  where\n    range a b s = [a, a + s .. b]";
    return out + "\n";
}

}  // namespace tgp
