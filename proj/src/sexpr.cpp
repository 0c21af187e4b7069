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

#include "tgp/sexpr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace tgp {

namespace {

bool isDelimiter(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')';
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    bool atEnd()
    {
        skip();
        return pos_ >= text_.size();
    }

    SExpr read()
    {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
        if (text_[pos_] == ')') throw ParseError("unexpected ')' at offset " + std::to_string(pos_));
        if (text_[pos_] == '(') {
            ++pos_;
            SExpr e;
            e.isList = true;
            for (;;) {
                skip();
                if (pos_ >= text_.size()) throw ParseError("missing ')'");
                if (text_[pos_] == ')') {
                    ++pos_;
                    return e;
                }
                e.list.push_back(read());
            }
        }
        SExpr e;
        std::size_t start = pos_;
        char quote = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (quote) {
                if (c == '\\') ++pos_;
                else if (c == quote) quote = 0;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (isDelimiter(c)) {
                break;
            }
            ++pos_;
        }
        if (quote) throw ParseError("unterminated quote in atom");
        e.atom = std::string(text_.substr(start, pos_ - start));
        return e;
    }

private:
    void skip()
    {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_[pos_] == ';' || text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class LiteralParser {
public:
    explicit LiteralParser(std::string_view s) : s_(s) {}

    std::pair<Value, std::optional<Type>> parseAll()
    {
        auto r = parse();
        if (pos_ != s_.size()) fail("trailing characters");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) { throw ParseError("bad literal '" + std::string(s_) + "': " + why); }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char32_t escaped()
    {
        char c = peek();
        if (c == '\\') {
            ++pos_;
            char e = peek();
            ++pos_;
            switch (e) {
            case 'n': return '\n';
            case 't': return '\t';
            case 'r': return '\r';
            case '\\': return '\\';
            case '\'': return '\'';
            case '"': return '"';
            default: break;
            }
            if (std::isdigit(static_cast<unsigned char>(e))) {
                unsigned code = static_cast<unsigned>(e - '0');
                while (std::isdigit(static_cast<unsigned char>(peek()))) code = code * 10 + static_cast<unsigned>(s_[pos_++] - '0');
                return code;
            }
            fail("unknown escape");
        }
        // One UTF-8 scalar.
        auto b = static_cast<unsigned char>(c);
        std::size_t len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
        if (pos_ + len > s_.size()) fail("truncated character");
        auto decoded = decodeUtf8(s_.substr(pos_, len));
        pos_ += len;
        return decoded.at(0);
    }

    std::pair<Value, std::optional<Type>> parse()
    {
        char c = peek();
        if (c == '[') return parseList();
        if (c == '{') {
            ++pos_;
            auto a = parse();
            expect(',');
            auto b = parse();
            expect('}');
            std::optional<Type> t;
            if (a.second && b.second) t = Type::Pair(*a.second, *b.second);
            return {Value::Pair(a.first, b.first), t};
        }
        if (c == '\'') {
            ++pos_;
            char32_t ch = escaped();
            expect('\'');
            return {Value::Char(ch), Type::Char()};
        }
        if (c == '"') {
            ++pos_;
            std::vector<Value> chars;
            while (peek() != '"') {
                if (pos_ >= s_.size()) fail("unterminated string");
                chars.push_back(Value::Char(escaped()));
            }
            ++pos_;
            return {Value::List(std::move(chars)), Type::String()};
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '}') ++pos_;
        std::string_view word = s_.substr(start, pos_ - start);
        if (word == "True") return {Value::Bool(true), Type::Bool()};
        if (word == "False") return {Value::Bool(false), Type::Bool()};
        if (word.empty()) fail("empty element");
        if (word.find_first_of(".eE") != std::string_view::npos) {
            float f = 0;
            auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), f);
            if (ec != std::errc() || p != word.data() + word.size() || !std::isfinite(f)) fail("not a float");
            return {Value::Float(f), Type::Float()};
        }
        std::int32_t i = 0;
        auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), i);
        if (ec != std::errc() || p != word.data() + word.size()) fail("not an Int");
        return {Value::Int(i), Type::Int()};
    }

    std::pair<Value, std::optional<Type>> parseList()
    {
        expect('[');
        std::vector<Value> items;
        std::optional<Type> elem;
        if (peek() != ']') {
            for (;;) {
                auto [v, t] = parse();
                if (t) {
                    if (elem && !(*elem == *t)) fail("mixed element types");
                    elem = t;
                }
                items.push_back(std::move(v));
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(']');
        std::optional<Type> t;
        if (elem) t = Type::List(*elem);
        Value v = Value::List(std::move(items));
        if (t && !v.hasType(*t)) fail("mixed element types");
        return {v, t};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string compactLiteral(const Value& v)
{
    switch (v.kind()) {
    case Value::Kind::List: {
        if (v.isString()) return v.str();
        std::string s = "[";
        for (std::size_t i = 0; i < v.items().size(); ++i) {
            if (i) s += ',';
            s += compactLiteral(v.items()[i]);
        }
        return s + "]";
    }
    case Value::Kind::Pair: return "{" + compactLiteral(v.first()) + "," + compactLiteral(v.second()) + "}";
    default: return v.str();
    }
}

void writeTree(const Tree& t, std::string& out)
{
    const Node& n = t.node();
    switch (n.kind) {
    case NodeKind::Apply:
        out += '(';
        out += n.sig->name();
        for (const auto& c : n.children) {
            out += ' ';
            writeTree(c, out);
        }
        out += ')';
        break;
    case NodeKind::Arg: out += "x" + std::to_string(n.argIndex); break;
    case NodeKind::Const: out += literalString(n.value, n.type); break;
    case NodeKind::Param: out += 'y'; break;
    case NodeKind::Lambda:
        out += "(lambda " + compactType(n.type.arg()) + ' ';
        writeTree(n.children[0], out);
        out += ')';
        break;
    }
}

class TreeBuilder {
public:
    explicit TreeBuilder(std::span<const Type> argTypes) : argTypes_(argTypes) {}

    Tree build(const SExpr& e)
    {
        if (!e.isList) return buildAtom(e.atom);
        if (e.list.empty() || e.list[0].isList) throw ParseError("expected an operator name");
        const std::string& head = e.list[0].atom;
        if (head == "lambda") return buildLambda(e);
        if (head == "the") {
            if (e.list.size() != 3 || e.list[1].isList || e.list[2].isList) throw ParseError("malformed (the T literal)");
            auto t = parseCompactType(e.list[1].atom);
            if (!t) throw ParseError("bad type " + e.list[1].atom);
            auto [v, inferred] = parseLiteral(e.list[2].atom);
            if (!v.hasType(*t)) throw ParseError("literal " + e.list[2].atom + " is not a " + t->str());
            return Tree::constant(std::move(v), *t);
        }
        auto op = opFromName(head);
        if (!op) throw ParseError("unknown function " + head);
        const auto& symbol = symbolFor(*op);
        if (e.list.size() - 1 != symbol.params.size())
            throw ParseError(head + " expects " + std::to_string(symbol.params.size()) + " arguments");
        std::vector<Tree> children;
        Bindings bindings;
        for (std::size_t i = 1; i < e.list.size(); ++i) {
            children.push_back(build(e.list[i]));
            if (!match(symbol.params[i - 1], children.back().type(), bindings))
                throw ParseError("argument " + std::to_string(i) + " of " + head + " has type " +
                                 children.back().type().str() + ", expected " + symbol.params[i - 1].str());
        }
        return Tree::apply(instantiate(symbol, bindings), std::move(children));
    }

private:
    Tree buildAtom(const std::string& a)
    {
        if (a == "y") {
            if (params_.empty()) throw ParseError("'y' outside a lambda");
            return Tree::param(params_.back());
        }
        if (a.size() > 1 && a[0] == 'x' && std::isdigit(static_cast<unsigned char>(a[1]))) {
            int idx = std::stoi(a.substr(1));
            if (idx >= static_cast<int>(argTypes_.size())) throw ParseError("argument " + a + " out of range");
            return Tree::arg(idx, argTypes_[idx]);
        }
        auto [v, t] = parseLiteral(a);
        if (!t) throw ParseError("cannot infer the type of " + a + "; write (the T " + a + ")");
        return Tree::constant(std::move(v), *t);
    }

    Tree buildLambda(const SExpr& e)
    {
        if (e.list.size() != 3 || e.list[1].isList) throw ParseError("malformed (lambda T body)");
        auto t = parseCompactType(e.list[1].atom);
        if (!t) throw ParseError("bad lambda parameter type " + e.list[1].atom);
        params_.push_back(*t);
        Tree body = build(e.list[2]);
        params_.pop_back();
        return Tree::lambda(*t, std::move(body));
    }

    std::span<const Type> argTypes_;
    std::vector<Type> params_;
};

}  // namespace

SExpr readSExpr(std::string_view text)
{
    Reader r(text);
    SExpr e = r.read();
    if (!r.atEnd()) throw ParseError("trailing input after expression");
    return e;
}

std::vector<SExpr> readAllSExprs(std::string_view text)
{
    Reader r(text);
    std::vector<SExpr> out;
    while (!r.atEnd()) out.push_back(r.read());
    return out;
}

std::string compactType(const Type& t)
{
    switch (t.kind()) {
    case TypeKind::List: return "[" + compactType(t.elem()) + "]";
    case TypeKind::Pair: return "{" + compactType(t.first()) + "," + compactType(t.second()) + "}";
    default: return t.str();
    }
}

std::optional<Type> parseCompactType(std::string_view text)
{
    if (text.empty()) return std::nullopt;
    if (text.front() == '[' && text.back() == ']') {
        auto inner = parseCompactType(text.substr(1, text.size() - 2));
        if (!inner) return std::nullopt;
        return Type::List(*inner);
    }
    if (text.front() == '{' && text.back() == '}') {
        // Split at the top-level comma.
        int nesting = 0;
        for (std::size_t i = 1; i + 1 < text.size(); ++i) {
            char c = text[i];
            if (c == '[' || c == '{') ++nesting;
            if (c == ']' || c == '}') --nesting;
            if (c == ',' && nesting == 0) {
                auto a = parseCompactType(text.substr(1, i - 1));
                auto b = parseCompactType(text.substr(i + 1, text.size() - i - 2));
                if (!a || !b) return std::nullopt;
                return Type::Pair(*a, *b);
            }
        }
        return std::nullopt;
    }
    auto t = parseType(text);
    if (t && t->kind() == TypeKind::Var) return std::nullopt;
    return t;
}

std::string literalString(const Value& v, const Type& type)
{
    std::string lit = compactLiteral(v);
    auto inferred = v.inferType();
    if (inferred && *inferred == type) return lit;
    return "(the " + compactType(type) + " " + lit + ")";
}

std::pair<Value, std::optional<Type>> parseLiteral(std::string_view atom)
{
    return LiteralParser(atom).parseAll();
}

std::string toSExpr(const Tree& tree)
{
    std::string out;
    writeTree(tree, out);
    return out;
}

Tree parseTree(std::string_view text, std::span<const Type> argTypes)
{
    return treeFromSExpr(readSExpr(text), argTypes);
}

Tree treeFromSExpr(const SExpr& expr, std::span<const Type> argTypes)
{
    return TreeBuilder(argTypes).build(expr);
}

}  // namespace tgp
