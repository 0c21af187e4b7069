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

#include "tgp/types.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tgp {

Type Type::List(Type elem)
{
    Type t(TypeKind::List);
    t.parts_.push_back(std::move(elem));
    return t;
}

Type Type::Pair(Type first, Type second)
{
    Type t(TypeKind::Pair);
    t.parts_.push_back(std::move(first));
    t.parts_.push_back(std::move(second));
    return t;
}

Type Type::Fun(Type arg, Type ret)
{
    Type t(TypeKind::Fun);
    t.parts_.push_back(std::move(arg));
    t.parts_.push_back(std::move(ret));
    return t;
}

Type Type::Var(std::string name)
{
    Type t(TypeKind::Var);
    t.var_ = std::move(name);
    return t;
}

const Type& Type::elem() const
{
    if (kind_ != TypeKind::List) throw std::logic_error("elem() on non-list type " + str());
    return parts_[0];
}

const Type& Type::first() const
{
    if (kind_ != TypeKind::Pair) throw std::logic_error("first() on non-pair type " + str());
    return parts_[0];
}

const Type& Type::second() const
{
    if (kind_ != TypeKind::Pair) throw std::logic_error("second() on non-pair type " + str());
    return parts_[1];
}

const Type& Type::arg() const
{
    if (kind_ != TypeKind::Fun) throw std::logic_error("arg() on non-function type " + str());
    return parts_[0];
}

const Type& Type::ret() const
{
    if (kind_ != TypeKind::Fun) throw std::logic_error("ret() on non-function type " + str());
    return parts_[1];
}

const std::string& Type::varName() const
{
    if (kind_ != TypeKind::Var) throw std::logic_error("varName() on non-variable type " + str());
    return var_;
}

bool Type::isConcrete() const
{
    if (kind_ == TypeKind::Var) return false;
    return std::all_of(parts_.begin(), parts_.end(), [](const Type& p) { return p.isConcrete(); });
}

bool Type::isData() const
{
    if (kind_ == TypeKind::Fun) return false;
    return std::all_of(parts_.begin(), parts_.end(), [](const Type& p) { return p.isData(); });
}

std::string Type::str() const
{
    switch (kind_) {
    case TypeKind::Int: return "Int";
    case TypeKind::Float: return "Float";
    case TypeKind::Bool: return "Bool";
    case TypeKind::Char: return "Char";
    case TypeKind::List: return "[" + parts_[0].str() + "]";
    case TypeKind::Pair: return "(" + parts_[0].str() + ", " + parts_[1].str() + ")";
    case TypeKind::Fun: {
        auto lhs = parts_[0].str();
        if (parts_[0].kind_ == TypeKind::Fun) lhs = "(" + lhs + ")";
        return lhs + " -> " + parts_[1].str();
    }
    case TypeKind::Var: return var_;
    }
    return "?";
}

bool operator==(const Type& a, const Type& b)
{
    return a.kind_ == b.kind_ && a.var_ == b.var_ && a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const Type& a, const Type& b)
{
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == TypeKind::Var) return a.var_.compare(b.var_) <=> 0;
    for (std::size_t i = 0; i < a.parts_.size(); ++i) {
        if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Type substitute(const Type& pattern, const Bindings& bindings)
{
    switch (pattern.kind()) {
    case TypeKind::Var: {
        auto it = bindings.find(pattern.varName());
        return it == bindings.end() ? pattern : it->second;
    }
    case TypeKind::List: return Type::List(substitute(pattern.elem(), bindings));
    case TypeKind::Pair: return Type::Pair(substitute(pattern.first(), bindings), substitute(pattern.second(), bindings));
    case TypeKind::Fun: return Type::Fun(substitute(pattern.arg(), bindings), substitute(pattern.ret(), bindings));
    default: return pattern;
    }
}

bool match(const Type& pattern, const Type& concrete, Bindings& bindings)
{
    if (pattern.kind() == TypeKind::Var) {
        auto [it, inserted] = bindings.emplace(pattern.varName(), concrete);
        return inserted || it->second == concrete;
    }
    if (pattern.kind() != concrete.kind()) return false;
    switch (pattern.kind()) {
    case TypeKind::List: return match(pattern.elem(), concrete.elem(), bindings);
    case TypeKind::Pair:
        return match(pattern.first(), concrete.first(), bindings) && match(pattern.second(), concrete.second(), bindings);
    case TypeKind::Fun:
        return match(pattern.arg(), concrete.arg(), bindings) && match(pattern.ret(), concrete.ret(), bindings);
    default: return true;
    }
}

void collectVars(const Type& t, std::vector<std::string>& out)
{
    switch (t.kind()) {
    case TypeKind::Var:
        if (std::find(out.begin(), out.end(), t.varName()) == out.end()) out.push_back(t.varName());
        break;
    case TypeKind::List: collectVars(t.elem(), out); break;
    case TypeKind::Pair:
        collectVars(t.first(), out);
        collectVars(t.second(), out);
        break;
    case TypeKind::Fun:
        collectVars(t.arg(), out);
        collectVars(t.ret(), out);
        break;
    default: break;
    }
}

namespace {

class TypeParser {
public:
    explicit TypeParser(std::string_view text) : text_(text) {}

    std::optional<Type> parseAll()
    {
        auto t = parseFun();
        skipSpace();
        if (!t || pos_ != text_.size()) return std::nullopt;
        return t;
    }

private:
    void skipSpace()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(std::string_view token)
    {
        skipSpace();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::optional<Type> parseFun()
    {
        auto lhs = parseAtom();
        if (!lhs) return std::nullopt;
        if (eat("->")) {
            auto rhs = parseFun();
            if (!rhs) return std::nullopt;
            return Type::Fun(*lhs, *rhs);
        }
        return lhs;
    }

    std::optional<Type> parseAtom()
    {
        skipSpace();
        if (eat("[")) {
            auto inner = parseFun();
            if (!inner || !eat("]")) return std::nullopt;
            return Type::List(*inner);
        }
        if (eat("(")) {
            auto a = parseFun();
            if (!a) return std::nullopt;
            if (eat(")")) return a;
            if (!eat(",")) return std::nullopt;
            auto b = parseFun();
            if (!b || !eat(")")) return std::nullopt;
            return Type::Pair(*a, *b);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        auto word = text_.substr(start, pos_ - start);
        if (word == "Int") return Type::Int();
        if (word == "Float") return Type::Float();
        if (word == "Bool") return Type::Bool();
        if (word == "Char") return Type::Char();
        if (word == "String") return Type::String();
        if (!word.empty() && std::islower(static_cast<unsigned char>(word[0]))) return Type::Var(std::string(word));
        return std::nullopt;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::optional<Type> parseType(std::string_view text)
{
    return TypeParser(text).parseAll();
}

}  // namespace tgp
