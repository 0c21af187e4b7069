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

#include "tgp/value.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tgp {

namespace {

const std::vector<Value>& emptyItems()
{
    static const std::vector<Value> empty;
    return empty;
}

std::string escapeChar(char32_t c, char quote)
{
    switch (c) {
    case '\n': return "\\n";
    case '\t': return "\\t";
    case '\r': return "\\r";
    case '\\': return "\\\\";
    default: break;
    }
    if (c == static_cast<char32_t>(quote)) return std::string("\\") + quote;
    if (c < 0x20 || c == 0x7F) return "\\" + std::to_string(static_cast<unsigned>(c));
    return encodeUtf8(c);
}

}  // namespace

Value Value::Int(std::int32_t v)
{
    Value r;
    r.kind_ = Kind::Int;
    r.scalar_.i = v;
    return r;
}

Value Value::Float(float v)
{
    Value r;
    r.kind_ = Kind::Float;
    r.scalar_.f = v;
    return r;
}

Value Value::Bool(bool v)
{
    Value r;
    r.kind_ = Kind::Bool;
    r.scalar_.b = v;
    return r;
}

Value Value::Char(char32_t v)
{
    Value r;
    r.kind_ = Kind::Char;
    r.scalar_.c = v;
    return r;
}

Value Value::List(std::vector<Value> items)
{
    Value r;
    r.kind_ = Kind::List;
    if (!items.empty()) r.items_ = std::make_shared<const std::vector<Value>>(std::move(items));
    return r;
}

Value Value::Pair(Value first, Value second)
{
    Value r;
    r.kind_ = Kind::Pair;
    std::vector<Value> both;
    both.reserve(2);
    both.push_back(std::move(first));
    both.push_back(std::move(second));
    r.items_ = std::make_shared<const std::vector<Value>>(std::move(both));
    return r;
}

Value Value::String(std::string_view utf8)
{
    std::vector<Value> chars;
    for (char32_t c : decodeUtf8(utf8)) chars.push_back(Char(c));
    return List(std::move(chars));
}

Value Value::Closure(std::shared_ptr<const Node> lambda)
{
    Value r;
    r.kind_ = Kind::Closure;
    r.closure_ = std::move(lambda);
    return r;
}

std::int32_t Value::asInt() const
{
    if (kind_ != Kind::Int) throw std::logic_error("value is not an Int: " + str());
    return scalar_.i;
}

float Value::asFloat() const
{
    if (kind_ != Kind::Float) throw std::logic_error("value is not a Float: " + str());
    return scalar_.f;
}

bool Value::asBool() const
{
    if (kind_ != Kind::Bool) throw std::logic_error("value is not a Bool: " + str());
    return scalar_.b;
}

char32_t Value::asChar() const
{
    if (kind_ != Kind::Char) throw std::logic_error("value is not a Char: " + str());
    return scalar_.c;
}

const std::vector<Value>& Value::items() const
{
    if (kind_ != Kind::List && kind_ != Kind::Pair) throw std::logic_error("value is not a list: " + str());
    return items_ ? *items_ : emptyItems();
}

const Value& Value::first() const
{
    if (kind_ != Kind::Pair) throw std::logic_error("value is not a pair: " + str());
    return (*items_)[0];
}

const Value& Value::second() const
{
    if (kind_ != Kind::Pair) throw std::logic_error("value is not a pair: " + str());
    return (*items_)[1];
}

const std::shared_ptr<const Node>& Value::closure() const
{
    if (kind_ != Kind::Closure) throw std::logic_error("value is not a closure");
    return closure_;
}

bool Value::isString() const
{
    if (kind_ != Kind::List || !items_) return false;
    return std::all_of(items_->begin(), items_->end(), [](const Value& v) { return v.kind_ == Kind::Char; });
}

std::string Value::toUtf8() const
{
    std::string out;
    for (const auto& v : items()) out += encodeUtf8(v.asChar());
    return out;
}

bool Value::hasType(const Type& t) const
{
    switch (kind_) {
    case Kind::Int: return t.kind() == TypeKind::Int;
    case Kind::Float: return t.kind() == TypeKind::Float;
    case Kind::Bool: return t.kind() == TypeKind::Bool;
    case Kind::Char: return t.kind() == TypeKind::Char;
    case Kind::List:
        if (t.kind() != TypeKind::List) return false;
        return std::all_of(items().begin(), items().end(), [&](const Value& v) { return v.hasType(t.elem()); });
    case Kind::Pair: return t.kind() == TypeKind::Pair && first().hasType(t.first()) && second().hasType(t.second());
    case Kind::Closure: return t.kind() == TypeKind::Fun;
    }
    return false;
}

std::optional<Type> Value::inferType() const
{
    switch (kind_) {
    case Kind::Int: return Type::Int();
    case Kind::Float: return Type::Float();
    case Kind::Bool: return Type::Bool();
    case Kind::Char: return Type::Char();
    case Kind::List: {
        if (!items_) return std::nullopt;
        // Later elements may resolve what an empty first element hides.
        for (const auto& v : *items_) {
            if (auto t = v.inferType()) return Type::List(*t);
        }
        return std::nullopt;
    }
    case Kind::Pair: {
        auto a = first().inferType();
        auto b = second().inferType();
        if (!a || !b) return std::nullopt;
        return Type::Pair(*a, *b);
    }
    case Kind::Closure: return std::nullopt;
    }
    return std::nullopt;
}

std::string Value::str() const
{
    switch (kind_) {
    case Kind::Int: return std::to_string(scalar_.i);
    case Kind::Float: return formatFloat(scalar_.f);
    case Kind::Bool: return scalar_.b ? "True" : "False";
    case Kind::Char: return "'" + escapeChar(scalar_.c, '\'') + "'";
    case Kind::List: {
        if (isString()) {
            std::string out = "\"";
            for (const auto& v : *items_) out += escapeChar(v.scalar_.c, '"');
            return out + "\"";
        }
        std::string out = "[";
        for (std::size_t i = 0; i < items().size(); ++i) {
            if (i) out += ", ";
            out += (*items_)[i].str();
        }
        return out + "]";
    }
    case Kind::Pair: return "(" + first().str() + ", " + second().str() + ")";
    case Kind::Closure: return "<lambda>";
    }
    return "?";
}

bool operator==(const Value& a, const Value& b)
{
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case Value::Kind::Int: return a.scalar_.i == b.scalar_.i;
    case Value::Kind::Float: return a.scalar_.f == b.scalar_.f;
    case Value::Kind::Bool: return a.scalar_.b == b.scalar_.b;
    case Value::Kind::Char: return a.scalar_.c == b.scalar_.c;
    case Value::Kind::List:
    case Value::Kind::Pair:
        if (a.items_ == b.items_) return true;
        return a.items() == b.items();
    case Value::Kind::Closure: return a.closure_ == b.closure_;
    }
    return false;
}

std::string formatFloat(float v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string encodeUtf8(char32_t c)
{
    std::string out;
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
    return out;
}

std::u32string decodeUtf8(std::string_view s)
{
    std::u32string out;
    for (std::size_t i = 0; i < s.size();) {
        auto b = static_cast<unsigned char>(s[i]);
        int extra = b < 0x80 ? 0 : b < 0xE0 ? 1 : b < 0xF0 ? 2 : 3;
        char32_t c = extra == 0 ? b : extra == 1 ? (b & 0x1F) : extra == 2 ? (b & 0x0F) : (b & 0x07);
        if (extra > 0 && i + extra >= s.size()) throw std::invalid_argument("truncated UTF-8 sequence");
        for (int k = 1; k <= extra; ++k) c = (c << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
        out += c;
        i += extra + 1;
    }
    return out;
}

}  // namespace tgp
