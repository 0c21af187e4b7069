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

#include "tgp/grammar.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace tgp {

namespace {

constexpr std::array kOpNames{
    "AddInt", "SubInt", "MultInt", "DivInt", "ModInt", "MaxInt", "MinInt",
    "Not", "And", "Or",
    "If",
    "Sqrt", "AddFloat", "SubFloat", "MultFloat", "DivFloat",
    "Singleton", "Cons", "Head", "Reverse", "Concat",
    "ToPair", "Fst", "Snd",
    "EqChar", "IsLetter", "IsDigit",
    "IntToFloat", "Floor",
    "GtInt", "LtInt", "EqInt",
    "Len", "Take", "Range", "SumInts", "ProductInts", "SumFloats", "ProductFloats",
    "Unlines", "ShowInt", "Zip", "Map", "Filter",
};

std::vector<FunctionSymbol> buildCatalog()
{
    const auto I = Type::Int();
    const auto F = Type::Float();
    const auto B = Type::Bool();
    const auto C = Type::Char();
    const auto a = Type::Var("a");
    const auto b = Type::Var("b");
    const auto L = [](Type t) { return Type::List(std::move(t)); };

    std::vector<FunctionSymbol> c;
    for (Op op : {Op::AddInt, Op::SubInt, Op::MultInt, Op::DivInt, Op::ModInt, Op::MaxInt, Op::MinInt})
        c.push_back({op, {I, I}, I});
    c.push_back({Op::Not, {B}, B});
    c.push_back({Op::And, {B, B}, B});
    c.push_back({Op::Or, {B, B}, B});
    c.push_back({Op::If, {B, a, a}, a});
    c.push_back({Op::Sqrt, {F}, F});
    for (Op op : {Op::AddFloat, Op::SubFloat, Op::MultFloat, Op::DivFloat}) c.push_back({op, {F, F}, F});
    c.push_back({Op::Singleton, {a}, L(a)});
    c.push_back({Op::Cons, {a, L(a)}, L(a)});
    c.push_back({Op::Head, {L(a)}, a});
    c.push_back({Op::Reverse, {L(a)}, L(a)});
    c.push_back({Op::Concat, {L(L(a))}, L(a)});
    c.push_back({Op::ToPair, {a, b}, Type::Pair(a, b)});
    c.push_back({Op::Fst, {Type::Pair(a, b)}, a});
    c.push_back({Op::Snd, {Type::Pair(a, b)}, b});
    c.push_back({Op::EqChar, {C, C}, B});
    c.push_back({Op::IsLetter, {C}, B});
    c.push_back({Op::IsDigit, {C}, B});
    c.push_back({Op::IntToFloat, {I}, F});
    c.push_back({Op::Floor, {F}, I});
    for (Op op : {Op::GtInt, Op::LtInt, Op::EqInt}) c.push_back({op, {I, I}, B});
    c.push_back({Op::Len, {L(a)}, I});
    c.push_back({Op::Take, {I, L(a)}, L(a)});
    c.push_back({Op::Range, {I, I, I}, L(I)});
    c.push_back({Op::SumInts, {L(I)}, I});
    c.push_back({Op::ProductInts, {L(I)}, I});
    c.push_back({Op::SumFloats, {L(F)}, F});
    c.push_back({Op::ProductFloats, {L(F)}, F});
    c.push_back({Op::Unlines, {L(Type::String())}, Type::String()});
    c.push_back({Op::ShowInt, {I}, Type::String()});
    c.push_back({Op::Zip, {L(a), L(b)}, L(Type::Pair(a, b))});
    c.push_back({Op::Map, {Type::Fun(a, b), L(a)}, L(b)});
    c.push_back({Op::Filter, {Type::Fun(a, B), L(a)}, L(a)});
    return c;
}

std::vector<std::string> symbolVars(const FunctionSymbol& s)
{
    std::vector<std::string> vars;
    for (const auto& p : s.params) collectVars(p, vars);
    collectVars(s.ret, vars);
    std::sort(vars.begin(), vars.end());
    return vars;
}

bool signatureFits(const Signature& sig, const TypeUniverse& u)
{
    if (!u.contains(sig.ret)) return false;
    return std::all_of(sig.params.begin(), sig.params.end(), [&](const Type& p) { return u.admits(p); });
}

// Enumerates every binding of `vars` over the universe, lexicographically.
template <typename Visit>
void forEachBinding(const std::vector<std::string>& vars, const TypeUniverse& u, Bindings& bindings, std::size_t k,
                    Visit&& visit)
{
    if (k == vars.size()) {
        visit(bindings);
        return;
    }
    if (bindings.count(vars[k])) {
        forEachBinding(vars, u, bindings, k + 1, visit);
        return;
    }
    for (const auto& t : u.types) {
        bindings[vars[k]] = t;
        forEachBinding(vars, u, bindings, k + 1, visit);
    }
    bindings.erase(vars[k]);
}

void checkClosure(const Type& t, const std::vector<Type>& types)
{
    auto has = [&](const Type& x) { return std::binary_search(types.begin(), types.end(), x); };
    auto require = [&](const Type& x) {
        if (!has(x)) throw GrammarError("type universe is not closed: " + t.str() + " needs " + x.str());
    };
    if (t.kind() == TypeKind::List) require(t.elem());
    if (t.kind() == TypeKind::Pair) {
        require(t.first());
        require(t.second());
    }
}

}  // namespace

std::string_view opName(Op op)
{
    return kOpNames[static_cast<std::size_t>(op)];
}

std::optional<Op> opFromName(std::string_view name)
{
    for (std::size_t i = 0; i < kOpNames.size(); ++i) {
        if (name == kOpNames[i]) return static_cast<Op>(i);
    }
    return std::nullopt;
}

std::string Signature::str() const
{
    std::string s(name());
    s += " :: ";
    for (const auto& p : params) {
        s += p.isFunction() ? "(" + p.str() + ")" : p.str();
        s += " -> ";
    }
    return s + ret.str();
}

const std::vector<FunctionSymbol>& catalog()
{
    static const std::vector<FunctionSymbol> symbols = buildCatalog();
    return symbols;
}

const FunctionSymbol& symbolFor(Op op)
{
    for (const auto& s : catalog()) {
        if (s.op == op) return s;
    }
    throw std::logic_error("operator missing from catalog");
}

Signature instantiate(const FunctionSymbol& symbol, const Bindings& bindings)
{
    Signature sig{symbol.op, {}, substitute(symbol.ret, bindings)};
    for (const auto& p : symbol.params) sig.params.push_back(substitute(p, bindings));
    if (!sig.ret.isConcrete() ||
        !std::all_of(sig.params.begin(), sig.params.end(), [](const Type& t) { return t.isConcrete(); }))
        throw GrammarError("unbound type variable instantiating " + std::string(symbol.name()));
    return sig;
}

TypeUniverse TypeUniverse::make(std::vector<Type> types, std::vector<Type> argTypes, Type outputType)
{
    for (const auto& t : types) {
        if (!t.isConcrete() || !t.isData()) throw GrammarError("universe types must be concrete data types: " + t.str());
    }
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    for (const auto& t : types) checkClosure(t, types);

    TypeUniverse u{std::move(types), std::move(argTypes), std::move(outputType)};
    for (const auto& a : u.argTypes) {
        if (!u.contains(a)) throw GrammarError("argument type outside universe: " + a.str());
    }
    if (!u.argTypes.empty() && !u.contains(u.outputType))
        throw GrammarError("output type outside universe: " + u.outputType.str());
    return u;
}

bool TypeUniverse::contains(const Type& t) const
{
    return std::binary_search(types.begin(), types.end(), t);
}

bool TypeUniverse::admits(const Type& t) const
{
    if (t.isFunction()) return contains(t.arg()) && contains(t.ret());
    return contains(t);
}

GrammarInstance::GrammarInstance(TypeUniverse universe, std::vector<SignaturePtr> signatures)
    : universe_(std::move(universe)), signatures_(std::move(signatures))
{
    for (const auto& s : signatures_) byOutput_[s->ret].push_back(s);
}

const std::vector<SignaturePtr>& GrammarInstance::producing(const Type& t) const
{
    static const std::vector<SignaturePtr> none;
    auto it = byOutput_.find(t);
    return it == byOutput_.end() ? none : it->second;
}

std::vector<int> GrammarInstance::argumentsOfType(const Type& t) const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < universe_.argTypes.size(); ++i) {
        if (universe_.argTypes[i] == t) out.push_back(static_cast<int>(i));
    }
    return out;
}

TypeSet GrammarInstance::functionTypes() const
{
    TypeSet out;
    for (const auto& s : signatures_) {
        for (const auto& p : s->params) {
            if (p.isFunction()) out.insert(p);
        }
    }
    return out;
}

std::string GrammarInstance::dump() const
{
    std::ostringstream os;
    for (const auto& s : signatures_) os << s->str() << '\n';
    return os.str();
}

GrammarInstance monomorphize(const std::vector<FunctionSymbol>& symbols, const TypeUniverse& universe)
{
    std::vector<const FunctionSymbol*> ordered;
    for (const auto& s : symbols) ordered.push_back(&s);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const FunctionSymbol* x, const FunctionSymbol* y) { return x->name() < y->name(); });

    std::vector<SignaturePtr> out;
    for (const auto* symbol : ordered) {
        Bindings bindings;
        forEachBinding(symbolVars(*symbol), universe, bindings, 0, [&](const Bindings& b) {
            auto sig = instantiate(*symbol, b);
            if (!signatureFits(sig, universe)) return;
            bool seen = std::any_of(out.begin(), out.end(), [&](const SignaturePtr& p) { return *p == sig; });
            if (!seen) out.push_back(std::make_shared<const Signature>(std::move(sig)));
        });
    }
    if (out.empty()) throw GrammarError("no catalog function fits the type universe");
    return GrammarInstance(universe, std::move(out));
}

std::vector<Signature> unifyOutput(const FunctionSymbol& symbol, const Type& target, const TypeUniverse& universe)
{
    std::vector<Signature> out;
    Bindings bindings;
    if (!match(symbol.ret, target, bindings)) return out;
    forEachBinding(symbolVars(symbol), universe, bindings, 0, [&](const Bindings& b) {
        auto sig = instantiate(symbol, b);
        if (signatureFits(sig, universe) && std::find(out.begin(), out.end(), sig) == out.end()) out.push_back(sig);
    });
    return out;
}

}  // namespace tgp
