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

#ifndef TGP_GRAMMAR_HPP
#define TGP_GRAMMAR_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgp/types.hpp"

namespace tgp {

// The function catalog. Names and signatures follow the Haskell base-library
// subset the synthesized programs are written in.
enum class Op : std::uint8_t {
    AddInt, SubInt, MultInt, DivInt, ModInt, MaxInt, MinInt,
    Not, And, Or,
    If,
    Sqrt, AddFloat, SubFloat, MultFloat, DivFloat,
    Singleton, Cons, Head, Reverse, Concat,
    ToPair, Fst, Snd,
    EqChar, IsLetter, IsDigit,
    IntToFloat, Floor,
    GtInt, LtInt, EqInt,
    Len, Take, Range, SumInts, ProductInts, SumFloats, ProductFloats,
    Unlines, ShowInt, Zip, Map, Filter,
};

std::string_view opName(Op op);
std::optional<Op> opFromName(std::string_view name);

/// Polymorphic catalog entry; parameters and output may mention type variables.
struct FunctionSymbol {
    Op op;
    std::vector<Type> params;
    Type ret;

    std::string_view name() const { return opName(op); }
};

/// Fully monomorphic instance of a catalog entry.
struct Signature {
    Op op;
    std::vector<Type> params;
    Type ret;

    std::string_view name() const { return opName(op); }
    std::size_t arity() const { return params.size(); }
    std::string str() const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

using SignaturePtr = std::shared_ptr<const Signature>;

const std::vector<FunctionSymbol>& catalog();
const FunctionSymbol& symbolFor(Op op);

/// Instantiates `symbol` under `bindings`; every variable must be bound.
Signature instantiate(const FunctionSymbol& symbol, const Bindings& bindings);

class GrammarError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Concrete types a problem may use, plus the program's argument and output types.
struct TypeUniverse {
    std::vector<Type> types;  // sorted, unique, data types only
    std::vector<Type> argTypes;
    Type outputType;

    /// Sorts, dedups and checks component closure; throws GrammarError.
    static TypeUniverse make(std::vector<Type> types, std::vector<Type> argTypes = {}, Type outputType = Type::Int());

    bool contains(const Type& t) const;
    /// Data types are checked directly; a function type needs both ends in the universe.
    bool admits(const Type& t) const;
};

/// Monomorphized grammar for one universe.
class GrammarInstance {
public:
    GrammarInstance(TypeUniverse universe, std::vector<SignaturePtr> signatures);

    const TypeUniverse& universe() const { return universe_; }
    const std::vector<SignaturePtr>& signatures() const { return signatures_; }
    /// Signatures whose output type is `t`, in grammar order.
    const std::vector<SignaturePtr>& producing(const Type& t) const;
    /// Indices of program arguments of type `t`.
    std::vector<int> argumentsOfType(const Type& t) const;
    bool hasConstants(const Type& t) const { return t.isData() && universe_.contains(t); }
    /// Every function type demanded by a higher-order parameter.
    TypeSet functionTypes() const;
    /// One signature per line.
    std::string dump() const;

private:
    TypeUniverse universe_;
    std::vector<SignaturePtr> signatures_;
    std::map<Type, std::vector<SignaturePtr>> byOutput_;
};

/// Every instantiation of every symbol whose types all lie in the universe.
/// Ordered by name, then by the bound types. Throws GrammarError when empty.
GrammarInstance monomorphize(const std::vector<FunctionSymbol>& symbols, const TypeUniverse& universe);

/// Instances of `symbol` producing `target`, unbound variables ranging over the universe.
std::vector<Signature> unifyOutput(const FunctionSymbol& symbol, const Type& target, const TypeUniverse& universe);

}  // namespace tgp

#endif  // TGP_GRAMMAR_HPP
