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

#ifndef TGP_GENERATOR_HPP
#define TGP_GENERATOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "tgp/grammar.hpp"
#include "tgp/tree.hpp"
#include "tgp/type_tables.hpp"

namespace tgp {

using Rng = std::mt19937_64;

struct GenConfig {
    int maxDepth = 15;
    int maxLambdaDepth = 3;
    std::int32_t intMin = -100;
    std::int32_t intMax = 100;
    float floatMin = -100.0f;
    float floatMax = 100.0f;
    double listMeanLength = 3.0;
    int listMaxLength = 10;
    int rampMin = 2;
    int rampMax = 6;
    /// Extra literals per type; drawn instead of a random constant with
    /// probability literalProbability.
    std::map<Type, std::vector<Value>> literals;
    double literalProbability = 0.5;

    void validate() const;
};

class UnproducibleError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class UnsupportedTypeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random well-typed trees for one grammar instance. Immutable after
/// construction; all randomness comes from the caller's generator.
class Generator {
public:
    Generator(std::shared_ptr<const GrammarInstance> grammar, GenConfig config);

    const GrammarInstance& grammar() const { return *grammar_; }
    const std::shared_ptr<const GrammarInstance>& grammarPtr() const { return grammar_; }
    const GenConfig& config() const { return config_; }
    const TypeTable& growTable() const { return grow_; }
    const TypeTable& fullTable() const { return full_; }
    const LambdaTableSet& lambdaTables() const { return lambdas_; }

    /// Ephemeral constant: Int and Float uniform over the configured ranges,
    /// printable ASCII characters, lists of geometric length.
    Value constant(const Type& t, Rng& rng) const;
    /// Tree of output type `target` and main depth at most `depthBudget`.
    /// Full falls back to grow when the full table cannot reach `target` at
    /// exactly that depth.
    Tree tree(const Type& target, int depthBudget, Method method, Rng& rng) const;
    /// Lambda of function type `fun` whose body uses its parameter and nests
    /// only identity lambdas.
    Tree lambda(const Type& fun, Rng& rng) const;

    struct RampSlot {
        int depth;
        Method method;
    };
    /// Ramped half-and-half: depths cycle over the ramp, methods alternate.
    std::vector<RampSlot> rampSchedule(int size) const;
    std::vector<Tree> initialPopulation(int size, Rng& rng) const;

private:
    Tree grow(const Type& t, int d, Rng& rng) const;
    Tree full(const Type& t, int d, Rng& rng) const;
    Tree terminal(const Type& t, Rng& rng) const;
    Tree applyWith(const SignaturePtr& sig, int d, Method method, Rng& rng) const;
    Tree body(const LambdaTables& tables, const Type& param, const Type& t, int d, bool mustUse, Rng& rng) const;

    std::shared_ptr<const GrammarInstance> grammar_;
    GenConfig config_;
    LambdaTableSet lambdas_;
    TypeTable grow_;
    TypeTable full_;
};

}  // namespace tgp

#endif  // TGP_GENERATOR_HPP
