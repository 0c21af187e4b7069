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

#include "tgp/generator.hpp"

#include <algorithm>

namespace tgp {

namespace {

std::size_t pick(std::size_t n, Rng& rng)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool dataParamsIn(const Signature& sig, const TypeSet& row)
{
    return std::all_of(sig.params.begin(), sig.params.end(),
                       [&](const Type& p) { return p.isFunction() || row.count(p) > 0; });
}

TypeSet terminalTypes(const GrammarInstance& g)
{
    TypeSet out(g.universe().types.begin(), g.universe().types.end());
    out.insert(g.universe().argTypes.begin(), g.universe().argTypes.end());
    return out;
}

TypeSet lambdaArgTypes(const GrammarInstance& g)
{
    TypeSet out;
    for (const auto& f : g.functionTypes()) out.insert(f.arg());
    return out;
}

}  // namespace

void GenConfig::validate() const
{
    if (maxLambdaDepth < 1 || maxLambdaDepth > maxDepth)
        throw std::invalid_argument("need 1 <= maxLambdaDepth <= maxDepth");
    if (intMin > intMax || floatMin > floatMax) throw std::invalid_argument("empty constant range");
    if (rampMin < 0 || rampMin > rampMax) throw std::invalid_argument("bad ramp depth range");
    if (listMeanLength < 0 || listMaxLength < 0) throw std::invalid_argument("bad constant list length settings");
    if (literalProbability < 0 || literalProbability > 1) throw std::invalid_argument("literalProbability outside [0, 1]");
}

Generator::Generator(std::shared_ptr<const GrammarInstance> grammar, GenConfig config)
    : grammar_(std::move(grammar)), config_(config)
{
    config_.validate();
    lambdas_ = buildLambdaTables(*grammar_, lambdaArgTypes(*grammar_), config_.maxLambdaDepth);
    auto terminals = terminalTypes(*grammar_);
    grow_ = buildTable(*grammar_, Method::Grow, config_.maxDepth, terminals, &lambdas_);
    full_ = buildTable(*grammar_, Method::Full, config_.maxDepth, terminals, &lambdas_);
}

Value Generator::constant(const Type& t, Rng& rng) const
{
    if (auto it = config_.literals.find(t); it != config_.literals.end() && !it->second.empty() &&
                                             std::bernoulli_distribution(config_.literalProbability)(rng))
        return it->second[pick(it->second.size(), rng)];
    switch (t.kind()) {
    case TypeKind::Int: return Value::Int(std::uniform_int_distribution<std::int32_t>(config_.intMin, config_.intMax)(rng));
    case TypeKind::Float: {
        float f = std::uniform_real_distribution<float>(config_.floatMin, config_.floatMax)(rng);
        return Value::Float(std::clamp(f, config_.floatMin, config_.floatMax));
    }
    case TypeKind::Bool: return Value::Bool(std::bernoulli_distribution(0.5)(rng));
    case TypeKind::Char: return Value::Char(static_cast<char32_t>(std::uniform_int_distribution<int>(0x20, 0x7E)(rng)));
    case TypeKind::List: {
        std::geometric_distribution<int> length(1.0 / (config_.listMeanLength + 1.0));
        int n = std::min(length(rng), config_.listMaxLength);
        std::vector<Value> items;
        for (int i = 0; i < n; ++i) items.push_back(constant(t.elem(), rng));
        return Value::List(std::move(items));
    }
    case TypeKind::Pair: {
        Value a = constant(t.first(), rng);
        Value b = constant(t.second(), rng);
        return Value::Pair(std::move(a), std::move(b));
    }
    case TypeKind::Fun:
    case TypeKind::Var: break;
    }
    throw UnsupportedTypeError("no constants of type " + t.str());
}

Tree Generator::terminal(const Type& t, Rng& rng) const
{
    auto args = grammar_->argumentsOfType(t);
    std::size_t options = args.size() + (grammar_->hasConstants(t) ? 1 : 0);
    if (options == 0) throw UnproducibleError("no terminal of type " + t.str());
    std::size_t k = pick(options, rng);
    if (k < args.size()) return Tree::arg(args[k], t);
    return Tree::constant(constant(t, rng), t);
}

Tree Generator::applyWith(const SignaturePtr& sig, int d, Method method, Rng& rng) const
{
    std::vector<Tree> children;
    children.reserve(sig->arity());
    for (const auto& p : sig->params) {
        if (p.isFunction()) children.push_back(lambda(p, rng));
        else children.push_back(method == Method::Full ? full(p, d - 1, rng) : grow(p, d - 1, rng));
    }
    return Tree::apply(sig, std::move(children));
}

Tree Generator::grow(const Type& t, int d, Rng& rng) const
{
    auto args = grammar_->argumentsOfType(t);
    std::size_t terminals = args.size() + (grammar_->hasConstants(t) ? 1 : 0);
    std::vector<const SignaturePtr*> functions;
    if (d > 0) {
        const TypeSet& below = grow_.row(std::min(d - 1, grow_.maxDepth()));
        for (const auto& sig : grammar_->producing(t)) {
            bool ok = dataParamsIn(*sig, below) &&
                      std::all_of(sig->params.begin(), sig->params.end(),
                                  [&](const Type& p) { return !p.isFunction() || lambdas_.canProduce(p); });
            if (ok) functions.push_back(&sig);
        }
    }
    std::size_t total = terminals + functions.size();
    if (total == 0) throw UnproducibleError("cannot produce " + t.str() + " within depth " + std::to_string(d));
    std::size_t k = pick(total, rng);
    if (k < args.size()) return Tree::arg(args[k], t);
    if (k < terminals) return Tree::constant(constant(t, rng), t);
    return applyWith(*functions[k - terminals], d, Method::Grow, rng);
}

Tree Generator::full(const Type& t, int d, Rng& rng) const
{
    if (d == 0) return terminal(t, rng);
    if (!canProduce(full_, t, d)) return grow(t, d, rng);
    const TypeSet& below = full_.row(d - 1);
    std::vector<const SignaturePtr*> functions;
    for (const auto& sig : grammar_->producing(t)) {
        bool ok = dataParamsIn(*sig, below) &&
                  std::all_of(sig->params.begin(), sig->params.end(),
                              [&](const Type& p) { return !p.isFunction() || lambdas_.canProduce(p); });
        if (ok) functions.push_back(&sig);
    }
    return applyWith(*functions[pick(functions.size(), rng)], d, Method::Full, rng);
}

Tree Generator::tree(const Type& target, int depthBudget, Method method, Rng& rng) const
{
    if (!canProduce(grow_, target, depthBudget))
        throw UnproducibleError("cannot produce " + target.str() + " within depth " + std::to_string(depthBudget));
    return method == Method::Full ? full(target, depthBudget, rng) : grow(target, depthBudget, rng);
}

Tree Generator::lambda(const Type& fun, Rng& rng) const
{
    if (!fun.isFunction()) throw UnproducibleError("lambda requested for non-function type " + fun.str());
    const auto* tables = lambdas_.forArg(fun.arg());
    if (!tables || !lambdas_.canProduce(fun)) throw UnproducibleError("cannot produce a lambda of type " + fun.str());
    return Tree::lambda(fun.arg(), body(*tables, fun.arg(), fun.ret(), lambdas_.maxDepth(), true, rng));
}

Tree Generator::body(const LambdaTables& tables, const Type& param, const Type& t, int d, bool mustUse, Rng& rng) const
{
    // Options: the parameter, a constant (only when the parameter need not
    // appear below), and every admissible function.
    bool paramOption = t == param;
    bool constOption = !mustUse && grammar_->hasConstants(t);
    std::vector<const SignaturePtr*> functions;
    if (d > 0) {
        const TypeSet& freeBelow = tables.free.row(d - 1);
        const TypeSet& paramBelow = tables.withParam.row(d - 1);
        for (const auto& sig : grammar_->producing(t)) {
            bool ok = dataParamsIn(*sig, freeBelow) &&
                      std::all_of(sig->params.begin(), sig->params.end(),
                                  [d](const Type& p) { return !p.isFunction() || (d >= 2 && identityFillable(p)); });
            if (ok && mustUse) {
                ok = std::any_of(sig->params.begin(), sig->params.end(),
                                 [&](const Type& p) { return !p.isFunction() && paramBelow.count(p); });
            }
            if (ok) functions.push_back(&sig);
        }
    }
    std::size_t total = (paramOption ? 1 : 0) + (constOption ? 1 : 0) + functions.size();
    if (total == 0) throw UnproducibleError("cannot produce lambda body of type " + t.str());
    std::size_t k = pick(total, rng);
    if (paramOption) {
        if (k == 0) return Tree::param(param);
        --k;
    }
    if (constOption) {
        if (k == 0) return Tree::constant(constant(t, rng), t);
        --k;
    }
    const SignaturePtr& sig = *functions[k];

    int mustSlot = -1;
    if (mustUse) {
        std::vector<int> reaching;
        for (std::size_t i = 0; i < sig->params.size(); ++i) {
            const Type& p = sig->params[i];
            if (!p.isFunction() && tables.withParam.row(d - 1).count(p)) reaching.push_back(static_cast<int>(i));
        }
        mustSlot = reaching[pick(reaching.size(), rng)];
    }
    std::vector<Tree> children;
    for (std::size_t i = 0; i < sig->params.size(); ++i) {
        const Type& p = sig->params[i];
        if (p.isFunction()) children.push_back(Tree::identity(p.arg()));
        else children.push_back(body(tables, param, p, d - 1, static_cast<int>(i) == mustSlot, rng));
    }
    return Tree::apply(sig, std::move(children));
}

std::vector<Generator::RampSlot> Generator::rampSchedule(int size) const
{
    std::vector<RampSlot> out;
    int span = config_.rampMax - config_.rampMin + 1;
    for (int i = 0; i < size; ++i) {
        int d = std::min(config_.rampMin + (i / 2) % span, config_.maxDepth);
        out.push_back({d, i % 2 == 0 ? Method::Grow : Method::Full});
    }
    return out;
}

std::vector<Tree> Generator::initialPopulation(int size, Rng& rng) const
{
    if (size < 2) throw std::invalid_argument("population size must be at least 2");
    const Type& target = grammar_->universe().outputType;
    std::vector<Tree> pop;
    pop.reserve(static_cast<std::size_t>(size));
    for (const auto& slot : rampSchedule(size)) {
        int d = slot.depth;
        while (d <= config_.maxDepth && !canProduce(grow_, target, d)) ++d;
        if (d > config_.maxDepth) throw UnproducibleError("no program of type " + target.str() + " fits the depth limit");
        pop.push_back(slot.method == Method::Full ? full(target, d, rng) : grow(target, d, rng));
    }
    return pop;
}

}  // namespace tgp
