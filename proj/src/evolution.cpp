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

#include "tgp/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tgp {

namespace {

std::size_t pick(std::size_t n, Rng& rng)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

class Evaluator {
public:
    Evaluator(std::span<const Case> cases, const Metric& metric, const EvalBudget& budget)
        : cases_(cases), metric_(metric), budget_(budget)
    {
    }

    Individual operator()(Tree tree)
    {
        Individual ind;
        CaseScore s = scoreCases(tree, cases_, metric_, budget_);
        ind.fitness = s.fitness;
        ind.accuracy = s.accuracy;
        ind.nodes = nodeCount(tree);
        ind.tree = std::move(tree);
        ind.age = count_++;
        return ind;
    }

    std::int64_t count() const { return count_; }

private:
    std::span<const Case> cases_;
    const Metric& metric_;
    const EvalBudget& budget_;
    std::int64_t count_ = 0;
};

}  // namespace

bool rankedBefore(const Individual& a, const Individual& b)
{
    if (a.fitness < b.fitness) return true;
    if (b.fitness < a.fitness) return false;
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.age < b.age;
}

void EvolutionConfig::validate() const
{
    if (populationSize < 2) throw std::invalid_argument("populationSize must be at least 2");
    if (!(parentScalar > 0.0 && parentScalar < 1.0)) throw std::invalid_argument("parentScalar must lie in (0, 1)");
    if (crossoverRate < 0 || mutationRate < 0 || std::fabs(crossoverRate + mutationRate - 1.0) > 1e-9)
        throw std::invalid_argument("crossoverRate + mutationRate must equal 1");
    if (replacementsPerStep < 1 || replacementsPerStep > populationSize)
        throw std::invalid_argument("replacementsPerStep must lie in [1, populationSize]");
    if (maxEvaluations < populationSize) throw std::invalid_argument("maxEvaluations must cover the initial population");
    gen.validate();
}

void rankPopulation(std::vector<Individual>& pop)
{
    std::stable_sort(pop.begin(), pop.end(), rankedBefore);
}

std::size_t selectParentIndex(std::size_t n, double s, Rng& rng)
{
    if (n == 0) throw std::invalid_argument("cannot select from an empty population");
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double tail = std::pow(s, static_cast<double>(n));
    if (!(s < 1.0) || 1.0 - tail <= 0.0) return std::min(n - 1, static_cast<std::size_t>(u * static_cast<double>(n)));
    double k = std::floor(std::log1p(-u * (1.0 - tail)) / std::log(s));
    if (!(k >= 0.0)) return 0;
    return std::min(n - 1, static_cast<std::size_t>(k));
}

const Individual& selectParent(std::span<const Individual> ranked, double parentScalar, Rng& rng)
{
    return ranked[selectParentIndex(ranked.size(), parentScalar, rng)];
}

Tree crossover(const Tree& a, const Tree& b, int maxDepth, Rng& rng)
{
    auto pa = mainPositions(a);
    const Position& cut = pa[pick(pa.size(), rng)];
    std::vector<const Tree*> donors;
    for (const auto& p : mainPositions(b)) {
        if (p.subtree->type() == cut.subtree->type()) donors.push_back(p.subtree);
    }
    if (donors.empty()) return a;
    Tree child = replaceAt(a, cut.path, *donors[pick(donors.size(), rng)]);
    if (child.mainDepth() > maxDepth) return a;
    return child;
}

Tree mutate(const Tree& a, const Generator& gen, Rng& rng)
{
    auto positions = mainPositions(a);
    const Position& at = positions[pick(positions.size(), rng)];
    const Tree& old = *at.subtree;
    try {
        Tree fresh = old.kind() == NodeKind::Lambda
                         ? gen.lambda(old.type(), rng)
                         : gen.tree(old.type(), gen.config().maxDepth - at.depth, Method::Grow, rng);
        return replaceAt(a, at.path, std::move(fresh));
    } catch (const UnproducibleError&) {
        return a;
    }
}

Generator makeGenerator(const BenchmarkSpec& spec, GenConfig gen)
{
    for (const auto& [t, vs] : spec.literals) {
        auto& dst = gen.literals[t];
        dst.insert(dst.end(), vs.begin(), vs.end());
    }
    auto grammar = std::make_shared<const GrammarInstance>(monomorphize(catalog(), spec.universe));
    return Generator(std::move(grammar), std::move(gen));
}

RunResult run(const Generator& gen, std::span<const Case> train, const Metric& metric, const EvolutionConfig& cfg,
              std::span<const Tree> seeds)
{
    cfg.validate();
    if (train.empty()) throw std::invalid_argument("empty training set");
    Rng rng(cfg.seed);
    Evaluator eval(train, metric, cfg.budget);

    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(cfg.populationSize) + static_cast<std::size_t>(cfg.replacementsPerStep));
    for (const auto& t : seeds) {
        if (static_cast<int>(pop.size()) == cfg.populationSize) break;
        pop.push_back(eval(t));
    }
    int missing = cfg.populationSize - static_cast<int>(pop.size());
    if (missing > 0) {
        auto fresh = gen.initialPopulation(std::max(missing, 2), rng);
        for (int i = 0; i < missing; ++i) pop.push_back(eval(std::move(fresh[static_cast<std::size_t>(i)])));
    }
    rankPopulation(pop);

    RunResult result;
    auto record = [&] { result.trace.push_back({eval.count(), pop.front().fitness, pop.front().accuracy}); };
    record();

    double pCross = cfg.crossoverRate;
    int maxDepth = cfg.gen.maxDepth;
    std::vector<Individual> offspring;
    while (pop.front().accuracy < 1.0 && eval.count() < cfg.maxEvaluations) {
        std::int64_t n = std::min<std::int64_t>(cfg.replacementsPerStep, cfg.maxEvaluations - eval.count());
        const Individual& p1 = selectParent(pop, cfg.parentScalar, rng);
        const Individual& p2 = selectParent(pop, cfg.parentScalar, rng);
        offspring.clear();
        for (std::int64_t i = 0; i < n; ++i) {
            const Individual& x = i % 2 == 0 ? p1 : p2;
            const Individual& y = i % 2 == 0 ? p2 : p1;
            Tree child = std::bernoulli_distribution(pCross)(rng) ? crossover(x.tree, y.tree, maxDepth, rng)
                                                                  : mutate(x.tree, gen, rng);
            offspring.push_back(eval(std::move(child)));
        }
        const Individual previousBest = pop.front();
        if (cfg.replaceOnlyIfBetter) {
            for (auto& o : offspring) pop.push_back(std::move(o));
            rankPopulation(pop);
            pop.resize(static_cast<std::size_t>(cfg.populationSize));
        } else {
            pop.resize(pop.size() - offspring.size());
            for (auto& o : offspring) {
                auto at = std::upper_bound(pop.begin(), pop.end(), o, rankedBefore);
                pop.insert(at, std::move(o));
            }
        }
        if (pop.front().age != previousBest.age) record();
    }
    if (result.trace.back().evaluation != eval.count()) record();

    result.best = pop.front();
    result.evaluations = eval.count();
    result.solvedTrain = result.best.accuracy >= 1.0;
    return result;
}

RunResult run(const BenchmarkSpec& spec, const Dataset& data, const EvolutionConfig& cfg, std::span<const Tree> seeds)
{
    Generator gen = makeGenerator(spec, cfg.gen);
    return run(gen, data.train, spec.metric, cfg, seeds);
}

void writeTraceCsv(std::ostream& os, std::span<const TraceRow> trace)
{
    os << "evaluation,best_fitness,best_accuracy\n";
    for (const auto& r : trace) os << r.evaluation << ',' << r.bestFitness.str() << ',' << r.bestAccuracy << '\n';
}

}  // namespace tgp
