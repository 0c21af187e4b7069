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

#ifndef TGP_EVOLUTION_HPP
#define TGP_EVOLUTION_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tgp/benchmarks.hpp"
#include "tgp/generator.hpp"

namespace tgp {

struct Individual {
    Tree tree;
    Fitness fitness = Fitness::worst();
    double accuracy = 0.0;
    int nodes = 0;
    /// Creation index; smaller is older.
    std::int64_t age = 0;
};

/// Ranking order: fitness, then node count, then age.
bool rankedBefore(const Individual& a, const Individual& b);

struct EvolutionConfig {
    int populationSize = 1000;
    double parentScalar = 0.9993;
    std::int64_t maxEvaluations = 300000;
    double crossoverRate = 0.5;
    double mutationRate = 0.5;
    int replacementsPerStep = 2;
    /// When set, an offspring enters only if it ranks above a current member.
    bool replaceOnlyIfBetter = false;
    std::uint64_t seed = 1;
    GenConfig gen;
    EvalBudget budget;

    void validate() const;
};

struct TraceRow {
    std::int64_t evaluation = 0;
    Fitness bestFitness = Fitness::worst();
    double bestAccuracy = 0.0;
};

struct RunResult {
    Individual best;
    std::int64_t evaluations = 0;
    bool solvedTrain = false;
    /// One row after initialization, one per improvement of the best, one at the end.
    std::vector<TraceRow> trace;
};

void rankPopulation(std::vector<Individual>& pop);

/// Rank index drawn with probability proportional to parentScalar^n.
std::size_t selectParentIndex(std::size_t populationSize, double parentScalar, Rng& rng);
const Individual& selectParent(std::span<const Individual> ranked, double parentScalar, Rng& rng);

/// Subtree crossover restricted to equal output types; returns `a` when no
/// type-compatible point exists or the child breaks the depth limit.
Tree crossover(const Tree& a, const Tree& b, int maxDepth, Rng& rng);
/// Replaces a uniformly chosen main-program node with a fresh grow subtree
/// (or a fresh lambda when the node is a lambda).
Tree mutate(const Tree& a, const Generator& gen, Rng& rng);

/// Steady-state evolution on the training cases. `seeds` join the initial
/// population ahead of generated trees.
RunResult run(const Generator& gen, std::span<const Case> train, const Metric& metric, const EvolutionConfig& cfg,
              std::span<const Tree> seeds = {});
/// Builds the grammar and generator for `spec`, then runs on `data.train`.
RunResult run(const BenchmarkSpec& spec, const Dataset& data, const EvolutionConfig& cfg, std::span<const Tree> seeds = {});

/// Generator for a benchmark: monomorphized catalog plus the problem literals.
Generator makeGenerator(const BenchmarkSpec& spec, GenConfig gen);

void writeTraceCsv(std::ostream& os, std::span<const TraceRow> trace);

}  // namespace tgp

#endif  // TGP_EVOLUTION_HPP
