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

#ifndef TGP_BENCHMARKS_HPP
#define TGP_BENCHMARKS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tgp/generator.hpp"
#include "tgp/grammar.hpp"
#include "tgp/interpreter.hpp"
#include "tgp/metrics.hpp"

namespace tgp {

struct Case {
    std::vector<Value> args;
    Value expected;
};

struct Dataset {
    std::vector<Case> train;
    std::vector<Case> test;
};

/// A synthesis problem: signature, type universe, error metric, data
/// generation and a reference solution.
struct BenchmarkSpec {
    std::string name;
    std::vector<Type> argTypes;
    Type outputType;
    TypeUniverse universe;
    Metric metric;
    /// Always placed first in the training set.
    std::vector<std::vector<Value>> edgeCases;
    std::function<std::vector<Value>(Rng&)> randomInput;
    std::function<Value(std::span<const Value>)> oracle;
    /// Reference solution in s-expression form.
    std::string solution;
    /// Problem-specific literals offered to the constant generator.
    std::map<Type, std::vector<Value>> literals;
    int nTrain = 100;
    int nTest = 1000;
};

const std::vector<BenchmarkSpec>& listBenchmarks();
/// Throws std::out_of_range for an unknown name.
const BenchmarkSpec& findBenchmark(const std::string& name);

/// Edge cases, then random cases; train and test use disjoint random streams.
Dataset generateDataset(const BenchmarkSpec& spec, int nTrain, int nTest, std::uint64_t dataSeed);
Dataset generateDataset(const BenchmarkSpec& spec, std::uint64_t dataSeed);

/// Parsed and type-checked reference solution.
Tree solutionTree(const BenchmarkSpec& spec);

struct CaseScore {
    Fitness fitness = Fitness::worst();
    double accuracy = 0.0;
};

/// Fitness and accuracy from a single pass over the cases.
CaseScore scoreCases(const Tree& tree, std::span<const Case> cases, const Metric& metric, const EvalBudget& budget);
/// Worst if any case fails at runtime, else the summed metric.
Fitness fitnessOf(const Tree& tree, std::span<const Case> cases, const Metric& metric, const EvalBudget& budget);
/// Fraction of cases evaluated without error and matching the expected output.
double accuracyOf(const Tree& tree, std::span<const Case> cases, const EvalBudget& budget);

// JSON-lines dataset files: {"args": [...], "expected": ...}, values tagged
// as {"Int": 3}, {"Float": 1.5}, {"Bool": true}, {"Char": "a"},
// {"String": "ab"}, {"List": [...]}, {"Pair": [a, b]}.
std::string valueToJson(const Value& v);
Value valueFromJson(const std::string& json);
void writeCasesJsonl(std::ostream& os, std::span<const Case> cases);
std::vector<Case> readCasesJsonl(std::istream& is);

}  // namespace tgp

#endif  // TGP_BENCHMARKS_HPP
