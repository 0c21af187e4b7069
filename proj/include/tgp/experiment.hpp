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

#ifndef TGP_EXPERIMENT_HPP
#define TGP_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgp/evolution.hpp"
#include "tgp/refinement.hpp"

namespace tgp {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::vector<std::string> benchmarks;
    std::vector<std::uint64_t> seeds;
    /// The run seed also seeds data generation.
    EvolutionConfig evolution;
    /// 0 keeps the benchmark's own size.
    int trainSize = 0;
    int testSize = 0;
    /// Empty: nothing is written.
    std::string outputDirectory;
    /// Empty: built-in law table.
    std::string lawsFile;

    void validate() const;
};

/// `key = value` lines, `#` comments. Throws ConfigError on unknown keys or
/// bad values.
ExperimentConfig parseConfig(std::istream& is);
ExperimentConfig loadConfig(const std::string& path);
/// Every recognized key with its meaning.
std::string configKeysHelp();

struct SeedRecord {
    std::string problem;
    std::uint64_t seed = 0;
    std::int64_t evaluations = 0;
    double trainAccuracyBefore = 0;
    double testAccuracyBefore = 0;
    double trainAccuracyAfter = 0;
    double testAccuracyAfter = 0;
    int nodesBefore = 0;
    int nodesAfter = 0;
    std::string treeBefore;
    std::string treeAfter;
    std::string source;
    double seconds = 0;
    /// Set when the run could not be carried out.
    std::string error;

    bool trainSuccessBefore() const { return error.empty() && trainAccuracyBefore >= 1.0; }
    bool testSuccessBefore() const { return error.empty() && testAccuracyBefore >= 1.0; }
    bool trainSuccessAfter() const { return error.empty() && trainAccuracyAfter >= 1.0; }
    bool testSuccessAfter() const { return error.empty() && testAccuracyAfter >= 1.0; }
};

struct SizeReduction {
    int count = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    /// 1 - geometric mean of after/before.
    double geometricMean = 0;
};

/// Reduction fractions 1 - after/before over records without errors.
SizeReduction sizeReductionStats(const std::vector<SeedRecord>& records);

struct ProblemSummary {
    std::string problem;
    int runs = 0;
    double trainBefore = 0, testBefore = 0, trainAfter = 0, testAfter = 0;  // percentages
    SizeReduction reduction;
};

struct ExperimentReport {
    std::vector<SeedRecord> records;
    std::vector<ProblemSummary> problems;
};

/// Percentages and size statistics recomputed from the records.
std::vector<ProblemSummary> summarize(const std::vector<SeedRecord>& records);

/// Runs every (problem, seed) cell. `log`, when given, receives one line per cell.
ExperimentReport runExperiment(const ExperimentConfig& cfg, std::ostream* log = nullptr);

std::string reportJson(const ExperimentReport& report);
std::string reportText(const ExperimentReport& report);
/// report.json and report.txt under `dir`.
void writeReport(const ExperimentReport& report, const std::string& dir);

}  // namespace tgp

#endif  // TGP_EXPERIMENT_HPP
