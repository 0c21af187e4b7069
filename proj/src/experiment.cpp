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

#include "tgp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tgp/render.hpp"

namespace tgp {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string trim(std::string s)
{
    auto notSpace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notSpace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notSpace).base(), s.end());
    return s;
}

std::vector<std::string> splitList(const std::string& v)
{
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <typename T>
T parseNumber(const std::string& key, const std::string& v)
{
    std::istringstream is(v);
    T out{};
    is >> out;
    if (is.fail() || !(is >> std::ws).eof()) throw ConfigError("bad value for " + key + ": " + v);
    return out;
}

bool parseBool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("bad boolean for " + key + ": " + v);
}

std::vector<std::uint64_t> parseSeeds(const std::string& v)
{
    std::vector<std::uint64_t> out;
    for (const auto& item : splitList(v)) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parseNumber<std::uint64_t>("seeds", item));
            continue;
        }
        auto lo = parseNumber<std::uint64_t>("seeds", trim(item.substr(0, dots)));
        auto hi = parseNumber<std::uint64_t>("seeds", trim(item.substr(dots + 2)));
        if (lo > hi) throw ConfigError("empty seed range " + item);
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
    }
    return out;
}

struct Key {
    const char* name;
    const char* help;
    std::function<void(ExperimentConfig&, const std::string&)> set;
};

const std::vector<Key>& keys()
{
    static const std::vector<Key> table = [] {
        std::vector<Key> k;
        auto num = [](auto member, const char* name) {
            return [member, name](ExperimentConfig& c, const std::string& v) {
                using T = std::remove_reference_t<decltype(member(c))>;
                member(c) = parseNumber<T>(name, v);
            };
        };
#define TGP_NUM(name, help, expr) \
    k.push_back({name, help, num([](ExperimentConfig & c) -> auto& { return expr; }, name)})
        k.push_back({"benchmarks", "comma-separated problem names, or 'all'",
                     [](ExperimentConfig& c, const std::string& v) {
                         c.benchmarks.clear();
                         if (v == "all") {
                             for (const auto& b : listBenchmarks()) c.benchmarks.push_back(b.name);
                         } else {
                             c.benchmarks = splitList(v);
                         }
                     }});
        k.push_back({"seeds", "comma-separated seeds; 'a..b' is an inclusive range",
                     [](ExperimentConfig& c, const std::string& v) { c.seeds = parseSeeds(v); }});
        k.push_back({"output_dir", "directory for reports and per-seed artifacts",
                     [](ExperimentConfig& c, const std::string& v) { c.outputDirectory = v; }});
        k.push_back({"laws_file", "rewrite rules file replacing the built-in laws",
                     [](ExperimentConfig& c, const std::string& v) { c.lawsFile = v; }});
        TGP_NUM("train_size", "training cases (0 = problem default)", c.trainSize);
        TGP_NUM("test_size", "test cases (0 = problem default)", c.testSize);
        TGP_NUM("population_size", "individuals in the population", c.evolution.populationSize);
        TGP_NUM("parent_scalar", "rank-selection ratio p(n)/p(n-1)", c.evolution.parentScalar);
        TGP_NUM("max_evaluations", "evaluation budget per run, initialization included", c.evolution.maxEvaluations);
        TGP_NUM("crossover_rate", "probability an offspring comes from crossover", c.evolution.crossoverRate);
        TGP_NUM("mutation_rate", "probability an offspring comes from mutation", c.evolution.mutationRate);
        TGP_NUM("replacements_per_step", "offspring per steady-state step", c.evolution.replacementsPerStep);
        k.push_back({"replace_only_if_better", "offspring enter only when they beat the worst",
                     [](ExperimentConfig& c, const std::string& v) {
                         c.evolution.replaceOnlyIfBetter = parseBool("replace_only_if_better", v);
                     }});
        TGP_NUM("max_depth", "depth limit of the main program", c.evolution.gen.maxDepth);
        TGP_NUM("max_lambda_depth", "depth limit of lambda bodies", c.evolution.gen.maxLambdaDepth);
        TGP_NUM("int_min", "smallest random Int constant", c.evolution.gen.intMin);
        TGP_NUM("int_max", "largest random Int constant", c.evolution.gen.intMax);
        TGP_NUM("float_min", "smallest random Float constant", c.evolution.gen.floatMin);
        TGP_NUM("float_max", "largest random Float constant", c.evolution.gen.floatMax);
        TGP_NUM("list_mean_length", "mean length of random list constants", c.evolution.gen.listMeanLength);
        TGP_NUM("list_max_length", "cap on random list constant length", c.evolution.gen.listMaxLength);
        TGP_NUM("ramp_min", "smallest initial tree depth", c.evolution.gen.rampMin);
        TGP_NUM("ramp_max", "largest initial tree depth", c.evolution.gen.rampMax);
        TGP_NUM("literal_probability", "chance a constant comes from the problem literals",
                c.evolution.gen.literalProbability);
        TGP_NUM("eval_max_steps", "interpreter step budget per case", c.evolution.budget.maxSteps);
        TGP_NUM("eval_max_list_length", "longest list the interpreter may build", c.evolution.budget.maxListLength);
#undef TGP_NUM
        return k;
    }();
    return table;
}

double quantile(const std::vector<double>& sorted, double q)
{
    if (sorted.empty()) return 0.0;
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double percent(int hits, int runs)
{
    return runs == 0 ? 0.0 : 100.0 * hits / runs;
}

std::vector<LawRule> lawsFor(const ExperimentConfig& cfg)
{
    if (cfg.lawsFile.empty()) return defaultLaws();
    std::ifstream in(cfg.lawsFile);
    if (!in) throw ConfigError("cannot read laws file " + cfg.lawsFile);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseLaws(ss.str());
}

json reductionJson(const SizeReduction& r)
{
    return {{"count", r.count}, {"min", r.min},       {"q1", r.q1},
            {"median", r.median}, {"q3", r.q3}, {"max", r.max}, {"geometric_mean", r.geometricMean}};
}

}  // namespace

void ExperimentConfig::validate() const
{
    if (benchmarks.empty()) throw ConfigError("no benchmarks selected");
    for (const auto& b : benchmarks) {
        try {
            findBenchmark(b);
        } catch (const std::out_of_range&) {
            throw ConfigError("unknown benchmark " + b);
        }
    }
    if (seeds.empty()) throw ConfigError("seed list is empty");
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
        throw ConfigError("seed list has duplicates");
    if (trainSize < 0 || testSize < 0) throw ConfigError("dataset sizes must be non-negative");
    try {
        evolution.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

ExperimentConfig parseConfig(std::istream& is)
{
    ExperimentConfig cfg;
    cfg.seeds = {1};
    std::string line;
    int lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineNo) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto it = std::find_if(keys().begin(), keys().end(), [&](const Key& k) { return key == k.name; });
        if (it == keys().end()) throw ConfigError("line " + std::to_string(lineNo) + ": unknown key " + key);
        it->set(cfg, value);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig loadConfig(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path);
    return parseConfig(in);
}

std::string configKeysHelp()
{
    std::ostringstream os;
    for (const auto& k : keys()) os << "  " << std::left << std::setw(24) << k.name << k.help << '\n';
    return os.str();
}

SizeReduction sizeReductionStats(const std::vector<SeedRecord>& records)
{
    std::vector<double> reductions;
    double logSum = 0.0;
    for (const auto& r : records) {
        if (!r.error.empty() || r.nodesBefore <= 0) continue;
        double ratio = static_cast<double>(r.nodesAfter) / r.nodesBefore;
        reductions.push_back(1.0 - ratio);
        logSum += std::log(ratio);
    }
    SizeReduction s;
    s.count = static_cast<int>(reductions.size());
    if (reductions.empty()) return s;
    std::sort(reductions.begin(), reductions.end());
    s.min = reductions.front();
    s.max = reductions.back();
    s.q1 = quantile(reductions, 0.25);
    s.median = quantile(reductions, 0.5);
    s.q3 = quantile(reductions, 0.75);
    s.geometricMean = 1.0 - std::exp(logSum / s.count);
    return s;
}

std::vector<ProblemSummary> summarize(const std::vector<SeedRecord>& records)
{
    std::vector<std::string> order;
    std::map<std::string, std::vector<SeedRecord>> byProblem;
    for (const auto& r : records) {
        if (!byProblem.count(r.problem)) order.push_back(r.problem);
        byProblem[r.problem].push_back(r);
    }
    std::vector<ProblemSummary> out;
    for (const auto& name : order) {
        const auto& rs = byProblem[name];
        ProblemSummary p;
        p.problem = name;
        p.runs = static_cast<int>(rs.size());
        auto count = [&](bool (SeedRecord::*f)() const) {
            return static_cast<int>(std::count_if(rs.begin(), rs.end(), [&](const SeedRecord& r) { return (r.*f)(); }));
        };
        p.trainBefore = percent(count(&SeedRecord::trainSuccessBefore), p.runs);
        p.testBefore = percent(count(&SeedRecord::testSuccessBefore), p.runs);
        p.trainAfter = percent(count(&SeedRecord::trainSuccessAfter), p.runs);
        p.testAfter = percent(count(&SeedRecord::testSuccessAfter), p.runs);
        p.reduction = sizeReductionStats(rs);
        out.push_back(p);
    }
    return out;
}

ExperimentReport runExperiment(const ExperimentConfig& cfg, std::ostream* log)
{
    cfg.validate();
    auto laws = lawsFor(cfg);
    ExperimentReport report;
    for (const auto& name : cfg.benchmarks) {
        const BenchmarkSpec& spec = findBenchmark(name);
        std::optional<Generator> gen;
        std::string setupError;
        try {
            gen.emplace(makeGenerator(spec, cfg.evolution.gen));
        } catch (const std::exception& e) {
            setupError = e.what();
        }
        for (auto seed : cfg.seeds) {
            SeedRecord rec;
            rec.problem = name;
            rec.seed = seed;
            auto start = std::chrono::steady_clock::now();
            try {
                if (!gen) throw UnproducibleError(setupError);
                Dataset data = generateDataset(spec, cfg.trainSize > 0 ? cfg.trainSize : spec.nTrain,
                                               cfg.testSize > 0 ? cfg.testSize : spec.nTest, seed);
                EvolutionConfig ec = cfg.evolution;
                ec.seed = seed;
                RunResult res = run(*gen, data.train, spec.metric, ec);
                const auto& budget = ec.budget;
                Tree before = res.best.tree;
                Tree after = refine(before, data.train, laws, budget);
                rec.evaluations = res.evaluations;
                rec.trainAccuracyBefore = res.best.accuracy;
                rec.testAccuracyBefore = accuracyOf(before, data.test, budget);
                rec.trainAccuracyAfter = accuracyOf(after, data.train, budget);
                rec.testAccuracyAfter = accuracyOf(after, data.test, budget);
                rec.nodesBefore = nodeCount(before);
                rec.nodesAfter = nodeCount(after);
                rec.treeBefore = toSExpr(before);
                rec.treeAfter = toSExpr(after);
                rec.source = renderSource(after, spec);
                if (!cfg.outputDirectory.empty()) {
                    fs::path dir = fs::path(cfg.outputDirectory) / name / std::to_string(seed);
                    fs::create_directories(dir);
                    std::ofstream(dir / "best.sexpr") << rec.treeBefore << '\n';
                    std::ofstream(dir / "refined.sexpr") << rec.treeAfter << '\n';
                    std::ofstream(dir / "solution.hs") << rec.source;
                    std::ofstream trace(dir / "trace.csv");
                    writeTraceCsv(trace, res.trace);
                }
            } catch (const UnproducibleError& e) {
                rec.error = e.what();
            } catch (const GrammarError& e) {
                rec.error = e.what();
            }
            rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (log) {
                *log << name << " seed " << seed;
                if (!rec.error.empty()) {
                    *log << " error: " << rec.error << '\n';
                } else {
                    *log << " evals " << rec.evaluations << " train " << rec.trainAccuracyBefore << " -> "
                         << rec.trainAccuracyAfter << " test " << rec.testAccuracyBefore << " -> " << rec.testAccuracyAfter
                         << " nodes " << rec.nodesBefore << " -> " << rec.nodesAfter << " (" << std::fixed
                         << std::setprecision(1) << rec.seconds << "s)" << std::defaultfloat << '\n';
                }
            }
            report.records.push_back(std::move(rec));
        }
    }
    report.problems = summarize(report.records);
    if (!cfg.outputDirectory.empty()) writeReport(report, cfg.outputDirectory);
    return report;
}

std::string reportJson(const ExperimentReport& report)
{
    json problems = json::array();
    for (const auto& p : report.problems) {
        problems.push_back({{"problem", p.problem},
                            {"runs", p.runs},
                            {"train_success_before", p.trainBefore},
                            {"test_success_before", p.testBefore},
                            {"train_success_after", p.trainAfter},
                            {"test_success_after", p.testAfter},
                            {"size_reduction", reductionJson(p.reduction)}});
    }
    json runs = json::array();
    for (const auto& r : report.records) {
        json j = {{"problem", r.problem}, {"seed", r.seed}, {"seconds", r.seconds}};
        if (!r.error.empty()) {
            j["error"] = r.error;
        } else {
            j.update({{"evaluations", r.evaluations},
                      {"train_accuracy_before", r.trainAccuracyBefore},
                      {"test_accuracy_before", r.testAccuracyBefore},
                      {"train_accuracy_after", r.trainAccuracyAfter},
                      {"test_accuracy_after", r.testAccuracyAfter},
                      {"nodes_before", r.nodesBefore},
                      {"nodes_after", r.nodesAfter},
                      {"tree_before", r.treeBefore},
                      {"tree_after", r.treeAfter},
                      {"source", r.source}});
        }
        runs.push_back(std::move(j));
    }
    return json{{"problems", problems}, {"runs", runs}}.dump(2) + "\n";
}

std::string reportText(const ExperimentReport& report)
{
    std::ostringstream os;
    os << std::left << std::setw(28) << "problem" << std::right << std::setw(6) << "runs" << std::setw(8) << "Tr"
       << std::setw(8) << "Te" << std::setw(8) << "Tr*" << std::setw(8) << "Te*" << std::setw(10) << "red.med"
       << std::setw(10) << "red.geo" << '\n';
    os << std::fixed << std::setprecision(1);
    for (const auto& p : report.problems) {
        os << std::left << std::setw(28) << p.problem << std::right << std::setw(6) << p.runs << std::setw(8)
           << p.trainBefore << std::setw(8) << p.testBefore << std::setw(8) << p.trainAfter << std::setw(8)
           << p.testAfter << std::setw(9) << 100.0 * p.reduction.median << '%' << std::setw(9)
           << 100.0 * p.reduction.geometricMean << '%' << '\n';
    }
    os << "\nTr/Te: percentage of runs whose best program is fully correct on the training/test set.\n"
          "Starred columns are after refinement. red.*: node-count reduction from refinement.\n";
    return os.str();
}

void writeReport(const ExperimentReport& report, const std::string& dir)
{
    fs::create_directories(dir);
    std::ofstream(fs::path(dir) / "report.json") << reportJson(report);
    std::ofstream(fs::path(dir) / "report.txt") << reportText(report);
}

}  // namespace tgp
