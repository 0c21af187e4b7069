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

// Command-line front end: run experiments, list benchmarks, refine and
// evaluate individual programs.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgp/experiment.hpp"
#include "tgp/render.hpp"

namespace {

using namespace tgp;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Tree text given inline or as a path to a file.
std::string treeText(const std::string& arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return slurp(arg);
    return arg;
}

std::vector<Type> argTypesOf(const std::vector<Value>& args)
{
    std::vector<Type> out;
    for (const auto& v : args) {
        auto t = v.inferType();
        if (!t) throw std::runtime_error("cannot infer the type of argument " + v.str() + "; pass --problem");
        out.push_back(*t);
    }
    return out;
}

std::string typesString(const std::vector<Type>& ts)
{
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + ts[i].str();
    return s;
}

int cmdRun(const std::string& configPath, bool quiet)
{
    ExperimentConfig cfg;
    try {
        cfg = loadConfig(configPath);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\nrecognized keys:\n" << configKeysHelp();
        return 2;
    }
    ExperimentReport report = runExperiment(cfg, quiet ? nullptr : &std::cerr);
    std::cout << reportText(report);
    if (!cfg.outputDirectory.empty()) std::cout << "\nreports written to " << cfg.outputDirectory << '\n';
    return 0;
}

int cmdBench(bool list, const std::string& show, const std::string& exportDir, std::uint64_t seed)
{
    if (list) {
        for (const auto& b : listBenchmarks()) {
            std::cout << std::left << std::setw(28) << b.name << '(' << typesString(b.argTypes) << ") -> "
                      << b.outputType.str() << "  [" << metricName(b.metric.kind) << ", " << b.nTrain << '/'
                      << b.nTest << "]\n";
        }
    }
    if (!show.empty()) {
        const auto& b = findBenchmark(show);
        std::cout << "name:     " << b.name << "\ninputs:   " << typesString(b.argTypes) << "\noutput:   "
                  << b.outputType.str() << "\nmetric:   " << metricName(b.metric.kind) << "\nuniverse: ";
        for (std::size_t i = 0; i < b.universe.types.size(); ++i) std::cout << (i ? ", " : "") << b.universe.types[i].str();
        std::cout << "\ncases:    " << b.nTrain << " train, " << b.nTest << " test\nsolution: " << b.solution
                  << "\nsource:   " << renderSource(solutionTree(b), b);
        if (!exportDir.empty()) {
            Dataset d = generateDataset(b, seed);
            std::filesystem::create_directories(exportDir);
            std::ofstream train(std::filesystem::path(exportDir) / (b.name + ".train.jsonl"));
            writeCasesJsonl(train, d.train);
            std::ofstream test(std::filesystem::path(exportDir) / (b.name + ".test.jsonl"));
            writeCasesJsonl(test, d.test);
            std::cout << "datasets written to " << exportDir << '\n';
        }
    }
    return 0;
}

int cmdRefine(const std::string& treeArg, const std::string& dataPath, const std::string& problem,
              const std::string& lawsPath)
{
    std::ifstream in(dataPath);
    if (!in) throw std::runtime_error("cannot read " + dataPath);
    auto cases = readCasesJsonl(in);
    if (cases.empty()) throw std::runtime_error("no cases in " + dataPath);
    std::vector<Type> argTypes = problem.empty() ? argTypesOf(cases.front().args) : findBenchmark(problem).argTypes;
    Tree tree = parseTree(treeText(treeArg), argTypes);
    typeOf(tree, argTypes, tree.type());
    auto laws = lawsPath.empty() ? defaultLaws() : parseLaws(slurp(lawsPath));
    Tree refined = refine(tree, cases, laws);
    std::cout << toSExpr(refined) << '\n';
    std::cerr << "nodes " << nodeCount(tree) << " -> " << nodeCount(refined) << ", accuracy "
              << accuracyOf(tree, cases, {}) << " -> " << accuracyOf(refined, cases, {}) << '\n';
    return 0;
}

int cmdEval(const std::string& treeArg, const std::string& argsJson)
{
    auto parsed = nlohmann::json::parse(argsJson);
    if (!parsed.is_array()) throw std::runtime_error("--args must be a JSON array of tagged values");
    std::vector<Value> args;
    for (const auto& a : parsed) args.push_back(valueFromJson(a.dump()));
    Tree tree = parseTree(treeText(treeArg), argTypesOf(args));
    EvalResult r = evaluate(tree, args);
    if (!r.ok()) {
        std::cout << r.str() << '\n';
        return 1;
    }
    std::cout << valueToJson(r.value()) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Typed genetic programming for program synthesis"};
    app.require_subcommand(1);

    std::string configPath;
    bool quiet = false;
    auto* run = app.add_subcommand("run", "Run an experiment described by a config file");
    run->add_option("--config", configPath, "key = value configuration file")->required();
    run->add_flag("--quiet", quiet, "Suppress per-run progress lines");

    bool list = false;
    std::string show, exportDir;
    std::uint64_t seed = 1;
    auto* bench = app.add_subcommand("bench", "Inspect the benchmark problems");
    bench->add_flag("--list", list, "List every problem");
    bench->add_option("--show", show, "Describe one problem");
    bench->add_option("--export", exportDir, "With --show, write train/test JSONL files here");
    bench->add_option("--seed", seed, "Data seed for --export");

    std::string treeArg, dataPath, problem, lawsPath, argsJson;
    auto* refineCmd = app.add_subcommand("refine", "Simplify a program against a dataset");
    refineCmd->add_option("--tree", treeArg, "s-expression file (or inline text)")->required();
    refineCmd->add_option("--data", dataPath, "JSONL cases")->required();
    refineCmd->add_option("--problem", problem, "Take argument types from this problem");
    refineCmd->add_option("--laws", lawsPath, "Rewrite rules file");

    auto* evalCmd = app.add_subcommand("eval", "Evaluate a program on one input");
    evalCmd->add_option("--tree", treeArg, "s-expression (or a file holding one)")->required();
    evalCmd->add_option("--args", argsJson, R"(JSON array, e.g. '[{"Int": 3}, {"List": [{"Int": 1}]}]')")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run) return cmdRun(configPath, quiet);
        if (*bench) {
            if (!list && show.empty()) {
                std::cerr << "bench: pass --list or --show NAME\n";
                return 2;
            }
            return cmdBench(list, show, exportDir, seed);
        }
        if (*refineCmd) return cmdRefine(treeArg, dataPath, problem, lawsPath);
        if (*evalCmd) return cmdEval(treeArg, argsJson);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
