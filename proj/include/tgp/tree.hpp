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

#ifndef TGP_TREE_HPP
#define TGP_TREE_HPP

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgp/grammar.hpp"
#include "tgp/types.hpp"
#include "tgp/value.hpp"

namespace tgp {

enum class NodeKind : std::uint8_t { Apply, Arg, Const, Lambda, Param };

class Tree;

/// Child indices from the root.
using Path = std::vector<int>;

std::string pathString(const Path& path);

/// Immutable program tree with shared subtrees.
class Tree {
public:
    Tree() = default;
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static Tree apply(SignaturePtr sig, std::vector<Tree> children);
    static Tree apply(const Signature& sig, std::vector<Tree> children);
    static Tree arg(int index, Type type);
    static Tree constant(Value value, Type type);
    static Tree lambda(Type paramType, Tree body);
    static Tree param(Type type);
    /// `\y -> y` at `t`.
    static Tree identity(const Type& t);

    bool empty() const noexcept { return !node_; }
    const Node& node() const { return *node_; }
    const std::shared_ptr<const Node>& ptr() const noexcept { return node_; }

    NodeKind kind() const;
    /// Output type; for a lambda, the function type.
    const Type& type() const;
    const std::vector<Tree>& children() const;
    /// Node count; a lambda counts as one node regardless of its body.
    int size() const;
    /// Depth with lambdas as leaves.
    int mainDepth() const;

    friend bool operator==(const Tree& a, const Tree& b);

private:
    std::shared_ptr<const Node> node_;
};

struct Node {
    NodeKind kind = NodeKind::Const;
    Type type;
    SignaturePtr sig;            // Apply
    std::vector<Tree> children;  // Apply arguments; Lambda: {body}
    int argIndex = -1;           // Arg
    Value value;                 // Const
    int size = 1;
    int mainDepth = 0;
};

class TypeError : public std::runtime_error {
public:
    TypeError(Path path, std::string expected, std::string actual, const std::string& what);

    const Path& path() const noexcept { return path_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& actual() const noexcept { return actual_; }

private:
    Path path_;
    std::string expected_;
    std::string actual_;
};

/// Validates every typing and lambda invariant and returns the output type.
/// Throws TypeError naming the offending node.
Type typeOf(const Tree& tree);
/// Same checks, also requiring the root to have `expected` and argument
/// references to agree with `argTypes`.
Type typeOf(const Tree& tree, std::span<const Type> argTypes, const Type& expected);

/// Counts every node; a lambda counts one.
int nodeCount(const Tree& tree);
/// Leaves are 0; Apply and Lambda are one more than their deepest child.
int depth(const Tree& tree);
/// Depth of the main program with lambdas treated as leaves.
int mainDepth(const Tree& tree);
/// Deepest lambda body anywhere in the tree, or -1 without lambdas.
int maxLambdaBodyDepth(const Tree& tree);
bool withinDepthLimits(const Tree& tree, int maxDepth, int maxLambdaDepth);

const Tree& subtreeAt(const Tree& tree, const Path& path);
Tree replaceAt(const Tree& tree, const Path& path, Tree replacement);

/// A position of the main program; lambdas are single units and are not entered.
struct Position {
    Path path;
    int depth = 0;
    const Tree* subtree = nullptr;
};

/// Main-program positions in pre-order. Pointers stay valid while `tree` lives.
std::vector<Position> mainPositions(const Tree& tree);

bool containsArg(const Tree& tree);
/// True when the tree mentions a lambda parameter not bound inside it.
bool containsFreeParam(const Tree& tree);

}  // namespace tgp

#endif  // TGP_TREE_HPP
