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

#include "tgp/tree.hpp"

#include <algorithm>

namespace tgp {

std::string pathString(const Path& path)
{
    std::string s = "/";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += '/';
        s += std::to_string(path[i]);
    }
    return s;
}

Tree Tree::apply(SignaturePtr sig, std::vector<Tree> children)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Apply;
    n->type = sig->ret;
    n->sig = std::move(sig);
    int size = 1;
    int d = 0;
    for (const auto& c : children) {
        size += c.size();
        d = std::max(d, c.mainDepth() + 1);
    }
    n->children = std::move(children);
    n->size = size;
    n->mainDepth = d;
    return Tree(std::move(n));
}

Tree Tree::apply(const Signature& sig, std::vector<Tree> children)
{
    return apply(std::make_shared<const Signature>(sig), std::move(children));
}

Tree Tree::arg(int index, Type type)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Arg;
    n->argIndex = index;
    n->type = std::move(type);
    return Tree(std::move(n));
}

Tree Tree::constant(Value value, Type type)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Const;
    n->value = std::move(value);
    n->type = std::move(type);
    return Tree(std::move(n));
}

Tree Tree::lambda(Type paramType, Tree body)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Lambda;
    n->type = Type::Fun(std::move(paramType), body.type());
    n->children.push_back(std::move(body));
    return Tree(std::move(n));
}

Tree Tree::param(Type type)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Param;
    n->type = std::move(type);
    return Tree(std::move(n));
}

Tree Tree::identity(const Type& t)
{
    return lambda(t, param(t));
}

NodeKind Tree::kind() const { return node_->kind; }
const Type& Tree::type() const { return node_->type; }
const std::vector<Tree>& Tree::children() const { return node_->children; }
int Tree::size() const { return node_->size; }
int Tree::mainDepth() const { return node_->mainDepth; }

bool operator==(const Tree& a, const Tree& b)
{
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind || x.size != y.size || !(x.type == y.type)) return false;
    switch (x.kind) {
    case NodeKind::Apply:
        if (x.sig->op != y.sig->op || x.sig->params != y.sig->params) return false;
        break;
    case NodeKind::Arg: return x.argIndex == y.argIndex;
    case NodeKind::Const: return x.value == y.value;
    case NodeKind::Param: return true;
    case NodeKind::Lambda: break;
    }
    return x.children == y.children;
}

TypeError::TypeError(Path path, std::string expected, std::string actual, const std::string& what)
    : std::runtime_error("type error at " + pathString(path) + ": " + what +
                         (expected.empty() ? "" : " (expected " + expected + ", got " + actual + ")")),
      path_(std::move(path)),
      expected_(std::move(expected)),
      actual_(std::move(actual))
{
}

namespace {

// True when `t` uses the parameter of the lambda whose body it is part of,
// not counting parameters of lambdas nested inside it.
bool usesOwnParam(const Tree& t)
{
    switch (t.kind()) {
    case NodeKind::Param: return true;
    case NodeKind::Lambda: return false;
    default:
        return std::any_of(t.children().begin(), t.children().end(), [](const Tree& c) { return usesOwnParam(c); });
    }
}

bool isIdentity(const Tree& t)
{
    return t.kind() == NodeKind::Lambda && t.children()[0].kind() == NodeKind::Param &&
           t.type().arg() == t.type().ret() && t.children()[0].type() == t.type().arg();
}

class Checker {
public:
    explicit Checker(std::span<const Type> argTypes, bool checkArgs) : argTypes_(argTypes), checkArgs_(checkArgs) {}

    Type check(const Tree& t)
    {
        const Node& n = t.node();
        switch (n.kind) {
        case NodeKind::Apply: return checkApply(t);
        case NodeKind::Arg:
            if (!lambdaParams_.empty()) fail("argument reference inside a lambda body");
            if (!n.type.isConcrete() || !n.type.isData()) fail("argument of non-data type " + n.type.str());
            if (checkArgs_) {
                if (n.argIndex < 0 || n.argIndex >= static_cast<int>(argTypes_.size()))
                    fail("argument index " + std::to_string(n.argIndex) + " out of range");
                if (!(argTypes_[n.argIndex] == n.type)) mismatch(argTypes_[n.argIndex], n.type, "argument type");
            }
            return n.type;
        case NodeKind::Const:
            if (!n.type.isConcrete() || !n.type.isData()) fail("constant of non-data type " + n.type.str());
            if (!n.value.hasType(n.type)) fail("constant " + n.value.str() + " is not a " + n.type.str());
            return n.type;
        case NodeKind::Param:
            if (lambdaParams_.empty()) fail("lambda parameter outside a lambda");
            if (!(lambdaParams_.back() == n.type)) mismatch(lambdaParams_.back(), n.type, "lambda parameter");
            return n.type;
        case NodeKind::Lambda: return checkLambda(t);
        }
        fail("unknown node kind");
    }

private:
    Type checkApply(const Tree& t)
    {
        const Node& n = t.node();
        if (!n.sig) fail("application without a signature");
        const Signature& sig = *n.sig;
        Bindings bindings;
        const auto& symbol = symbolFor(sig.op);
        bool instance = symbol.params.size() == sig.params.size() && match(symbol.ret, sig.ret, bindings);
        for (std::size_t i = 0; instance && i < sig.params.size(); ++i)
            instance = match(symbol.params[i], sig.params[i], bindings);
        if (!instance || !sig.ret.isConcrete()) fail(sig.str() + " is not an instance of " + std::string(sig.name()));
        if (n.children.size() != sig.arity())
            mismatch(std::to_string(sig.arity()) + " children", std::to_string(n.children.size()) + " children",
                     "arity of " + std::string(sig.name()));
        if (!(n.type == sig.ret)) mismatch(sig.ret, n.type, "node type");
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            path_.push_back(static_cast<int>(i));
            Type actual = check(n.children[i]);
            if (!(actual == sig.params[i])) mismatch(sig.params[i], actual, "argument of " + std::string(sig.name()));
            path_.pop_back();
        }
        return sig.ret;
    }

    Type checkLambda(const Tree& t)
    {
        const Node& n = t.node();
        if (n.children.size() != 1 || !n.type.isFunction()) fail("malformed lambda");
        if (!n.type.arg().isData() || !n.type.ret().isData()) fail("lambda over function types");
        if (!lambdaParams_.empty() && !isIdentity(t)) fail("nested lambda must be the identity");
        if (!usesOwnParam(n.children[0])) fail("lambda body ignores its parameter");
        lambdaParams_.push_back(n.type.arg());
        path_.push_back(0);
        Type body = check(n.children[0]);
        path_.pop_back();
        lambdaParams_.pop_back();
        if (!(body == n.type.ret())) mismatch(n.type.ret(), body, "lambda body");
        return n.type;
    }

    [[noreturn]] void fail(const std::string& what) { throw TypeError(path_, "", "", what); }

    [[noreturn]] void mismatch(const Type& expected, const Type& actual, const std::string& what)
    {
        mismatch(expected.str(), actual.str(), what);
    }

    [[noreturn]] void mismatch(const std::string& expected, const std::string& actual, const std::string& what)
    {
        throw TypeError(path_, expected, actual, what);
    }

    std::span<const Type> argTypes_;
    bool checkArgs_;
    Path path_;
    std::vector<Type> lambdaParams_;
};

int lambdaBodyDepth(const Tree& t)
{
    int best = -1;
    if (t.kind() == NodeKind::Lambda) best = depth(t.children()[0]);
    for (const auto& c : t.children()) best = std::max(best, lambdaBodyDepth(c));
    return best;
}

void collectPositions(const Tree& t, Path& path, int d, std::vector<Position>& out)
{
    out.push_back({path, d, &t});
    if (t.kind() == NodeKind::Lambda) return;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        collectPositions(t.children()[i], path, d + 1, out);
        path.pop_back();
    }
}

bool freeParam(const Tree& t, int binders)
{
    switch (t.kind()) {
    case NodeKind::Param: return binders == 0;
    case NodeKind::Lambda: return freeParam(t.children()[0], binders + 1);
    default:
        return std::any_of(t.children().begin(), t.children().end(),
                           [&](const Tree& c) { return freeParam(c, binders); });
    }
}

Tree replaceRec(const Tree& tree, const Path& path, std::size_t k, Tree replacement)
{
    if (k == path.size()) return replacement;
    const Node& n = tree.node();
    auto idx = static_cast<std::size_t>(path[k]);
    if (idx >= n.children.size()) throw std::out_of_range("path " + pathString(path) + " leaves the tree");
    std::vector<Tree> children = n.children;
    children[idx] = replaceRec(children[idx], path, k + 1, std::move(replacement));
    switch (n.kind) {
    case NodeKind::Apply: return Tree::apply(n.sig, std::move(children));
    case NodeKind::Lambda: return Tree::lambda(n.type.arg(), std::move(children[0]));
    default: throw std::logic_error("leaf node with children");
    }
}

}  // namespace

Type typeOf(const Tree& tree)
{
    return Checker({}, false).check(tree);
}

Type typeOf(const Tree& tree, std::span<const Type> argTypes, const Type& expected)
{
    Type t = Checker(argTypes, true).check(tree);
    if (!(t == expected)) throw TypeError({}, expected.str(), t.str(), "program output type");
    return t;
}

int nodeCount(const Tree& tree)
{
    return tree.size();
}

int depth(const Tree& tree)
{
    int d = 0;
    for (const auto& c : tree.children()) d = std::max(d, depth(c) + 1);
    return d;
}

int mainDepth(const Tree& tree)
{
    return tree.mainDepth();
}

int maxLambdaBodyDepth(const Tree& tree)
{
    return lambdaBodyDepth(tree);
}

bool withinDepthLimits(const Tree& tree, int maxDepth, int maxLambdaDepth)
{
    return tree.mainDepth() <= maxDepth && lambdaBodyDepth(tree) <= maxLambdaDepth;
}

const Tree& subtreeAt(const Tree& tree, const Path& path)
{
    const Tree* t = &tree;
    for (int i : path) {
        if (i < 0 || static_cast<std::size_t>(i) >= t->children().size())
            throw std::out_of_range("path " + pathString(path) + " leaves the tree");
        t = &t->children()[i];
    }
    return *t;
}

Tree replaceAt(const Tree& tree, const Path& path, Tree replacement)
{
    return replaceRec(tree, path, 0, std::move(replacement));
}

std::vector<Position> mainPositions(const Tree& tree)
{
    std::vector<Position> out;
    out.reserve(tree.size());
    Path path;
    collectPositions(tree, path, 0, out);
    return out;
}

bool containsArg(const Tree& tree)
{
    if (tree.kind() == NodeKind::Arg) return true;
    return std::any_of(tree.children().begin(), tree.children().end(), [](const Tree& c) { return containsArg(c); });
}

bool containsFreeParam(const Tree& tree)
{
    return freeParam(tree, 0);
}

}  // namespace tgp
