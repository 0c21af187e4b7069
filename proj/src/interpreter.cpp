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

#include "tgp/interpreter.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace tgp {

std::string_view errorKindName(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivByZero: return "DivByZero";
    case ErrorKind::ModByZero: return "ModByZero";
    case ErrorKind::EmptyListHead: return "EmptyListHead";
    case ErrorKind::NonFiniteFloat: return "NonFiniteFloat";
    case ErrorKind::ZeroStepRange: return "ZeroStepRange";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    }
    return "?";
}

std::string RuntimeError::str() const
{
    return std::string(errorKindName(kind)) + " at " + pathString(path);
}

std::string EvalResult::str() const
{
    return ok() ? value().str() : "error:" + std::string(errorKindName(error().kind));
}

namespace {

struct Failure {
    ErrorKind kind;
};

std::int32_t wrap(std::int64_t v)
{
    return static_cast<std::int32_t>(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v)));
}

std::int32_t floorDiv(std::int32_t a, std::int32_t b)
{
    if (b == -1) return wrap(-static_cast<std::int64_t>(a));
    std::int32_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int32_t floorMod(std::int32_t a, std::int32_t b)
{
    if (b == -1) return 0;
    std::int32_t r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

bool isLetter(char32_t c)
{
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
    // Latin-1 letters; the generators only produce ASCII.
    return c >= 0xC0 && c <= 0xFF && c != 0xD7 && c != 0xF7;
}

class Evaluator {
public:
    Evaluator(std::span<const Value> args, const EvalBudget& budget) : args_(args), budget_(budget) {}

    EvalResult run(const Tree& t)
    {
        try {
            return eval(t);
        } catch (const Failure& f) {
            return RuntimeError{f.kind, path_};
        }
    }

private:
    void step(std::int64_t n = 1)
    {
        steps_ += n;
        if (steps_ > budget_.maxSteps) throw Failure{ErrorKind::ResourceExhausted};
    }

    void checkLength(std::size_t n)
    {
        if (n > budget_.maxListLength) throw Failure{ErrorKind::ResourceExhausted};
        step(static_cast<std::int64_t>(n));
    }

    static Value finite(float f)
    {
        if (!std::isfinite(f)) throw Failure{ErrorKind::NonFiniteFloat};
        return Value::Float(f);
    }

    Value child(const Node& n, int i)
    {
        path_.push_back(i);
        Value v = eval(n.children[static_cast<std::size_t>(i)]);
        path_.pop_back();
        return v;
    }

    Value applyClosure(const Value& fn, const Value& arg)
    {
        const Node& lam = *fn.closure();
        params_.push_back(arg);
        path_.push_back(0);
        Value v = eval(lam.children[0]);
        path_.pop_back();
        params_.pop_back();
        return v;
    }

    Value eval(const Tree& t)
    {
        step();
        const Node& n = t.node();
        switch (n.kind) {
        case NodeKind::Const: return n.value;
        case NodeKind::Arg: return args_[static_cast<std::size_t>(n.argIndex)];
        case NodeKind::Param: return params_.back();
        case NodeKind::Lambda: return Value::Closure(t.ptr());
        case NodeKind::Apply: return applyOp(n);
        }
        return Value();
    }

    Value applyOp(const Node& n)
    {
        const Op op = n.sig->op;
        if (op == Op::If) {
            bool cond = child(n, 0).asBool();
            return child(n, cond ? 1 : 2);
        }
        if (op == Op::Map || op == Op::Filter) {
            Value fn = child(n, 0);
            Value list = child(n, 1);
            std::vector<Value> out;
            out.reserve(list.items().size());
            path_.push_back(0);
            for (const auto& x : list.items()) {
                Value r = applyClosure(fn, x);
                if (op == Op::Map) out.push_back(std::move(r));
                else if (r.asBool()) out.push_back(x);
            }
            path_.pop_back();
            checkLength(out.size());
            return Value::List(std::move(out));
        }

        std::array<Value, 3> a;
        for (std::size_t i = 0; i < n.children.size(); ++i) a[i] = child(n, static_cast<int>(i));

        switch (op) {
        case Op::AddInt: return Value::Int(wrap(std::int64_t{a[0].asInt()} + a[1].asInt()));
        case Op::SubInt: return Value::Int(wrap(std::int64_t{a[0].asInt()} - a[1].asInt()));
        case Op::MultInt: return Value::Int(wrap(std::int64_t{a[0].asInt()} * a[1].asInt()));
        case Op::DivInt:
            if (a[1].asInt() == 0) throw Failure{ErrorKind::DivByZero};
            return Value::Int(floorDiv(a[0].asInt(), a[1].asInt()));
        case Op::ModInt:
            if (a[1].asInt() == 0) throw Failure{ErrorKind::ModByZero};
            return Value::Int(floorMod(a[0].asInt(), a[1].asInt()));
        case Op::MaxInt: return Value::Int(std::max(a[0].asInt(), a[1].asInt()));
        case Op::MinInt: return Value::Int(std::min(a[0].asInt(), a[1].asInt()));
        case Op::Not: return Value::Bool(!a[0].asBool());
        case Op::And: return Value::Bool(a[0].asBool() && a[1].asBool());
        case Op::Or: return Value::Bool(a[0].asBool() || a[1].asBool());
        case Op::Sqrt: return finite(std::sqrt(a[0].asFloat()));
        case Op::AddFloat: return finite(a[0].asFloat() + a[1].asFloat());
        case Op::SubFloat: return finite(a[0].asFloat() - a[1].asFloat());
        case Op::MultFloat: return finite(a[0].asFloat() * a[1].asFloat());
        case Op::DivFloat:
            if (a[1].asFloat() == 0.0f) throw Failure{ErrorKind::NonFiniteFloat};
            return finite(a[0].asFloat() / a[1].asFloat());
        case Op::Singleton: return Value::List({a[0]});
        case Op::Cons: {
            const auto& tail = a[1].items();
            checkLength(tail.size() + 1);
            std::vector<Value> out;
            out.reserve(tail.size() + 1);
            out.push_back(a[0]);
            out.insert(out.end(), tail.begin(), tail.end());
            return Value::List(std::move(out));
        }
        case Op::Head:
            if (a[0].items().empty()) throw Failure{ErrorKind::EmptyListHead};
            return a[0].items().front();
        case Op::Reverse: {
            const auto& xs = a[0].items();
            step(static_cast<std::int64_t>(xs.size()));
            return Value::List(std::vector<Value>(xs.rbegin(), xs.rend()));
        }
        case Op::Concat: {
            std::size_t total = 0;
            for (const auto& xs : a[0].items()) total += xs.items().size();
            checkLength(total);
            std::vector<Value> out;
            out.reserve(total);
            for (const auto& xs : a[0].items()) out.insert(out.end(), xs.items().begin(), xs.items().end());
            return Value::List(std::move(out));
        }
        case Op::ToPair: return Value::Pair(a[0], a[1]);
        case Op::Fst: return a[0].first();
        case Op::Snd: return a[0].second();
        case Op::EqChar: return Value::Bool(a[0].asChar() == a[1].asChar());
        case Op::IsLetter: return Value::Bool(isLetter(a[0].asChar()));
        case Op::IsDigit: return Value::Bool(a[0].asChar() >= '0' && a[0].asChar() <= '9');
        case Op::IntToFloat: return Value::Float(static_cast<float>(a[0].asInt()));
        case Op::Floor: {
            double f = std::floor(static_cast<double>(a[0].asFloat()));
            if (f < std::numeric_limits<std::int32_t>::min() || f > std::numeric_limits<std::int32_t>::max())
                throw Failure{ErrorKind::NonFiniteFloat};
            return Value::Int(static_cast<std::int32_t>(f));
        }
        case Op::GtInt: return Value::Bool(a[0].asInt() > a[1].asInt());
        case Op::LtInt: return Value::Bool(a[0].asInt() < a[1].asInt());
        case Op::EqInt: return Value::Bool(a[0].asInt() == a[1].asInt());
        case Op::Len: return Value::Int(static_cast<std::int32_t>(a[0].items().size()));
        case Op::Take: {
            const auto& xs = a[1].items();
            std::int32_t k = a[0].asInt();
            std::size_t n = k <= 0 ? 0 : std::min<std::size_t>(static_cast<std::size_t>(k), xs.size());
            step(static_cast<std::int64_t>(n));
            return Value::List(std::vector<Value>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n)));
        }
        case Op::Range: return range(a[0].asInt(), a[1].asInt(), a[2].asInt());
        case Op::SumInts: {
            std::uint32_t s = 0;
            for (const auto& x : a[0].items()) s += static_cast<std::uint32_t>(x.asInt());
            step(static_cast<std::int64_t>(a[0].items().size()));
            return Value::Int(static_cast<std::int32_t>(s));
        }
        case Op::ProductInts: {
            std::uint32_t p = 1;
            for (const auto& x : a[0].items()) p *= static_cast<std::uint32_t>(x.asInt());
            step(static_cast<std::int64_t>(a[0].items().size()));
            return Value::Int(static_cast<std::int32_t>(p));
        }
        case Op::SumFloats: {
            float s = 0.0f;
            for (const auto& x : a[0].items()) s += x.asFloat();
            step(static_cast<std::int64_t>(a[0].items().size()));
            return finite(s);
        }
        case Op::ProductFloats: {
            float p = 1.0f;
            for (const auto& x : a[0].items()) p *= x.asFloat();
            step(static_cast<std::int64_t>(a[0].items().size()));
            return finite(p);
        }
        case Op::Unlines: {
            std::size_t total = 0;
            for (const auto& line : a[0].items()) total += line.items().size() + 1;
            checkLength(total);
            std::vector<Value> out;
            out.reserve(total);
            for (const auto& line : a[0].items()) {
                out.insert(out.end(), line.items().begin(), line.items().end());
                out.push_back(Value::Char('\n'));
            }
            return Value::List(std::move(out));
        }
        case Op::ShowInt: return Value::String(std::to_string(a[0].asInt()));
        case Op::Zip: {
            const auto& xs = a[0].items();
            const auto& ys = a[1].items();
            std::size_t n = std::min(xs.size(), ys.size());
            checkLength(n);
            std::vector<Value> out;
            out.reserve(n);
            for (std::size_t i = 0; i < n; ++i) out.push_back(Value::Pair(xs[i], ys[i]));
            return Value::List(std::move(out));
        }
        case Op::If:
        case Op::Map:
        case Op::Filter: break;
        }
        return Value();
    }

    Value range(std::int32_t start, std::int32_t stop, std::int32_t stride)
    {
        if (stride == 0) throw Failure{ErrorKind::ZeroStepRange};
        std::int64_t span = std::int64_t{stop} - start;
        if ((stride > 0 && span < 0) || (stride < 0 && span > 0)) return Value::List({});
        std::int64_t count = span / stride + 1;
        if (count > static_cast<std::int64_t>(budget_.maxListLength)) throw Failure{ErrorKind::ResourceExhausted};
        checkLength(static_cast<std::size_t>(count));
        std::vector<Value> out;
        out.reserve(static_cast<std::size_t>(count));
        for (std::int64_t i = 0; i < count; ++i) out.push_back(Value::Int(static_cast<std::int32_t>(start + i * stride)));
        return Value::List(std::move(out));
    }

    std::span<const Value> args_;
    const EvalBudget& budget_;
    std::int64_t steps_ = 0;
    Path path_;
    std::vector<Value> params_;
};

}  // namespace

EvalResult evaluate(const Tree& tree, std::span<const Value> args, const EvalBudget& budget)
{
    return Evaluator(args, budget).run(tree);
}

}  // namespace tgp
