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

#ifndef TGP_RENDER_HPP
#define TGP_RENDER_HPP

#include <string>

#include "tgp/benchmarks.hpp"

namespace tgp {

/// Haskell source for the program, e.g.
///   solution x0 x1 x2 = min (max (min x2 x1) x0) (max x1 x2)
/// A `where` clause defining `range` is appended when Range occurs.
std::string renderSource(const Tree& tree, const BenchmarkSpec& spec);
/// Right-hand side only.
std::string renderExpression(const Tree& tree);

}  // namespace tgp

#endif  // TGP_RENDER_HPP
