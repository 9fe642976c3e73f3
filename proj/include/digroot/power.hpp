// Copyright 2026 The digroot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIGROOT_POWER_HPP
#define DIGROOT_POWER_HPP

#include <cstdint>

#include "digroot/digraph.hpp"

namespace digroot {

/// D^k: arc a->b iff some walk of exactly k steps runs from a to b.
///
/// Computed as the Boolean k-th power of the adjacency matrix by repeated
/// squaring. Throws InvalidArgument for k = 0.
Digraph power(const Digraph& d, std::uint64_t k);

/// Reference implementation of D^k that expands each source vertex one step
/// at a time, k times, over the adjacency lists. Shares no code with
/// power(); intended for cross-checking at small k.
Digraph walk_power_oracle(const Digraph& d, std::uint64_t k);

/// True iff power(root, k) == d. Throws InvalidArgument when the vertex
/// counts differ or k = 0.
bool verify_root(const Digraph& root, std::uint64_t k, const Digraph& d);

}  // namespace digroot

#endif  // DIGROOT_POWER_HPP
