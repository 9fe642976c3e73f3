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

#include "digroot/bit_matrix.hpp"

#include <algorithm>
#include <bit>

namespace digroot {

bool BitMatrix::row_empty(std::size_t r) const noexcept {
  const auto words = row(r);
  return std::all_of(words.begin(), words.end(), [](Word w) { return w == 0; });
}

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitMatrix::subset_of(const BitMatrix& other) const noexcept {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (test(r, c)) t.set(c, r);
    }
  }
  return t;
}

BitMatrix boolean_product(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t words = a.words_per_row();
  BitMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = c.row(i);
    const auto lhs = a.row(i);
    for (std::size_t w = 0; w < words; ++w) {
      BitMatrix::Word bits = lhs[w];
      while (bits != 0) {
        const std::size_t l = w * BitMatrix::kWordBits +
                              static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto rhs = b.row(l);
        for (std::size_t x = 0; x < words; ++x) out[x] |= rhs[x];
      }
    }
  }
  return c;
}

BitMatrix boolean_power(const BitMatrix& a, std::uint64_t k) {
  BitMatrix result = BitMatrix::identity(a.size());
  BitMatrix base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1U) {
      result = first ? base : boolean_product(result, base);
      first = false;
    }
    k >>= 1U;
    if (k > 0) base = boolean_product(base, base);
  }
  return result;
}

}  // namespace digroot
