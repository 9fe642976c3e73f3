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

#ifndef DIGROOT_BIT_MATRIX_HPP
#define DIGROOT_BIT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace digroot {

/// Square Boolean matrix stored as packed 64-bit row words.
///
/// Bit `c` of row `r` is word `c / 64`, bit `c % 64`. Padding bits past the
/// last column are always zero, so rows can be compared word by word.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  std::span<const Word> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }
  std::span<Word> row(std::size_t r) noexcept {
    return {bits_.data() + r * words_, words_};
  }

  bool row_empty(std::size_t r) const noexcept;
  std::size_t count() const noexcept;

  /// True iff every set bit of `*this` is also set in `other`.
  bool subset_of(const BitMatrix& other) const noexcept;

  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Boolean matrix product: (a*b)[i][j] = OR_l a[i][l] AND b[l][j].
BitMatrix boolean_product(const BitMatrix& a, const BitMatrix& b);

/// a^k by repeated squaring. k = 0 yields the identity.
BitMatrix boolean_power(const BitMatrix& a, std::uint64_t k);

}  // namespace digroot

#endif  // DIGROOT_BIT_MATRIX_HPP
