// Copyright 2026 The lpmul Authors
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

#include "lpmul/bitcore.hpp"

#include <bit>

#include <fmt/format.h>

namespace lpmul {

Word::Word(std::uint64_t value, unsigned width) : width_(width) {
  if (width == 0 || width > kMaxWidth) {
    throw ContractViolation(fmt::format("word width {} outside 1..64", width));
  }
  value_ = value & low_mask(width);
}

bool Word::bit(unsigned i) const {
  if (i >= width_) {
    throw ContractViolation(
        fmt::format("bit index {} out of range for width {}", i, width_));
  }
  return (value_ >> i) & 1U;
}

Word Word::with_bit(unsigned i, bool on) const {
  if (i >= width_) {
    throw ContractViolation(
        fmt::format("bit index {} out of range for width {}", i, width_));
  }
  const std::uint64_t m = std::uint64_t{1} << i;
  return Word(on ? (value_ | m) : (value_ & ~m), width_);
}

Word Word::shifted_right(unsigned k) const {
  return Word(k >= 64 ? 0 : value_ >> k, width_);
}

Word Word::shifted_left(unsigned k) const {
  return Word(k >= 64 ? 0 : value_ << k, width_);
}

unsigned Word::popcount() const { return std::popcount(value_); }

std::string Word::to_string() const {
  std::string s(width_, '0');
  for (unsigned i = 0; i < width_; ++i) {
    if ((value_ >> i) & 1U) s[width_ - 1 - i] = '1';
  }
  return s;
}

unsigned ceil_log2(unsigned n) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k == 0 ? 1 : k;
}

bool get_bit(const Word& w, unsigned i) { return w.bit(i); }

Count hamming(const Word& a, const Word& b) {
  if (a.width() != b.width()) {
    throw ContractViolation(fmt::format("hamming: width mismatch {} vs {}",
                                        a.width(), b.width()));
  }
  return std::popcount(a.value() ^ b.value());
}

AddResult ripple_carry_add(const AdderState& state, const Word& x,
                           const Word& y, bool cin) {
  const unsigned n = state.width();
  if (x.width() != n || y.width() != n || state.carry_bits.width() != n) {
    throw ContractViolation(fmt::format(
        "ripple_carry_add: widths x={} y={} adder={}", x.width(), y.width(), n));
  }
  std::uint64_t sum = 0;
  std::uint64_t carries = 0;
  bool carry = cin;
  for (unsigned i = 0; i < n; ++i) {
    const auto fa = full_add(x.bit(i), y.bit(i), carry);
    sum |= std::uint64_t{fa.sum} << i;
    carries |= std::uint64_t{fa.cout} << i;
    carry = fa.cout;
  }
  AdderState next(n);
  next.sum_bits = Word(sum, n);
  next.carry_bits = Word(carries, n);
  const Count flips = hamming(state.sum_bits, next.sum_bits) +
                      hamming(state.carry_bits, next.carry_bits);
  return AddResult{next.sum_bits, carry, flips, next};
}

}  // namespace lpmul
