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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpmul {

/// Raised when a caller breaks an operation's precondition (bad width,
/// out-of-range index, non-one-hot ring state, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Count = std::uint64_t;

/// Fixed-width unsigned bit vector, 1..64 bits. LSB is bit 0.
///
/// The value is masked to the width on construction and by every
/// operation, so `value() < 2^width()` always holds.
class Word {
 public:
  static constexpr unsigned kMaxWidth = 64;

  Word(std::uint64_t value, unsigned width);

  /// All-zero word of the given width.
  static Word zero(unsigned width) { return Word(0, width); }

  std::uint64_t value() const { return value_; }
  unsigned width() const { return width_; }

  /// Bit i, LSB = 0. Throws ContractViolation if i >= width.
  bool bit(unsigned i) const;

  /// Copy with bit i set to `on`.
  Word with_bit(unsigned i, bool on) const;

  Word shifted_right(unsigned k = 1) const;
  Word shifted_left(unsigned k = 1) const;

  unsigned popcount() const;

  /// Binary string, MSB first, exactly width() characters.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t value_;
  unsigned width_;
};

/// Mask with the low `width` bits set (width in 0..64).
constexpr std::uint64_t low_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Smallest k with 2^k >= n, but never less than 1 (a counter needs a flop).
unsigned ceil_log2(unsigned n);

bool get_bit(const Word& w, unsigned i);

/// Number of differing bit positions. Widths must match.
Count hamming(const Word& a, const Word& b);

struct FullAddResult {
  bool sum;
  bool cout;
};

constexpr FullAddResult full_add(bool a, bool b, bool cin) {
  return {static_cast<bool>(a ^ b ^ cin),
          static_cast<bool>((a && b) || (a && cin) || (b && cin))};
}

/// Steady-state internal signals of an n-stage ripple-carry adder:
/// the sum output and the carry output of every full adder.
struct AdderState {
  Word sum_bits;
  Word carry_bits;

  explicit AdderState(unsigned width)
      : sum_bits(Word::zero(width)), carry_bits(Word::zero(width)) {}

  unsigned width() const { return sum_bits.width(); }

  friend bool operator==(const AdderState&, const AdderState&) = default;
};

struct AddResult {
  Word sum;
  bool cout;
  /// Internal signal flips relative to the previous steady state.
  Count transitions;
  AdderState state;
};

/// Evaluates the full-adder chain stage by stage. Switching is measured as
/// the Hamming distance between the previous and the new sum and carry
/// vectors (zero-delay model, glitches ignored).
AddResult ripple_carry_add(const AdderState& state, const Word& x,
                           const Word& y, bool cin);

}  // namespace lpmul
