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

#include "lpmul/counters.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

namespace lpmul {

namespace {

Word checked_counter_state(unsigned modulus, std::uint64_t value) {
  if (modulus == 0) throw ContractViolation("counter modulus must be >= 1");
  if (value >= modulus) {
    throw ContractViolation(
        fmt::format("counter value {} not below modulus {}", value, modulus));
  }
  return Word(value, ceil_log2(modulus));
}

unsigned block_size_of(unsigned block, unsigned width, unsigned block_size) {
  const unsigned first = block * block_size;
  return std::min(block_size, width - first);
}

}  // namespace

BinaryCounter::BinaryCounter(unsigned modulus, std::uint64_t value)
    : state_(checked_counter_state(modulus, value)), modulus_(modulus) {}

BinaryCounterStep binary_counter_step(const BinaryCounter& c) {
  const std::uint64_t v = c.state().value() + 1;
  BinaryCounter next(c.modulus(), v == c.modulus() ? 0 : v);
  const Count toggles = hamming(c.state(), next.state());
  return {next, toggles};
}

RingState::RingState(unsigned width, unsigned position)
    : state_(Word::zero(width)), position_(position) {
  if (position >= width) {
    throw ContractViolation(fmt::format(
        "ring position {} out of range for width {}", position, width));
  }
  state_ = state_.with_bit(position, true);
}

RingState RingState::from_word(const Word& state) {
  if (state.popcount() != 1) {
    throw ContractViolation(
        fmt::format("ring state {} is not one-hot", state.to_string()));
  }
  return RingState(state.width(),
                   static_cast<unsigned>(std::countr_zero(state.value())));
}

void RingCostModel::validate(unsigned width) const {
  if (ffs_cost < 1) throw ContractViolation("flip-flop cost s must be >= 1");
  if (block_size < 1 || block_size > width) {
    throw ContractViolation(fmt::format(
        "block size {} outside 1..{}", block_size, width));
  }
}

unsigned block_count(unsigned width, unsigned block_size) {
  if (block_size == 0) throw ContractViolation("block size must be >= 1");
  return (width + block_size - 1) / block_size;
}

namespace {

// Hot bit moves toward the MSB and wraps from n-1 to 0: 001 -> 010 -> 100.
RingState rotate(const RingState& r) {
  const unsigned n = r.width();
  return RingState(n, (r.position() + 1) % n);
}

}  // namespace

ConventionalRingStep ring_conventional_step(const RingState& r,
                                            const RingCostModel& cost) {
  if (cost.ffs_cost < 1) throw ContractViolation("flip-flop cost s must be >= 1");
  RingState next = rotate(r);
  const Count toggles = hamming(r.state(), next.state());
  return {next, r.width(), toggles};
}

LowPowerRingStep ring_lowpower_step(const RingState& r,
                                    const RingCostModel& cost) {
  const unsigned n = r.width();
  cost.validate(n);
  RingState next = rotate(r);
  const unsigned b = cost.block_size;
  const unsigned from = r.position() / b;
  const unsigned to = next.position() / b;
  Count clocked = block_size_of(from, n, b);
  if (to != from) clocked += block_size_of(to, n, b);
  const Count gating = cost.gate_cost * block_count(n, b);
  const Count toggles = hamming(r.state(), next.state());
  return {next, clocked, gating, toggles};
}

Count unnecessary_transitions_per_step(unsigned width,
                                       const RingCostModel& cost) {
  return width < 2 ? 0 : (width - 2) * cost.ffs_cost;
}

bool hot_one_select(const RingState& sel, const Word& data) {
  if (sel.width() != data.width()) {
    throw ContractViolation(fmt::format(
        "hot_one_select: select width {} vs data width {}", sel.width(),
        data.width()));
  }
  return data.bit(sel.position());
}

}  // namespace lpmul
