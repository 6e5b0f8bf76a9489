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

#include "lpmul/bitcore.hpp"

namespace lpmul {

/// Modulo-n up counter with ceil(log2 n) state bits.
class BinaryCounter {
 public:
  /// Throws ContractViolation unless modulus >= 1 and value < modulus.
  explicit BinaryCounter(unsigned modulus, std::uint64_t value = 0);

  const Word& state() const { return state_; }
  unsigned modulus() const { return modulus_; }

 private:
  Word state_;
  unsigned modulus_;
};

struct BinaryCounterStep {
  BinaryCounter next;
  Count toggles;
};

BinaryCounterStep binary_counter_step(const BinaryCounter& c);

/// One-hot ring counter state. Exactly one bit is set; position() is its
/// index.
class RingState {
 public:
  /// Hot bit at `position` of an n-bit ring.
  RingState(unsigned width, unsigned position);

  /// Validates that `state` is one-hot.
  static RingState from_word(const Word& state);

  const Word& state() const { return state_; }
  unsigned position() const { return position_; }
  unsigned width() const { return state_.width(); }

  friend bool operator==(const RingState&, const RingState&) = default;

 private:
  Word state_;
  unsigned position_;
};

/// Cost parameters for the ring counters (and, in the datapath, every other
/// clocked register).
struct RingCostModel {
  /// Internal transitions raised in one flip-flop per clock it receives.
  Count ffs_cost = 2;
  /// Transitions in one block's gating structure per clock.
  Count gate_cost = 1;
  /// Flip-flops per clock-gated block.
  unsigned block_size = 4;

  /// Throws ContractViolation unless s >= 1 and 1 <= block_size <= width.
  void validate(unsigned width) const;
};

struct ConventionalRingStep {
  RingState next;
  /// Flip-flops receiving the clock; always n.
  Count clock_events;
  Count output_toggles;

  Count internal_transitions(const RingCostModel& cost) const {
    return clock_events * cost.ffs_cost;
  }
};

struct LowPowerRingStep {
  RingState next;
  Count clock_events;
  Count gating_transitions;
  Count output_toggles;

  Count internal_transitions(const RingCostModel& cost) const {
    return clock_events * cost.ffs_cost;
  }
};

/// Shared-clock ring counter: every flip-flop is clocked on every step.
ConventionalRingStep ring_conventional_step(const RingState& r,
                                            const RingCostModel& cost);

/// Clock-gated ring counter. The ring is split into blocks of
/// `cost.block_size` flip-flops (the last block may be shorter). A step
/// clocks the block holding the hot bit, plus the destination block when
/// the bit crosses a block boundary. Each block's gate costs
/// `cost.gate_cost` per step whether or not it passes the clock.
LowPowerRingStep ring_lowpower_step(const RingState& r,
                                    const RingCostModel& cost);

/// Transitions wasted per step by the shared-clock ring: (n - 2) * s.
Count unnecessary_transitions_per_step(unsigned width,
                                       const RingCostModel& cost);

unsigned block_count(unsigned width, unsigned block_size);

/// data bit at the hot position of `sel`.
bool hot_one_select(const RingState& sel, const Word& data);

}  // namespace lpmul
