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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpmul/bitcore.hpp"
#include "lpmul/counters.hpp"

namespace lpmul {

enum class Architecture { Conventional, LowPower };

std::string_view to_string(Architecture arch);

struct ArchConfig {
  static constexpr unsigned kMaxWidth = 32;

  Architecture variant = Architecture::Conventional;
  unsigned width = 8;
  RingCostModel cost;
  /// Multiplier bits processed, counted from the LSB. Equal to width for a
  /// full multiplication.
  unsigned effective_width = 8;

  /// Full-width config; block size is clamped to the width.
  static ArchConfig make(Architecture variant, unsigned width,
                         RingCostModel cost = {});

  void validate() const;
};

/// Switching activity per structural block, accumulated over a run.
struct ToggleLedger {
  Count multiplier_shift = 0;
  Count partial_product_shift = 0;
  Count adder = 0;
  Count counter_internal = 0;
  Count counter_output = 0;
  Count mux_select = 0;
  Count mux_data = 0;
  Count feeder_bypass_clock = 0;
  Count gating = 0;

  struct Field {
    std::string_view name;
    Count ToggleLedger::*member;
  };

  /// Categories in report column order.
  static constexpr std::array<Field, 9> kFields{{
      {"multiplier_shift", &ToggleLedger::multiplier_shift},
      {"partial_product_shift", &ToggleLedger::partial_product_shift},
      {"adder", &ToggleLedger::adder},
      {"counter_internal", &ToggleLedger::counter_internal},
      {"counter_output", &ToggleLedger::counter_output},
      {"mux_select", &ToggleLedger::mux_select},
      {"mux_data", &ToggleLedger::mux_data},
      {"feeder_bypass_clock", &ToggleLedger::feeder_bypass_clock},
      {"gating", &ToggleLedger::gating},
  }};

  Count total() const;

  ToggleLedger& operator+=(const ToggleLedger& other);
  friend bool operator==(const ToggleLedger&, const ToggleLedger&) = default;
};

/// One row of the cycle table.
struct CycleTrace {
  unsigned cycle;
  /// Binary counter value (conventional) or ring state (low power).
  Word counter;
  bool selected_bit;
  /// True when the adder was evaluated with new inputs this cycle. The
  /// conventional adder runs every cycle; the low-power one only on 1 bits.
  bool adder_fired;
  /// Value presented to the adder's second input (A or 0).
  Word addend;
  /// (carry, sum) pair leaving the adder/bypass stage, n+1 bits.
  Word running_sum;
  /// Product register contents after the cycle's clock edge.
  Word product_so_far;
  /// Adder internal transitions charged this cycle.
  Count adder_transitions;

  friend bool operator==(const CycleTrace&, const CycleTrace&) = default;
};

struct SimResult {
  Word product;
  ToggleLedger ledger;
  Count cycles = 0;
  std::optional<std::vector<CycleTrace>> trace;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Adder used by the datapaths. Replaceable so tests can inject faults.
using AdderFn = std::function<AddResult(const AdderState&, const Word&,
                                        const Word&, bool)>;

struct RunOptions {
  bool record_trace = false;
  AdderFn adder = ripple_carry_add;
};

/// Shift-and-add multiplier with a shifting multiplier register, a 0/A
/// multiplexer, a 2n+1 bit shifting partial-product register and a binary
/// cycle counter.
SimResult run_conventional(const Word& a, const Word& b, const ArchConfig& cfg,
                           const RunOptions& opts = {});

/// Low-power multiplier: the multiplier register never shifts, a clock-gated
/// ring counter selects B(i) through a one-hot multiplexer, and the adder is
/// bypassed on 0 bits via the feeder/bypass registers.
SimResult run_lowpower(const Word& a, const Word& b, const ArchConfig& cfg,
                       const RunOptions& opts = {});

/// Dispatches on cfg.variant.
SimResult run(const Word& a, const Word& b, const ArchConfig& cfg,
              const RunOptions& opts = {});

/// Plain-text cycle table in the layout of a pencil-and-paper shift-and-add
/// example: operands, one row per cycle, then the answer.
std::string render_trace(const Word& a, const Word& b, Architecture arch,
                         const SimResult& result);

}  // namespace lpmul
