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

#include "lpmul/datapath.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace lpmul {

std::string_view to_string(Architecture arch) {
  return arch == Architecture::Conventional ? "conv" : "lowpower";
}

ArchConfig ArchConfig::make(Architecture variant, unsigned width,
                            RingCostModel cost) {
  cost.block_size = std::clamp(cost.block_size, 1U, std::max(width, 1U));
  return ArchConfig{variant, width, cost, width};
}

void ArchConfig::validate() const {
  if (width < 1 || width > kMaxWidth) {
    throw ContractViolation(fmt::format("width {} outside 1..{}", width,
                                        kMaxWidth));
  }
  if (effective_width < 1 || effective_width > width) {
    throw ContractViolation(fmt::format("effective width {} outside 1..{}",
                                        effective_width, width));
  }
  cost.validate(width);
}

Count ToggleLedger::total() const {
  Count sum = 0;
  for (const auto& f : kFields) sum += this->*f.member;
  return sum;
}

ToggleLedger& ToggleLedger::operator+=(const ToggleLedger& other) {
  for (const auto& f : kFields) this->*f.member += other.*f.member;
  return *this;
}

namespace {

void check_operands(const Word& a, const Word& b, const ArchConfig& cfg) {
  cfg.validate();
  if (a.width() != cfg.width || b.width() != cfg.width) {
    throw ContractViolation(fmt::format(
        "operand widths a={} b={} do not match configured width {}",
        a.width(), b.width(), cfg.width));
  }
}

}  // namespace

SimResult run_conventional(const Word& a, const Word& b, const ArchConfig& cfg,
                           const RunOptions& opts) {
  check_operands(a, b, cfg);
  const unsigned n = cfg.width;
  const unsigned cycles = cfg.effective_width;
  const Count s = cfg.cost.ffs_cost;
  const Word zero = Word::zero(n);

  // Reset state: every register low. The 2n+1 bit partial-product register
  // is held as its carry flop plus the 2n-bit high/low word.
  Word multiplier = b;
  bool partial_carry = false;
  Word partial = Word::zero(2 * n);
  AdderState adder(n);
  BinaryCounter counter(n);
  bool prev_select = false;
  Word prev_mux = zero;

  SimResult result{Word::zero(2 * n), {}, 0, std::nullopt};
  if (opts.record_trace) result.trace.emplace();
  ToggleLedger& ledger = result.ledger;

  for (unsigned i = 0; i < cycles; ++i) {
    const bool select = multiplier.bit(0);
    ledger.mux_select += select != prev_select;
    const Word mux = select ? a : zero;
    ledger.mux_data += hamming(prev_mux, mux);

    const Word high(partial.value() >> n, n);
    const AddResult add = opts.adder(adder, high, mux, false);
    ledger.adder += add.transitions;
    adder = add.state;

    // Load {cout, sum, low} and shift right by one: the carry flop reads 0.
    const Word next_partial((std::uint64_t{add.cout} << (2 * n - 1)) |
                                (add.sum.value() << (n - 1)) |
                                ((partial.value() & low_mask(n)) >> 1),
                            2 * n);
    const bool next_carry = false;
    ledger.partial_product_shift += (2 * n + 1) * s +
                                    hamming(partial, next_partial) +
                                    (partial_carry != next_carry);

    const Word next_multiplier = multiplier.shifted_right();
    ledger.multiplier_shift +=
        multiplier.width() * s + hamming(multiplier, next_multiplier);

    const Word counter_before = counter.state();
    const auto tick = binary_counter_step(counter);
    ledger.counter_internal += counter.state().width() * s + tick.toggles;

    if (result.trace) {
      const Word pair((std::uint64_t{add.cout} << n) | add.sum.value(), n + 1);
      result.trace->push_back(CycleTrace{i, counter_before, select, true, mux,
                                         pair, next_partial, add.transitions});
    }

    partial_carry = next_carry;
    partial = next_partial;
    multiplier = next_multiplier;
    counter = tick.next;
    prev_select = select;
    prev_mux = mux;
  }

  // A truncated run leaves the product n - cycles places too far left.
  result.product = Word(partial.value() >> (n - cycles), 2 * n);
  result.cycles = cycles;
  return result;
}

SimResult run_lowpower(const Word& a, const Word& b, const ArchConfig& cfg,
                       const RunOptions& opts) {
  check_operands(a, b, cfg);
  const unsigned n = cfg.width;
  const unsigned cycles = cfg.effective_width;
  const RingCostModel& cost = cfg.cost;

  Word high = Word::zero(n);  // feeder/bypass contents
  std::uint64_t low_bits = 0;
  AdderState adder(n);
  RingState ring(n, 0);
  bool prev_bit = false;

  SimResult result{Word::zero(2 * n), {}, 0, std::nullopt};
  if (opts.record_trace) result.trace.emplace();
  ToggleLedger& ledger = result.ledger;

  for (unsigned i = 0; i < cycles; ++i) {
    const bool bit = hot_one_select(ring, b);
    ledger.mux_data += bit != prev_bit;

    Word pair = Word::zero(n + 1);
    Count adder_flips = 0;
    if (bit) {
      const AddResult add = opts.adder(adder, high, a, false);
      adder_flips = add.transitions;
      adder = add.state;
      pair = Word((std::uint64_t{add.cout} << n) | add.sum.value(), n + 1);
      ledger.feeder_bypass_clock += (n + 1) * cost.ffs_cost;
    } else {
      pair = Word(high.value(), n + 1);
      ledger.feeder_bypass_clock += cost.gate_cost;
    }
    ledger.adder += adder_flips;

    // Only the enabled product-bit flop is clocked; it rises from reset on a 1.
    const std::uint64_t product_bit = pair.value() & 1U;
    low_bits |= product_bit << i;
    const Word next_high(pair.value() >> 1, n);
    ledger.partial_product_shift +=
        cost.ffs_cost + product_bit + hamming(high, next_high);

    const auto tick = ring_lowpower_step(ring, cost);
    ledger.counter_internal += tick.internal_transitions(cost);
    ledger.gating += tick.gating_transitions;
    ledger.counter_output += tick.output_toggles;
    ledger.mux_select += tick.output_toggles;

    if (result.trace) {
      const Word so_far((next_high.value() << (i + 1)) | low_bits, 2 * n);
      result.trace->push_back(CycleTrace{i, ring.state(), bit, bit,
                                         bit ? a : Word::zero(n), pair,
                                         so_far, adder_flips});
    }

    high = next_high;
    ring = tick.next;
    prev_bit = bit;
  }

  result.product = Word((high.value() << cycles) | low_bits, 2 * n);
  result.cycles = cycles;
  return result;
}

SimResult run(const Word& a, const Word& b, const ArchConfig& cfg,
              const RunOptions& opts) {
  return cfg.variant == Architecture::Conventional
             ? run_conventional(a, b, cfg, opts)
             : run_lowpower(a, b, cfg, opts);
}

std::string render_trace(const Word& a, const Word& b, Architecture arch,
                         const SimResult& result) {
  const unsigned n = a.width();
  const unsigned counter_w = std::max(n, 7U);
  const unsigned addend_w = n + 13;  // "<bits> (B(ii)=x)"
  const unsigned sum_w = std::max(n + 1, 3U);
  std::string out;
  out += fmt::format("A -> {}\n", a.to_string());
  out += fmt::format("B -> {}\n", b.to_string());
  out += fmt::format("arch: {}\n\n", to_string(arch));
  out += fmt::format("{:<5} {:<{}} {:<3} {:<{}} {:<6} {:<{}} {}\n", "cycle",
                     "counter", counter_w, "bit", "addend", addend_w, "adder",
                     "sum", sum_w, "product");
  if (result.trace) {
    for (const CycleTrace& row : *result.trace) {
      const std::string addend =
          fmt::format("{} (B({})={})", row.addend.to_string(), row.cycle,
                      row.selected_bit ? 1 : 0);
      out += fmt::format("{:<5} {:<{}} {:<3} {:<{}} {:<6} {:<{}} {}\n",
                         row.cycle, row.counter.to_string(), counter_w,
                         row.selected_bit ? 1 : 0, addend, addend_w,
                         row.adder_fired ? "add" : "bypass",
                         row.running_sum.to_string(), sum_w,
                         row.product_so_far.to_string());
    }
  }
  out += fmt::format("\nAnswer -> {} ({})\n", result.product.to_string(),
                     result.product.value());
  return out;
}

}  // namespace lpmul
