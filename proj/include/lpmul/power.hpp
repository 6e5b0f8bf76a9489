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
#include <filesystem>
#include <istream>
#include <stdexcept>

#include "lpmul/datapath.hpp"

namespace lpmul {

/// Raised by compare() when the baseline energy is zero.
class UndefinedComparison : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a power-model file cannot be read or parsed.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Switched capacitance per ledger category plus supply and clock.
///
/// Energy = sum(count * C * Vdd^2); the activity factor is the measured
/// count rather than a statistical estimate.
struct PowerModel {
  /// Indexed like ToggleLedger::kFields.
  std::array<double, ToggleLedger::kFields.size()> capacitance;
  double vdd = 1.0;
  double f_clk = 1.0;

  PowerModel() { capacitance.fill(1.0); }

  double& weight(std::string_view category);
  double weight(std::string_view category) const;

  void validate() const;

  /// Parses `key = value` lines. Keys are ledger category names, `vdd` and
  /// `f_clk`; `#` starts a comment. Unlisted keys keep their defaults.
  static PowerModel parse(std::istream& in);
  static PowerModel load(const std::filesystem::path& path);
};

double estimate_energy(const ToggleLedger& ledger, const PowerModel& model);

/// energy * f_clk / cycles; zero when no cycles ran.
double average_power(const ToggleLedger& ledger, const PowerModel& model,
                     Count cycles);

struct AreaInventory {
  Count flip_flop_count = 0;
  Count full_adder_count = 0;
  Count mux_input_count = 0;
  Count gate_count = 0;

  Count total() const {
    return flip_flop_count + full_adder_count + mux_input_count + gate_count;
  }

  friend bool operator==(const AreaInventory&, const AreaInventory&) = default;
};

/// Structural component count for a configuration. Operand independent.
AreaInventory area_proxy(const ArchConfig& cfg);

/// A simulated (aggregate) run with its energy and area attached.
struct Measured {
  ToggleLedger ledger;
  Count cycles = 0;
  double energy = 0.0;
  AreaInventory area;
};

Measured measure(const ToggleLedger& ledger, Count cycles,
                 const ArchConfig& cfg, const PowerModel& model);

struct Comparison {
  double energy_reduction_percent = 0.0;
  /// Over AreaInventory::total().
  double area_reduction_percent = 0.0;
  /// base - new energy per ledger category, kFields order.
  std::array<double, ToggleLedger::kFields.size()> category_delta{};
};

/// 100 * (base - new) / base. Both sides must share a power model and
/// operand set.
Comparison compare(const Measured& base, const Measured& candidate,
                   const PowerModel& model);

double reduction_percent(double base, double candidate);

}  // namespace lpmul
