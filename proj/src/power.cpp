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

#include "lpmul/power.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include <fmt/format.h>

namespace lpmul {

namespace {

std::size_t category_index(std::string_view category) {
  for (std::size_t i = 0; i < ToggleLedger::kFields.size(); ++i) {
    if (ToggleLedger::kFields[i].name == category) return i;
  }
  throw ContractViolation(fmt::format("unknown ledger category '{}'", category));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double& PowerModel::weight(std::string_view category) {
  return capacitance[category_index(category)];
}

double PowerModel::weight(std::string_view category) const {
  return capacitance[category_index(category)];
}

void PowerModel::validate() const {
  for (std::size_t i = 0; i < capacitance.size(); ++i) {
    if (!(capacitance[i] >= 0.0) || !std::isfinite(capacitance[i])) {
      throw ContractViolation(fmt::format("capacitance for {} must be >= 0",
                                          ToggleLedger::kFields[i].name));
    }
  }
  if (!(vdd > 0.0) || !std::isfinite(vdd)) {
    throw ContractViolation("vdd must be > 0");
  }
  if (!(f_clk > 0.0) || !std::isfinite(f_clk)) {
    throw ContractViolation("f_clk must be > 0");
  }
}

PowerModel PowerModel::parse(std::istream& in) {
  PowerModel model;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected key = value", line_no));
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view text = trim(line.substr(eq + 1));
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
      throw ConfigError(
          fmt::format("line {}: '{}' is not a number", line_no, text));
    }

    if (key == "vdd") {
      model.vdd = value;
    } else if (key == "f_clk") {
      model.f_clk = value;
    } else {
      try {
        model.weight(key) = value;
      } catch (const ContractViolation&) {
        throw ConfigError(fmt::format("line {}: unknown key '{}'", line_no, key));
      }
    }
  }
  try {
    model.validate();
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  }
  return model;
}

PowerModel PowerModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(fmt::format("cannot open power model '{}'", path.string()));
  }
  try {
    return parse(in);
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

double estimate_energy(const ToggleLedger& ledger, const PowerModel& model) {
  double switched = 0.0;
  for (std::size_t i = 0; i < ToggleLedger::kFields.size(); ++i) {
    switched += static_cast<double>(ledger.*ToggleLedger::kFields[i].member) *
                model.capacitance[i];
  }
  return switched * model.vdd * model.vdd;
}

double average_power(const ToggleLedger& ledger, const PowerModel& model,
                     Count cycles) {
  if (cycles == 0) return 0.0;
  return estimate_energy(ledger, model) * model.f_clk /
         static_cast<double>(cycles);
}

AreaInventory area_proxy(const ArchConfig& cfg) {
  cfg.validate();
  const Count n = cfg.width;
  AreaInventory area;
  area.full_adder_count = n;
  if (cfg.variant == Architecture::Conventional) {
    // B register, partial product (carry + 2n), binary counter.
    area.flip_flop_count = n + (2 * n + 1) + ceil_log2(cfg.width);
    area.mux_input_count = 2 * n;
    // Terminal-count compare on the cycle counter.
    area.gate_count = 1;
  } else {
    const Count blocks = block_count(cfg.width, cfg.cost.block_size);
    // B register, ring, feeder/bypass, product low bits, one latch per block.
    area.flip_flop_count = n + n + (n + 1) + n + blocks;
    area.mux_input_count = n;
    // Block clock gates plus the feeder/bypass gate.
    area.gate_count = blocks + 1;
  }
  return area;
}

Measured measure(const ToggleLedger& ledger, Count cycles,
                 const ArchConfig& cfg, const PowerModel& model) {
  return Measured{ledger, cycles, estimate_energy(ledger, model),
                  area_proxy(cfg)};
}

double reduction_percent(double base, double candidate) {
  if (base == 0.0) {
    throw UndefinedComparison("reduction undefined for a zero baseline");
  }
  return 100.0 * (base - candidate) / base;
}

Comparison compare(const Measured& base, const Measured& candidate,
                   const PowerModel& model) {
  Comparison c;
  c.energy_reduction_percent = reduction_percent(base.energy, candidate.energy);
  // Area is optional on hand-built inputs; an empty baseline reports 0.
  if (base.area.total() > 0) {
    c.area_reduction_percent =
        reduction_percent(static_cast<double>(base.area.total()),
                          static_cast<double>(candidate.area.total()));
  }
  const double v2 = model.vdd * model.vdd;
  for (std::size_t i = 0; i < ToggleLedger::kFields.size(); ++i) {
    const auto member = ToggleLedger::kFields[i].member;
    const double delta = static_cast<double>(base.ledger.*member) -
                         static_cast<double>(candidate.ledger.*member);
    c.category_delta[i] = delta * model.capacitance[i] * v2;
  }
  return c;
}

}  // namespace lpmul
