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
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpmul/datapath.hpp"
#include "lpmul/power.hpp"

namespace lpmul {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DistKind { Uniform, Sparse, Dense, Exhaustive, FixedPair };

std::string_view to_string(DistKind kind);
std::optional<DistKind> parse_dist_kind(std::string_view name);

struct OperandDistribution {
  DistKind kind = DistKind::Uniform;
  std::uint64_t seed = 1;
  /// Used by FixedPair only.
  std::uint64_t fixed_a = 0;
  std::uint64_t fixed_b = 0;

  /// Probability of a 1 in each multiplier bit (sparse 0.25, dense 0.75,
  /// otherwise 0.5).
  double one_probability() const;
};

/// Name of the pseudo-random generator behind every random stream.
inline constexpr std::string_view kGeneratorName = "mt19937_64";

struct OperandPair {
  Word a;
  Word b;
};

/// Lazily produced operand stream. Identical (distribution, width, trials)
/// always produce identical streams. Exhaustive streams enumerate all
/// 2^(2n) pairs, `a` major, and ignore `trials`.
class OperandStream {
 public:
  static constexpr unsigned kMaxExhaustiveWidth = 12;

  OperandStream(const OperandDistribution& dist, unsigned width, Count trials);

  std::optional<OperandPair> next();

  /// Total number of pairs the stream yields.
  Count size() const { return total_; }

 private:
  std::uint64_t draw_multiplier();

  OperandDistribution dist_;
  unsigned width_;
  Count total_;
  Count emitted_ = 0;
  std::mt19937_64 rng_;
};

std::vector<OperandPair> gen_operands(const OperandDistribution& dist,
                                      unsigned width, Count trials);

struct Mismatch {
  Architecture arch;
  std::uint64_t a;
  std::uint64_t b;
  std::uint64_t expected;
  std::uint64_t got;
};

struct VerifyReport {
  unsigned width = 0;
  Count pairs = 0;
  Count conventional_pass = 0;
  Count lowpower_pass = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

inline constexpr unsigned kMaxVerifyWidth = 8;

/// Runs both architectures on every operand pair of the given width and
/// checks each product against native multiplication.
VerifyReport exhaustive_verify(unsigned width, const RunOptions& opts = {});

struct ReportRow {
  unsigned width = 0;
  Architecture arch = Architecture::Conventional;
  Count trials = 0;
  ToggleLedger ledger;
  double energy = 0.0;
  double avg_power = 0.0;
  AreaInventory area;
  /// Energy reduction against the conventional row of the same width.
  double reduction_pct = 0.0;
};

inline constexpr unsigned kMaxSweepWidth = 16;

/// For each width, runs both architectures over the same operand stream and
/// aggregates ledgers, energy and area. Rows come out width-major,
/// conventional first.
std::vector<ReportRow> sweep(const std::vector<unsigned>& widths,
                             const OperandDistribution& dist, Count trials,
                             const PowerModel& model,
                             const RingCostModel& cost = {});

/// Published reduction for the widths that have one (4 and 8 bits).
std::optional<double> reference_reduction(unsigned width);

enum class ReportFormat { Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Free-form key/value pairs written ahead of the rows: `#` comment lines
/// in CSV, a "meta" object in JSON.
using ReportMeta = std::vector<std::pair<std::string, std::string>>;

/// Column names in output order.
std::vector<std::string> report_columns();

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 std::ostream& out, const ReportMeta& meta = {});

/// Throws IoError naming the path when it cannot be written.
void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::filesystem::path& destination,
                 const ReportMeta& meta = {});

}  // namespace lpmul
