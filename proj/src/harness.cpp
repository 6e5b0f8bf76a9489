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

#include "lpmul/harness.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

namespace lpmul {

std::string_view to_string(DistKind kind) {
  switch (kind) {
    case DistKind::Uniform: return "uniform";
    case DistKind::Sparse: return "sparse";
    case DistKind::Dense: return "dense";
    case DistKind::Exhaustive: return "exhaustive";
    case DistKind::FixedPair: return "fixed-pair";
  }
  return "unknown";
}

std::optional<DistKind> parse_dist_kind(std::string_view name) {
  for (DistKind k : {DistKind::Uniform, DistKind::Sparse, DistKind::Dense,
                     DistKind::Exhaustive, DistKind::FixedPair}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double OperandDistribution::one_probability() const {
  switch (kind) {
    case DistKind::Sparse: return 0.25;
    case DistKind::Dense: return 0.75;
    default: return 0.5;
  }
}

OperandStream::OperandStream(const OperandDistribution& dist, unsigned width,
                             Count trials)
    : dist_(dist), width_(width), total_(trials), rng_(dist.seed) {
  if (width < 1 || width > ArchConfig::kMaxWidth) {
    throw ContractViolation(fmt::format("operand width {} outside 1..{}",
                                        width, ArchConfig::kMaxWidth));
  }
  if (dist.kind == DistKind::Exhaustive) {
    if (width > kMaxExhaustiveWidth) {
      throw ContractViolation(fmt::format(
          "exhaustive enumeration refused for width {} (limit {})", width,
          kMaxExhaustiveWidth));
    }
    total_ = Count{1} << (2 * width);
  }
  if (dist.kind == DistKind::FixedPair &&
      ((dist.fixed_a | dist.fixed_b) & ~low_mask(width)) != 0) {
    throw ContractViolation(fmt::format(
        "fixed pair ({}, {}) does not fit in {} bits", dist.fixed_a,
        dist.fixed_b, width));
  }
}

std::uint64_t OperandStream::draw_multiplier() {
  const double p = dist_.one_probability();
  // P(draw < threshold) == p exactly for p = k / 4.
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  std::uint64_t b = 0;
  for (unsigned i = 0; i < width_; ++i) {
    if (rng_() < threshold) b |= std::uint64_t{1} << i;
  }
  return b;
}

std::optional<OperandPair> OperandStream::next() {
  if (emitted_ >= total_) return std::nullopt;
  const Count k = emitted_++;
  switch (dist_.kind) {
    case DistKind::Exhaustive:
      return OperandPair{Word(k >> width_, width_), Word(k, width_)};
    case DistKind::FixedPair:
      return OperandPair{Word(dist_.fixed_a, width_),
                         Word(dist_.fixed_b, width_)};
    case DistKind::Uniform: {
      const std::uint64_t a = rng_();
      const std::uint64_t b = rng_();
      return OperandPair{Word(a, width_), Word(b, width_)};
    }
    case DistKind::Sparse:
    case DistKind::Dense: {
      const std::uint64_t a = rng_();
      return OperandPair{Word(a, width_), Word(draw_multiplier(), width_)};
    }
  }
  return std::nullopt;
}

std::vector<OperandPair> gen_operands(const OperandDistribution& dist,
                                      unsigned width, Count trials) {
  OperandStream stream(dist, width, trials);
  std::vector<OperandPair> pairs;
  pairs.reserve(stream.size());
  while (auto p = stream.next()) pairs.push_back(*p);
  return pairs;
}

VerifyReport exhaustive_verify(unsigned width, const RunOptions& opts) {
  if (width < 1 || width > kMaxVerifyWidth) {
    throw ContractViolation(fmt::format("verify width {} outside 1..{}", width,
                                        kMaxVerifyWidth));
  }
  VerifyReport report;
  report.width = width;
  const ArchConfig conv = ArchConfig::make(Architecture::Conventional, width);
  const ArchConfig low = ArchConfig::make(Architecture::LowPower, width);
  OperandStream stream({DistKind::Exhaustive}, width, 0);
  while (auto p = stream.next()) {
    const std::uint64_t expected = p->a.value() * p->b.value();
    ++report.pairs;
    for (const ArchConfig* cfg : {&conv, &low}) {
      const std::uint64_t got = run(p->a, p->b, *cfg, opts).product.value();
      if (got == expected) {
        ++(cfg->variant == Architecture::Conventional ? report.conventional_pass
                                                      : report.lowpower_pass);
      } else {
        report.mismatches.push_back(
            {cfg->variant, p->a.value(), p->b.value(), expected, got});
      }
    }
  }
  return report;
}

std::vector<ReportRow> sweep(const std::vector<unsigned>& widths,
                             const OperandDistribution& dist, Count trials,
                             const PowerModel& model,
                             const RingCostModel& cost) {
  model.validate();
  const unsigned limit =
      dist.kind == DistKind::Exhaustive ? kMaxVerifyWidth : kMaxSweepWidth;
  if (dist.kind != DistKind::Exhaustive && trials == 0) {
    throw ContractViolation("sweep needs at least one trial");
  }

  std::vector<ReportRow> rows;
  for (unsigned width : widths) {
    if (width < 1 || width > limit) {
      throw ContractViolation(fmt::format(
          "sweep width {} outside 1..{} for {} operands", width, limit,
          to_string(dist.kind)));
    }
    Measured measured[2];
    Count pairs = 0;
    const Architecture archs[2] = {Architecture::Conventional,
                                   Architecture::LowPower};
    for (int k = 0; k < 2; ++k) {
      const ArchConfig cfg = ArchConfig::make(archs[k], width, cost);
      OperandStream stream(dist, width, trials);
      ToggleLedger total;
      Count cycles = 0;
      while (auto p = stream.next()) {
        const SimResult r = run(p->a, p->b, cfg);
        total += r.ledger;
        cycles += r.cycles;
      }
      pairs = stream.size();
      measured[k] = measure(total, cycles, cfg, model);
    }
    for (int k = 0; k < 2; ++k) {
      ReportRow row;
      row.width = width;
      row.arch = archs[k];
      row.trials = pairs;
      row.ledger = measured[k].ledger;
      row.energy = measured[k].energy;
      row.avg_power =
          average_power(measured[k].ledger, model, measured[k].cycles);
      row.area = measured[k].area;
      row.reduction_pct =
          compare(measured[0], measured[k], model).energy_reduction_percent;
      rows.push_back(row);
    }
  }
  return rows;
}

std::optional<double> reference_reduction(unsigned width) {
  switch (width) {
    case 4: return 20.51;
    case 8: return 35.25;
    default: return std::nullopt;
  }
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  return std::nullopt;
}

std::vector<std::string> report_columns() {
  std::vector<std::string> cols{"width", "arch", "trials"};
  for (const auto& f : ToggleLedger::kFields) cols.emplace_back(f.name);
  for (const char* c : {"energy", "avg_power", "flip_flops", "full_adders",
                        "reduction_pct"}) {
    cols.emplace_back(c);
  }
  return cols;
}

namespace {

// Both formats carry the same six-decimal value.
double rounded(double x) { return std::round(x * 1e6) / 1e6; }

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out,
               const ReportMeta& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << ": " << value << '\n';
  const auto cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << '\n';
  for (const ReportRow& row : rows) {
    out << fmt::format("{},{},{}", row.width, to_string(row.arch), row.trials);
    for (const auto& f : ToggleLedger::kFields) out << ',' << row.ledger.*f.member;
    out << fmt::format(",{:.6f},{:.6f},{},{},{:.6f}\n", rounded(row.energy),
                       rounded(row.avg_power), row.area.flip_flop_count,
                       row.area.full_adder_count, rounded(row.reduction_pct));
  }
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& out,
                const ReportMeta& meta) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta) doc["meta"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& row : rows) {
    nlohmann::ordered_json j;
    j["width"] = row.width;
    j["arch"] = to_string(row.arch);
    j["trials"] = row.trials;
    for (const auto& f : ToggleLedger::kFields) {
      j[std::string(f.name)] = row.ledger.*f.member;
    }
    j["energy"] = rounded(row.energy);
    j["avg_power"] = rounded(row.avg_power);
    j["flip_flops"] = row.area.flip_flop_count;
    j["full_adders"] = row.area.full_adder_count;
    j["reduction_pct"] = rounded(row.reduction_pct);
    doc["rows"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 std::ostream& out, const ReportMeta& meta) {
  if (rows.empty()) throw ContractViolation("emit_report: no rows");
  if (format == ReportFormat::Csv) {
    write_csv(rows, out, meta);
  } else {
    write_json(rows, out, meta);
  }
}

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::filesystem::path& destination,
                 const ReportMeta& meta) {
  if (rows.empty()) throw ContractViolation("emit_report: no rows");
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(fmt::format("cannot open '{}' for writing",
                              destination.string()));
  }
  emit_report(rows, format, out, meta);
  out.flush();
  if (!out) {
    throw IoError(fmt::format("write to '{}' failed", destination.string()));
  }
}

}  // namespace lpmul
