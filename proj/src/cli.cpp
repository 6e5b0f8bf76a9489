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

#include "lpmul/cli.hpp"

#include <map>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lpmul/harness.hpp"

namespace lpmul::cli {

namespace {

struct CostFlags {
  Count ffs_cost = 2;
  Count gate_cost = 1;
  unsigned block_size = 4;
  std::string model_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--block-size", block_size,
                    "Flip-flops per clock-gated ring block")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--ffs-cost", ffs_cost,
                    "Internal transitions per clocked flip-flop (s)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--gate-cost", gate_cost,
                    "Transitions per gating structure per clock (g)")
        ->capture_default_str();
    cmd->add_option("--model", model_path,
                    "Power model file (category = weight, vdd, f_clk)")
        ->check(CLI::ExistingFile);
  }

  RingCostModel cost() const { return {ffs_cost, gate_cost, block_size}; }

  PowerModel model() const {
    return model_path.empty() ? PowerModel{} : PowerModel::load(model_path);
  }
};

const std::map<std::string, Architecture> kArchNames{
    {"conv", Architecture::Conventional},
    {"lowpower", Architecture::LowPower},
};

const std::map<std::string, DistKind> kDistNames{
    {"uniform", DistKind::Uniform},       {"sparse", DistKind::Sparse},
    {"dense", DistKind::Dense},           {"exhaustive", DistKind::Exhaustive},
    {"fixed-pair", DistKind::FixedPair},
};

const std::map<std::string, ReportFormat> kFormatNames{
    {"csv", ReportFormat::Csv},
    {"json", ReportFormat::Json},
};

int do_verify(unsigned width, std::ostream& out) {
  const VerifyReport report = exhaustive_verify(width);
  out << fmt::format("width {}: {} operand pairs\n", width, report.pairs);
  out << fmt::format("  conv      {}/{} correct\n", report.conventional_pass,
                     report.pairs);
  out << fmt::format("  lowpower  {}/{} correct\n", report.lowpower_pass,
                     report.pairs);
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < report.mismatches.size() && i < kShown; ++i) {
    const Mismatch& m = report.mismatches[i];
    out << fmt::format("  MISMATCH {} {} x {}: expected {}, got {}\n",
                       to_string(m.arch), m.a, m.b, m.expected, m.got);
  }
  if (report.mismatches.size() > kShown) {
    out << fmt::format("  ... {} more\n", report.mismatches.size() - kShown);
  }
  out << (report.passed() ? "PASS\n" : "FAIL\n");
  return report.passed() ? kExitOk : kExitFailure;
}

struct RunFlags {
  Architecture arch = Architecture::LowPower;
  unsigned width = 8;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  unsigned effective_width = 0;
  bool trace = false;
};

int do_run(const RunFlags& flags, const CostFlags& costs, std::ostream& out) {
  const unsigned n = flags.width;
  if (n < 1 || n > ArchConfig::kMaxWidth) {
    throw CLI::ValidationError("--width", fmt::format(
        "must be in 1..{}", ArchConfig::kMaxWidth));
  }
  if (((flags.a | flags.b) & ~low_mask(n)) != 0) {
    throw CLI::ValidationError("--a/--b", fmt::format(
        "operands must fit in {} bits", n));
  }
  ArchConfig cfg = ArchConfig::make(flags.arch, n, costs.cost());
  if (flags.effective_width != 0) cfg.effective_width = flags.effective_width;
  const PowerModel model = costs.model();

  const Word a(flags.a, n);
  const Word b(flags.b, n);
  const SimResult result = run(a, b, cfg, {.record_trace = flags.trace});

  if (flags.trace) out << render_trace(a, b, flags.arch, result) << '\n';
  out << fmt::format("arch: {}  width: {}  effective width: {}\n",
                     to_string(flags.arch), n, cfg.effective_width);
  out << fmt::format("product: {} ({})\n", result.product.value(),
                     result.product.to_string());
  out << fmt::format("cycles: {}\n", result.cycles);
  for (const auto& f : ToggleLedger::kFields) {
    out << fmt::format("  {:<22} {}\n", f.name, result.ledger.*f.member);
  }
  out << fmt::format("  {:<22} {}\n", "total", result.ledger.total());
  out << fmt::format("energy: {:.6f}\n", estimate_energy(result.ledger, model));
  out << fmt::format("avg_power: {:.6f}\n",
                     average_power(result.ledger, model, result.cycles));
  const AreaInventory area = area_proxy(cfg);
  out << fmt::format(
      "area: flip_flops={} full_adders={} mux_inputs={} gates={}\n",
      area.flip_flop_count, area.full_adder_count, area.mux_input_count,
      area.gate_count);
  return kExitOk;
}

struct SweepFlags {
  std::vector<unsigned> widths{4, 8, 16};
  DistKind dist = DistKind::Uniform;
  Count trials = 100000;
  std::uint64_t seed = 1;
  std::string out_path;
  ReportFormat format = ReportFormat::Csv;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

std::string join_widths(const std::vector<unsigned>& widths) {
  std::string s;
  for (unsigned w : widths) s += (s.empty() ? "" : ",") + std::to_string(w);
  return s;
}

int do_sweep(const SweepFlags& flags, const CostFlags& costs, std::ostream& out,
             std::ostream& err) {
  OperandDistribution dist{flags.dist, flags.seed, flags.a, flags.b};
  const PowerModel model = costs.model();
  const auto rows = sweep(flags.widths, dist, flags.trials, model, costs.cost());

  ReportMeta meta{
      {"generator", std::string(kGeneratorName)},
      {"seed", std::to_string(flags.seed)},
      {"dist", std::string(to_string(flags.dist))},
      {"trials", std::to_string(flags.trials)},
      {"widths", join_widths(flags.widths)},
      {"ffs_cost", std::to_string(costs.ffs_cost)},
      {"gate_cost", std::to_string(costs.gate_cost)},
      {"block_size", std::to_string(costs.block_size)},
      {"vdd", fmt::format("{}", model.vdd)},
      {"f_clk", fmt::format("{}", model.f_clk)},
  };
  if (flags.dist == DistKind::FixedPair) {
    meta.emplace_back("fixed_pair", fmt::format("{},{}", flags.a, flags.b));
  }

  std::ostream& summary = flags.out_path.empty() ? err : out;
  if (flags.out_path.empty()) {
    emit_report(rows, flags.format, out, meta);
  } else {
    emit_report(rows, flags.format, std::filesystem::path(flags.out_path), meta);
    summary << fmt::format("wrote {} rows to {}\n", rows.size(), flags.out_path);
  }
  for (const ReportRow& row : rows) {
    if (row.arch != Architecture::LowPower) continue;
    std::string line = fmt::format("width {:>2}: modeled energy reduction {:.2f}%",
                                   row.width, row.reduction_pct);
    if (auto ref = reference_reduction(row.width)) {
      line += fmt::format("  (reference {:.2f}%)", *ref);
    }
    summary << line << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cycle-accurate switching-activity simulator for shift-and-add "
               "multipliers",
               "lpmul"};
  app.require_subcommand(1);

  unsigned verify_width = 8;
  auto* verify_cmd =
      app.add_subcommand("verify", "Exhaustively check both architectures");
  verify_cmd->add_option("--width", verify_width, "Operand width (1..8)")
      ->required()
      ->check(CLI::Range(1U, kMaxVerifyWidth));

  RunFlags run_flags;
  CostFlags run_costs;
  auto* run_cmd = app.add_subcommand("run", "Simulate one multiplication");
  std::string arch_name;
  run_cmd->add_option("--arch", arch_name, "conv or lowpower")
      ->required()
      ->check(CLI::IsMember(kArchNames, CLI::ignore_case));
  run_cmd->add_option("--width", run_flags.width, "Operand width (1..32)")
      ->required();
  run_cmd->add_option("--a", run_flags.a, "Multiplicand (decimal, 0x.., 0b..)")
      ->required();
  run_cmd->add_option("--b", run_flags.b, "Multiplier (decimal, 0x.., 0b..)")
      ->required();
  run_cmd->add_option("--effective-width", run_flags.effective_width,
                      "Process only the low K multiplier bits");
  run_cmd->add_flag("--trace", run_flags.trace, "Print the per-cycle table");
  run_costs.attach(run_cmd);

  SweepFlags sweep_flags;
  CostFlags sweep_costs;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Compare both architectures across widths");
  sweep_cmd->add_option("--widths", sweep_flags.widths, "Comma-separated widths")
      ->delimiter(',')
      ->capture_default_str();
  std::string dist_name = "uniform";
  sweep_cmd->add_option("--dist", dist_name,
                        "uniform, sparse, dense, exhaustive or fixed-pair")
      ->check(CLI::IsMember(kDistNames, CLI::ignore_case))
      ->capture_default_str();
  sweep_cmd->add_option("--trials", sweep_flags.trials, "Operand pairs per width")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_flags.seed, "Generator seed")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_flags.out_path,
                        "Report file (stdout when omitted)");
  std::string format_name = "csv";
  sweep_cmd->add_option("--format", format_name, "csv or json")
      ->check(CLI::IsMember(kFormatNames, CLI::ignore_case))
      ->capture_default_str();
  sweep_cmd->add_option("--a", sweep_flags.a, "Multiplicand for fixed-pair");
  sweep_cmd->add_option("--b", sweep_flags.b, "Multiplier for fixed-pair");
  sweep_costs.attach(sweep_cmd);

  std::vector<const char*> argv{"lpmul"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*verify_cmd) return do_verify(verify_width, out);
    if (*run_cmd) {
      run_flags.arch = kArchNames.at(arch_name);
      return do_run(run_flags, run_costs, out);
    }
    if (*sweep_cmd) {
      sweep_flags.dist = kDistNames.at(dist_name);
      sweep_flags.format = kFormatNames.at(format_name);
      return do_sweep(sweep_flags, sweep_costs, out, err);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lpmul::cli
