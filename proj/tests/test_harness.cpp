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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "lpmul/harness.hpp"

using namespace lpmul;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<std::string> lines_of(const std::string& s) { return split(s, '\n'); }

}  // namespace

TEST_CASE("exhaustive operands enumerate a-major") {
  const auto pairs = gen_operands({DistKind::Exhaustive}, 3, 0);
  REQUIRE(pairs.size() == 64);
  CHECK(pairs.front().a.value() == 0);
  CHECK(pairs.front().b.value() == 0);
  CHECK(pairs[1].b.value() == 1);
  CHECK(pairs[8].a.value() == 1);
  CHECK(pairs.back().a.value() == 7);
  CHECK(pairs.back().b.value() == 7);
  CHECK_THROWS_AS(OperandStream({DistKind::Exhaustive}, 13, 0), ContractViolation);
  CHECK(OperandStream({DistKind::Exhaustive}, 12, 0).size() == (1ULL << 24));
}

TEST_CASE("random streams are reproducible") {
  for (DistKind kind : {DistKind::Uniform, DistKind::Sparse, DistKind::Dense}) {
    const auto first = gen_operands({kind, 99}, 11, 500);
    const auto second = gen_operands({kind, 99}, 11, 500);
    REQUIRE(first.size() == 500);
    bool all_same = true;
    for (std::size_t i = 0; i < first.size(); ++i) {
      all_same &= first[i].a == second[i].a && first[i].b == second[i].b;
    }
    CHECK(all_same);
    const auto other = gen_operands({kind, 100}, 11, 500);
    bool differs = false;
    for (std::size_t i = 0; i < other.size(); ++i) differs |= !(other[i].b == first[i].b);
    CHECK(differs);
  }
}

TEST_CASE("biased multipliers have binomial popcount") {
  // mean n*p, sd of the mean sqrt(n p (1-p) / trials); 3 sd = 0.026, so
  // +/- 0.15 is loose.
  constexpr Count kTrials = 10000;
  for (auto [kind, want] : {std::pair{DistKind::Sparse, 2.0},
                            std::pair{DistKind::Dense, 6.0},
                            std::pair{DistKind::Uniform, 4.0}}) {
    double total = 0;
    for (const auto& p : gen_operands({kind, 2024}, 8, kTrials)) total += p.b.popcount();
    CHECK(std::abs(total / kTrials - want) < 0.15);
  }
}

TEST_CASE("fixed pairs") {
  const auto pairs = gen_operands({DistKind::FixedPair, 0, 3, 2}, 8, 4);
  REQUIRE(pairs.size() == 4);
  for (const auto& p : pairs) {
    CHECK(p.a == Word(3, 8));
    CHECK(p.b == Word(2, 8));
  }
  CHECK_THROWS_AS(OperandStream({DistKind::FixedPair, 0, 300, 2}, 8, 1),
                  ContractViolation);
}

TEST_CASE("exhaustive verification") {
  const VerifyReport r3 = exhaustive_verify(3);
  CHECK(r3.pairs == 64);
  CHECK(r3.conventional_pass == 64);
  CHECK(r3.lowpower_pass == 64);
  CHECK(r3.passed());

  const VerifyReport r8 = exhaustive_verify(8);
  CHECK(r8.pairs == 65536);
  CHECK(r8.conventional_pass == 65536);
  CHECK(r8.lowpower_pass == 65536);
  CHECK(r8.passed());

  CHECK_THROWS_AS(exhaustive_verify(9), ContractViolation);
}

TEST_CASE("a stuck-at-zero carry is caught") {
  RunOptions faulty;
  faulty.adder = [](const AdderState& s, const Word& x, const Word& y, bool cin) {
    AddResult r = ripple_carry_add(s, x, y, cin);
    r.cout = false;
    return r;
  };
  const VerifyReport r = exhaustive_verify(4, faulty);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.mismatches.empty());
  for (const Mismatch& m : r.mismatches) CHECK(m.expected != m.got);
}

TEST_CASE("sweep of a fixed pair fires the adder once") {
  const auto rows = sweep({8}, {DistKind::FixedPair, 0, 3, 2}, 1, PowerModel{});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].arch == Architecture::Conventional);
  CHECK(rows[1].arch == Architecture::LowPower);
  // One feeder clock of (8+1)*s, seven bypass cycles at g.
  CHECK(rows[1].ledger.feeder_bypass_clock == 1 * 9 * 2 + 7 * 1);
  CHECK(rows[0].reduction_pct == 0.0);
}

TEST_CASE("sweep trend with uniform operands") {
  const auto rows = sweep({4, 8, 16}, {DistKind::Uniform, 7}, 5000, PowerModel{});
  REQUIRE(rows.size() == 6);
  double prev = 0.0;
  for (const ReportRow& row : rows) {
    if (row.arch == Architecture::Conventional) {
      CHECK(row.reduction_pct == 0.0);
      continue;
    }
    CHECK(row.reduction_pct > prev);
    prev = row.reduction_pct;
    CHECK(row.trials == 5000);
    CHECK(row.ledger.multiplier_shift == 0);
  }
}

TEST_CASE("sweep limits") {
  CHECK_THROWS_AS(sweep({17}, {DistKind::Uniform}, 10, PowerModel{}), ContractViolation);
  CHECK_THROWS_AS(sweep({9}, {DistKind::Exhaustive}, 0, PowerModel{}), ContractViolation);
  CHECK_THROWS_AS(sweep({4}, {DistKind::Uniform}, 0, PowerModel{}), ContractViolation);
  const auto rows = sweep({3}, {DistKind::Exhaustive}, 0, PowerModel{});
  CHECK(rows[0].trials == 64);
}

TEST_CASE("csv report layout") {
  const auto rows = sweep({4}, {DistKind::Uniform, 1}, 50, PowerModel{});
  std::ostringstream one;
  emit_report({rows[0]}, ReportFormat::Csv, one);
  const auto lines = lines_of(one.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "width,arch,trials,multiplier_shift,partial_product_shift,adder,"
        "counter_internal,counter_output,mux_select,mux_data,"
        "feeder_bypass_clock,gating,energy,avg_power,flip_flops,full_adders,"
        "reduction_pct");
  CHECK(split(lines[1], ',').size() == 17);

  std::ostringstream with_meta;
  emit_report(rows, ReportFormat::Csv, with_meta, {{"seed", "1"}});
  CHECK(lines_of(with_meta.str()).front() == "# seed: 1");

  std::ostringstream sink;
  CHECK_THROWS_AS(emit_report({}, ReportFormat::Csv, sink), ContractViolation);
}

TEST_CASE("csv and json carry identical values") {
  const auto rows = sweep({4, 8}, {DistKind::Sparse, 3}, 200, PowerModel{});
  std::ostringstream csv, json;
  emit_report(rows, ReportFormat::Csv, csv);
  emit_report(rows, ReportFormat::Json, json, {{"generator", "mt19937_64"}});

  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["meta"]["generator"] == "mt19937_64");
  const auto lines = lines_of(csv.str());
  const auto header = split(lines[0], ',');
  REQUIRE(doc["rows"].size() == rows.size());
  REQUIRE(lines.size() == rows.size() + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cells = split(lines[r + 1], ',');
    const auto& obj = doc["rows"][r];
    REQUIRE(obj.size() == header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const auto& v = obj.at(header[c]);
      if (v.is_string()) {
        CHECK(v.get<std::string>() == cells[c]);
      } else {
        CHECK(v.get<double>() == std::stod(cells[c]));
      }
    }
  }
}

TEST_CASE("unwritable destination names the path") {
  const auto rows = sweep({4}, {DistKind::Uniform, 1}, 5, PowerModel{});
  const std::filesystem::path bad = "/nonexistent-dir/report.csv";
  try {
    emit_report(rows, ReportFormat::Csv, bad);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
}

TEST_CASE("reference reductions") {
  CHECK(reference_reduction(4).value() == 20.51);
  CHECK(reference_reduction(8).value() == 35.25);
  CHECK_FALSE(reference_reduction(16).has_value());
}
