// Copyright 2026 The CIC Broker Authors
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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "cic/bench.hpp"
#include "cic/gas.hpp"
#include "cic/proof_system.hpp"
#include "test_util.hpp"

namespace {

using namespace cic;
using testutil::code_of;

AppSpec image(std::size_t w, std::size_t h, std::size_t kw, std::size_t kh) {
  return {ImageMatchParams{w, h, kw, kh, 8}, Field()};
}

// Operation tally of a straightforward contract, counted by walking the loops.
OpCounts walk_image(const ImageMatchParams& p) {
  OpCounts c;
  c.storage_writes = p.width * p.height + p.kernel_width * p.kernel_height;  // inputs
  bool first = true;
  for (std::size_t r = 0; r + p.kernel_height <= p.height; ++r) {
    for (std::size_t col = 0; col + p.kernel_width <= p.width; ++col) {
      bool first_term = true;
      for (std::size_t i = 0; i < p.kernel_height * p.kernel_width; ++i) {
        c.adds += 1;  // difference
        c.muls += 1;  // square
        if (!first_term) c.adds += 1;
        first_term = false;
      }
      if (!first) c.comparisons += 1;
      first = false;
    }
  }
  c.storage_writes += 3;  // row, col, score
  return c;
}

OpCounts walk_matmul(std::size_t n) {
  OpCounts c;
  c.storage_writes = 2 * n * n;
  for (std::size_t i = 0; i < n * n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      c.muls += 1;
      if (k) c.adds += 1;
    }
    c.storage_writes += 1;
  }
  return c;
}

OpCounts walk_floyd(std::size_t n) {
  OpCounts c;
  c.storage_writes = n * n;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.adds += 1, c.comparisons += 1;
  c.storage_writes += n * n;
  return c;
}

// nested Horner, recursing on the leading variable
void horner(std::size_t m, std::size_t k, OpCounts& c) {
  if (k == 0) return;
  for (std::size_t e = 0; e <= m; ++e) horner(m, k - 1, c);  // one inner evaluation per coefficient slice
  c.muls += m;
  c.adds += m;
}

OpCounts walk_multipoly(std::size_t m, std::size_t k) {
  OpCounts c;
  horner(m, k, c);
  std::size_t coeffs = 1;
  for (std::size_t i = 0; i < k; ++i) coeffs *= m + 1;
  c.storage_writes = coeffs + k + 1;
  return c;
}

void expect_counts(const OpCounts& a, const OpCounts& b) {
  EXPECT_EQ(a.adds, b.adds);
  EXPECT_EQ(a.muls, b.muls);
  EXPECT_EQ(a.comparisons, b.comparisons);
  EXPECT_EQ(a.storage_writes, b.storage_writes);
}

std::uint64_t price(const OpCounts& c, const GasModel& g = GasModel()) {
  return g.tx_base + g.field_add * c.adds + g.field_mul * c.muls + g.comparison * c.comparisons +
         g.storage_write * c.storage_writes;
}

TEST(Gas, ClosedFormsMatchLoopCounts) {
  for (std::size_t n : {1, 2, 5, 9}) expect_counts(op_counts({MatmulParams{n}, Field()}), walk_matmul(n));
  for (std::size_t n : {1, 3, 6}) expect_counts(op_counts({FloydWarshallParams{n, 16}, Field()}), walk_floyd(n));
  for (auto [m, k] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {3, 2}, {1, 5}})
    expect_counts(op_counts({MultipolyParams{m, k}, Field()}), walk_multipoly(m, k));
  for (const auto& p : {ImageMatchParams{5, 4, 2, 3, 8}, ImageMatchParams{16, 16, 3, 3, 8}, ImageMatchParams{3, 3, 3, 3, 8}})
    expect_counts(op_counts({p, Field()}), walk_image(p));
}

TEST(Gas, ImageMatchAtEightyFiveIsOverTenBlocks) {
  const AppSpec spec = image(85, 85, 3, 3);
  const std::uint64_t gas = estimate_gas(spec);
  EXPECT_EQ(gas, price(walk_image(std::get<ImageMatchParams>(spec.params))));
  EXPECT_GE(gas, 70'000'000u);
  EXPECT_LE(gas, 280'000'000u);
  EXPECT_GE(block_ratio(gas), 10.0);
  EXPECT_GE(gas, 10 * kBlockGasLimit);
}

TEST(Gas, SmallerImageCostsLess) {
  EXPECT_LT(estimate_gas(image(45, 45, 3, 3)), estimate_gas(image(85, 85, 3, 3)));
}

TEST(Gas, EmptyMatmulCostsOnlyTheTransaction) {
  EXPECT_EQ(estimate_gas({MatmulParams{0}, Field()}), 21'000u);
}

TEST(Gas, CustomTable) {
  GasModel g;
  g.storage_write = 0;
  g.tx_base = 0;
  g.block_gas_limit = 1000;
  const AppSpec spec{MatmulParams{2}, Field()};
  EXPECT_EQ(estimate_gas(spec, g), 8u * 32u + 4u * 24u);
  EXPECT_DOUBLE_EQ(block_ratio(estimate_gas(spec, g), g), 0.352);
}

TEST(Gas, MonotoneAcrossRandomPairs) {
  std::mt19937_64 rng(31);
  auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
  for (int t = 0; t < 100; ++t) {
    const std::size_t n1 = pick(0, 150), n2 = pick(n1, 150);
    EXPECT_LE(estimate_gas({MatmulParams{n1}, Field()}), estimate_gas({MatmulParams{n2}, Field()}));
    EXPECT_LE(estimate_gas({FloydWarshallParams{n1, 16}, Field()}), estimate_gas({FloydWarshallParams{n2, 16}, Field()}));

    const std::size_t m1 = pick(1, 6), m2 = pick(m1, 6), k1 = pick(1, 5), k2 = pick(k1, 5);
    EXPECT_LE(estimate_gas({MultipolyParams{m1, k1}, Field()}), estimate_gas({MultipolyParams{m2, k2}, Field()}));

    // kernels up to half the image; past that, fewer placements remain
    const std::size_t w1 = pick(2, 200), w2 = pick(w1, 200), h1 = pick(2, 200), h2 = pick(h1, 200);
    const std::size_t kw1 = pick(1, w1 / 2), kw2 = pick(kw1, w2 / 2);
    const std::size_t kh1 = pick(1, h1 / 2), kh2 = pick(kh1, h2 / 2);
    EXPECT_LE(estimate_gas(image(w1, h1, kw1, kh1)), estimate_gas(image(w2, h2, kw2, kh2)))
        << w1 << "x" << h1 << "/" << kw1 << "x" << kh1 << " vs " << w2 << "x" << h2 << "/" << kw2 << "x" << kh2;
  }
}

TEST(Gas, FullSizeKernelLeavesOnePlacement) {
  // recorded behaviour: the estimate peaks near half-size kernels
  EXPECT_EQ(op_counts(image(200, 200, 200, 200)).comparisons, 0u);
  EXPECT_GT(estimate_gas(image(200, 200, 100, 100)), estimate_gas(image(200, 200, 200, 200)));
}

// ---- bench -----------------------------------------------------------------

TEST(Bench, ConstantProofSizeAndStableOutputs) {
  std::vector<AppSpec> specs;
  for (AppKind k : {AppKind::matmul, AppKind::multipoly, AppKind::floyd_warshall}) specs.push_back(desk_scale(k));
  specs.push_back(image(6, 6, 3, 3));
  const BenchReport r = bench(specs, 3, 5);
  ASSERT_EQ(r.rows.size(), 12u);
  std::map<std::string, std::set<std::string>> digests;
  for (const BenchRow& row : r.rows) {
    EXPECT_EQ(row.proof_bytes, kProofBytes);
    EXPECT_TRUE(row.verified);
    digests[row.app + row.size].insert(row.proof_digest);
  }
  for (const auto& [cell, d] : digests) EXPECT_EQ(d.size(), 1u) << cell;
  const auto cells = r.cells();
  ASSERT_EQ(cells.size(), 4u);
  for (const BenchCell& c : cells) {
    EXPECT_EQ(c.reps, 3u);
    EXPECT_EQ(c.proof_bytes, kProofBytes);
  }
}

TEST(Bench, SameSeedSameProofs) {
  const std::vector<AppSpec> specs = {desk_scale(AppKind::multipoly)};
  const BenchReport a = bench(specs, 1, 7), b = bench(specs, 1, 7), c = bench(specs, 1, 8);
  EXPECT_EQ(a.rows[0].proof_digest, b.rows[0].proof_digest);
  EXPECT_NE(a.rows[0].proof_digest, c.rows[0].proof_digest);
}

TEST(Bench, LargerMatmulTakesLongerToProve) {
  const BenchReport r = bench({{MatmulParams{4}, Field()}, {MatmulParams{8}, Field()}}, 3, 1);
  const auto cells = r.cells();
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].size, "4x4");
  EXPECT_GT(cells[1].proofgen_s.mean, cells[0].proofgen_s.mean);
}

TEST(Bench, CsvAndTable) {
  const BenchReport r = bench({{MatmulParams{2}, Field()}}, 2, 1);
  std::ostringstream csv, table;
  r.write_csv(csv);
  r.write_table(table);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "app,size,rep,keygen_s,proofgen_s,verify_ms,proof_bytes");
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("matmul,2x2,0,", 0), 0u) << row;
  EXPECT_EQ(row.substr(row.rfind(',') + 1), "79");
  EXPECT_NE(table.str().find("±"), std::string::npos);

  std::ostringstream single;
  bench({{MatmulParams{2}, Field()}}, 1, 1).write_table(single);
  EXPECT_EQ(single.str().find("±"), std::string::npos);
}

TEST(Bench, Summary) {
  const Stat s = summarize({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.stddev, 1.0);
  EXPECT_DOUBLE_EQ(summarize({4.0}).stddev, 0.0);
}

TEST(Bench, NeedsAtLeastOneRep) {
  EXPECT_EQ(code_of([] { bench({desk_scale(AppKind::matmul)}, 0, 1); }), ErrorCode::InvalidParameters);
}

}  // namespace
