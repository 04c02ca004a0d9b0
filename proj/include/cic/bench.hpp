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

#ifndef CIC_BENCH_HPP_
#define CIC_BENCH_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cic/apps.hpp"

namespace cic {

struct BenchRow {
  std::string app;
  std::string size;
  std::size_t rep = 0;
  double keygen_s = 0;    // circuit compilation and setup
  double proofgen_s = 0;  // witness evaluation and proving
  double verify_ms = 0;   // proof decoding and verification
  std::size_t proof_bytes = 0;
  bool verified = false;
  std::string proof_digest;
};

struct Stat {
  double mean = 0;
  double stddev = 0;  // sample std; only meaningful with two or more reps
};

struct BenchCell {
  std::string app;
  std::string size;
  std::size_t reps = 0;
  Stat keygen_s;
  Stat proofgen_s;
  Stat verify_ms;
  std::size_t proof_bytes = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::vector<BenchCell> cells() const;
  void write_csv(std::ostream& os) const;
  void write_table(std::ostream& os) const;
};

inline constexpr const char* kBenchCsvHeader = "app,size,rep,keygen_s,proofgen_s,verify_ms,proof_bytes";

Stat summarize(const std::vector<double>& xs);

/// Runs setup, prove and verify `reps` times per spec. Each spec gets one
/// fixed input and key seed, so repetitions differ only in timing.
BenchReport bench(const std::vector<AppSpec>& specs, std::size_t reps, std::uint64_t seed);

}  // namespace cic

#endif  // CIC_BENCH_HPP_
