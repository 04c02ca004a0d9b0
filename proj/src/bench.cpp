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

#include "cic/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "cic/hash.hpp"
#include "cic/proof_system.hpp"
#include "cic/qap.hpp"
#include "cic/r1cs.hpp"

namespace cic {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string mean_std(const Stat& s, std::size_t reps, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << s.mean;
  if (reps >= 2) os << "±" << s.stddev;
  return os.str();
}

}  // namespace

Stat summarize(const std::vector<double>& xs) {
  Stat s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() >= 2) {
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

BenchReport bench(const std::vector<AppSpec>& specs, std::size_t reps, std::uint64_t seed) {
  if (reps == 0) throw Error(ErrorCode::InvalidParameters, "bench needs at least one repetition");
  BenchReport report;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const AppSpec& spec = specs[s];
    std::mt19937_64 input_rng(seed + s);
    const std::vector<std::uint64_t> inputs = random_inputs(spec, input_rng);
    const std::uint64_t key_seed = seed ^ (0x9e3779b97f4a7c15ULL * (s + 1));
    for (std::size_t rep = 0; rep < reps; ++rep) {
      BenchRow row;
      row.app = std::string(spec.name());
      row.size = spec.size_label();
      row.rep = rep;

      auto t0 = Clock::now();
      const ArithmeticCircuit circuit = build_app(spec);
      const QuadraticProgram qap = r1cs_to_qap(to_r1cs(circuit));
      const KeyPair keys = setup(qap, key_seed);
      row.keygen_s = seconds_since(t0);

      t0 = Clock::now();
      const Witness w = evaluate_circuit(circuit, inputs);
      const Proof proof = prove(keys.ek, qap, w);
      row.proofgen_s = seconds_since(t0);

      const Bytes bytes = serialize(proof);
      const auto io = w.public_io(circuit.num_public_inputs, circuit.num_public_outputs);
      t0 = Clock::now();
      row.verified = verify(keys.vk, io, bytes);
      row.verify_ms = 1e3 * seconds_since(t0);

      row.proof_bytes = bytes.size();
      row.proof_digest = sha256_hex(bytes);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<BenchCell> BenchReport::cells() const {
  std::vector<BenchCell> out;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    std::vector<double> k, p, v;
    while (j < rows.size() && rows[j].app == rows[i].app && rows[j].size == rows[i].size) {
      k.push_back(rows[j].keygen_s);
      p.push_back(rows[j].proofgen_s);
      v.push_back(rows[j].verify_ms);
      ++j;
    }
    out.push_back(BenchCell{rows[i].app, rows[i].size, j - i, summarize(k), summarize(p), summarize(v),
                            rows[i].proof_bytes});
    i = j;
  }
  return out;
}

void BenchReport::write_csv(std::ostream& os) const {
  os << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.app << ',' << r.size << ',' << r.rep << ',' << std::setprecision(9) << r.keygen_s << ','
       << r.proofgen_s << ',' << r.verify_ms << ',' << r.proof_bytes << '\n';
  }
}

void BenchReport::write_table(std::ostream& os) const {
  const std::vector<std::string> header = {"app", "size", "reps", "KeyGen (s)", "ProofGen (s)", "Verify (ms)",
                                           "proof bytes"};
  std::vector<std::vector<std::string>> table;
  for (const auto& c : cells()) {
    table.push_back({c.app, c.size, std::to_string(c.reps), mean_std(c.keygen_s, c.reps, 4),
                     mean_std(c.proofgen_s, c.reps, 4), mean_std(c.verify_ms, c.reps, 4),
                     std::to_string(c.proof_bytes)});
  }
  // "±" is two bytes but one column
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = width(header[c]);
    for (const auto& row : table) widths[c] = std::max(widths[c], width(row[c]));
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      const std::size_t pad = widths[c] - width(row[c]);
      if (c < 2) {
        os << row[c] << std::string(pad, ' ');
      } else {
        os << std::string(pad, ' ') << row[c];
      }
    }
    os << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : widths) total += w;
  os << std::string(total + 2 * (widths.size() - 1), '-') << '\n';
  for (const auto& row : table) emit(row);
}

}  // namespace cic
