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

// Rough cost of running an app directly as a contract. The default table
// is calibrated against published contract measurements for image
// matching (about 141-142 million gas at 85x85 with a 3x3 kernel) and is
// dominated by storage of the public inputs and outputs.

#ifndef CIC_GAS_HPP_
#define CIC_GAS_HPP_

#include <cstdint>

#include "cic/apps.hpp"

namespace cic {

/// Ethereum block gas limit at the time of the published measurements.
inline constexpr std::uint64_t kBlockGasLimit = 12'000'000;

struct GasModel {
  std::uint64_t tx_base = 21'000;
  std::uint64_t field_add = 24;
  std::uint64_t field_mul = 32;
  std::uint64_t comparison = 40;
  std::uint64_t storage_write = 20'000;
  std::uint64_t block_gas_limit = kBlockGasLimit;
};

struct OpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t storage_writes = 0;
};

/// Closed-form primitive counts of the plain algorithm. Sizes are taken
/// as given, so degenerate ones (n = 0) are allowed and cost nothing.
OpCounts op_counts(const AppSpec& spec);

std::uint64_t estimate_gas(const AppSpec& spec, const GasModel& model = GasModel());

inline double block_ratio(std::uint64_t gas, const GasModel& model = GasModel()) {
  return static_cast<double>(gas) / static_cast<double>(model.block_gas_limit);
}

}  // namespace cic

#endif  // CIC_GAS_HPP_
