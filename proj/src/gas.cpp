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

#include "cic/gas.hpp"

namespace cic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

OpCounts op_counts(const AppSpec& spec) {
  return std::visit(
      overloaded{
          [](const MatmulParams& p) {
            const std::uint64_t n = p.n;
            return OpCounts{n * n * (n == 0 ? 0 : n - 1), n * n * n, 0, 3 * n * n};
          },
          [](const ImageMatchParams& p) {
            const std::uint64_t placements = image_placements(p);
            const std::uint64_t k = p.kernel_width * p.kernel_height;
            OpCounts c;
            if (placements > 0) {
              c.adds = placements * (2 * k - 1);  // k subtractions, k - 1 sums
              c.muls = placements * k;
              c.comparisons = placements - 1;
            }
            c.storage_writes = p.width * p.height + k + 3;
            return c;
          },
          [](const MultipolyParams& p) {
            // nested Horner: m mul-adds per inner evaluation, (m+1)^l of them at depth l
            std::uint64_t evals = 0;
            for (std::uint64_t l = 0; l < p.vars; ++l) evals += ipow(p.degree + 1, l);
            const std::uint64_t ops = p.degree * evals;
            return OpCounts{ops, ops, 0, ipow(p.degree + 1, p.vars) + p.vars + 1};
          },
          [](const FloydWarshallParams& p) {
            const std::uint64_t n = p.n;
            return OpCounts{n * n * n, 0, n * n * n, 2 * n * n};
          },
      },
      spec.params);
}

std::uint64_t estimate_gas(const AppSpec& spec, const GasModel& model) {
  const OpCounts c = op_counts(spec);
  return model.tx_base + c.adds * model.field_add + c.muls * model.field_mul + c.comparisons * model.comparison +
         c.storage_writes * model.storage_write;
}

}  // namespace cic
