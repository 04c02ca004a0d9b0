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

#ifndef CIC_R1CS_HPP_
#define CIC_R1CS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cic/circuit.hpp"

namespace cic {

struct Term {
  Wire wire;
  std::uint64_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse row: sorted by wire, no zero coefficients.
using LinearCombination = std::vector<Term>;

std::uint64_t evaluate(const Field& f, const LinearCombination& lc,
                       const std::vector<std::uint64_t>& assignment);

/// <a, s> * <b, s> = <c, s>
struct Constraint {
  LinearCombination a;
  LinearCombination b;
  LinearCombination c;
};

struct ConstraintSystem {
  Field field;
  std::vector<Constraint> constraints;
  std::uint32_t wire_count = 1;
  std::uint32_t num_public_inputs = 0;
  std::uint32_t num_public_outputs = 0;

  std::uint32_t num_io() const noexcept { return num_public_inputs + num_public_outputs; }
  std::size_t size() const noexcept { return constraints.size(); }
};

/// One constraint per mul gate (in gate order), then one per assertion, then
/// one binding constraint per public output. An output fed straight from a
/// mul gate needs no binding: that gate's constraint names the output wire.
/// Additions and constant multiplications fold into the linear combinations,
/// so the wires they produce appear in no constraint.
ConstraintSystem to_r1cs(const ArithmeticCircuit& c);

/// Throws LengthMismatch when the witness has the wrong length.
bool check_r1cs(const ConstraintSystem& cs, const Witness& w);

/// Indices of constraints the witness violates.
std::vector<std::size_t> violated_constraints(const ConstraintSystem& cs, const Witness& w);

/// Wires that occur in at least one constraint, ascending.
std::vector<Wire> constrained_wires(const ConstraintSystem& cs);

/// Line-oriented dump: one constraint per line, `A | B | C`, each side a
/// space-separated list of `wire:coeff` pairs.
void write_r1cs(std::ostream& os, const ConstraintSystem& cs);
std::string dump_r1cs(const ConstraintSystem& cs);

}  // namespace cic

#endif  // CIC_R1CS_HPP_
