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

#include "cic/circuit.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cic {

std::size_t ArithmeticCircuit::mul_gate_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::mul; }));
}

std::vector<std::uint64_t> Witness::public_io(std::uint32_t num_public_inputs,
                                              std::uint32_t num_public_outputs) const {
  const std::size_t n = std::size_t{num_public_inputs} + num_public_outputs;
  if (values.size() < 1 + n) throw Error(ErrorCode::LengthMismatch, "witness shorter than its IO range");
  return {values.begin() + 1, values.begin() + 1 + static_cast<std::ptrdiff_t>(n)};
}

CircuitBuilder::CircuitBuilder(Field field, std::uint32_t num_public_inputs,
                               std::uint32_t num_public_outputs, std::uint32_t num_private_inputs) {
  circuit_.field = field;
  circuit_.num_public_inputs = num_public_inputs;
  circuit_.num_public_outputs = num_public_outputs;
  circuit_.num_private_inputs = num_private_inputs;
  circuit_.wire_count = 1 + num_public_inputs + num_public_outputs + num_private_inputs;
  circuit_.output_sources.assign(num_public_outputs, kOneWire);
  bound_.assign(num_public_outputs, false);
}

Wire CircuitBuilder::public_input(std::uint32_t i) const {
  if (i >= circuit_.num_public_inputs) {
    throw Error(ErrorCode::MalformedCircuit, "public input " + std::to_string(i) + " out of range");
  }
  return circuit_.public_input(i);
}

Wire CircuitBuilder::private_input(std::uint32_t i) const {
  if (i >= circuit_.num_private_inputs) {
    throw Error(ErrorCode::MalformedCircuit, "private input " + std::to_string(i) + " out of range");
  }
  return circuit_.private_input(i);
}

Wire CircuitBuilder::fresh() {
  if (circuit_.wire_count == std::numeric_limits<Wire>::max()) {
    throw Error(ErrorCode::MalformedCircuit, "wire index space exhausted");
  }
  return circuit_.wire_count++;
}

void CircuitBuilder::check_readable(Wire w) const {
  const bool is_output = w >= 1 + circuit_.num_public_inputs && w < 1 + circuit_.num_io();
  if (w >= circuit_.wire_count || is_output) {
    throw Error(ErrorCode::MalformedCircuit, "wire " + std::to_string(w) + " is not readable");
  }
}

Wire CircuitBuilder::add(Wire a, Wire b) {
  check_readable(a);
  check_readable(b);
  const Wire out = fresh();
  circuit_.gates.push_back({GateKind::add, a, b, out, 0});
  return out;
}

Wire CircuitBuilder::mul(Wire a, Wire b) {
  check_readable(a);
  check_readable(b);
  const Wire out = fresh();
  circuit_.gates.push_back({GateKind::mul, a, b, out, 0});
  return out;
}

Wire CircuitBuilder::scale(Wire a, std::uint64_t c) {
  check_readable(a);
  const Wire out = fresh();
  circuit_.gates.push_back({GateKind::const_mul, a, a, out, circuit_.field.reduce(c)});
  return out;
}

Wire CircuitBuilder::sub(Wire a, Wire b) {
  return add(a, scale(b, circuit_.field.neg(1)));
}

Wire CircuitBuilder::constant(std::uint64_t c) { return scale(kOneWire, c); }

Wire CircuitBuilder::add_constant(Wire a, std::uint64_t c) { return add(a, constant(c)); }

std::vector<Wire> CircuitBuilder::hint_bits(Wire x, std::uint32_t width) {
  check_readable(x);
  const Wire first = circuit_.wire_count;
  for (std::uint32_t i = 0; i < width; ++i) fresh();
  circuit_.hints.push_back({HintKind::bits, x, first, width, circuit_.gates.size()});
  std::vector<Wire> out(width);
  for (std::uint32_t i = 0; i < width; ++i) out[i] = first + i;
  return out;
}

Wire CircuitBuilder::hint_inverse(Wire x) {
  check_readable(x);
  const Wire out = fresh();
  circuit_.hints.push_back({HintKind::inverse, x, out, 1, circuit_.gates.size()});
  return out;
}

void CircuitBuilder::assert_product(Wire a, Wire b, Wire c) {
  check_readable(a);
  check_readable(b);
  check_readable(c);
  circuit_.assertions.push_back({a, b, c});
}

void CircuitBuilder::bind_output(std::uint32_t k, Wire source) {
  if (k >= circuit_.num_public_outputs) {
    throw Error(ErrorCode::MalformedCircuit, "output " + std::to_string(k) + " out of range");
  }
  check_readable(source);
  circuit_.output_sources[k] = source;
  bound_[k] = true;
}

ArithmeticCircuit CircuitBuilder::build() && {
  for (std::size_t k = 0; k < bound_.size(); ++k) {
    if (!bound_[k]) throw Error(ErrorCode::MalformedCircuit, "output " + std::to_string(k) + " unbound");
  }
  return std::move(circuit_);
}

namespace {

void run_hint(const Field& f, const Hint& h, std::vector<std::uint64_t>& w) {
  const std::uint64_t x = w[h.input];
  switch (h.kind) {
    case HintKind::bits:
      for (std::uint32_t i = 0; i < h.count; ++i) w[h.first_out + i] = i < 64 ? (x >> i) & 1 : 0;
      break;
    case HintKind::inverse:
      w[h.first_out] = x == 0 ? 0 : f.inv(x);
      break;
  }
}

}  // namespace

Witness evaluate_circuit(const ArithmeticCircuit& c, std::span<const std::uint64_t> public_in,
                         std::span<const std::uint64_t> private_in) {
  if (public_in.size() != c.num_public_inputs || private_in.size() != c.num_private_inputs) {
    throw Error(ErrorCode::InputArityMismatch,
                "expected " + std::to_string(c.num_public_inputs) + " public and " +
                    std::to_string(c.num_private_inputs) + " private inputs, got " +
                    std::to_string(public_in.size()) + " and " + std::to_string(private_in.size()));
  }
  const Field& f = c.field;
  Witness wit{f, std::vector<std::uint64_t>(c.wire_count, 0)};
  auto& w = wit.values;
  w[kOneWire] = 1 % f.modulus();
  for (std::uint32_t i = 0; i < c.num_public_inputs; ++i) w[c.public_input(i)] = f.reduce(public_in[i]);
  for (std::uint32_t i = 0; i < c.num_private_inputs; ++i) w[c.private_input(i)] = f.reduce(private_in[i]);

  std::size_t next_hint = 0;
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    while (next_hint < c.hints.size() && c.hints[next_hint].position <= g) run_hint(f, c.hints[next_hint++], w);
    const Gate& gate = c.gates[g];
    switch (gate.kind) {
      case GateKind::add: w[gate.out] = f.add(w[gate.left], w[gate.right]); break;
      case GateKind::mul: w[gate.out] = f.mul(w[gate.left], w[gate.right]); break;
      case GateKind::const_mul: w[gate.out] = f.mul(gate.coeff, w[gate.left]); break;
    }
  }
  while (next_hint < c.hints.size()) run_hint(f, c.hints[next_hint++], w);

  for (std::uint32_t k = 0; k < c.num_public_outputs; ++k) w[c.public_output(k)] = w[c.output_sources[k]];
  return wit;
}

}  // namespace cic
