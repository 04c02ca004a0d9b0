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

#ifndef CIC_CIRCUIT_HPP_
#define CIC_CIRCUIT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cic/field.hpp"

namespace cic {

using Wire = std::uint32_t;

/// Wire 0 always carries the constant 1.
inline constexpr Wire kOneWire = 0;

enum class GateKind : std::uint8_t { add, mul, const_mul };

/// out = left + right, out = left * right, or out = coeff * left.
struct Gate {
  GateKind kind;
  Wire left;
  Wire right;
  Wire out;
  std::uint64_t coeff = 0;
};

enum class HintKind : std::uint8_t {
  bits,     // little-endian binary digits of the input's canonical value
  inverse,  // input^-1, or 0 when the input is 0
};

/// Non-arithmetic advice computed during evaluation. A hint writes `count`
/// fresh wires starting at `first_out`, and runs just before gate number
/// `position`. Hints carry no constraints of their own; the gadget that
/// emits one also emits the assertions that pin its outputs.
struct Hint {
  HintKind kind;
  Wire input;
  Wire first_out;
  std::uint32_t count;
  std::size_t position;
};

/// value(a) * value(b) == value(c).
struct Assertion {
  Wire a;
  Wire b;
  Wire c;
};

/// Wire layout:
///   0                                  constant one
///   [1, 1 + in)                        public inputs
///   [1 + in, 1 + in + out)             public outputs
///   [1 + in + out, ... + private)      private inputs
///   the rest                           gate and hint outputs
/// Public IO is therefore the contiguous range [1, 1 + in + out).
struct ArithmeticCircuit {
  Field field;
  std::uint32_t num_public_inputs = 0;
  std::uint32_t num_public_outputs = 0;
  std::uint32_t num_private_inputs = 0;
  std::uint32_t wire_count = 1;
  std::vector<Gate> gates;
  std::vector<Hint> hints;
  std::vector<Assertion> assertions;
  /// output_sources[k] is the wire whose value is published as output k.
  std::vector<Wire> output_sources;

  Wire public_input(std::uint32_t i) const noexcept { return 1 + i; }
  Wire public_output(std::uint32_t i) const noexcept { return 1 + num_public_inputs + i; }
  Wire private_input(std::uint32_t i) const noexcept { return 1 + num_io() + i; }
  std::uint32_t num_io() const noexcept { return num_public_inputs + num_public_outputs; }
  std::size_t mul_gate_count() const noexcept;
};

struct Witness {
  Field field;
  std::vector<std::uint64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::uint64_t operator[](std::size_t i) const { return values[i]; }
  /// Public inputs followed by public outputs.
  std::vector<std::uint64_t> public_io(std::uint32_t num_public_inputs,
                                       std::uint32_t num_public_outputs) const;
};

/// Append-only circuit construction. Handles returned by the builder are
/// plain wire indices into the circuit under construction.
class CircuitBuilder {
 public:
  CircuitBuilder(Field field, std::uint32_t num_public_inputs, std::uint32_t num_public_outputs,
                 std::uint32_t num_private_inputs = 0);

  const Field& field() const noexcept { return circuit_.field; }
  Wire one() const noexcept { return kOneWire; }
  Wire public_input(std::uint32_t i) const;
  Wire private_input(std::uint32_t i) const;

  Wire add(Wire a, Wire b);
  Wire mul(Wire a, Wire b);
  Wire scale(Wire a, std::uint64_t c);
  Wire sub(Wire a, Wire b);
  Wire constant(std::uint64_t c);
  Wire add_constant(Wire a, std::uint64_t c);

  std::vector<Wire> hint_bits(Wire x, std::uint32_t width);
  Wire hint_inverse(Wire x);

  void assert_product(Wire a, Wire b, Wire c);
  void assert_equal(Wire a, Wire b) { assert_product(a, kOneWire, b); }
  void assert_boolean(Wire b) { assert_product(b, b, b); }

  void bind_output(std::uint32_t k, Wire source);

  std::size_t gate_count() const noexcept { return circuit_.gates.size(); }

  /// Throws MalformedCircuit if some output is still unbound.
  ArithmeticCircuit build() &&;

 private:
  Wire fresh();
  void check_readable(Wire w) const;

  ArithmeticCircuit circuit_;
  std::vector<bool> bound_;
};

/// Runs every gate and hint in order and fills in the output wires.
/// Throws InputArityMismatch when the input lists have the wrong length.
Witness evaluate_circuit(const ArithmeticCircuit& c, std::span<const std::uint64_t> public_in,
                         std::span<const std::uint64_t> private_in = {});

}  // namespace cic

#endif  // CIC_CIRCUIT_HPP_
