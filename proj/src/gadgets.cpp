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

#include "cic/gadgets.hpp"

#include <string>

namespace cic::gadgets {

std::vector<Wire> bit_decompose(CircuitBuilder& b, Wire x, std::uint32_t width) {
  if (width == 0 || width > kMaxBitWidth || (std::uint64_t{1} << width) >= b.field().modulus()) {
    throw Error(ErrorCode::WidthTooLarge,
                "cannot decompose into " + std::to_string(width) + " bits in Z_" +
                    std::to_string(b.field().modulus()));
  }
  std::vector<Wire> bits = b.hint_bits(x, width);
  for (Wire bit : bits) b.assert_boolean(bit);

  Wire sum = bits[0];
  for (std::uint32_t i = 1; i < width; ++i) sum = b.add(sum, b.scale(bits[i], std::uint64_t{1} << i));
  b.assert_equal(sum, x);
  return bits;
}

Wire less_than(CircuitBuilder& b, Wire x, Wire y, std::uint32_t width) {
  if (width >= kMaxBitWidth) {
    throw Error(ErrorCode::WidthTooLarge, "comparison width " + std::to_string(width) + " too large");
  }
  const Wire shifted = b.add_constant(b.sub(y, x), (std::uint64_t{1} << width) - 1);
  return bit_decompose(b, shifted, width + 1)[width];
}

Wire select(CircuitBuilder& b, Wire flag, Wire if_true, Wire if_false) {
  return b.add(b.mul(flag, b.sub(if_true, if_false)), if_false);
}

Wire min(CircuitBuilder& b, Wire x, Wire y, std::uint32_t width) {
  return select(b, less_than(b, x, y, width), x, y);
}

Wire is_zero(CircuitBuilder& b, Wire x) {
  // x * inv = 1 - z and x * z = 0 force z = [x == 0].
  const Wire inv = b.hint_inverse(x);
  const Wire prod = b.mul(x, inv);
  const Wire z = b.sub(b.one(), prod);
  b.assert_product(x, z, b.constant(0));
  return z;
}

Wire is_equal(CircuitBuilder& b, Wire x, Wire y) { return is_zero(b, b.sub(x, y)); }

}  // namespace cic::gadgets
