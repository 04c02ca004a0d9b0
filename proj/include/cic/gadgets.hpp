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

#ifndef CIC_GADGETS_HPP_
#define CIC_GADGETS_HPP_

#include <cstdint>
#include <vector>

#include "cic/circuit.hpp"

namespace cic::gadgets {

/// Largest accepted decomposition width.
inline constexpr std::uint32_t kMaxBitWidth = 60;

/// Splits x into `width` boolean wires, least significant first. Emits one
/// booleanity constraint per bit and one recomposition constraint.
/// Throws WidthTooLarge when width > kMaxBitWidth or 2^width >= p.
std::vector<Wire> bit_decompose(CircuitBuilder& b, Wire x, std::uint32_t width);

/// 1 iff x < y as integers, for x, y < 2^width. The top bit of
/// (y - x - 1 + 2^width), taken over width + 1 bits, is the answer.
Wire less_than(CircuitBuilder& b, Wire x, Wire y, std::uint32_t width);

/// flag ? if_true : if_false, for boolean flag. One multiplication.
Wire select(CircuitBuilder& b, Wire flag, Wire if_true, Wire if_false);

/// min(x, y) for x, y < 2^width.
Wire min(CircuitBuilder& b, Wire x, Wire y, std::uint32_t width);

/// 1 iff x == 0.
Wire is_zero(CircuitBuilder& b, Wire x);

/// 1 iff x == y.
Wire is_equal(CircuitBuilder& b, Wire x, Wire y);

}  // namespace cic::gadgets

#endif  // CIC_GADGETS_HPP_
