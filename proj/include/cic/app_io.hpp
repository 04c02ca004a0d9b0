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

// Text format for application inputs. One `key = value` per line, `#`
// starts a comment, and a line without `=` continues the previous key's
// value list. Arrays are whitespace separated and row-major.
//
//   app = floyd_warshall
//   n = 3
//   bitwidth = 16
//   weights = 0 1 inf
//             inf 0 1
//             inf inf 0
//
// Keys per app:
//   matmul          n, a, b
//   image_match     width, height, kernel_width, kernel_height, bitwidth, image, kernel
//   multipoly       degree, vars, coeffs, x
//   floyd_warshall  n, bitwidth, weights ("inf" is the no-edge sentinel)
// Common optional keys: modulus, fee, collateral, max_duration.

#ifndef CIC_APP_IO_HPP_
#define CIC_APP_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cic/apps.hpp"

namespace cic {

struct AppInput {
  AppSpec spec;
  std::vector<std::uint64_t> inputs;
  std::optional<std::uint64_t> fee;
  std::optional<std::uint64_t> collateral;
  std::optional<std::uint64_t> max_duration;
};

/// Throws MalformedInput on syntax errors, unknown keys or missing arrays;
/// the parsed spec and values are then validated as by validate_inputs.
AppInput parse_app_input(std::string_view text);
std::string format_app_input(const AppInput& in);

AppInput read_app_input(const std::string& path);

}  // namespace cic

#endif  // CIC_APP_IO_HPP_
