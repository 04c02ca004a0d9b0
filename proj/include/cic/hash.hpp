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

#ifndef CIC_HASH_HPP_
#define CIC_HASH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cic {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

/// Fixed-width big-endian encoding of a vector of field values; the form
/// that result and input commitments hash.
std::vector<std::uint8_t> encode_values(std::span<const std::uint64_t> values);
std::vector<std::uint64_t> decode_values(std::span<const std::uint8_t> bytes);

inline std::string commit_values(std::span<const std::uint64_t> values) {
  return sha256_hex(encode_values(values));
}

}  // namespace cic

#endif  // CIC_HASH_HPP_
