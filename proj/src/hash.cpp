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

#include "cic/hash.hpp"

#include <openssl/sha.h>

#include <array>

#include "byte_io.hpp"
#include "cic/error.hpp"

namespace cic {

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(bytes.data(), bytes.size(), digest.data());
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * digest.size());
  for (unsigned char c : digest) {
    out.push_back(kHex[c >> 4]);
    out.push_back(kHex[c & 0xf]);
  }
  return out;
}

std::string sha256_hex(std::string_view text) {
  return sha256_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::vector<std::uint8_t> encode_values(std::span<const std::uint64_t> values) {
  detail::ByteWriter w;
  w.u32(static_cast<std::uint32_t>(values.size()));
  for (std::uint64_t v : values) w.u64(v);
  return std::move(w).take();
}

std::vector<std::uint64_t> decode_values(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes);
  const std::uint32_t n = r.u32();
  if (r.remaining() != std::size_t{n} * 8) throw Error(ErrorCode::LengthMismatch, "value vector length");
  std::vector<std::uint64_t> out(n);
  for (auto& v : out) v = r.u64();
  return out;
}

}  // namespace cic
