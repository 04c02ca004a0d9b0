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

#ifndef CIC_GROUP_HPP_
#define CIC_GROUP_HPP_

#include <cstdint>

#include "cic/field.hpp"

namespace cic {

enum class GroupTag : std::uint8_t { g1 = 1, g2 = 2, gt = 3 };

/// g^exponent in the group named by tag.
struct GroupElement {
  GroupTag tag = GroupTag::g1;
  std::uint64_t exponent = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Operation counters for the calling thread.
struct GroupCounters {
  std::uint64_t group_ops = 0;  // scalar multiplications, additions, GT products
  std::uint64_t pairings = 0;
};

GroupCounters& group_counters() noexcept;
void reset_group_counters() noexcept;

/// Insecure stand-in for a bilinear group of prime order p. An element is
/// represented by its discrete logarithm, so the pairing is exponent
/// multiplication: e(g1^a, g2^b) = gt^(ab). Every algebraic relation of a
/// real pairing holds exactly; hiding does not.
class MockPairingGroup {
 public:
  static constexpr std::uint8_t kBackendId = 0x01;

  explicit MockPairingGroup(Field field = Field()) : field_(field) {}

  const Field& field() const noexcept { return field_; }
  std::uint64_t order() const noexcept { return field_.modulus(); }

  GroupElement generator(GroupTag tag) const noexcept { return {tag, 1 % order()}; }
  GroupElement identity(GroupTag tag) const noexcept { return {tag, 0}; }

  /// generator(tag)^k without counting; used while building keys.
  GroupElement encode(GroupTag tag, std::uint64_t k) const noexcept { return {tag, field_.reduce(k)}; }

  GroupElement scalar_mul(const GroupElement& e, std::uint64_t k) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement pairing(const GroupElement& a, const GroupElement& b) const;
  GroupElement gt_mul(const GroupElement& a, const GroupElement& b) const { return add(a, b); }

  /// True when the element is well formed for this group.
  bool contains(const GroupElement& e) const noexcept { return e.exponent < order(); }

 private:
  Field field_;
};

}  // namespace cic

#endif  // CIC_GROUP_HPP_
