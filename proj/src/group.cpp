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

#include "cic/group.hpp"

namespace cic {

namespace {
thread_local GroupCounters tl_counters;
}  // namespace

GroupCounters& group_counters() noexcept { return tl_counters; }
void reset_group_counters() noexcept { tl_counters = {}; }

GroupElement MockPairingGroup::scalar_mul(const GroupElement& e, std::uint64_t k) const {
  ++tl_counters.group_ops;
  return {e.tag, field_.mul(e.exponent, field_.reduce(k))};
}

GroupElement MockPairingGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.tag != b.tag) throw Error(ErrorCode::MalformedProof, "adding elements of different groups");
  ++tl_counters.group_ops;
  return {a.tag, field_.add(a.exponent, b.exponent)};
}

GroupElement MockPairingGroup::pairing(const GroupElement& a, const GroupElement& b) const {
  if (a.tag != GroupTag::g1 || b.tag != GroupTag::g2) {
    throw Error(ErrorCode::MalformedProof, "pairing expects (G1, G2) arguments");
  }
  ++tl_counters.pairings;
  return {GroupTag::gt, field_.mul(a.exponent, b.exponent)};
}

}  // namespace cic
