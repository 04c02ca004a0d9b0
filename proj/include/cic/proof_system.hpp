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

// Pinocchio-style QAP argument: client-side key generation, worker-side
// proof generation, and constant-pairing verification.

#ifndef CIC_PROOF_SYSTEM_HPP_
#define CIC_PROOF_SYSTEM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cic/group.hpp"
#include "cic/qap.hpp"

namespace cic {

using Bytes = std::vector<std::uint8_t>;

/// Keys for the non-IO ("mid") wires [1 + num_io, wire_count). All
/// per-wire vectors are indexed by (wire - first_mid_wire()).
struct EvaluationKey {
  Field field;
  std::uint32_t wire_count = 0;
  std::uint32_t num_io = 0;
  std::vector<GroupElement> v;        // G1: r_v v_k(s)
  std::vector<GroupElement> w;        // G2: r_w w_k(s)
  std::vector<GroupElement> y;        // G1: r_y y_k(s)
  std::vector<GroupElement> v_alpha;  // G1: alpha_v r_v v_k(s)
  std::vector<GroupElement> w_alpha;  // G2: alpha_w r_w w_k(s)
  std::vector<GroupElement> y_alpha;  // G1: alpha_y r_y y_k(s)
  std::vector<GroupElement> beta;     // G1: beta (r_v v_k + r_w w_k + r_y y_k)(s)
  std::vector<GroupElement> powers;   // G2: s^i, i = 0..m

  Wire first_mid_wire() const noexcept { return 1 + num_io; }
  std::size_t num_mid() const noexcept { return v.size(); }

  friend bool operator==(const EvaluationKey&, const EvaluationKey&) = default;
};

/// Size depends only on the number of public IO wires.
struct VerificationKey {
  Field field;
  std::uint32_t num_public_inputs = 0;
  std::uint32_t num_public_outputs = 0;
  GroupElement g1;
  GroupElement g2;
  GroupElement alpha_v;         // G2
  GroupElement alpha_w;         // G1
  GroupElement alpha_y;         // G2
  GroupElement gamma;           // G2
  GroupElement beta_gamma_g1;   // G1
  GroupElement beta_gamma_g2;   // G2
  GroupElement target;          // G1: r_y t(s)
  /// Entry 0 is the constant-one wire; entry k is IO wire k.
  std::vector<GroupElement> io_v;  // G1
  std::vector<GroupElement> io_w;  // G2
  std::vector<GroupElement> io_y;  // G1

  std::uint32_t num_io() const noexcept { return num_public_inputs + num_public_outputs; }
  std::size_t element_count() const noexcept { return 9 + io_v.size() + io_w.size() + io_y.size(); }

  friend bool operator==(const VerificationKey&, const VerificationKey&) = default;
};

struct Proof {
  static constexpr std::size_t kElementCount = 8;
  enum Slot : std::size_t { v_mid, w_mid, y_mid, h, v_alpha, w_alpha, y_alpha, beta };
  static constexpr std::array<GroupTag, kElementCount> kTags = {
      GroupTag::g1, GroupTag::g2, GroupTag::g1, GroupTag::g2,
      GroupTag::g1, GroupTag::g2, GroupTag::g1, GroupTag::g1};

  std::array<GroupElement, kElementCount> elements{};

  const GroupElement& operator[](Slot s) const noexcept { return elements[s]; }
  GroupElement& operator[](Slot s) noexcept { return elements[s]; }

  friend bool operator==(const Proof&, const Proof&) = default;
};

struct KeyPair {
  EvaluationKey ek;
  VerificationKey vk;
};

/// Samples the trapdoors from `seed`, builds both keys, and wipes the
/// trapdoors. Throws DegenerateTrapdoor if no usable s turns up.
KeyPair setup(const QuadraticProgram& qap, std::uint64_t seed);

/// Throws UnsatisfyingWitness when the witness does not satisfy the QAP.
Proof prove(const EvaluationKey& ek, const QuadraticProgram& qap, const Witness& w);

/// Folds an arbitrary witness and quotient into proof elements without
/// checking either. prove() is the checked entry point.
Proof assemble_proof(const EvaluationKey& ek, const Witness& w, const Polynomial& quotient);

/// Returns false for a proof that fails any check. Throws LengthMismatch when
/// public_io does not match the key and MalformedProof for ill-formed
/// elements.
bool verify(const VerificationKey& vk, std::span<const std::uint64_t> public_io, const Proof& proof);

/// As above, decoding the proof first; decoding failures surface as
/// MalformedProof.
bool verify(const VerificationKey& vk, std::span<const std::uint64_t> public_io,
            std::span<const std::uint8_t> proof_bytes);

/// Pairings performed by a single verify() call.
inline constexpr std::uint64_t kVerifyPairings = 12;

// Wire format: "CICP" | version | backend id | element count | elements,
// each element a 1-byte group tag followed by an 8-byte big-endian exponent.
inline constexpr std::uint8_t kFormatVersion = 0x01;
inline constexpr std::size_t kEncodedElementSize = 9;
inline constexpr std::size_t kProofBytes = 7 + Proof::kElementCount * kEncodedElementSize;

Bytes serialize(const Proof& p);
/// Throws BadMagic, BadVersion, LengthMismatch, or MalformedProof.
Proof deserialize_proof(std::span<const std::uint8_t> bytes);

Bytes serialize(const VerificationKey& vk);
VerificationKey deserialize_verification_key(std::span<const std::uint8_t> bytes);

Bytes serialize(const EvaluationKey& ek);
EvaluationKey deserialize_evaluation_key(std::span<const std::uint8_t> bytes);

}  // namespace cic

#endif  // CIC_PROOF_SYSTEM_HPP_
