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

#include "cic/proof_system.hpp"

#include <string.h>

#include <random>
#include <string>

#include "byte_io.hpp"

namespace cic {

namespace {

struct Trapdoor {
  std::uint64_t s = 0;
  std::uint64_t r_v = 0;
  std::uint64_t r_w = 0;
  std::uint64_t alpha_v = 0;
  std::uint64_t alpha_w = 0;
  std::uint64_t alpha_y = 0;
  std::uint64_t beta = 0;
  std::uint64_t gamma = 0;

  Trapdoor() = default;
  Trapdoor(const Trapdoor&) = delete;
  Trapdoor& operator=(const Trapdoor&) = delete;
  ~Trapdoor() { explicit_bzero(this, sizeof(*this)); }
};

// Uniform in [0, p) by rejection; independent of the standard library's
// distribution implementations so keys are reproducible everywhere.
std::uint64_t sample(std::mt19937_64& rng, std::uint64_t p) {
  std::uint64_t mask = p - 1;
  for (int s = 1; s < 64; s <<= 1) mask |= mask >> s;
  for (;;) {
    const std::uint64_t x = rng() & mask;
    if (x < p) return x;
  }
}

std::uint64_t sample_nonzero(std::mt19937_64& rng, std::uint64_t p) {
  for (;;) {
    const std::uint64_t x = sample(rng, p);
    if (x != 0) return x;
  }
}

constexpr int kMaxTrapdoorAttempts = 64;

std::uint64_t eval_column(const Field& f, const std::vector<ColumnEntry>& col,
                          const std::vector<std::uint64_t>& lagrange) {
  std::uint64_t acc = 0;
  for (const ColumnEntry& e : col) acc = f.add(acc, f.mul(e.coeff, lagrange[e.constraint]));
  return acc;
}

void check_element(const MockPairingGroup& grp, const GroupElement& e, GroupTag want) {
  if (e.tag != want || !grp.contains(e)) throw Error(ErrorCode::MalformedProof, "ill-formed group element");
}

void put(detail::ByteWriter& w, const GroupElement& e) {
  w.u8(static_cast<std::uint8_t>(e.tag));
  w.u64(e.exponent);
}

GroupElement get(detail::ByteReader& r) {
  const std::uint8_t tag = r.u8();
  if (tag < 1 || tag > 3) throw Error(ErrorCode::MalformedProof, "unknown group tag " + std::to_string(tag));
  return {static_cast<GroupTag>(tag), r.u64()};
}

void put_all(detail::ByteWriter& w, const std::vector<GroupElement>& es) {
  w.u32(static_cast<std::uint32_t>(es.size()));
  for (const auto& e : es) put(w, e);
}

std::vector<GroupElement> get_all(detail::ByteReader& r) {
  const std::uint32_t n = r.u32();
  if (r.remaining() / kEncodedElementSize < n) throw Error(ErrorCode::LengthMismatch, "element count exceeds input");
  std::vector<GroupElement> es(n);
  for (auto& e : es) e = get(r);
  return es;
}

void read_header(detail::ByteReader& r, std::string_view magic) {
  if (!r.match(magic)) throw Error(ErrorCode::BadMagic, "expected " + std::string(magic));
  if (const auto v = r.u8(); v != kFormatVersion) throw Error(ErrorCode::BadVersion, "version " + std::to_string(v));
  if (const auto b = r.u8(); b != MockPairingGroup::kBackendId) {
    throw Error(ErrorCode::MalformedProof, "unknown backend " + std::to_string(b));
  }
}

Field read_field(detail::ByteReader& r) {
  const std::uint64_t p = r.u64();
  return p == kMersenne61 ? Field() : Field(p);
}

void expect_consumed(const detail::ByteReader& r) {
  if (r.remaining() != 0) throw Error(ErrorCode::LengthMismatch, "trailing bytes");
}

}  // namespace

KeyPair setup(const QuadraticProgram& qap, std::uint64_t seed) {
  const Field& f = qap.field;
  const std::uint64_t p = f.modulus();
  const MockPairingGroup grp(f);
  std::mt19937_64 rng(seed);

  Trapdoor td;
  bool found = false;
  for (int attempt = 0; attempt < kMaxTrapdoorAttempts && !found; ++attempt) {
    td.s = sample(rng, p);
    found = td.s > qap.num_constraints;  // not 0 and not an evaluation point
  }
  if (!found) throw Error(ErrorCode::DegenerateTrapdoor, "s keeps landing on an evaluation point");
  td.r_v = sample_nonzero(rng, p);
  td.r_w = sample_nonzero(rng, p);
  td.alpha_v = sample_nonzero(rng, p);
  td.alpha_w = sample_nonzero(rng, p);
  td.alpha_y = sample_nonzero(rng, p);
  td.beta = sample_nonzero(rng, p);
  td.gamma = sample_nonzero(rng, p);
  const std::uint64_t r_y = f.mul(td.r_v, td.r_w);

  const std::vector<std::uint64_t> lagrange = qap.lagrange_at(td.s);
  auto v_at = [&](Wire j) { return eval_column(f, qap.v_cols[j], lagrange); };
  auto w_at = [&](Wire j) { return eval_column(f, qap.w_cols[j], lagrange); };
  auto y_at = [&](Wire j) { return eval_column(f, qap.y_cols[j], lagrange); };

  KeyPair kp;
  EvaluationKey& ek = kp.ek;
  ek.field = f;
  ek.wire_count = qap.wire_count;
  ek.num_io = qap.num_io();
  const std::size_t mid = qap.wire_count - ek.first_mid_wire();
  for (auto* vec : {&ek.v, &ek.w, &ek.y, &ek.v_alpha, &ek.w_alpha, &ek.y_alpha, &ek.beta}) vec->reserve(mid);
  for (Wire j = ek.first_mid_wire(); j < qap.wire_count; ++j) {
    const std::uint64_t vs = f.mul(td.r_v, v_at(j));
    const std::uint64_t ws = f.mul(td.r_w, w_at(j));
    const std::uint64_t ys = f.mul(r_y, y_at(j));
    ek.v.push_back(grp.encode(GroupTag::g1, vs));
    ek.w.push_back(grp.encode(GroupTag::g2, ws));
    ek.y.push_back(grp.encode(GroupTag::g1, ys));
    ek.v_alpha.push_back(grp.encode(GroupTag::g1, f.mul(td.alpha_v, vs)));
    ek.w_alpha.push_back(grp.encode(GroupTag::g2, f.mul(td.alpha_w, ws)));
    ek.y_alpha.push_back(grp.encode(GroupTag::g1, f.mul(td.alpha_y, ys)));
    ek.beta.push_back(grp.encode(GroupTag::g1, f.mul(td.beta, f.add(f.add(vs, ws), ys))));
  }
  ek.powers.reserve(qap.num_constraints + 1);
  std::uint64_t power = 1;
  for (std::uint32_t i = 0; i <= qap.num_constraints; ++i) {
    ek.powers.push_back(grp.encode(GroupTag::g2, power));
    power = f.mul(power, td.s);
  }

  VerificationKey& vk = kp.vk;
  vk.field = f;
  vk.num_public_inputs = qap.num_public_inputs;
  vk.num_public_outputs = qap.num_public_outputs;
  vk.g1 = grp.generator(GroupTag::g1);
  vk.g2 = grp.generator(GroupTag::g2);
  vk.alpha_v = grp.encode(GroupTag::g2, td.alpha_v);
  vk.alpha_w = grp.encode(GroupTag::g1, td.alpha_w);
  vk.alpha_y = grp.encode(GroupTag::g2, td.alpha_y);
  vk.gamma = grp.encode(GroupTag::g2, td.gamma);
  vk.beta_gamma_g1 = grp.encode(GroupTag::g1, f.mul(td.beta, td.gamma));
  vk.beta_gamma_g2 = grp.encode(GroupTag::g2, f.mul(td.beta, td.gamma));
  vk.target = grp.encode(GroupTag::g1, f.mul(r_y, qap.target.evaluate(td.s)));
  for (Wire j = 0; j <= qap.num_io(); ++j) {
    vk.io_v.push_back(grp.encode(GroupTag::g1, f.mul(td.r_v, v_at(j))));
    vk.io_w.push_back(grp.encode(GroupTag::g2, f.mul(td.r_w, w_at(j))));
    vk.io_y.push_back(grp.encode(GroupTag::g1, f.mul(r_y, y_at(j))));
  }
  return kp;
}

Proof assemble_proof(const EvaluationKey& ek, const Witness& w, const Polynomial& quotient) {
  if (w.values.size() != ek.wire_count) throw Error(ErrorCode::LengthMismatch, "witness does not match key");
  if (quotient.size() > ek.powers.size()) throw Error(ErrorCode::LengthMismatch, "quotient degree exceeds key");
  const MockPairingGroup grp(ek.field);
  Proof p;
  for (std::size_t slot = 0; slot < Proof::kElementCount; ++slot) p.elements[slot] = grp.identity(Proof::kTags[slot]);

  auto accumulate = [&](Proof::Slot slot, const GroupElement& base, std::uint64_t k) {
    p[slot] = grp.add(p[slot], grp.scalar_mul(base, k));
  };
  for (std::size_t i = 0; i < ek.num_mid(); ++i) {
    const std::uint64_t s = w.values[ek.first_mid_wire() + i];
    if (s == 0) continue;
    accumulate(Proof::v_mid, ek.v[i], s);
    accumulate(Proof::w_mid, ek.w[i], s);
    accumulate(Proof::y_mid, ek.y[i], s);
    accumulate(Proof::v_alpha, ek.v_alpha[i], s);
    accumulate(Proof::w_alpha, ek.w_alpha[i], s);
    accumulate(Proof::y_alpha, ek.y_alpha[i], s);
    accumulate(Proof::beta, ek.beta[i], s);
  }
  const auto h = quotient.coeffs();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0) accumulate(Proof::h, ek.powers[i], h[i]);
  }
  return p;
}

Proof prove(const EvaluationKey& ek, const QuadraticProgram& qap, const Witness& w) {
  if (ek.wire_count != qap.wire_count || ek.num_io != qap.num_io() || !(ek.field == qap.field)) {
    throw Error(ErrorCode::InvalidParameters, "evaluation key was not generated for this QAP");
  }
  Polynomial h;
  try {
    h = compute_quotient(qap, w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    throw Error(ErrorCode::UnsatisfyingWitness, e.what());
  }
  return assemble_proof(ek, w, h);
}

bool verify(const VerificationKey& vk, std::span<const std::uint64_t> public_io, const Proof& proof) {
  if (public_io.size() != vk.num_io()) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(vk.num_io()) + " public values, got " +
                                               std::to_string(public_io.size()));
  }
  const MockPairingGroup grp(vk.field);
  for (std::size_t slot = 0; slot < Proof::kElementCount; ++slot) {
    check_element(grp, proof.elements[slot], Proof::kTags[slot]);
  }
  for (std::uint64_t x : public_io) {
    if (x >= vk.field.modulus()) return false;  // non-canonical encoding
  }

  // Fold the public values into the mid-wire aggregates.
  GroupElement v_full = grp.add(vk.io_v[0], proof[Proof::v_mid]);
  GroupElement w_full = grp.add(vk.io_w[0], proof[Proof::w_mid]);
  GroupElement y_full = grp.add(vk.io_y[0], proof[Proof::y_mid]);
  for (std::size_t k = 0; k < public_io.size(); ++k) {
    v_full = grp.add(v_full, grp.scalar_mul(vk.io_v[k + 1], public_io[k]));
    w_full = grp.add(w_full, grp.scalar_mul(vk.io_w[k + 1], public_io[k]));
    y_full = grp.add(y_full, grp.scalar_mul(vk.io_y[k + 1], public_io[k]));
  }

  // e(V, W) = e(r_y t(s), H) * e(Y, g2)
  const bool divisible = grp.pairing(v_full, w_full) ==
                         grp.gt_mul(grp.pairing(vk.target, proof[Proof::h]), grp.pairing(y_full, vk.g2));
  const bool v_span = grp.pairing(proof[Proof::v_alpha], vk.g2) == grp.pairing(proof[Proof::v_mid], vk.alpha_v);
  const bool w_span = grp.pairing(vk.alpha_w, proof[Proof::w_mid]) == grp.pairing(vk.g1, proof[Proof::w_alpha]);
  const bool y_span = grp.pairing(proof[Proof::y_alpha], vk.g2) == grp.pairing(proof[Proof::y_mid], vk.alpha_y);
  // e(Z, gamma) = e(V_mid + Y_mid, beta gamma) * e(beta gamma, W_mid)
  const bool consistent =
      grp.pairing(proof[Proof::beta], vk.gamma) ==
      grp.gt_mul(grp.pairing(grp.add(proof[Proof::v_mid], proof[Proof::y_mid]), vk.beta_gamma_g2),
                 grp.pairing(vk.beta_gamma_g1, proof[Proof::w_mid]));
  return divisible && v_span && w_span && y_span && consistent;
}

bool verify(const VerificationKey& vk, std::span<const std::uint64_t> public_io,
            std::span<const std::uint8_t> proof_bytes) {
  Proof proof;
  try {
    proof = deserialize_proof(proof_bytes);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedProof) throw;
    throw Error(ErrorCode::MalformedProof, e.what());
  }
  return verify(vk, public_io, proof);
}

Bytes serialize(const Proof& p) {
  detail::ByteWriter w;
  w.raw("CICP");
  w.u8(kFormatVersion);
  w.u8(MockPairingGroup::kBackendId);
  w.u8(static_cast<std::uint8_t>(Proof::kElementCount));
  for (const auto& e : p.elements) put(w, e);
  return std::move(w).take();
}

Proof deserialize_proof(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes);
  read_header(r, "CICP");
  if (const auto n = r.u8(); n != Proof::kElementCount) {
    throw Error(ErrorCode::MalformedProof, "proof carries " + std::to_string(n) + " elements");
  }
  if (r.remaining() != Proof::kElementCount * kEncodedElementSize) {
    throw Error(ErrorCode::LengthMismatch, "proof body has " + std::to_string(r.remaining()) + " bytes");
  }
  Proof p;
  for (std::size_t slot = 0; slot < Proof::kElementCount; ++slot) {
    p.elements[slot] = get(r);
    if (p.elements[slot].tag != Proof::kTags[slot]) throw Error(ErrorCode::MalformedProof, "wrong group tag");
  }
  return p;
}

Bytes serialize(const VerificationKey& vk) {
  detail::ByteWriter w;
  w.raw("CICV");
  w.u8(kFormatVersion);
  w.u8(MockPairingGroup::kBackendId);
  w.u64(vk.field.modulus());
  w.u32(vk.num_public_inputs);
  w.u32(vk.num_public_outputs);
  for (const auto* e : {&vk.g1, &vk.g2, &vk.alpha_v, &vk.alpha_w, &vk.alpha_y, &vk.gamma, &vk.beta_gamma_g1,
                        &vk.beta_gamma_g2, &vk.target}) {
    put(w, *e);
  }
  put_all(w, vk.io_v);
  put_all(w, vk.io_w);
  put_all(w, vk.io_y);
  return std::move(w).take();
}

VerificationKey deserialize_verification_key(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes);
  read_header(r, "CICV");
  VerificationKey vk;
  vk.field = read_field(r);
  vk.num_public_inputs = r.u32();
  vk.num_public_outputs = r.u32();
  for (auto* e : {&vk.g1, &vk.g2, &vk.alpha_v, &vk.alpha_w, &vk.alpha_y, &vk.gamma, &vk.beta_gamma_g1,
                  &vk.beta_gamma_g2, &vk.target}) {
    *e = get(r);
  }
  vk.io_v = get_all(r);
  vk.io_w = get_all(r);
  vk.io_y = get_all(r);
  expect_consumed(r);
  const std::size_t want = std::size_t{vk.num_io()} + 1;
  if (vk.io_v.size() != want || vk.io_w.size() != want || vk.io_y.size() != want) {
    throw Error(ErrorCode::LengthMismatch, "verification key IO terms do not match IO count");
  }
  return vk;
}

Bytes serialize(const EvaluationKey& ek) {
  detail::ByteWriter w;
  w.raw("CICE");
  w.u8(kFormatVersion);
  w.u8(MockPairingGroup::kBackendId);
  w.u64(ek.field.modulus());
  w.u32(ek.wire_count);
  w.u32(ek.num_io);
  for (const auto* vec : {&ek.v, &ek.w, &ek.y, &ek.v_alpha, &ek.w_alpha, &ek.y_alpha, &ek.beta, &ek.powers}) {
    put_all(w, *vec);
  }
  return std::move(w).take();
}

EvaluationKey deserialize_evaluation_key(std::span<const std::uint8_t> bytes) {
  detail::ByteReader r(bytes);
  read_header(r, "CICE");
  EvaluationKey ek;
  ek.field = read_field(r);
  ek.wire_count = r.u32();
  ek.num_io = r.u32();
  for (auto* vec : {&ek.v, &ek.w, &ek.y, &ek.v_alpha, &ek.w_alpha, &ek.y_alpha, &ek.beta, &ek.powers}) {
    *vec = get_all(r);
  }
  expect_consumed(r);
  if (ek.wire_count < ek.first_mid_wire()) throw Error(ErrorCode::LengthMismatch, "evaluation key wire counts");
  const std::size_t mid = ek.wire_count - ek.first_mid_wire();
  for (const auto* vec : {&ek.v, &ek.w, &ek.y, &ek.v_alpha, &ek.w_alpha, &ek.y_alpha, &ek.beta}) {
    if (vec->size() != mid) throw Error(ErrorCode::LengthMismatch, "evaluation key per-wire terms");
  }
  return ek;
}

}  // namespace cic
