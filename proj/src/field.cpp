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

#include "cic/field.hpp"

#include <array>
#include <string>

namespace cic {

namespace detail {

namespace {

std::uint64_t powmod_generic(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover every 64-bit integer.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod_generic(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

Field::Field(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63) || !detail::is_prime_u64(p)) {
    throw Error(ErrorCode::InvalidParameters,
                "field modulus must be a prime below 2^63, got " + std::to_string(p));
  }
}

std::uint64_t Field::from_signed(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  // -(v + 1) avoids overflow at INT64_MIN.
  const std::uint64_t mag = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
  return neg(mag);
}

std::uint64_t Field::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t r = 1 % p_;
  std::uint64_t b = base % p_;
  while (exp != 0) {
    if (exp & 1) r = mul(r, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorCode::InversionOfZero, "zero has no multiplicative inverse");
  return pow(a, p_ - 2);
}

FieldElement Field::element(std::uint64_t v) const { return FieldElement(v, *this); }
FieldElement Field::zero() const { return FieldElement(0, *this); }
FieldElement Field::one() const { return FieldElement(1, *this); }

Field FieldElement::field() const {
  if (p_ == kMersenne61) return Field();
  return Field(p_);
}

void FieldElement::require_same(const FieldElement& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorCode::ModulusMismatch,
                "operands from Z_" + std::to_string(p_) + " and Z_" + std::to_string(o.p_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {detail::addmod(value_, o.value_, p_), p_, Raw{}};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {detail::submod(value_, o.value_, p_), p_, Raw{}};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {detail::mulmod(value_, o.value_, p_), p_, Raw{}};
}

FieldElement FieldElement::operator-() const noexcept {
  return {value_ == 0 ? 0 : p_ - value_, p_, Raw{}};
}

FieldElement FieldElement::pow(std::uint64_t exp) const noexcept {
  std::uint64_t r = 1 % p_;
  std::uint64_t b = value_;
  while (exp != 0) {
    if (exp & 1) r = detail::mulmod(r, b, p_);
    b = detail::mulmod(b, b, p_);
    exp >>= 1;
  }
  return {r, p_, Raw{}};
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw Error(ErrorCode::InversionOfZero, "zero has no multiplicative inverse");
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value(); }

}  // namespace cic
