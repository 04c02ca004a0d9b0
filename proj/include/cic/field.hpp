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

#ifndef CIC_FIELD_HPP_
#define CIC_FIELD_HPP_

#include <cstdint>
#include <ostream>

#include "cic/error.hpp"

namespace cic {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {

// Reduction for p = 2^61 - 1: x = hi * 2^61 + lo == hi + lo.
inline std::uint64_t mul_mersenne61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t lo = static_cast<std::uint64_t>(prod) & kMersenne61;
  const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p == kMersenne61) return mul_mersenne61(a, b);
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a + b;  // p < 2^63, so no wraparound
  return r >= p ? r - p : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

bool is_prime_u64(std::uint64_t n);

}  // namespace detail

class FieldElement;

/// The prime field Z_p. Values handled through a Field are raw canonical
/// residues in [0, p); FieldElement is the self-describing wrapper.
class Field {
 public:
  /// Defaults to the Mersenne prime 2^61 - 1.
  Field() noexcept : p_(kMersenne61) {}

  /// Throws InvalidParameters unless p is a prime below 2^63.
  explicit Field(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::uint64_t v) const noexcept { return v % p_; }
  std::uint64_t from_signed(std::int64_t v) const noexcept;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    return detail::addmod(a, b, p_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return detail::submod(a, b, p_);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return detail::mulmod(a, b, p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  /// Throws InversionOfZero for a == 0.
  std::uint64_t inv(std::uint64_t a) const;

  FieldElement element(std::uint64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class FieldElement {
 public:
  FieldElement() noexcept : value_(0), p_(kMersenne61) {}
  FieldElement(std::uint64_t value, const Field& field) noexcept
      : value_(field.reduce(value)), p_(field.modulus()) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_; }
  Field field() const;

  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const noexcept;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement pow(std::uint64_t exp) const noexcept;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.value_ == b.value_ && a.p_ == b.p_;
  }

 private:
  struct Raw {};
  FieldElement(std::uint64_t value, std::uint64_t p, Raw) noexcept : value_(value), p_(p) {}
  void require_same(const FieldElement& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace cic

#endif  // CIC_FIELD_HPP_
