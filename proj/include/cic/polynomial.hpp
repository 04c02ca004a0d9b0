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

#ifndef CIC_POLYNOMIAL_HPP_
#define CIC_POLYNOMIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "cic/field.hpp"

namespace cic {

/// Dense univariate polynomial over Z_p, lowest degree first. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients at all.
class Polynomial {
 public:
  static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

  explicit Polynomial(Field field = Field()) : field_(field) {}
  Polynomial(Field field, std::vector<std::uint64_t> coeffs);

  static Polynomial constant(Field field, std::uint64_t c);
  static Polynomial monomial(Field field, std::uint64_t c, std::size_t degree);
  /// Monic polynomial with the given roots.
  static Polynomial from_roots(Field field, std::span<const std::uint64_t> roots);

  const Field& field() const noexcept { return field_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// kZeroDegree for the zero polynomial.
  std::ptrdiff_t degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coeff(std::size_t i) const;

  std::uint64_t evaluate(std::uint64_t x) const noexcept;
  FieldElement evaluate(const FieldElement& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::uint64_t c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() noexcept;
  void require_same(const Polynomial& o) const;

  Field field_;
  std::vector<std::uint64_t> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division; throws DivisionByZeroPolynomial for a zero divisor.
DivMod divmod(const Polynomial& num, const Polynomial& den);

/// Unique polynomial of degree < points.size() through the given points.
/// Throws DuplicateEvaluationPoint when two x coordinates coincide.
Polynomial interpolate(const Field& field,
                       std::span<const std::pair<std::uint64_t, std::uint64_t>> points);

}  // namespace cic

#endif  // CIC_POLYNOMIAL_HPP_
