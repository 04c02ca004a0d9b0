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

#ifndef CIC_QAP_HPP_
#define CIC_QAP_HPP_

#include <cstdint>
#include <vector>

#include "cic/polynomial.hpp"
#include "cic/r1cs.hpp"

namespace cic {

/// Value of one wire's basis polynomial at one evaluation point.
struct ColumnEntry {
  std::uint32_t constraint;
  std::uint64_t coeff;
};

/// Quadratic arithmetic program over the evaluation points 1, 2, ..., m.
///
/// Each wire j owns three polynomials v_j, w_j, y_j of degree < m with
/// v_j(i + 1) = A_i[j] (likewise B and C). They are held in Lagrange form,
/// as the sparse columns of the constraint matrices; v_poly() and friends
/// materialize coefficient form on demand. The target polynomial is
/// t(x) = (x - 1)(x - 2)...(x - m).
struct QuadraticProgram {
  Field field;
  std::uint32_t num_constraints = 0;
  std::uint32_t wire_count = 0;
  std::uint32_t num_public_inputs = 0;
  std::uint32_t num_public_outputs = 0;
  std::vector<std::vector<ColumnEntry>> v_cols;
  std::vector<std::vector<ColumnEntry>> w_cols;
  std::vector<std::vector<ColumnEntry>> y_cols;
  Polynomial target;
  /// 1 / t'(i + 1): barycentric weight of point i + 1.
  std::vector<std::uint64_t> weights;

  std::uint32_t num_io() const noexcept { return num_public_inputs + num_public_outputs; }
  std::uint64_t eval_point(std::uint32_t i) const noexcept { return i + 1; }
  std::vector<std::uint64_t> eval_points() const;

  Polynomial v_poly(Wire j) const;
  Polynomial w_poly(Wire j) const;
  Polynomial y_poly(Wire j) const;

  /// L_i(x) for every evaluation point i, where L_i is the Lagrange basis
  /// polynomial that is 1 at point i + 1 and 0 at the others.
  std::vector<std::uint64_t> lagrange_at(std::uint64_t x) const;
};

/// Throws EmptySystem for zero constraints and InvalidParameters when the
/// field has no room for m distinct nonzero evaluation points.
QuadraticProgram r1cs_to_qap(const ConstraintSystem& cs);

/// Interpolates the constraint-wise values of a column family.
Polynomial interpolate_column(const QuadraticProgram& qap,
                              const std::vector<std::vector<ColumnEntry>>& cols, Wire j);

struct QuotientResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// p(x) = (sum w_j v_j)(sum w_j w_j) - (sum w_j y_j), divided by t(x).
/// Never throws on an unsatisfying witness; the remainder tells.
QuotientResult divide_by_target(const QuadraticProgram& qap, const Witness& w);

/// h(x) with p = h * t. Throws NotDivisible for a nonzero remainder and
/// LengthMismatch for a witness of the wrong length.
Polynomial compute_quotient(const QuadraticProgram& qap, const Witness& w);

}  // namespace cic

#endif  // CIC_QAP_HPP_
