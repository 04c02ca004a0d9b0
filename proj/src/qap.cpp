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

#include "cic/qap.hpp"

#include <array>
#include <string>

namespace cic {

namespace {

// Inverts every entry in place with a single field inversion.
void batch_invert(const Field& f, std::vector<std::uint64_t>& xs) {
  std::vector<std::uint64_t> prefix(xs.size());
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    prefix[i] = acc;
    acc = f.mul(acc, xs[i]);
  }
  std::uint64_t inv = f.inv(acc);
  for (std::size_t i = xs.size(); i-- > 0;) {
    const std::uint64_t x = xs[i];
    xs[i] = f.mul(inv, prefix[i]);
    inv = f.mul(inv, x);
  }
}

// Interpolates up to three value vectors over the points 1..m in one pass:
// each nonzero point costs one synthetic division of t(x) by (x - point).
template <std::size_t N>
std::array<Polynomial, N> interpolate_values(const QuadraticProgram& qap,
                                             const std::array<const std::vector<std::uint64_t>*, N>& values) {
  const Field& f = qap.field;
  const std::size_t m = qap.num_constraints;
  const auto t = qap.target.coeffs();
  std::array<std::vector<std::uint64_t>, N> acc;
  for (auto& a : acc) a.assign(m, 0);
  std::vector<std::uint64_t> q(m, 0);

  for (std::size_t i = 0; i < m; ++i) {
    bool any = false;
    for (std::size_t n = 0; n < N; ++n) any = any || (*values[n])[i] != 0;
    if (!any) continue;
    const std::uint64_t r = qap.eval_point(static_cast<std::uint32_t>(i));
    q[m - 1] = t[m];
    for (std::size_t k = m - 1; k > 0; --k) q[k - 1] = f.add(t[k], f.mul(r, q[k]));
    for (std::size_t n = 0; n < N; ++n) {
      const std::uint64_t v = (*values[n])[i];
      if (v == 0) continue;
      const std::uint64_t scale = f.mul(v, qap.weights[i]);
      auto& a = acc[n];
      for (std::size_t k = 0; k < m; ++k) a[k] = f.add(a[k], f.mul(scale, q[k]));
    }
  }
  std::array<Polynomial, N> out;
  for (std::size_t n = 0; n < N; ++n) out[n] = Polynomial(f, std::move(acc[n]));
  return out;
}

void check_witness(const QuadraticProgram& qap, const Witness& w) {
  if (w.values.size() != qap.wire_count) {
    throw Error(ErrorCode::LengthMismatch, "witness has " + std::to_string(w.values.size()) +
                                               " entries, QAP has " + std::to_string(qap.wire_count) + " wires");
  }
}

}  // namespace

std::vector<std::uint64_t> QuadraticProgram::eval_points() const {
  std::vector<std::uint64_t> pts(num_constraints);
  for (std::uint32_t i = 0; i < num_constraints; ++i) pts[i] = eval_point(i);
  return pts;
}

Polynomial interpolate_column(const QuadraticProgram& qap,
                              const std::vector<std::vector<ColumnEntry>>& cols, Wire j) {
  if (j >= qap.wire_count) throw Error(ErrorCode::LengthMismatch, "wire index out of range");
  std::vector<std::uint64_t> values(qap.num_constraints, 0);
  for (const ColumnEntry& e : cols[j]) values[e.constraint] = e.coeff;
  return interpolate_values<1>(qap, {&values})[0];
}

Polynomial QuadraticProgram::v_poly(Wire j) const { return interpolate_column(*this, v_cols, j); }
Polynomial QuadraticProgram::w_poly(Wire j) const { return interpolate_column(*this, w_cols, j); }
Polynomial QuadraticProgram::y_poly(Wire j) const { return interpolate_column(*this, y_cols, j); }

std::vector<std::uint64_t> QuadraticProgram::lagrange_at(std::uint64_t x) const {
  const Field& f = field;
  x = f.reduce(x);
  std::vector<std::uint64_t> out(num_constraints, 0);
  if (x >= 1 && x <= num_constraints) {
    out[x - 1] = 1;
    return out;
  }
  // L_i(x) = weight_i * t(x) / (x - point_i)
  std::vector<std::uint64_t> diffs(num_constraints);
  std::uint64_t tx = 1;
  for (std::uint32_t i = 0; i < num_constraints; ++i) {
    diffs[i] = f.sub(x, eval_point(i));
    tx = f.mul(tx, diffs[i]);
  }
  batch_invert(f, diffs);
  for (std::uint32_t i = 0; i < num_constraints; ++i) out[i] = f.mul(f.mul(weights[i], tx), diffs[i]);
  return out;
}

QuadraticProgram r1cs_to_qap(const ConstraintSystem& cs) {
  const std::size_t m = cs.constraints.size();
  if (m == 0) throw Error(ErrorCode::EmptySystem, "constraint system has no constraints");
  const Field& f = cs.field;
  if (m >= f.modulus()) {
    throw Error(ErrorCode::InvalidParameters,
                std::to_string(m) + " constraints need a field larger than Z_" + std::to_string(f.modulus()));
  }

  QuadraticProgram qap;
  qap.field = f;
  qap.num_constraints = static_cast<std::uint32_t>(m);
  qap.wire_count = cs.wire_count;
  qap.num_public_inputs = cs.num_public_inputs;
  qap.num_public_outputs = cs.num_public_outputs;
  qap.v_cols.resize(cs.wire_count);
  qap.w_cols.resize(cs.wire_count);
  qap.y_cols.resize(cs.wire_count);
  for (std::uint32_t i = 0; i < m; ++i) {
    const Constraint& k = cs.constraints[i];
    for (const Term& t : k.a) qap.v_cols[t.wire].push_back({i, t.coeff});
    for (const Term& t : k.b) qap.w_cols[t.wire].push_back({i, t.coeff});
    for (const Term& t : k.c) qap.y_cols[t.wire].push_back({i, t.coeff});
  }

  const std::vector<std::uint64_t> points = qap.eval_points();
  qap.target = Polynomial::from_roots(f, points);

  // t'(i) = prod_{j != i} (i - j) = (i - 1)! * (-1)^(m - i) * (m - i)!
  std::vector<std::uint64_t> fact(m, 1);
  for (std::size_t k = 1; k < m; ++k) fact[k] = f.mul(fact[k - 1], k);
  qap.weights.resize(m);
  for (std::size_t i = 1; i <= m; ++i) {
    std::uint64_t d = f.mul(fact[i - 1], fact[m - i]);
    if ((m - i) % 2 == 1) d = f.neg(d);
    qap.weights[i - 1] = d;
  }
  batch_invert(f, qap.weights);
  return qap;
}

QuotientResult divide_by_target(const QuadraticProgram& qap, const Witness& w) {
  check_witness(qap, w);
  const Field& f = qap.field;
  const std::size_t m = qap.num_constraints;
  std::vector<std::uint64_t> a(m, 0), b(m, 0), c(m, 0);
  for (Wire j = 0; j < qap.wire_count; ++j) {
    const std::uint64_t s = w.values[j];
    if (s == 0) continue;
    for (const ColumnEntry& e : qap.v_cols[j]) a[e.constraint] = f.add(a[e.constraint], f.mul(e.coeff, s));
    for (const ColumnEntry& e : qap.w_cols[j]) b[e.constraint] = f.add(b[e.constraint], f.mul(e.coeff, s));
    for (const ColumnEntry& e : qap.y_cols[j]) c[e.constraint] = f.add(c[e.constraint], f.mul(e.coeff, s));
  }
  auto [va, wb, yc] = interpolate_values<3>(qap, {&a, &b, &c});
  DivMod dm = divmod(va * wb - yc, qap.target);
  return {std::move(dm.quotient), std::move(dm.remainder)};
}

Polynomial compute_quotient(const QuadraticProgram& qap, const Witness& w) {
  QuotientResult r = divide_by_target(qap, w);
  if (!r.remainder.is_zero()) {
    throw Error(ErrorCode::NotDivisible, "witness does not satisfy the QAP (nonzero remainder)");
  }
  return std::move(r.quotient);
}

}  // namespace cic
