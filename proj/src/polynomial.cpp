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

#include "cic/polynomial.hpp"

#include <algorithm>
#include <string>

namespace cic {

Polynomial::Polynomial(Field field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  trim();
}

Polynomial Polynomial::constant(Field field, std::uint64_t c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(Field field, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::from_roots(Field field, std::span<const std::uint64_t> roots) {
  std::vector<std::uint64_t> c(roots.size() + 1, 0);
  c[0] = 1;
  std::size_t deg = 0;
  for (std::uint64_t r : roots) {
    const std::uint64_t neg_r = field.neg(field.reduce(r));
    // multiply by (x - r), in place from the top
    c[deg + 1] = c[deg];
    for (std::size_t k = deg; k > 0; --k) c[k] = field.add(c[k - 1], field.mul(neg_r, c[k]));
    c[0] = field.mul(neg_r, c[0]);
    ++deg;
  }
  return Polynomial(field, std::move(c));
}

void Polynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_same(const Polynomial& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::ModulusMismatch, "polynomials over different fields");
  }
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return FieldElement(i < coeffs_.size() ? coeffs_[i] : 0, field_);
}

std::uint64_t Polynomial::evaluate(std::uint64_t x) const noexcept {
  x = field_.reduce(x);
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  if (x.modulus() != field_.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "evaluation point from a different field");
  }
  return FieldElement(evaluate(x.value()), field_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(o);
  std::vector<std::uint64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t a = i < coeffs_.size() ? coeffs_[i] : 0;
    const std::uint64_t b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    r[i] = field_.add(a, b);
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same(o);
  std::vector<std::uint64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t a = i < coeffs_.size() ? coeffs_[i] : 0;
    const std::uint64_t b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    r[i] = field_.sub(a, b);
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<std::uint64_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::uint64_t a = coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      r[i + j] = field_.add(r[i + j], field_.mul(a, o.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  c = field_.reduce(c);
  std::vector<std::uint64_t> r(coeffs_);
  for (auto& v : r) v = field_.mul(v, c);
  return Polynomial(field_, std::move(r));
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "divisor is the zero polynomial");
  if (!(num.field() == den.field())) {
    throw Error(ErrorCode::ModulusMismatch, "polynomials over different fields");
  }
  const Field& f = num.field();
  if (num.degree() < den.degree()) return {Polynomial(f), num};

  std::vector<std::uint64_t> rem(num.coeffs().begin(), num.coeffs().end());
  const auto d = den.coeffs();
  const std::size_t dn = d.size();
  const std::uint64_t lead_inv = f.inv(d.back());
  std::vector<std::uint64_t> q(rem.size() - dn + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t top = rem[k + dn - 1];
    if (top == 0) continue;
    const std::uint64_t factor = f.mul(top, lead_inv);
    q[k] = factor;
    for (std::size_t j = 0; j < dn; ++j) {
      rem[k + j] = f.sub(rem[k + j], f.mul(factor, d[j]));
    }
  }
  rem.resize(dn - 1);
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(rem))};
}

Polynomial interpolate(const Field& field,
                       std::span<const std::pair<std::uint64_t, std::uint64_t>> points) {
  const std::size_t n = points.size();
  if (n == 0) return Polynomial(field);

  std::vector<std::uint64_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = field.reduce(points[i].first);
  {
    std::vector<std::uint64_t> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::DuplicateEvaluationPoint, "interpolation points must be distinct");
    }
  }

  // Lagrange form: f = sum_i y_i / M_i'(x_i) * M(x) / (x - x_i).
  const Polynomial master = Polynomial::from_roots(field, xs);
  const auto m = master.coeffs();
  std::vector<std::uint64_t> acc(n, 0);
  std::vector<std::uint64_t> q(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t y = field.reduce(points[i].second);
    if (y == 0) continue;
    // synthetic division of M by (x - x_i)
    q[n - 1] = m[n];
    for (std::size_t k = n - 1; k > 0; --k) q[k - 1] = field.add(m[k], field.mul(xs[i], q[k]));
    std::uint64_t denom = 0;
    for (std::size_t k = n; k-- > 0;) denom = field.add(field.mul(denom, xs[i]), q[k]);
    const std::uint64_t scale = field.mul(y, field.inv(denom));
    for (std::size_t k = 0; k < n; ++k) acc[k] = field.add(acc[k], field.mul(scale, q[k]));
  }
  return Polynomial(field, std::move(acc));
}

}  // namespace cic
