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

#include <gtest/gtest.h>

#include <random>

#include "cic/field.hpp"
#include "cic/polynomial.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using cic::ErrorCode;
using cic::Field;
using cic::FieldElement;
using cic::Polynomial;

using testutil::code_of;

TEST(Field, WrapsAroundModulus) {
  const Field f;
  EXPECT_EQ(f.add(f.modulus() - 1, 5), 4u);
  EXPECT_EQ((f.element(f.modulus() - 1) + f.element(5)).value(), 4u);
}

TEST(Field, InverseOfTwoIsTwoToThe60) {
  const Field f;
  EXPECT_EQ(f.inv(2), std::uint64_t{1} << 60);
  EXPECT_EQ(f.element(2).inverse().value(), std::uint64_t{1} << 60);
}

TEST(Field, FermatInSmallField) {
  const Field f(7);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(f.element(3).pow(6), f.one());
}

TEST(Field, InversionOfZeroThrows) {
  const Field f;
  EXPECT_EQ(code_of([&] { f.inv(0); }), ErrorCode::InversionOfZero);
  EXPECT_EQ(code_of([&] { f.zero().inverse(); }), ErrorCode::InversionOfZero);
}

TEST(Field, MixedModuliThrow) {
  const FieldElement a = Field(7).element(3);
  const FieldElement b = Field(11).element(3);
  EXPECT_EQ(code_of([&] { (void)(a + b); }), ErrorCode::ModulusMismatch);
  EXPECT_EQ(code_of([&] { (void)(a * b); }), ErrorCode::ModulusMismatch);
  EXPECT_EQ(code_of([&] { (void)(a - b); }), ErrorCode::ModulusMismatch);
}

TEST(Field, RejectsCompositeOrOversizedModulus) {
  EXPECT_EQ(code_of([] { Field(15); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { Field(1); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { Field((std::uint64_t{1} << 63) + 29); }), ErrorCode::InvalidParameters);
  EXPECT_NO_THROW(Field(2));
  EXPECT_NO_THROW(Field(1000000007));
  EXPECT_NO_THROW(Field(9223372036854775783ULL));  // largest prime below 2^63
}

TEST(Field, FromSignedIsCanonical) {
  const Field f(101);
  EXPECT_EQ(f.from_signed(-1), 100u);
  EXPECT_EQ(f.from_signed(-202), 0u);
  EXPECT_EQ(f.from_signed(205), 3u);
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const Field f(GetParam());
  const std::uint64_t p = f.modulus();
  std::mt19937_64 rng(p);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = rng() % p, b = rng() % p, c = rng() % p;
    ASSERT_EQ(f.add(a, b), oracle::add(a, b, p));
    ASSERT_EQ(f.sub(a, b), oracle::sub(a, b, p));
    ASSERT_EQ(f.mul(a, b), oracle::mul(a, b, p));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.add(a, b), f.add(b, a));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.add(a, f.neg(a)), 0u);
    if (a != 0) {
      ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      ASSERT_EQ(f.inv(a), oracle::inv(a, p));
    }
    const FieldElement x = f.element(a), y = f.element(b);
    ASSERT_LT((x * y).value(), p);
    ASSERT_EQ((x - y + y), x);
  }
}

TEST_P(FieldAxioms, PowMatchesRepeatedProduct) {
  const Field f(GetParam());
  std::mt19937_64 rng(GetParam() + 1);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng() % f.modulus(), e = rng() % 300;
    ASSERT_EQ(f.pow(a, e), oracle::pow(a, e, f.modulus()));
  }
}

INSTANTIATE_TEST_SUITE_P(Moduli, FieldAxioms,
                         ::testing::Values<std::uint64_t>(cic::kMersenne61, 1000000007, 97,
                                                          9223372036854775783ULL));

// ---- polynomials -----------------------------------------------------------

TEST(Polynomial, TrimsAndReportsDegree) {
  const Field f;
  EXPECT_EQ(Polynomial(f, {1, 2, 0, 0}).size(), 2u);
  EXPECT_TRUE(Polynomial(f, {0, 0}).is_zero());
  EXPECT_EQ(Polynomial(f).degree(), Polynomial::kZeroDegree);
  EXPECT_EQ(Polynomial(f, {5}).degree(), 0);
  EXPECT_EQ(Polynomial::monomial(f, 3, 4).degree(), 4);
}

TEST(Polynomial, Evaluates) {
  const Field f;
  EXPECT_EQ(Polynomial(f, {1, 1}).evaluate(0), 1u);
  EXPECT_EQ(Polynomial(f, {0, 0, 1}).evaluate(3), 9u);
  EXPECT_EQ(Polynomial(f, {0, 1, 0, 2}).evaluate(5), 255u);
  EXPECT_EQ(Polynomial(f).evaluate(12345), 0u);
  EXPECT_EQ(Polynomial(f, {0, 1, 0, 2}).evaluate(f.element(5)), f.element(255));
}

TEST(Polynomial, ArithmeticMatchesSchoolbook) {
  const Field f;
  const std::uint64_t p = f.modulus();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = oracle::random_values(rng, 1 + rng() % 12, p);
    auto b = oracle::random_values(rng, 1 + rng() % 12, p);
    const Polynomial pa(f, a), pb(f, b);
    const Polynomial prod = pa * pb;
    const auto want = oracle::mul_poly(a, b, p);
    ASSERT_EQ(std::vector<std::uint64_t>(prod.coeffs().begin(), prod.coeffs().end()), want);
    const Polynomial sum = pa + pb;
    ASSERT_EQ(std::vector<std::uint64_t>(sum.coeffs().begin(), sum.coeffs().end()), oracle::add_poly(a, b, p));
    ASSERT_TRUE((pa - pa).is_zero());
  }
}

TEST(Polynomial, FromRootsVanishesOnRoots) {
  const Field f;
  const std::vector<std::uint64_t> roots = {1, 2, 3, 4};
  const Polynomial t = Polynomial::from_roots(f, roots);
  EXPECT_EQ(t.degree(), 4);
  EXPECT_EQ(t.coeff(4), f.one());
  for (auto r : roots) EXPECT_EQ(t.evaluate(r), 0u);
  EXPECT_NE(t.evaluate(5), 0u);
}

TEST(Interpolate, FitsSquares) {
  const Field f;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = {{1, 1}, {2, 4}, {3, 9}};
  EXPECT_EQ(cic::interpolate(f, pts), Polynomial(f, {0, 0, 1}));
}

TEST(Interpolate, SinglePointIsConstant) {
  const Field f;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = {{5, 7}};
  EXPECT_EQ(cic::interpolate(f, pts), Polynomial::constant(f, 7));
}

TEST(Interpolate, DuplicatePointThrows) {
  const Field f;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = {{1, 1}, {2, 3}, {1, 2}};
  EXPECT_EQ(code_of([&] { cic::interpolate(f, pts); }), ErrorCode::DuplicateEvaluationPoint);
}

TEST(Interpolate, RoundTripsRandomPointSets) {
  const Field f;
  const std::uint64_t p = f.modulus();
  std::mt19937_64 rng(8);
  for (std::size_t n : {1u, 2u, 8u, 17u, 33u, 64u}) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    std::vector<std::uint64_t> xs, ys;
    while (pts.size() < n) {
      const std::uint64_t x = rng() % p;
      if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
      xs.push_back(x);
      ys.push_back(rng() % p);
      pts.emplace_back(x, ys.back());
    }
    const Polynomial g = cic::interpolate(f, pts);
    ASSERT_LT(g.degree(), static_cast<std::ptrdiff_t>(n));
    for (const auto& [x, y] : pts) ASSERT_EQ(oracle::eval_poly({g.coeffs().begin(), g.coeffs().end()}, x, p), y);
    // and agrees with an independent Lagrange evaluation off the grid
    const std::uint64_t probe = rng() % p;
    ASSERT_EQ(g.evaluate(probe), oracle::lagrange_eval(xs, ys, probe, p));
  }
}

TEST(DivMod, ExactDivision) {
  const Field f;
  const auto [q, r] = cic::divmod(Polynomial(f, {f.modulus() - 1, 0, 1}), Polynomial(f, {f.modulus() - 1, 1}));
  EXPECT_EQ(q, Polynomial(f, {1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(DivMod, LowerDegreeNumerator) {
  const Field f;
  const auto [q, r] = cic::divmod(Polynomial(f, {0, 1}), Polynomial(f, {0, 0, 1}));
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(r, Polynomial(f, {0, 1}));
}

TEST(DivMod, ZeroDivisorThrows) {
  const Field f;
  EXPECT_EQ(code_of([&] { cic::divmod(Polynomial(f, {1, 2}), Polynomial(f)); }),
            ErrorCode::DivisionByZeroPolynomial);
}

TEST(DivMod, ReconstructsRandomPairs) {
  for (std::uint64_t p : std::vector<std::uint64_t>{cic::kMersenne61, 1000000007, 13}) {
    const Field f(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 100; ++t) {
      auto a = oracle::random_values(rng, 1 + rng() % 16, p);
      auto b = oracle::random_values(rng, 1 + rng() % 8, p);
      b.back() = 1 + rng() % (p - 1);
      const Polynomial num(f, a), den(f, b);
      const auto [q, r] = cic::divmod(num, den);
      ASSERT_LT(r.degree(), den.degree());
      const auto back = oracle::add_poly(
          oracle::mul_poly({q.coeffs().begin(), q.coeffs().end()}, {den.coeffs().begin(), den.coeffs().end()}, p),
          {r.coeffs().begin(), r.coeffs().end()}, p);
      ASSERT_EQ(back, std::vector<std::uint64_t>(num.coeffs().begin(), num.coeffs().end()));
    }
  }
}

TEST(DivMod, Degree10By4) {
  const Field f;
  std::mt19937_64 rng(10);
  auto a = oracle::random_values(rng, 11, f.modulus());
  auto b = oracle::random_values(rng, 5, f.modulus());
  a.back() |= 1;
  b.back() |= 1;
  const auto [q, r] = cic::divmod(Polynomial(f, a), Polynomial(f, b));
  EXPECT_EQ(q.degree(), 6);
  EXPECT_EQ(q * Polynomial(f, b) + r, Polynomial(f, a));
}

TEST(Polynomial, MixedFieldsThrow) {
  EXPECT_EQ(code_of([] { (void)(Polynomial(Field(7), {1}) + Polynomial(Field(11), {1})); }),
            ErrorCode::ModulusMismatch);
}

}  // namespace
