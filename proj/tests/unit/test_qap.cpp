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

#include "cic/apps.hpp"
#include "cic/qap.hpp"
#include "cic/r1cs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace cic;
using testutil::code_of;

ConstraintSystem mul_chain(const Field& f, std::size_t length) {
  CircuitBuilder b(f, 1, 1);
  Wire acc = b.public_input(0);
  for (std::size_t i = 0; i < length; ++i) acc = b.mul(acc, b.public_input(0));
  b.bind_output(0, acc);
  return to_r1cs(std::move(b).build());
}

std::uint64_t row_value(const LinearCombination& lc, Wire j) {
  for (const Term& t : lc) {
    if (t.wire == j) return t.coeff;
  }
  return 0;
}

TEST(Qap, TargetForOneConstraint) {
  const ConstraintSystem cs = mul_chain(Field(), 1);
  ASSERT_EQ(cs.size(), 1u);
  const QuadraticProgram q = r1cs_to_qap(cs);
  const std::uint64_t p = Field().modulus();
  EXPECT_EQ(q.target, Polynomial(Field(), {p - 1, 1}));
}

TEST(Qap, TargetForTwoConstraints) {
  const ConstraintSystem cs = mul_chain(Field(), 2);
  ASSERT_EQ(cs.size(), 2u);
  const QuadraticProgram q = r1cs_to_qap(cs);
  const std::uint64_t p = Field().modulus();
  EXPECT_EQ(q.target, Polynomial(Field(), {2, p - 3, 1}));
  EXPECT_EQ(q.eval_points(), (std::vector<std::uint64_t>{1, 2}));
}

TEST(Qap, EmptySystemIsRejected) {
  ConstraintSystem cs;
  EXPECT_EQ(code_of([&] { r1cs_to_qap(cs); }), ErrorCode::EmptySystem);
}

TEST(Qap, TooManyConstraintsForTheField) {
  EXPECT_EQ(code_of([&] { r1cs_to_qap(mul_chain(Field(7), 7)); }), ErrorCode::InvalidParameters);
  EXPECT_NO_THROW(r1cs_to_qap(mul_chain(Field(7), 6)));
}

// Every basis polynomial reproduces its column of the constraint matrices.
void expect_columns_round_trip(const ConstraintSystem& cs) {
  const QuadraticProgram q = r1cs_to_qap(cs);
  ASSERT_EQ(q.num_constraints, cs.size());
  for (Wire j = 0; j < cs.wire_count; ++j) {
    const Polynomial v = q.v_poly(j), w = q.w_poly(j), y = q.y_poly(j);
    ASSERT_LT(v.degree(), static_cast<std::ptrdiff_t>(cs.size()));
    for (std::uint32_t i = 0; i < cs.size(); ++i) {
      ASSERT_EQ(v.evaluate(std::uint64_t{i} + 1), row_value(cs.constraints[i].a, j)) << "wire " << j;
      ASSERT_EQ(w.evaluate(std::uint64_t{i} + 1), row_value(cs.constraints[i].b, j)) << "wire " << j;
      ASSERT_EQ(y.evaluate(std::uint64_t{i} + 1), row_value(cs.constraints[i].c, j)) << "wire " << j;
    }
  }
}

TEST(Qap, MatmulColumnsRoundTrip) { expect_columns_round_trip(to_r1cs(build_matmul(2))); }

TEST(Qap, RandomCircuitColumnsRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) expect_columns_round_trip(to_r1cs(oracle::random_circuit(Field(), rng, 2, 25).circuit));
}

TEST(Qap, LagrangeBasisMatchesOracle) {
  const QuadraticProgram q = r1cs_to_qap(mul_chain(Field(), 9));
  const std::uint64_t p = q.field.modulus();
  std::vector<std::uint64_t> xs = q.eval_points();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t x = rng() % p;
    const auto l = q.lagrange_at(x);
    ASSERT_EQ(l.size(), xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<std::uint64_t> ys(xs.size(), 0);
      ys[i] = 1;
      ASSERT_EQ(l[i], oracle::lagrange_eval(xs, ys, x, p));
    }
  }
  // at an evaluation point the basis is an indicator
  const auto at3 = q.lagrange_at(3);
  for (std::size_t i = 0; i < at3.size(); ++i) EXPECT_EQ(at3[i], i == 2 ? 1u : 0u);
}

TEST(Qap, HonestWitnessDividesTarget) {
  const Field f;
  const ArithmeticCircuit c = build_matmul(3);
  const QuadraticProgram q = r1cs_to_qap(to_r1cs(c));
  std::mt19937_64 rng(8);
  const auto in = random_inputs(AppSpec{MatmulParams{3}, f}, rng);
  const Witness w = evaluate_circuit(c, in);
  const QuotientResult r = divide_by_target(q, w);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_LE(r.quotient.degree(), static_cast<std::ptrdiff_t>(q.num_constraints) - 2);
  EXPECT_EQ(compute_quotient(q, w), r.quotient);

  // p(x) rebuilt from the coefficient-form polynomials equals h t
  Polynomial vs(f), ws(f), ys(f);
  for (Wire j = 0; j < w.size(); ++j) {
    vs = vs + q.v_poly(j).scaled(w[j]);
    ws = ws + q.w_poly(j).scaled(w[j]);
    ys = ys + q.y_poly(j).scaled(w[j]);
  }
  EXPECT_EQ(vs * ws - ys, r.quotient * q.target);
}

TEST(Qap, DivisibilityMatchesSatisfaction) {
  const Field f;
  std::mt19937_64 rng(9);
  int corrupted = 0;
  for (int t = 0; t < 100; ++t) {
    const auto rc = oracle::random_circuit(f, rng, 2, 15 + rng() % 15, 2);
    const ConstraintSystem cs = to_r1cs(rc.circuit);
    const QuadraticProgram q = r1cs_to_qap(cs);
    Witness w = evaluate_circuit(rc.circuit, oracle::random_values(rng, 2, f.modulus()));
    if (rng() % 2) {
      const Wire j = 1 + rng() % (w.size() - 1);
      w.values[j] = f.add(w.values[j], 1 + rng() % 1000);
      ++corrupted;
    }
    ASSERT_EQ(check_r1cs(cs, w), divide_by_target(q, w).remainder.is_zero());
  }
  EXPECT_GT(corrupted, 20);
}

TEST(Qap, QuotientErrors) {
  const ArithmeticCircuit c = build_matmul(2);
  const QuadraticProgram q = r1cs_to_qap(to_r1cs(c));
  const std::vector<std::uint64_t> in = {1, 2, 3, 4, 5, 6, 7, 8};
  Witness w = evaluate_circuit(c, in);
  w.values[c.public_output(0)] += 1;
  EXPECT_EQ(code_of([&] { compute_quotient(q, w); }), ErrorCode::NotDivisible);
  w.values.push_back(0);
  EXPECT_EQ(code_of([&] { compute_quotient(q, w); }), ErrorCode::LengthMismatch);
}

}  // namespace
