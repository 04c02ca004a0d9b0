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

// The four outsourced workloads: circuit builders plus plain native
// implementations with the same public IO layout.
//
// Public input / output layouts (all arrays row-major):
//   matmul          in:  A (n*n), B (n*n)             out: A*B (n*n)
//   image_match     in:  image (h*w), kernel (kh*kw)  out: row, col, score
//   multipoly       in:  coeffs ((m+1)^k), x (k)      out: f(x)
//   floyd_warshall  in:  weights (n*n)                out: distances (n*n)
//
// Multipoly coefficient (e_1, ..., e_k) sits at index sum_i e_i (m+1)^(k-i),
// so e_1 is the most significant digit. Image placements are indexed by
// their top-left corner; the score is the sum of squared differences and
// ties go to the smallest row-major placement.

#ifndef CIC_APPS_HPP_
#define CIC_APPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cic/circuit.hpp"

namespace cic {

enum class AppKind { matmul, image_match, multipoly, floyd_warshall };

struct MatmulParams {
  std::size_t n = 8;

  friend bool operator==(const MatmulParams&, const MatmulParams&) = default;
};

struct ImageMatchParams {
  std::size_t width = 16;
  std::size_t height = 16;
  std::size_t kernel_width = 3;
  std::size_t kernel_height = 3;
  std::uint32_t bitwidth = 8;  // pixel values are < 2^bitwidth

  friend bool operator==(const ImageMatchParams&, const ImageMatchParams&) = default;
};

struct MultipolyParams {
  std::size_t degree = 2;
  std::size_t vars = 3;

  friend bool operator==(const MultipolyParams&, const MultipolyParams&) = default;
};

struct FloydWarshallParams {
  std::size_t n = 6;
  std::uint32_t bitwidth = 16;  // weights < 2^(bitwidth-2); no edge = 2^(bitwidth-1) - 1

  friend bool operator==(const FloydWarshallParams&, const FloydWarshallParams&) = default;
};

using AppParams = std::variant<MatmulParams, ImageMatchParams, MultipolyParams, FloydWarshallParams>;

struct AppSpec {
  AppParams params;
  Field field;

  AppKind kind() const noexcept { return static_cast<AppKind>(params.index()); }
  std::string_view name() const noexcept;
  /// Short human-readable size, e.g. "8x8" or "m=2,k=3".
  std::string size_label() const;
  std::size_t num_public_inputs() const;
  std::size_t num_public_outputs() const;
};

std::string_view app_name(AppKind kind) noexcept;
std::optional<AppKind> parse_app_kind(std::string_view name) noexcept;

/// Default desk-scale configuration of each app.
AppSpec desk_scale(AppKind kind, Field field = Field());

/// Rejects non-positive sizes (InvalidParameters), kernels larger than the
/// image (KernelLargerThanImage), and bit widths the field cannot hold.
void validate_spec(const AppSpec& spec);

ArithmeticCircuit build_matmul(std::size_t n, const Field& field = Field());
ArithmeticCircuit build_image_match(const ImageMatchParams& p, const Field& field = Field());
ArithmeticCircuit build_multipoly(std::size_t degree, std::size_t vars, const Field& field = Field());
ArithmeticCircuit build_floyd_warshall(std::size_t n, std::uint32_t bitwidth, const Field& field = Field());
ArithmeticCircuit build_app(const AppSpec& spec);

/// Checks arity (InputArityMismatch) and value ranges: every value must be
/// below the modulus (MalformedInput), pixels must fit the
/// bit width (MalformedInput), weights must be small or the no-edge
/// sentinel with a zero diagonal (WeightOutOfRange).
void validate_inputs(const AppSpec& spec, std::span<const std::uint64_t> inputs);

/// Native implementation; output layout matches the circuit's public outputs.
std::vector<std::uint64_t> run_reference(const AppSpec& spec, std::span<const std::uint64_t> inputs);

/// Valid random inputs for `spec`.
std::vector<std::uint64_t> random_inputs(const AppSpec& spec, std::mt19937_64& rng);

std::uint64_t floyd_warshall_infinity(std::uint32_t bitwidth) noexcept;

/// Bit width of the largest possible image-match score.
std::uint32_t image_score_width(const ImageMatchParams& p) noexcept;

/// Number of (row, col) kernel placements.
std::size_t image_placements(const ImageMatchParams& p) noexcept;

}  // namespace cic

#endif  // CIC_APPS_HPP_
