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

#include "cic/apps.hpp"

#include <bit>
#include <limits>

#include "cic/gadgets.hpp"

namespace cic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kMaxCoefficients = std::size_t{1} << 24;

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidParameters, why); }

std::uint32_t checked_u32(std::size_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max() / 4) invalid(std::string(what) + " too large");
  return static_cast<std::uint32_t>(v);
}

std::size_t coefficient_count(std::size_t degree, std::size_t vars) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (count > kMaxCoefficients / (degree + 1)) invalid("multipoly has more than 2^24 coefficients");
    count *= degree + 1;
  }
  return count;
}

// A comparison over `width` bits decomposes width + 1 bits.
void check_comparison_width(std::uint32_t width, const Field& f, const char* what) {
  if (width + 1 > gadgets::kMaxBitWidth || (std::uint64_t{1} << (width + 1)) >= f.modulus()) {
    invalid(std::string(what) + ": " + std::to_string(width) + "-bit comparisons do not fit Z_" +
            std::to_string(f.modulus()));
  }
}

void validate_params(const MatmulParams& p, const Field&) {
  if (p.n == 0) invalid("matmul needs n >= 1");
  checked_u32(p.n * p.n, "matmul size");
}

void validate_params(const ImageMatchParams& p, const Field& f) {
  if (p.width == 0 || p.height == 0 || p.kernel_width == 0 || p.kernel_height == 0) {
    invalid("image and kernel dimensions must be positive");
  }
  if (p.kernel_width > p.width || p.kernel_height > p.height) {
    throw Error(ErrorCode::KernelLargerThanImage, "kernel " + std::to_string(p.kernel_width) + "x" +
                                                      std::to_string(p.kernel_height) + " exceeds image " +
                                                      std::to_string(p.width) + "x" + std::to_string(p.height));
  }
  if (p.bitwidth == 0 || p.bitwidth > 16) invalid("pixel bit width must be in [1, 16]");
  checked_u32(p.width * p.height + p.kernel_width * p.kernel_height, "image size");
  check_comparison_width(image_score_width(p), f, "image_match");
}

void validate_params(const MultipolyParams& p, const Field&) {
  if (p.degree == 0 || p.vars == 0) invalid("multipoly needs degree >= 1 and vars >= 1");
  coefficient_count(p.degree, p.vars);
}

void validate_params(const FloydWarshallParams& p, const Field& f) {
  if (p.n == 0) invalid("floyd_warshall needs n >= 1");
  if (p.bitwidth < 3) invalid("floyd_warshall bit width must be at least 3");
  checked_u32(p.n * p.n, "floyd_warshall size");
  check_comparison_width(p.bitwidth, f, "floyd_warshall");
}

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

// Horner over the last (vars - level) variables for the coefficient block
// starting at `offset`.
Wire horner(CircuitBuilder& b, std::size_t degree, std::size_t vars, std::size_t level, std::size_t offset,
            Wire first_var) {
  if (level == vars) return b.public_input(u32(offset));
  std::size_t stride = 1;
  for (std::size_t i = level + 1; i < vars; ++i) stride *= degree + 1;
  const Wire x = first_var + u32(level);
  Wire acc = horner(b, degree, vars, level + 1, offset + degree * stride, first_var);
  for (std::size_t e = degree; e-- > 0;) {
    acc = b.add(b.mul(acc, x), horner(b, degree, vars, level + 1, offset + e * stride, first_var));
  }
  return acc;
}

std::uint64_t horner_native(const Field& f, std::size_t degree, std::size_t vars, std::size_t level,
                            std::size_t offset, std::span<const std::uint64_t> coeffs,
                            std::span<const std::uint64_t> xs) {
  if (level == vars) return f.reduce(coeffs[offset]);
  std::size_t stride = 1;
  for (std::size_t i = level + 1; i < vars; ++i) stride *= degree + 1;
  const std::uint64_t x = f.reduce(xs[level]);
  std::uint64_t acc = 0;
  for (std::size_t e = degree + 1; e-- > 0;) {
    acc = f.add(f.mul(acc, x), horner_native(f, degree, vars, level + 1, offset + e * stride, coeffs, xs));
  }
  return acc;
}

}  // namespace

std::string_view app_name(AppKind kind) noexcept {
  switch (kind) {
    case AppKind::matmul: return "matmul";
    case AppKind::image_match: return "image_match";
    case AppKind::multipoly: return "multipoly";
    case AppKind::floyd_warshall: return "floyd_warshall";
  }
  return "unknown";
}

std::optional<AppKind> parse_app_kind(std::string_view name) noexcept {
  for (AppKind k : {AppKind::matmul, AppKind::image_match, AppKind::multipoly, AppKind::floyd_warshall}) {
    if (app_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view AppSpec::name() const noexcept { return app_name(kind()); }

std::string AppSpec::size_label() const {
  return std::visit(overloaded{
                        [](const MatmulParams& p) { return std::to_string(p.n) + "x" + std::to_string(p.n); },
                        [](const ImageMatchParams& p) {
                          return std::to_string(p.width) + "x" + std::to_string(p.height) + "/" +
                                 std::to_string(p.kernel_width) + "x" + std::to_string(p.kernel_height);
                        },
                        [](const MultipolyParams& p) {
                          return "m=" + std::to_string(p.degree) + ",k=" + std::to_string(p.vars);
                        },
                        [](const FloydWarshallParams& p) { return std::to_string(p.n) + "x" + std::to_string(p.n); },
                    },
                    params);
}

std::size_t AppSpec::num_public_inputs() const {
  return std::visit(overloaded{
                        [](const MatmulParams& p) { return 2 * p.n * p.n; },
                        [](const ImageMatchParams& p) {
                          return p.width * p.height + p.kernel_width * p.kernel_height;
                        },
                        [](const MultipolyParams& p) { return coefficient_count(p.degree, p.vars) + p.vars; },
                        [](const FloydWarshallParams& p) { return p.n * p.n; },
                    },
                    params);
}

std::size_t AppSpec::num_public_outputs() const {
  return std::visit(overloaded{
                        [](const MatmulParams& p) { return p.n * p.n; },
                        [](const ImageMatchParams&) { return std::size_t{3}; },
                        [](const MultipolyParams&) { return std::size_t{1}; },
                        [](const FloydWarshallParams& p) { return p.n * p.n; },
                    },
                    params);
}

AppSpec desk_scale(AppKind kind, Field field) {
  switch (kind) {
    case AppKind::matmul: return {MatmulParams{}, field};
    case AppKind::image_match: return {ImageMatchParams{}, field};
    case AppKind::multipoly: return {MultipolyParams{}, field};
    case AppKind::floyd_warshall: return {FloydWarshallParams{}, field};
  }
  invalid("unknown app");
}

void validate_spec(const AppSpec& spec) {
  std::visit([&](const auto& p) { validate_params(p, spec.field); }, spec.params);
}

std::uint64_t floyd_warshall_infinity(std::uint32_t bitwidth) noexcept {
  return (std::uint64_t{1} << (bitwidth - 1)) - 1;
}

std::uint32_t image_score_width(const ImageMatchParams& p) noexcept {
  const std::uint64_t max_pixel = (std::uint64_t{1} << p.bitwidth) - 1;
  const std::uint64_t max_score = p.kernel_width * p.kernel_height * max_pixel * max_pixel;
  return static_cast<std::uint32_t>(std::bit_width(max_score == 0 ? 1 : max_score));
}

std::size_t image_placements(const ImageMatchParams& p) noexcept {
  if (p.kernel_width > p.width || p.kernel_height > p.height) return 0;
  return (p.width - p.kernel_width + 1) * (p.height - p.kernel_height + 1);
}

ArithmeticCircuit build_matmul(std::size_t n, const Field& field) {
  validate_params(MatmulParams{n}, field);
  const std::uint32_t nn = u32(n * n);
  CircuitBuilder b(field, 2 * nn, nn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Wire acc = b.mul(b.public_input(u32(i * n)), b.public_input(u32(nn + j)));
      for (std::size_t k = 1; k < n; ++k) {
        acc = b.add(acc, b.mul(b.public_input(u32(i * n + k)), b.public_input(u32(nn + k * n + j))));
      }
      b.bind_output(u32(i * n + j), acc);
    }
  }
  return std::move(b).build();
}

ArithmeticCircuit build_image_match(const ImageMatchParams& p, const Field& field) {
  validate_params(p, field);
  const std::uint32_t image_size = u32(p.width * p.height);
  const std::uint32_t width = image_score_width(p);
  CircuitBuilder b(field, image_size + u32(p.kernel_width * p.kernel_height), 3);
  auto pixel = [&](std::size_t r, std::size_t c) { return b.public_input(u32(r * p.width + c)); };
  auto kernel = [&](std::size_t r, std::size_t c) { return b.public_input(image_size + u32(r * p.kernel_width + c)); };

  Wire best = kOneWire, best_row = kOneWire, best_col = kOneWire;
  bool first = true;
  for (std::size_t row = 0; row + p.kernel_height <= p.height; ++row) {
    for (std::size_t col = 0; col + p.kernel_width <= p.width; ++col) {
      Wire score = kOneWire;
      for (std::size_t dr = 0; dr < p.kernel_height; ++dr) {
        for (std::size_t dc = 0; dc < p.kernel_width; ++dc) {
          const Wire diff = b.sub(pixel(row + dr, col + dc), kernel(dr, dc));
          const Wire sq = b.mul(diff, diff);
          score = (dr == 0 && dc == 0) ? sq : b.add(score, sq);
        }
      }
      if (first) {
        best = score;
        best_row = b.constant(row);
        best_col = b.constant(col);
        first = false;
        continue;
      }
      // strict comparison keeps the earlier placement on ties
      const Wire better = gadgets::less_than(b, score, best, width);
      best = gadgets::select(b, better, score, best);
      best_row = gadgets::select(b, better, b.constant(row), best_row);
      best_col = gadgets::select(b, better, b.constant(col), best_col);
    }
  }
  b.bind_output(0, best_row);
  b.bind_output(1, best_col);
  b.bind_output(2, best);
  return std::move(b).build();
}

ArithmeticCircuit build_multipoly(std::size_t degree, std::size_t vars, const Field& field) {
  validate_params(MultipolyParams{degree, vars}, field);
  const std::size_t coeffs = coefficient_count(degree, vars);
  CircuitBuilder b(field, u32(coeffs + vars), 1);
  b.bind_output(0, horner(b, degree, vars, 0, 0, b.public_input(u32(coeffs))));
  return std::move(b).build();
}

ArithmeticCircuit build_floyd_warshall(std::size_t n, std::uint32_t bitwidth, const Field& field) {
  validate_params(FloydWarshallParams{n, bitwidth}, field);
  const std::uint32_t nn = u32(n * n);
  CircuitBuilder b(field, nn, nn);
  std::vector<Wire> d(nn);
  for (std::uint32_t i = 0; i < nn; ++i) d[i] = b.public_input(i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Wire via_k = b.add(d[i * n + k], d[k * n + j]);
        d[i * n + j] = gadgets::min(b, d[i * n + j], via_k, bitwidth);
      }
    }
  }
  for (std::uint32_t i = 0; i < nn; ++i) b.bind_output(i, d[i]);
  return std::move(b).build();
}

ArithmeticCircuit build_app(const AppSpec& spec) {
  return std::visit(overloaded{
                        [&](const MatmulParams& p) { return build_matmul(p.n, spec.field); },
                        [&](const ImageMatchParams& p) { return build_image_match(p, spec.field); },
                        [&](const MultipolyParams& p) { return build_multipoly(p.degree, p.vars, spec.field); },
                        [&](const FloydWarshallParams& p) { return build_floyd_warshall(p.n, p.bitwidth, spec.field); },
                    },
                    spec.params);
}

void validate_inputs(const AppSpec& spec, std::span<const std::uint64_t> inputs) {
  validate_spec(spec);
  if (inputs.size() != spec.num_public_inputs()) {
    throw Error(ErrorCode::InputArityMismatch, std::string(spec.name()) + " expects " +
                                                   std::to_string(spec.num_public_inputs()) + " inputs, got " +
                                                   std::to_string(inputs.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] >= spec.field.modulus()) {
      throw Error(ErrorCode::MalformedInput, "input " + std::to_string(i) + " = " + std::to_string(inputs[i]) +
                                                 " is not below the modulus");
    }
  }
  if (const auto* p = std::get_if<ImageMatchParams>(&spec.params)) {
    const std::uint64_t limit = std::uint64_t{1} << p->bitwidth;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i] >= limit) {
        throw Error(ErrorCode::MalformedInput, "pixel " + std::to_string(i) + " = " + std::to_string(inputs[i]) +
                                                   " does not fit " + std::to_string(p->bitwidth) + " bits");
      }
    }
  } else if (const auto* p = std::get_if<FloydWarshallParams>(&spec.params)) {
    const std::uint64_t inf = floyd_warshall_infinity(p->bitwidth);
    const std::uint64_t limit = std::uint64_t{1} << (p->bitwidth - 2);
    for (std::size_t i = 0; i < p->n; ++i) {
      for (std::size_t j = 0; j < p->n; ++j) {
        const std::uint64_t w = inputs[i * p->n + j];
        const bool ok = i == j ? w == 0 : (w < limit || w == inf);
        if (!ok) {
          throw Error(ErrorCode::WeightOutOfRange, "weight (" + std::to_string(i) + "," + std::to_string(j) +
                                                       ") = " + std::to_string(w));
        }
      }
    }
  }
}

std::vector<std::uint64_t> run_reference(const AppSpec& spec, std::span<const std::uint64_t> inputs) {
  validate_inputs(spec, inputs);
  const Field& f = spec.field;
  return std::visit(
      overloaded{
          [&](const MatmulParams& p) {
            const std::size_t n = p.n, nn = n * n;
            std::vector<std::uint64_t> out(nn, 0);
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                  acc = f.add(acc, f.mul(f.reduce(inputs[i * n + k]), f.reduce(inputs[nn + k * n + j])));
                }
                out[i * n + j] = acc;
              }
            }
            return out;
          },
          [&](const ImageMatchParams& p) {
            const std::size_t image_size = p.width * p.height;
            std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
            std::uint64_t best_row = 0, best_col = 0;
            for (std::size_t row = 0; row + p.kernel_height <= p.height; ++row) {
              for (std::size_t col = 0; col + p.kernel_width <= p.width; ++col) {
                std::uint64_t score = 0;
                for (std::size_t dr = 0; dr < p.kernel_height; ++dr) {
                  for (std::size_t dc = 0; dc < p.kernel_width; ++dc) {
                    const auto a = static_cast<std::int64_t>(inputs[(row + dr) * p.width + col + dc]);
                    const auto k = static_cast<std::int64_t>(inputs[image_size + dr * p.kernel_width + dc]);
                    score += static_cast<std::uint64_t>((a - k) * (a - k));
                  }
                }
                if (score < best) {
                  best = score;
                  best_row = row;
                  best_col = col;
                }
              }
            }
            return std::vector<std::uint64_t>{best_row, best_col, best};
          },
          [&](const MultipolyParams& p) {
            const std::size_t coeffs = coefficient_count(p.degree, p.vars);
            return std::vector<std::uint64_t>{
                horner_native(f, p.degree, p.vars, 0, 0, inputs.first(coeffs), inputs.subspan(coeffs))};
          },
          [&](const FloydWarshallParams& p) {
            const std::size_t n = p.n;
            std::vector<std::uint64_t> d(inputs.begin(), inputs.end());
            for (std::size_t k = 0; k < n; ++k) {
              for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                  d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
                }
              }
            }
            return d;
          },
      },
      spec.params);
}

std::vector<std::uint64_t> random_inputs(const AppSpec& spec, std::mt19937_64& rng) {
  validate_spec(spec);
  const std::uint64_t p = spec.field.modulus();
  auto below = [&](std::uint64_t bound) {
    // rejection sampling keeps this independent of <random> distributions
    std::uint64_t mask = bound - 1;
    for (int s = 1; s < 64; s <<= 1) mask |= mask >> s;
    for (;;) {
      const std::uint64_t x = rng() & mask;
      if (x < bound) return x;
    }
  };
  std::vector<std::uint64_t> in(spec.num_public_inputs());
  std::visit(overloaded{
                 [&](const MatmulParams&) {
                   for (auto& v : in) v = below(p);
                 },
                 [&](const ImageMatchParams& q) {
                   for (auto& v : in) v = below(std::uint64_t{1} << q.bitwidth);
                 },
                 [&](const MultipolyParams&) {
                   for (auto& v : in) v = below(p);
                 },
                 [&](const FloydWarshallParams& q) {
                   const std::uint64_t inf = floyd_warshall_infinity(q.bitwidth);
                   const std::uint64_t limit = std::uint64_t{1} << (q.bitwidth - 2);
                   for (std::size_t i = 0; i < q.n; ++i) {
                     for (std::size_t j = 0; j < q.n; ++j) {
                       std::uint64_t w = 0;
                       if (i != j) w = below(10) < 3 ? inf : below(limit);
                       in[i * q.n + j] = w;
                     }
                   }
                 },
             },
             spec.params);
  return in;
}

}  // namespace cic
