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

#include "cic/app_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cic {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedInput, why); }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view tok, std::string_view key) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    malformed("bad number '" + std::string(tok) + "' for " + std::string(key));
  }
  return v;
}

class KeyValues {
 public:
  explicit KeyValues(std::string_view text) {
    std::string current;
    std::size_t line_no = 0;
    while (!text.empty()) {
      const auto nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        if (current.empty()) malformed("line " + std::to_string(line_no) + ": value without a key");
        values_[current] += " " + std::string(line);
        continue;
      }
      current = std::string(trim(line.substr(0, eq)));
      if (current.empty()) malformed("line " + std::to_string(line_no) + ": empty key");
      if (values_.count(current)) malformed("duplicate key " + current);
      values_[current] = std::string(trim(line.substr(eq + 1)));
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const std::string& text(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) malformed("missing key " + key);
    used_.insert(key);
    return it->second;
  }

  std::uint64_t scalar(const std::string& key) {
    const std::string& v = text(key);
    if (v.find_first_of(" \t") != std::string::npos) malformed(key + " must be a single number");
    return parse_u64(v, key);
  }

  std::optional<std::uint64_t> optional_scalar(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return scalar(key);
  }

  std::vector<std::uint64_t> array(const std::string& key, std::size_t expected,
                                   std::optional<std::uint64_t> inf = std::nullopt) {
    std::istringstream is(text(key));
    std::vector<std::uint64_t> out;
    std::string tok;
    while (is >> tok) out.push_back(inf && tok == "inf" ? *inf : parse_u64(tok, key));
    if (out.size() != expected) {
      malformed(key + " has " + std::to_string(out.size()) + " values, expected " + std::to_string(expected));
    }
    return out;
  }

  void reject_unused() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) malformed("unknown key " + k);
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

void append(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

void write_array(std::ostream& os, std::string_view key, std::span<const std::uint64_t> values, std::size_t row,
                 std::optional<std::uint64_t> inf = std::nullopt) {
  os << key << " =";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && row > 0 && i % row == 0) os << "\n   ";
    os << ' ';
    if (inf && values[i] == *inf) {
      os << "inf";
    } else {
      os << values[i];
    }
  }
  os << '\n';
}

}  // namespace

AppInput parse_app_input(std::string_view text) {
  KeyValues kv(text);
  const auto kind = parse_app_kind(kv.text("app"));
  if (!kind) malformed("unknown app '" + kv.text("app") + "'");

  AppInput in;
  if (const auto p = kv.optional_scalar("modulus")) {
    try {
      in.spec.field = Field(*p);
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  in.fee = kv.optional_scalar("fee");
  in.collateral = kv.optional_scalar("collateral");
  in.max_duration = kv.optional_scalar("max_duration");

  switch (*kind) {
    case AppKind::matmul: {
      MatmulParams p{kv.scalar("n")};
      in.spec.params = p;
      append(in.inputs, kv.array("a", p.n * p.n));
      append(in.inputs, kv.array("b", p.n * p.n));
      break;
    }
    case AppKind::image_match: {
      ImageMatchParams p{kv.scalar("width"), kv.scalar("height"), kv.scalar("kernel_width"),
                         kv.scalar("kernel_height"), static_cast<std::uint32_t>(kv.scalar("bitwidth"))};
      in.spec.params = p;
      append(in.inputs, kv.array("image", p.width * p.height));
      append(in.inputs, kv.array("kernel", p.kernel_width * p.kernel_height));
      break;
    }
    case AppKind::multipoly: {
      MultipolyParams p{kv.scalar("degree"), kv.scalar("vars")};
      in.spec.params = p;
      validate_spec(in.spec);
      append(in.inputs, kv.array("coeffs", in.spec.num_public_inputs() - p.vars));
      append(in.inputs, kv.array("x", p.vars));
      break;
    }
    case AppKind::floyd_warshall: {
      FloydWarshallParams p{kv.scalar("n"), static_cast<std::uint32_t>(kv.scalar("bitwidth"))};
      in.spec.params = p;
      validate_spec(in.spec);
      append(in.inputs, kv.array("weights", p.n * p.n, floyd_warshall_infinity(p.bitwidth)));
      break;
    }
  }
  kv.reject_unused();
  validate_inputs(in.spec, in.inputs);
  return in;
}

std::string format_app_input(const AppInput& in) {
  std::ostringstream os;
  os << "app = " << in.spec.name() << '\n';
  if (in.spec.field.modulus() != kMersenne61) os << "modulus = " << in.spec.field.modulus() << '\n';
  const std::span<const std::uint64_t> v(in.inputs);
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, MatmulParams>) {
          os << "n = " << p.n << '\n';
          write_array(os, "a", v.first(p.n * p.n), p.n);
          write_array(os, "b", v.subspan(p.n * p.n), p.n);
        } else if constexpr (std::is_same_v<P, ImageMatchParams>) {
          os << "width = " << p.width << "\nheight = " << p.height << "\nkernel_width = " << p.kernel_width
             << "\nkernel_height = " << p.kernel_height << "\nbitwidth = " << p.bitwidth << '\n';
          write_array(os, "image", v.first(p.width * p.height), p.width);
          write_array(os, "kernel", v.subspan(p.width * p.height), p.kernel_width);
        } else if constexpr (std::is_same_v<P, MultipolyParams>) {
          os << "degree = " << p.degree << "\nvars = " << p.vars << '\n';
          write_array(os, "coeffs", v.first(v.size() - p.vars), p.degree + 1);
          write_array(os, "x", v.last(p.vars), 0);
        } else {
          os << "n = " << p.n << "\nbitwidth = " << p.bitwidth << '\n';
          write_array(os, "weights", v, p.n, floyd_warshall_infinity(p.bitwidth));
        }
      },
      in.spec.params);
  if (in.fee) os << "fee = " << *in.fee << '\n';
  if (in.collateral) os << "collateral = " << *in.collateral << '\n';
  if (in.max_duration) os << "max_duration = " << *in.max_duration << '\n';
  return os.str();
}

AppInput read_app_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::NotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_app_input(ss.str());
}

}  // namespace cic
