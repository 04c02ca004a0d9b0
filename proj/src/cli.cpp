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

#include "cic/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cic/app_io.hpp"
#include "cic/bench.hpp"
#include "cic/gas.hpp"
#include "cic/harness.hpp"
#include "cic/proof_system.hpp"
#include "cic/qap.hpp"
#include "cic/r1cs.hpp"

namespace cic {

namespace {

struct SizeFlags {
  std::optional<std::size_t> n, image, width, height, kernel, kernel_width, kernel_height, degree, vars;
  std::optional<std::uint32_t> bitwidth;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "matrix or graph size");
    app->add_option("--image", image, "square image side");
    app->add_option("--width", width, "image width");
    app->add_option("--height", height, "image height");
    app->add_option("--kernel", kernel, "square kernel side");
    app->add_option("--kernel-width", kernel_width, "kernel width");
    app->add_option("--kernel-height", kernel_height, "kernel height");
    app->add_option("--degree", degree, "multipoly degree m");
    app->add_option("--vars", vars, "multipoly variable count k");
    app->add_option("--bitwidth", bitwidth, "pixel or weight bit width");
  }

  AppSpec apply(AppKind kind, const Field& field) const {
    AppSpec spec = desk_scale(kind, field);
    std::visit(
        [&](auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, MatmulParams>) {
            if (n) p.n = *n;
          } else if constexpr (std::is_same_v<P, ImageMatchParams>) {
            if (image) p.width = p.height = *image;
            if (width) p.width = *width;
            if (height) p.height = *height;
            if (kernel) p.kernel_width = p.kernel_height = *kernel;
            if (kernel_width) p.kernel_width = *kernel_width;
            if (kernel_height) p.kernel_height = *kernel_height;
            if (bitwidth) p.bitwidth = *bitwidth;
          } else if constexpr (std::is_same_v<P, MultipolyParams>) {
            if (degree) p.degree = *degree;
            if (vars) p.vars = *vars;
          } else {
            if (n) p.n = *n;
            if (bitwidth) p.bitwidth = *bitwidth;
          }
        },
        spec.params);
    return spec;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes read_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::NotFound, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), {});
}

void write_bytes(const std::filesystem::path& path, const Bytes& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::NotFound, "cannot write " + path.string());
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::NotFound, "cannot write " + path.string());
  f << text;
}

std::vector<std::uint64_t> read_io(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::NotFound, "cannot open " + path);
  std::vector<std::uint64_t> values;
  std::string line;
  while (std::getline(f, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      std::uint64_t v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok[0] == '-') throw Error(ErrorCode::MalformedInput, "bad io value '" + tok + "'");
      values.push_back(v);
    }
  }
  return values;
}

Field field_from(const std::optional<std::uint64_t>& modulus, const Field& fallback = Field()) {
  return modulus ? Field(*modulus) : fallback;
}

AppKind app_kind(const std::string& name) {
  const auto kind = parse_app_kind(name);
  if (!kind) throw UsageError("unknown app '" + name + "' (matmul, image_match, multipoly, floyd_warshall)");
  return *kind;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Off-chain execution of computationally intensive contracts", "cic"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::optional<std::uint64_t> modulus;
  std::string out_path;
  app.add_option("--seed", seed, "random seed for inputs and keys");
  app.add_option("--modulus", modulus, "prime field modulus (default 2^61-1)");
  app.add_option("--out", out_path, "output file or directory");

  SizeFlags bench_sizes;
  std::vector<std::string> bench_apps;
  std::size_t reps = 3;
  auto* bench_cmd = app.add_subcommand("bench", "time setup, prove and verify; --out writes CSV");
  bench_cmd->add_option("--app", bench_apps, "apps to run (default: all four)");
  bench_cmd->add_option("--reps", reps, "repetitions per app")->check(CLI::PositiveNumber);
  bench_sizes.attach(bench_cmd);

  std::string scenario_file;
  auto* scenario_cmd = app.add_subcommand("scenario", "protocol simulation");
  scenario_cmd->require_subcommand(1);
  auto* run_cmd = scenario_cmd->add_subcommand("run", "run a scenario script and print its trace");
  run_cmd->add_option("file", scenario_file, "scenario script")->required();

  std::string input_file;
  auto* prove_cmd = app.add_subcommand("prove", "prove an app input file; writes vk.bin, io.txt, proof.bin");
  prove_cmd->add_option("input", input_file, "app input file")->required();

  std::string vk_file, io_file, proof_file;
  auto* verify_cmd = app.add_subcommand("verify", "check a proof; prints OK or REJECTED");
  verify_cmd->add_option("vk", vk_file, "verification key")->required();
  verify_cmd->add_option("io", io_file, "public inputs and outputs")->required();
  verify_cmd->add_option("proof", proof_file, "proof")->required();

  std::string gas_app;
  SizeFlags gas_sizes;
  std::uint64_t block_limit = kBlockGasLimit;
  auto* gas_cmd = app.add_subcommand("gas", "estimate the cost of running an app as a contract");
  gas_cmd->add_option("app", gas_app, "matmul, image_match, multipoly or floyd_warshall")->required();
  gas_cmd->add_option("--block-limit", block_limit, "block gas limit");
  gas_sizes.attach(gas_cmd);

  for (auto* sub : {bench_cmd, scenario_cmd, run_cmd, prove_cmd, verify_cmd, gas_cmd}) sub->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cic: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*bench_cmd) {
      const Field field = field_from(modulus);
      std::vector<AppSpec> specs;
      if (bench_apps.empty()) bench_apps = {"matmul", "image_match", "multipoly", "floyd_warshall"};
      for (const auto& name : bench_apps) specs.push_back(bench_sizes.apply(app_kind(name), field));
      for (const auto& s : specs) validate_spec(s);
      const BenchReport report = bench(specs, reps, seed);
      report.write_table(out);
      if (!out_path.empty()) {
        std::ofstream csv(out_path);
        if (!csv) throw Error(ErrorCode::NotFound, "cannot write " + out_path);
        report.write_csv(csv);
        out << "csv: " << out_path << '\n';
      }
      for (const auto& r : report.rows) {
        if (!r.verified) {
          err << "cic: " << r.app << " " << r.size << " rep " << r.rep << " failed to verify\n";
          return kExitDomainError;
        }
      }
      return kExitOk;
    }

    if (*run_cmd) {
      const ScenarioTrace trace = run_scenario(read_scenario(scenario_file), seed);
      if (out_path.empty()) {
        out << trace.text();
      } else {
        write_text(out_path, trace.text());
        for (const auto& [id, j] : trace.jobs) out << "job " << id << ": " << to_string(j.state) << '\n';
        out << "trace: " << out_path << '\n';
      }
      return kExitOk;
    }

    if (*prove_cmd) {
      AppInput input = read_app_input(input_file);
      if (modulus) {
        input.spec.field = Field(*modulus);
        validate_inputs(input.spec, input.inputs);
      }
      const ArithmeticCircuit circuit = build_app(input.spec);
      const ConstraintSystem cs = to_r1cs(circuit);
      const QuadraticProgram qap = r1cs_to_qap(cs);
      const KeyPair keys = setup(qap, seed);
      const Witness w = evaluate_circuit(circuit, input.inputs);
      const Proof proof = prove(keys.ek, qap, w);
      const auto io = w.public_io(circuit.num_public_inputs, circuit.num_public_outputs);

      const std::filesystem::path dir = out_path.empty() ? std::filesystem::path(".") : std::filesystem::path(out_path);
      std::filesystem::create_directories(dir);
      const Bytes proof_bytes = serialize(proof);
      write_bytes(dir / "vk.bin", serialize(keys.vk));
      write_bytes(dir / "proof.bin", proof_bytes);
      std::ostringstream io_text;
      io_text << "# " << circuit.num_public_inputs << " inputs then " << circuit.num_public_outputs << " outputs\n";
      for (std::size_t i = 0; i < io.size(); ++i) {
        const bool line_end = i + 1 == circuit.num_public_inputs || i + 1 == io.size();
        io_text << io[i] << (line_end ? '\n' : ' ');
      }
      write_text(dir / "io.txt", io_text.str());

      out << "app: " << input.spec.name() << ' ' << input.spec.size_label() << '\n';
      out << "constraints: " << cs.size() << '\n';
      out << "proof: " << (dir / "proof.bin").string() << " (" << proof_bytes.size() << " bytes)\n";
      out << "vk: " << (dir / "vk.bin").string() << '\n';
      out << "io: " << (dir / "io.txt").string() << '\n';
      out << "outputs:";
      for (std::size_t i = circuit.num_public_inputs; i < io.size(); ++i) out << ' ' << io[i];
      out << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      try {
        const VerificationKey vk = deserialize_verification_key(read_bytes(vk_file));
        const auto io = read_io(io_file);
        if (verify(vk, io, read_bytes(proof_file))) {
          out << "OK\n";
          return kExitOk;
        }
        out << "REJECTED\n";
      } catch (const Error& e) {
        out << "REJECTED\n";
        err << "cic: " << e.what() << '\n';
      }
      return kExitDomainError;
    }

    if (*gas_cmd) {
      const AppSpec spec = gas_sizes.apply(app_kind(gas_app), field_from(modulus));
      GasModel model;
      model.block_gas_limit = block_limit;
      if (block_limit == 0) throw UsageError("--block-limit must be positive");
      const OpCounts c = op_counts(spec);
      const std::uint64_t gas = estimate_gas(spec, model);
      out << "app: " << spec.name() << ' ' << spec.size_label() << '\n';
      out << "ops: adds=" << c.adds << " muls=" << c.muls << " comparisons=" << c.comparisons
          << " storage_writes=" << c.storage_writes << '\n';
      out << "gas: " << gas << '\n';
      out << "block limit: " << model.block_gas_limit << '\n';
      out << "ratio: " << std::fixed << std::setprecision(2) << block_ratio(gas, model) << "x\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "cic: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "cic: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "cic: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace cic
