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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cic/app_io.hpp"
#include "cic/cli.hpp"
#include "test_util.hpp"

namespace {

using namespace cic;
using testutil::code_of;
namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("cic_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(counter++) + "_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kInputs = CIC_INPUT_DIR;

// ---- app input files -------------------------------------------------------

TEST(AppInput, ParsesEveryShippedExample) {
  const AppInput mm = read_app_input(kInputs + "/matmul_2x2.txt");
  EXPECT_EQ(mm.spec.kind(), AppKind::matmul);
  EXPECT_EQ(mm.inputs, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8}));

  const AppInput fw = read_app_input(kInputs + "/floyd_warshall_4.txt");
  EXPECT_EQ(fw.inputs[3], floyd_warshall_infinity(16));

  const AppInput mp = read_app_input(kInputs + "/multipoly_m1_k2.txt");
  EXPECT_EQ(mp.fee, 10u);
  EXPECT_EQ(mp.collateral, 5u);
  EXPECT_EQ(mp.max_duration, 4u);

  const AppInput im = read_app_input(kInputs + "/image_match_6x6.txt");
  EXPECT_EQ(run_reference(im.spec, im.inputs), (std::vector<std::uint64_t>{3, 1, 0}));
}

TEST(AppInput, FormatRoundTrips) {
  std::mt19937_64 rng(3);
  for (AppKind k : {AppKind::matmul, AppKind::image_match, AppKind::multipoly, AppKind::floyd_warshall}) {
    AppInput in{desk_scale(k), {}, 7, std::nullopt, 3};
    in.inputs = random_inputs(in.spec, rng);
    const AppInput back = parse_app_input(format_app_input(in));
    EXPECT_EQ(back.spec.params, in.spec.params);
    EXPECT_EQ(back.inputs, in.inputs);
    EXPECT_EQ(back.fee, 7u);
    EXPECT_FALSE(back.collateral.has_value());
    EXPECT_EQ(back.max_duration, 3u);
  }
}

TEST(AppInput, CustomModulus) {
  const AppInput in = parse_app_input("app = matmul\nn = 1\nmodulus = 101\na = 100\nb = 100\n");
  EXPECT_EQ(in.spec.field.modulus(), 101u);
  EXPECT_EQ(code_of([] { parse_app_input("app = matmul\nn = 1\nmodulus = 101\na = 101\nb = 1\n"); }),
            ErrorCode::MalformedInput);
}

TEST(AppInput, Errors) {
  for (const char* bad : {
           "n = 2\na = 1 2 3 4\nb = 1 2 3 4\n",
           "app = cube\n",
           "app = matmul\nn = 2\na = 1 2 3\nb = 1 2 3 4\n",
           "app = matmul\nn = 2\na = 1 2 3 4\nb = 1 2 3 4\ncolour = red\n",
           "app = matmul\nn = 2\nn = 2\na = 1 2 3 4\nb = 1 2 3 4\n",
           "app = matmul\nn = two\n",
           "app = matmul\nn = 1\na = -1\nb = 1\n",
           "1 2 3\napp = matmul\n",
           "app = matmul\nn = 1\na = 1\n",
       }) {
    EXPECT_EQ(code_of([&] { parse_app_input(bad); }), ErrorCode::MalformedInput) << bad;
  }
  EXPECT_EQ(code_of([] { parse_app_input("app = floyd_warshall\nn = 2\nbitwidth = 16\nweights = 0 5 5 1\n"); }),
            ErrorCode::WeightOutOfRange);
  EXPECT_EQ(code_of([] { parse_app_input("app = matmul\nn = 0\na =\nb =\n"); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { read_app_input("/nonexistent/input.txt"); }), ErrorCode::NotFound);
}

// ---- command line ----------------------------------------------------------

TEST(Cli, UsageErrorsExitTwoWithSynopsis) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"verify", "only-one"},
           {"scenario"},
           {"gas"},
           {"gas", "sudoku"},
           {"bench", "--reps", "0"},
           {"bench", "--app", "sudoku"},
           {"--seed", "x", "bench"},
       }) {
    const CliRun r = cli(args);
    EXPECT_EQ(r.code, kExitUsage) << ::testing::PrintToString(args);
    EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
  }
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("scenario"), std::string::npos);
}

TEST(Cli, ProveThenVerifyEveryApp) {
  std::mt19937_64 rng(9);
  for (AppKind k : {AppKind::matmul, AppKind::image_match, AppKind::multipoly, AppKind::floyd_warshall}) {
    TempDir dir;
    AppInput in{desk_scale(k), {}, std::nullopt, std::nullopt, std::nullopt};
    in.inputs = random_inputs(in.spec, rng);
    write(dir / "input.txt", format_app_input(in));
    const CliRun p = cli({"prove", dir / "input.txt", "--out", dir / "out", "--seed", "4"});
    ASSERT_EQ(p.code, kExitOk) << p.err;
    EXPECT_NE(p.out.find("(79 bytes)"), std::string::npos);
    const CliRun v = cli({"verify", dir / "out/vk.bin", dir / "out/io.txt", dir / "out/proof.bin"});
    EXPECT_EQ(v.code, kExitOk) << app_name(k) << v.err;
    EXPECT_EQ(v.out, "OK\n");
  }
}

TEST(Cli, TamperedIoIsRejected) {
  TempDir dir;
  ASSERT_EQ(cli({"prove", kInputs + "/matmul_2x2.txt", "--out", dir / "p"}).code, kExitOk);
  const std::string io = read(dir / "p/io.txt");
  ASSERT_NE(io.find("19 22 43 50"), std::string::npos);
  std::string bad = io;
  bad.replace(bad.find("19 22"), 5, "19 23");
  write(dir / "bad_io.txt", bad);
  const CliRun r = cli({"verify", dir / "p/vk.bin", dir / "bad_io.txt", dir / "p/proof.bin"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_EQ(r.out, "REJECTED\n");

  // a truncated proof and a missing file are rejections too
  std::string proof = read(dir / "p/proof.bin");
  write(dir / "short.bin", proof.substr(0, 40));
  EXPECT_EQ(cli({"verify", dir / "p/vk.bin", dir / "p/io.txt", dir / "short.bin"}).out, "REJECTED\n");
  const CliRun missing = cli({"verify", dir / "p/vk.bin", dir / "p/io.txt", dir / "nope.bin"});
  EXPECT_EQ(missing.code, kExitDomainError);
  EXPECT_EQ(missing.out, "REJECTED\n");
}

TEST(Cli, KeysFromADifferentSeedReject) {
  TempDir dir;
  ASSERT_EQ(cli({"prove", kInputs + "/multipoly_m1_k2.txt", "--out", dir / "a", "--seed", "1"}).code, kExitOk);
  ASSERT_EQ(cli({"prove", kInputs + "/multipoly_m1_k2.txt", "--out", dir / "b", "--seed", "2"}).code, kExitOk);
  EXPECT_EQ(cli({"verify", dir / "b/vk.bin", dir / "a/io.txt", dir / "a/proof.bin"}).out, "REJECTED\n");
  EXPECT_EQ(cli({"verify", dir / "a/vk.bin", dir / "a/io.txt", dir / "a/proof.bin"}).out, "OK\n");
}

TEST(Cli, ProveRejectsBadInputs) {
  TempDir dir;
  write(dir / "bad.txt", "app = floyd_warshall\nn = 2\nbitwidth = 16\nweights = 0 1 1 7\n");
  const CliRun r = cli({"prove", dir / "bad.txt", "--out", dir / "o"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("WeightOutOfRange"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"prove", dir / "missing.txt"}).code, kExitDomainError);
}

TEST(Cli, ProveWithSmallModulus) {
  TempDir dir;
  const CliRun r = cli({"prove", kInputs + "/matmul_2x2.txt", "--modulus", "1000003", "--out", dir / "m"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(cli({"verify", dir / "m/vk.bin", dir / "m/io.txt", dir / "m/proof.bin"}).out, "OK\n");
  EXPECT_EQ(cli({"prove", kInputs + "/matmul_2x2.txt", "--modulus", "1000000", "--out", dir / "n"}).code,
            kExitDomainError);
}

TEST(Cli, GasReport) {
  const CliRun r = cli({"gas", "image_match", "--image", "85", "--kernel", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("app: image_match 85x85"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gas: 149831264"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("block limit: 12000000"), std::string::npos);
  EXPECT_NE(r.out.find("ratio: 12.49x"), std::string::npos);
  const CliRun z = cli({"gas", "matmul", "--n", "0"});
  EXPECT_NE(z.out.find("gas: 21000"), std::string::npos) << z.out;
  const CliRun lim = cli({"gas", "matmul", "--n", "10", "--block-limit", "0"});
  EXPECT_EQ(lim.code, kExitUsage);
}

TEST(Cli, ScenarioRun) {
  const CliRun r = cli({"scenario", "run", std::string(CIC_SCENARIO_DIR) + "/happy.scn"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("1 PAID"), std::string::npos);
  EXPECT_EQ(r.out, cli({"scenario", "run", std::string(CIC_SCENARIO_DIR) + "/happy.scn"}).out);

  TempDir dir;
  const CliRun f = cli({"scenario", "run", std::string(CIC_SCENARIO_DIR) + "/tamper.scn", "--out", dir / "t.txt"});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_NE(f.out.find("job 1: SLASHED"), std::string::npos);
  EXPECT_NE(read(dir / "t.txt").find("# balances"), std::string::npos);

  write(dir / "bad.scn", "0 | alice | fund\n");
  EXPECT_EQ(cli({"scenario", "run", dir / "bad.scn"}).code, kExitDomainError);
}

TEST(Cli, BenchWritesCsv) {
  TempDir dir;
  const CliRun r = cli({"bench", "--app", "matmul", "--n", "3", "--reps", "2", "--out", dir / "b.csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("ProofGen (s)"), std::string::npos);
  const std::string csv = read(dir / "b.csv");
  EXPECT_EQ(csv.rfind("app,size,rep,keygen_s,proofgen_s,verify_ms,proof_bytes\n", 0), 0u);
  EXPECT_NE(csv.find("matmul,3x3,1,"), std::string::npos);
}

}  // namespace
