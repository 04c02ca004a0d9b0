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

// Python bindings: field arithmetic, the four apps, prove/verify round
// trips, gas estimates, and scenario replay. Thin wrappers only.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cic/app_io.hpp"
#include "cic/apps.hpp"
#include "cic/error.hpp"
#include "cic/gas.hpp"
#include "cic/harness.hpp"
#include "cic/proof_system.hpp"
#include "cic/r1cs.hpp"

namespace py = pybind11;

namespace {

using Values = std::vector<std::uint64_t>;

py::bytes to_py(const cic::Bytes& b) { return {reinterpret_cast<const char*>(b.data()), b.size()}; }

cic::Bytes from_py(const py::bytes& b) {
  const std::string s = b;
  return {s.begin(), s.end()};
}

std::size_t get(const py::dict& kw, const char* key, std::size_t fallback) {
  return kw.contains(key) ? kw[key].cast<std::size_t>() : fallback;
}

// app name plus keyword sizes, e.g. spec_of("matmul", {"n": 4})
cic::AppSpec spec_of(const std::string& app, const py::dict& kw) {
  const auto kind = cic::parse_app_kind(app);
  if (!kind) throw cic::Error(cic::ErrorCode::InvalidParameters, "unknown app '" + app + "'");
  const cic::Field field = kw.contains("modulus") ? cic::Field(kw["modulus"].cast<std::uint64_t>()) : cic::Field();
  cic::AppSpec spec = cic::desk_scale(*kind, field);
  switch (*kind) {
    case cic::AppKind::matmul: {
      auto& p = std::get<cic::MatmulParams>(spec.params);
      p.n = get(kw, "n", p.n);
      break;
    }
    case cic::AppKind::image_match: {
      auto& p = std::get<cic::ImageMatchParams>(spec.params);
      p.width = get(kw, "width", p.width);
      p.height = get(kw, "height", p.height);
      p.kernel_width = get(kw, "kernel_width", p.kernel_width);
      p.kernel_height = get(kw, "kernel_height", p.kernel_height);
      p.bitwidth = static_cast<std::uint32_t>(get(kw, "bitwidth", p.bitwidth));
      break;
    }
    case cic::AppKind::multipoly: {
      auto& p = std::get<cic::MultipolyParams>(spec.params);
      p.degree = get(kw, "degree", p.degree);
      p.vars = get(kw, "vars", p.vars);
      break;
    }
    case cic::AppKind::floyd_warshall: {
      auto& p = std::get<cic::FloydWarshallParams>(spec.params);
      p.n = get(kw, "n", p.n);
      p.bitwidth = static_cast<std::uint32_t>(get(kw, "bitwidth", p.bitwidth));
      break;
    }
  }
  return spec;
}

// Gas estimates accept degenerate sizes (n = 0 costs one transaction); the
// circuit paths do not.
cic::AppSpec checked_spec_of(const std::string& app, const py::dict& kw) {
  cic::AppSpec spec = spec_of(app, kw);
  cic::validate_spec(spec);
  return spec;
}

// Client keygen plus worker proof for one instance.
py::dict prove_instance(const cic::AppSpec& spec, const Values& inputs, std::uint64_t seed) {
  cic::validate_inputs(spec, inputs);
  const cic::ArithmeticCircuit circuit = cic::build_app(spec);
  const cic::QuadraticProgram qap = cic::r1cs_to_qap(cic::to_r1cs(circuit));
  const cic::KeyPair kp = cic::setup(qap, seed);
  const cic::Witness w = cic::evaluate_circuit(circuit, inputs);
  const Values io = w.public_io(circuit.num_public_inputs, circuit.num_public_outputs);
  py::dict out;
  out["vk"] = to_py(cic::serialize(kp.vk));
  out["public_io"] = io;
  out["outputs"] = Values(io.begin() + static_cast<std::ptrdiff_t>(inputs.size()), io.end());
  out["proof"] = to_py(cic::serialize(cic::prove(kp.ek, qap, w)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_cicbroker, m) {
  m.doc() = "Verifiable outsourced computation: prover, verifier and broker simulation";

  // messages carry the error code name, e.g. "NotDivisible: ..."
  py::register_exception<cic::Error>(m, "CicError", PyExc_ValueError);

  py::class_<cic::Field>(m, "Field")
      .def(py::init<>())
      .def(py::init<std::uint64_t>(), py::arg("modulus"))
      .def_property_readonly("modulus", &cic::Field::modulus)
      .def("add", &cic::Field::add)
      .def("sub", &cic::Field::sub)
      .def("mul", &cic::Field::mul)
      .def("neg", &cic::Field::neg)
      .def("pow", &cic::Field::pow)
      .def("inv", &cic::Field::inv)
      .def("__repr__", [](const cic::Field& f) { return "Field(" + std::to_string(f.modulus()) + ")"; });

  m.attr("PROOF_BYTES") = cic::kProofBytes;
  m.attr("VERIFY_PAIRINGS") = cic::kVerifyPairings;
  m.attr("BLOCK_GAS_LIMIT") = cic::kBlockGasLimit;

  m.def("apps", [] {
    return std::vector<std::string>{"matmul", "image_match", "multipoly", "floyd_warshall"};
  });

  m.def(
      "run_reference",
      [](const std::string& app, const Values& inputs, const py::kwargs& kw) {
        const cic::AppSpec spec = checked_spec_of(app, kw);
        cic::validate_inputs(spec, inputs);
        return cic::run_reference(spec, inputs);
      },
      py::arg("app"), py::arg("inputs"));

  m.def(
      "constraint_count",
      [](const std::string& app, const py::kwargs& kw) {
        return cic::to_r1cs(cic::build_app(checked_spec_of(app, kw))).size();
      },
      py::arg("app"));

  m.def(
      "prove",
      [](const std::string& app, const Values& inputs, std::uint64_t seed, const py::kwargs& kw) {
        return prove_instance(checked_spec_of(app, kw), inputs, seed);
      },
      py::arg("app"), py::arg("inputs"), py::arg("seed") = 1,
      "Generates keys from seed and proves one instance; returns vk, public_io, outputs and proof.");

  m.def(
      "prove_file",
      [](const std::string& path, std::uint64_t seed) {
        const cic::AppInput in = cic::read_app_input(path);
        return prove_instance(in.spec, in.inputs, seed);
      },
      py::arg("path"), py::arg("seed") = 1);

  m.def(
      "verify",
      [](const py::bytes& vk, const Values& public_io, const py::bytes& proof) {
        const cic::VerificationKey key = cic::deserialize_verification_key(from_py(vk));
        return cic::verify(key, public_io, from_py(proof));
      },
      py::arg("vk"), py::arg("public_io"), py::arg("proof"));

  m.def(
      "estimate_gas",
      [](const std::string& app, const py::kwargs& kw) { return cic::estimate_gas(spec_of(app, kw)); },
      py::arg("app"));

  m.def(
      "block_ratio", [](std::uint64_t gas) { return cic::block_ratio(gas); }, py::arg("gas"));

  m.def(
      "run_scenario",
      [](const std::string& path, std::uint64_t seed) {
        const cic::ScenarioTrace t = cic::run_scenario(cic::read_scenario(path), seed);
        py::dict jobs;
        for (const auto& [id, job] : t.jobs) jobs[py::int_(id)] = std::string(cic::to_string(job.state));
        py::dict out;
        out["trace"] = t.text();
        out["jobs"] = jobs;
        out["balances"] = t.balances;
        return out;
      },
      py::arg("path"), py::arg("seed") = 1);
}
