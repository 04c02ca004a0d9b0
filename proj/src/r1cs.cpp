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

#include "cic/r1cs.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace cic {

std::uint64_t evaluate(const Field& f, const LinearCombination& lc,
                       const std::vector<std::uint64_t>& assignment) {
  std::uint64_t acc = 0;
  for (const Term& t : lc) acc = f.add(acc, f.mul(t.coeff, assignment[t.wire]));
  return acc;
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedCircuit, why); }

// Checks the topological and single-assignment invariants of a circuit.
void validate(const ArithmeticCircuit& c) {
  if (c.wire_count < 1 + c.num_io() + c.num_private_inputs) malformed("wire_count smaller than declared inputs");
  if (c.output_sources.size() != c.num_public_outputs) malformed("output binding count mismatch");

  std::vector<bool> defined(c.wire_count, false);
  defined[kOneWire] = true;
  for (std::uint32_t i = 0; i < c.num_public_inputs; ++i) defined[c.public_input(i)] = true;
  for (std::uint32_t i = 0; i < c.num_private_inputs; ++i) defined[c.private_input(i)] = true;

  auto read = [&](Wire w) {
    if (w >= c.wire_count || !defined[w]) malformed("wire " + std::to_string(w) + " read before definition");
  };
  auto write = [&](Wire w) {
    if (w >= c.wire_count || defined[w]) malformed("wire " + std::to_string(w) + " is not fresh");
    if (w >= 1 + c.num_public_inputs && w < 1 + c.num_io()) malformed("gate writes a public output wire");
    defined[w] = true;
  };
  auto run_hint = [&](const Hint& h) {
    read(h.input);
    for (std::uint32_t i = 0; i < h.count; ++i) write(h.first_out + i);
  };

  std::size_t next_hint = 0;
  std::size_t last_position = 0;
  for (const Hint& h : c.hints) {
    if (h.position < last_position || h.position > c.gates.size()) malformed("hint positions out of order");
    last_position = h.position;
  }
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    while (next_hint < c.hints.size() && c.hints[next_hint].position <= g) run_hint(c.hints[next_hint++]);
    const Gate& gate = c.gates[g];
    read(gate.left);
    if (gate.kind != GateKind::const_mul) read(gate.right);
    write(gate.out);
  }
  while (next_hint < c.hints.size()) run_hint(c.hints[next_hint++]);
  for (const Assertion& a : c.assertions) {
    read(a.a);
    read(a.b);
    read(a.c);
  }
  for (Wire w : c.output_sources) read(w);
}

LinearCombination merge(const Field& f, const LinearCombination& x, const LinearCombination& y) {
  LinearCombination out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].wire < y[j].wire)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].wire < x[i].wire) {
      out.push_back(y[j++]);
    } else {
      const std::uint64_t s = f.add(x[i].coeff, y[j].coeff);
      if (s != 0) out.push_back({x[i].wire, s});
      ++i;
      ++j;
    }
  }
  return out;
}

// Linear combinations of add/const_mul outputs in terms of the remaining
// wires. Each stored combination is released after its last reader.
class LcFolder {
 public:
  explicit LcFolder(const ArithmeticCircuit& c) : f_(c.field), lcs_(c.wire_count), derived_(c.wire_count, false), uses_(c.wire_count, 0) {
    for (const Gate& g : c.gates) {
      if (g.kind != GateKind::mul) derived_[g.out] = true;
      ++uses_[g.left];
      if (g.kind != GateKind::const_mul) ++uses_[g.right];
    }
    for (const Assertion& a : c.assertions) {
      ++uses_[a.a];
      ++uses_[a.b];
      ++uses_[a.c];
    }
    for (Wire w : c.output_sources) ++uses_[w];
  }

  // A mul output published directly is renamed to its output wire.
  void alias(Wire w, Wire to) { rename_[w] = to; }
  Wire name(Wire w) const {
    const auto it = rename_.find(w);
    return it == rename_.end() ? w : it->second;
  }

  LinearCombination take(Wire w) {
    if (!derived_[w]) return {{name(w), 1}};
    if (--uses_[w] == 0) return std::move(lcs_[w]);
    return lcs_[w];
  }

  void define(const Gate& g) {
    if (g.kind == GateKind::add) {
      LinearCombination l = take(g.left);
      LinearCombination r = take(g.right);
      store(g.out, merge(f_, l, r));
    } else if (g.kind == GateKind::const_mul) {
      LinearCombination l = take(g.left);
      if (g.coeff == 0) {
        l.clear();
      } else {
        for (Term& t : l) t.coeff = f_.mul(t.coeff, g.coeff);
      }
      store(g.out, std::move(l));
    }
  }

 private:
  void store(Wire w, LinearCombination lc) {
    if (uses_[w] > 0) lcs_[w] = std::move(lc);
  }

  Field f_;
  std::vector<LinearCombination> lcs_;
  std::vector<bool> derived_;
  std::vector<std::uint32_t> uses_;
  std::unordered_map<Wire, Wire> rename_;
};

}  // namespace

ConstraintSystem to_r1cs(const ArithmeticCircuit& c) {
  validate(c);
  ConstraintSystem cs;
  cs.field = c.field;
  cs.wire_count = c.wire_count;
  cs.num_public_inputs = c.num_public_inputs;
  cs.num_public_outputs = c.num_public_outputs;
  cs.constraints.reserve(c.mul_gate_count() + c.assertions.size() + c.num_public_outputs);

  LcFolder folder(c);
  std::vector<bool> is_mul(c.wire_count, false);
  for (const Gate& g : c.gates) is_mul[g.out] = g.kind == GateKind::mul;
  std::vector<bool> bound_directly(c.num_public_outputs, false);
  for (std::uint32_t k = 0; k < c.num_public_outputs; ++k) {
    const Wire src = c.output_sources[k];
    if (is_mul[src]) {
      folder.alias(src, c.public_output(k));
      is_mul[src] = false;  // later outputs with the same source get a binding
      bound_directly[k] = true;
    }
  }
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::mul) {
      LinearCombination a = folder.take(g.left);
      LinearCombination b = folder.take(g.right);
      cs.constraints.push_back({std::move(a), std::move(b), {{folder.name(g.out), 1}}});
    } else {
      folder.define(g);
    }
  }
  for (const Assertion& as : c.assertions) {
    LinearCombination a = folder.take(as.a);
    LinearCombination b = folder.take(as.b);
    LinearCombination cc = folder.take(as.c);
    cs.constraints.push_back({std::move(a), std::move(b), std::move(cc)});
  }
  for (std::uint32_t k = 0; k < c.num_public_outputs; ++k) {
    if (bound_directly[k]) continue;
    cs.constraints.push_back({folder.take(c.output_sources[k]), {{kOneWire, 1}}, {{c.public_output(k), 1}}});
  }
  return cs;
}

std::vector<std::size_t> violated_constraints(const ConstraintSystem& cs, const Witness& w) {
  if (w.values.size() != cs.wire_count) {
    throw Error(ErrorCode::LengthMismatch, "witness has " + std::to_string(w.values.size()) +
                                               " entries, system has " + std::to_string(cs.wire_count) + " wires");
  }
  const Field& f = cs.field;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < cs.constraints.size(); ++i) {
    const Constraint& k = cs.constraints[i];
    if (f.mul(evaluate(f, k.a, w.values), evaluate(f, k.b, w.values)) != evaluate(f, k.c, w.values)) bad.push_back(i);
  }
  return bad;
}

bool check_r1cs(const ConstraintSystem& cs, const Witness& w) {
  if (w.values.size() != cs.wire_count) {
    throw Error(ErrorCode::LengthMismatch, "witness has " + std::to_string(w.values.size()) +
                                               " entries, system has " + std::to_string(cs.wire_count) + " wires");
  }
  const Field& f = cs.field;
  return std::all_of(cs.constraints.begin(), cs.constraints.end(), [&](const Constraint& k) {
    return f.mul(evaluate(f, k.a, w.values), evaluate(f, k.b, w.values)) == evaluate(f, k.c, w.values);
  });
}

std::vector<Wire> constrained_wires(const ConstraintSystem& cs) {
  std::vector<bool> seen(cs.wire_count, false);
  for (const Constraint& k : cs.constraints) {
    for (const auto* lc : {&k.a, &k.b, &k.c}) {
      for (const Term& t : *lc) seen[t.wire] = true;
    }
  }
  std::vector<Wire> out;
  for (Wire w = 0; w < cs.wire_count; ++w) {
    if (seen[w]) out.push_back(w);
  }
  return out;
}

void write_r1cs(std::ostream& os, const ConstraintSystem& cs) {
  auto side = [&](const LinearCombination& lc) {
    for (std::size_t i = 0; i < lc.size(); ++i) {
      if (i) os << ' ';
      os << lc[i].wire << ':' << lc[i].coeff;
    }
  };
  for (const Constraint& k : cs.constraints) {
    side(k.a);
    os << " | ";
    side(k.b);
    os << " | ";
    side(k.c);
    os << '\n';
  }
}

std::string dump_r1cs(const ConstraintSystem& cs) {
  std::ostringstream os;
  write_r1cs(os, cs);
  return os.str();
}

}  // namespace cic
