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

#include "cic/harness.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "cic/app_io.hpp"
#include "cic/hash.hpp"
#include "cic/qap.hpp"
#include "cic/r1cs.hpp"

namespace cic {

// ---- content server --------------------------------------------------------

std::string ContentServer::publish(const std::string& path, Bytes bytes) {
  if (store_.count(path)) throw Error(ErrorCode::PathAlreadyPublished, url(path));
  std::string hash = sha256_hex(bytes);
  store_.emplace(path, Entry{std::move(bytes), hash});
  return hash;
}

std::string ContentServer::publish(const std::string& path, std::string_view text) {
  return publish(path, Bytes(text.begin(), text.end()));
}

Bytes ContentServer::fetch(const std::string& path) const {
  const auto it = store_.find(path);
  if (it == store_.end()) throw Error(ErrorCode::NotFound, url(path));
  if (sha256_hex(it->second.bytes) != it->second.hash) throw Error(ErrorCode::HashMismatch, url(path));
  return it->second.bytes;
}

std::string ContentServer::fetch_text(const std::string& path) const {
  const Bytes b = fetch(path);
  return std::string(b.begin(), b.end());
}

std::optional<std::string> ContentServer::hash_of(const std::string& path) const {
  const auto it = store_.find(path);
  if (it == store_.end()) return std::nullopt;
  return it->second.hash;
}

void ContentServer::corrupt(const std::string& path) {
  const auto it = store_.find(path);
  if (it == store_.end()) throw Error(ErrorCode::NotFound, url(path));
  Bytes& b = it->second.bytes;
  if (b.empty()) {
    b.push_back(0x5a);
  } else {
    b[b.size() / 2] ^= 0x01;
  }
}

std::vector<std::string> ContentServer::digest() const {
  std::vector<std::string> out;
  for (const auto& [path, e] : store_) out.push_back(url(path) + " " + e.hash);
  return out;
}

// ---- script parsing --------------------------------------------------------

namespace {

[[noreturn]] void bad_script(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::MalformedScript, "line " + std::to_string(line) + ": " + why);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::uint64_t> to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  }
  return true;
}

const std::map<std::string, std::set<std::string>>& action_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"fund", {"amount"}},
      {"post_job",
       {"app", "fee", "collateral", "max_duration", "n", "width", "height", "kernel_width", "kernel_height",
        "bitwidth", "degree", "vars"}},
      {"register", {"job"}},
      {"compute", {"job", "mode", "delay"}},
      {"claim_timeout", {"job"}},
      {"cancel", {"job"}},
      {"corrupt", {"server", "path"}},
  };
  return keys;
}

std::uint64_t arg_u64(const Directive& d, const std::string& key, std::optional<std::uint64_t> fallback = {}) {
  const auto it = d.args.find(key);
  if (it == d.args.end()) {
    if (fallback) return *fallback;
    bad_script(d.line, d.action + " needs " + key + "=");
  }
  const auto v = to_u64(it->second);
  if (!v) bad_script(d.line, key + " must be a non-negative integer");
  return *v;
}

const std::string& arg_text(const Directive& d, const std::string& key) {
  const auto it = d.args.find(key);
  if (it == d.args.end()) bad_script(d.line, d.action + " needs " + key + "=");
  return it->second;
}

AppSpec spec_from_directive(const Directive& d) {
  const auto kind = parse_app_kind(arg_text(d, "app"));
  if (!kind) bad_script(d.line, "unknown app " + arg_text(d, "app"));
  AppSpec spec = desk_scale(*kind);
  auto size = [&](const char* key, std::size_t def) { return static_cast<std::size_t>(arg_u64(d, key, def)); };
  switch (*kind) {
    case AppKind::matmul: {
      spec.params = MatmulParams{size("n", MatmulParams{}.n)};
      break;
    }
    case AppKind::image_match: {
      const ImageMatchParams def;
      spec.params = ImageMatchParams{size("width", def.width), size("height", def.height),
                                     size("kernel_width", def.kernel_width), size("kernel_height", def.kernel_height),
                                     static_cast<std::uint32_t>(size("bitwidth", def.bitwidth))};
      break;
    }
    case AppKind::multipoly: {
      const MultipolyParams def;
      spec.params = MultipolyParams{size("degree", def.degree), size("vars", def.vars)};
      break;
    }
    case AppKind::floyd_warshall: {
      const FloydWarshallParams def;
      spec.params = FloydWarshallParams{size("n", def.n), static_cast<std::uint32_t>(size("bitwidth", def.bitwidth))};
      break;
    }
  }
  try {
    validate_spec(spec);
  } catch (const Error& e) {
    bad_script(d.line, e.what());
  }
  return spec;
}

void check_directive(const Directive& d) {
  const auto& keys = action_keys().at(d.action);
  for (const auto& [k, v] : d.args) {
    if (!keys.count(k)) bad_script(d.line, "unknown key " + k + " for " + d.action);
  }
  if (d.action == "fund") {
    if (d.tick != 0) bad_script(d.line, "fund is only allowed at tick 0");
    arg_u64(d, "amount");
  } else if (d.action == "post_job") {
    spec_from_directive(d);
    arg_u64(d, "fee");
    arg_u64(d, "collateral");
    arg_u64(d, "max_duration");
  } else if (d.action == "compute") {
    arg_u64(d, "job");
    arg_u64(d, "delay", 0);
    const auto it = d.args.find("mode");
    if (it != d.args.end() && it->second != "honest" && it->second != "tamper" && it->second != "stall") {
      bad_script(d.line, "mode must be honest, tamper or stall");
    }
  } else if (d.action == "corrupt") {
    if (d.actor != "env") bad_script(d.line, "only env can corrupt servers");
    arg_text(d, "server");
    arg_text(d, "path");
  } else {
    arg_u64(d, "job");
  }
  if (d.actor == "env" && d.action != "corrupt") bad_script(d.line, "env only injects faults");
}

}  // namespace

ScenarioScript parse_scenario(std::string_view text) {
  ScenarioScript script;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    while (true) {
      const auto bar = line.find('|');
      fields.push_back(trim(line.substr(0, bar)));
      if (bar == std::string_view::npos) break;
      line = line.substr(bar + 1);
    }
    if (fields.size() < 3 || fields.size() > 4) bad_script(line_no, "expected tick | actor | action | args");

    Directive d;
    d.line = line_no;
    const auto tick = to_u64(fields[0]);
    if (!tick) bad_script(line_no, "bad tick '" + std::string(fields[0]) + "'");
    d.tick = *tick;
    if (!valid_name(fields[1])) bad_script(line_no, "bad actor name '" + std::string(fields[1]) + "'");
    d.actor = std::string(fields[1]);
    d.action = std::string(fields[2]);
    if (!action_keys().count(d.action)) bad_script(line_no, "unknown action '" + d.action + "'");
    if (fields.size() == 4) {
      std::istringstream is{std::string(fields[3])};
      std::string tok;
      while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) bad_script(line_no, "argument '" + tok + "' is not key=value");
        if (!d.args.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second) {
          bad_script(line_no, "duplicate key " + tok.substr(0, eq));
        }
      }
    }
    check_directive(d);
    script.directives.push_back(std::move(d));
  }
  return script;
}

ScenarioScript read_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::NotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

std::string ScenarioTrace::text() const {
  std::ostringstream os;
  os << "# events\n";
  for (const auto& e : events) os << e.to_string() << '\n';
  os << "# servers\n";
  for (const auto& d : server_digests) os << d << '\n';
  os << "# balances\n";
  for (const auto& [who, amount] : balances) os << who << ' ' << amount << '\n';
  os << "# jobs\n";
  for (const auto& [id, j] : jobs) {
    os << id << ' ' << to_string(j.state) << " worker_paid=" << (j.worker_paid ? 1 : 0)
       << " result_delivered=" << (j.result_delivered ? 1 : 0) << '\n';
  }
  return os.str();
}

// ---- simulation ------------------------------------------------------------

namespace {

struct PostedJob {
  AccountId client;
  std::string prefix;  // path prefix on the client's server
  AppInput input;
};

class Simulation {
 public:
  explicit Simulation(std::uint64_t seed) : seed_(seed) {}

  ScenarioTrace run(const ScenarioScript& script) {
    std::size_t seq = 0;
    for (const Directive& d : script.directives) {
      const int phase = d.actor == "env" ? 1 : 0;
      queue_.emplace(Key{d.tick, phase, seq++}, [this, &d] { dispatch(d); });
    }
    while (!queue_.empty()) {
      const Tick now = std::get<0>(queue_.begin()->first);
      broker_.advance_to(now);
      while (!queue_.empty() && std::get<0>(queue_.begin()->first) == now) {
        auto node = queue_.extract(queue_.begin());
        node.mapped()();
      }
      mine();
    }
    return finish();
  }

 private:
  using Key = std::tuple<Tick, int, std::size_t>;

  std::mt19937_64 rng_for(std::uint64_t purpose, std::uint64_t index) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(purpose), static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
  }

  ContentServer& server(const AccountId& who) {
    auto it = servers_.find(who);
    if (it == servers_.end()) it = servers_.emplace(who, ContentServer(who)).first;
    return it->second;
  }

  Bytes fetch_url(const std::string& url) {
    const auto slash = url.find('/');
    const auto it = servers_.find(url.substr(0, slash));
    if (slash == std::string::npos || it == servers_.end()) throw Error(ErrorCode::NotFound, url);
    return it->second.fetch(url.substr(slash + 1));
  }

  void note(const std::string& op, std::optional<JobId> job, const AccountId& actor, const std::string& outcome) {
    sync();
    events_.push_back(LogEntry{broker_.tick(), op, job, actor, outcome, {}});
  }

  void sync() {
    const auto& log = broker_.log();
    for (; synced_ < log.size(); ++synced_) events_.push_back(log[synced_]);
  }

  void submit(const AccountId& actor, const std::string& op, std::optional<JobId> job, std::function<void()> apply) {
    note(op, job, actor, "tx submitted");
    mempool_.push_back(std::move(apply));
  }

  void mine() {
    auto pending = std::move(mempool_);
    mempool_.clear();
    for (auto& tx : pending) {
      try {
        tx();
      } catch (const Error&) {
        // rejected transitions are already in the broker log
      }
      sync();
    }
  }

  void dispatch(const Directive& d) {
    try {
      if (d.action == "fund") {
        const Amount amount = arg_u64(d, "amount");
        submit(d.actor, "fund", std::nullopt, [this, who = d.actor, amount] { broker_.fund(who, amount); });
      } else if (d.action == "post_job") {
        post_job(d);
      } else if (d.action == "register") {
        const JobId id = arg_u64(d, "job");
        submit(d.actor, "register", id, [this, who = d.actor, id] { broker_.register_worker(who, id); });
      } else if (d.action == "compute") {
        compute(d);
      } else if (d.action == "claim_timeout") {
        const JobId id = arg_u64(d, "job");
        submit(d.actor, "claim_timeout", id, [this, who = d.actor, id] { broker_.claim_timeout(who, id); });
      } else if (d.action == "cancel") {
        const JobId id = arg_u64(d, "job");
        submit(d.actor, "cancel", id, [this, who = d.actor, id] { broker_.cancel_job(who, id); });
      } else if (d.action == "corrupt") {
        const std::string& srv = arg_text(d, "server");
        const std::string& path = arg_text(d, "path");
        const auto it = servers_.find(srv);
        if (it == servers_.end()) throw Error(ErrorCode::NotFound, srv + "/" + path);
        it->second.corrupt(path);
        note("corrupt", std::nullopt, d.actor, srv + "/" + path);
      }
    } catch (const Error& e) {
      note(d.action, std::nullopt, d.actor, "ERROR " + std::string(to_string(e.code())));
    }
  }

  // Client: publish the request, generate keys, post the job.
  void post_job(const Directive& d) {
    const std::size_t index = posted_count_++;
    PostedJob posted;
    posted.client = d.actor;
    posted.prefix = "request-" + std::to_string(index + 1);
    posted.input.spec = spec_from_directive(d);
    auto rng = rng_for(1, index);
    posted.input.inputs = random_inputs(posted.input.spec, rng);
    posted.input.fee = arg_u64(d, "fee");
    posted.input.collateral = arg_u64(d, "collateral");
    posted.input.max_duration = arg_u64(d, "max_duration");

    const auto qap = r1cs_to_qap(to_r1cs(build_app(posted.input.spec)));
    KeyPair keys = setup(qap, rng_for(2, index)());

    ContentServer& srv = server(d.actor);
    const std::string spec_path = posted.prefix + "/spec";
    const std::string spec_hash = srv.publish(spec_path, format_app_input(posted.input));
    note("publish", std::nullopt, d.actor, srv.url(spec_path) + " " + spec_hash.substr(0, 16));
    const std::string ek_path = posted.prefix + "/ek";
    srv.publish(ek_path, serialize(keys.ek));
    note("publish", std::nullopt, d.actor, srv.url(ek_path));

    JobTerms terms;
    terms.spec_url = srv.url(spec_path);
    terms.spec_hash = spec_hash;
    terms.vk = std::make_shared<const VerificationKey>(std::move(keys.vk));
    terms.fee = *posted.input.fee;
    terms.collateral = *posted.input.collateral;
    terms.max_duration = *posted.input.max_duration;
    terms.input_hash = commit_values(posted.input.inputs);
    submit(d.actor, "post_job", std::nullopt, [this, who = d.actor, terms, posted]() mutable {
      const JobId id = broker_.create_job(who, std::move(terms));
      posted_.emplace(id, std::move(posted));
    });
  }

  // Worker: fetch inputs, prove, publish, ask to be paid.
  void compute(const Directive& d) {
    const JobId id = arg_u64(d, "job");
    const Tick delay = arg_u64(d, "delay", 0);
    const std::string mode = d.args.count("mode") ? d.args.at("mode") : "honest";
    const Job& job = broker_.job(id);

    const Bytes spec_bytes = fetch_url(job.terms.spec_url);
    if (sha256_hex(spec_bytes) != job.terms.spec_hash) throw Error(ErrorCode::HashMismatch, job.terms.spec_url);
    const AppInput input = parse_app_input(std::string(spec_bytes.begin(), spec_bytes.end()));
    const std::string ek_url = job.terms.spec_url.substr(0, job.terms.spec_url.rfind('/')) + "/ek";
    const EvaluationKey ek = deserialize_evaluation_key(fetch_url(ek_url));
    note("fetch", id, d.actor, job.terms.spec_url);

    const ArithmeticCircuit circuit = build_app(input.spec);
    const auto qap = r1cs_to_qap(to_r1cs(circuit));
    const Witness w = evaluate_circuit(circuit, input.inputs);
    const Proof proof = prove(ek, qap, w);
    std::vector<std::uint64_t> io = w.public_io(circuit.num_public_inputs, circuit.num_public_outputs);
    if (mode == "tamper") io[circuit.num_public_inputs] = input.spec.field.add(io[circuit.num_public_inputs], 1);
    note("compute", id, d.actor, mode);
    if (mode == "stall") return;

    auto publish_and_claim = [this, id, who = d.actor, proof, io] {
      ContentServer& srv = server(who);
      const std::string prefix = "job-" + std::to_string(id);
      srv.publish(prefix + "/proof", serialize(proof));
      srv.publish(prefix + "/result", encode_values(io));
      note("publish", id, who, srv.url(prefix + "/proof") + " " + srv.url(prefix + "/result"));
      const std::string proof_url = srv.url(prefix + "/proof");
      const std::string result_url = srv.url(prefix + "/result");
      const std::string result_hash = commit_values(io);
      submit(who, "get_paid", id, [this, who, id, proof_url, result_url, result_hash] {
        settle(who, id, proof_url, result_url, result_hash);
      });
    };
    if (delay == 0) {
      publish_and_claim();
    } else {
      queue_.emplace(Key{broker_.tick() + delay, 0, deferred_seq_++}, [this, id, who = d.actor, publish_and_claim] {
        try {
          publish_and_claim();
        } catch (const Error& e) {
          note("publish", id, who, "ERROR " + std::string(to_string(e.code())));
        }
      });
    }
  }

  // Miner: fetch the submission, run the contract, and on
  // payment forward the outputs to the client's server.
  void settle(const AccountId& worker, JobId id, const std::string& proof_url, const std::string& result_url,
              const std::string& result_hash) {
    std::optional<Submission> fetched;
    try {
      Submission s;
      s.proof = fetch_url(proof_url);
      s.public_io = decode_values(fetch_url(result_url));
      fetched = std::move(s);
    } catch (const Error& e) {
      note("miner_fetch", id, "miner", "ERROR " + std::string(to_string(e.code())));
    }
    const Payout payout = broker_.get_paid(worker, id, proof_url, result_hash, fetched);
    sync();
    if (payout.outcome != JobState::paid) return;
    const auto it = posted_.find(id);
    if (it == posted_.end()) return;
    const auto& spec = it->second.input.spec;
    const std::vector<std::uint64_t> outputs(fetched->public_io.begin() + spec.num_public_inputs(),
                                             fetched->public_io.end());
    ContentServer& client = server(it->second.client);
    const std::string path = it->second.prefix + "/result";
    client.publish(path, encode_values(outputs));
    delivered_[id] = outputs;
    note("deliver", id, "miner", client.url(path));
  }

  ScenarioTrace finish() {
    sync();
    ScenarioTrace t;
    t.events = std::move(events_);
    t.transitions = broker_.log();
    for (const auto& [name, srv] : servers_) {
      for (auto& line : srv.digest()) t.server_digests.push_back(std::move(line));
    }
    t.balances = broker_.balances();
    for (const auto& [id, job] : broker_.jobs()) {
      JobOutcome o;
      o.state = job.state;
      o.worker = job.worker;
      o.worker_paid = job.state == JobState::paid;
      if (const auto it = delivered_.find(id); it != delivered_.end()) {
        o.result_delivered = true;
        o.delivered_outputs = it->second;
      }
      if (const auto it = posted_.find(id); it != posted_.end()) {
        o.expected_outputs = run_reference(it->second.input.spec, it->second.input.inputs);
      }
      t.jobs.emplace(id, std::move(o));
    }
    return t;
  }

  std::uint64_t seed_;
  Broker broker_;
  std::map<AccountId, ContentServer> servers_;
  std::map<Key, std::function<void()>> queue_;
  std::vector<std::function<void()>> mempool_;
  std::vector<LogEntry> events_;
  std::size_t synced_ = 0;
  std::size_t posted_count_ = 0;
  std::size_t deferred_seq_ = std::size_t{1} << 32;
  std::map<JobId, PostedJob> posted_;
  std::map<JobId, std::vector<std::uint64_t>> delivered_;
};

}  // namespace

ScenarioTrace run_scenario(const ScenarioScript& script, std::uint64_t seed) {
  return Simulation(seed).run(script);
}

}  // namespace cic
