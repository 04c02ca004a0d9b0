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

// Discrete-event simulation of the outsourcing protocol: a client posts a
// job, a worker fetches the inputs, proves, and asks to be paid, and a miner
// applies the resulting transactions to the broker.
//
// Script format, one directive per line (`#` comments):
//
//   tick | actor | action | key=value ...
//
//   0 | alice | fund          | amount=1000
//   1 | alice | post_job      | app=matmul n=4 fee=100 collateral=50 max_duration=5
//   2 | bob   | register      | job=1
//   3 | bob   | compute       | job=1 mode=honest delay=1
//   9 | alice | claim_timeout | job=1
//   1 | alice | cancel        | job=1
//   4 | env   | corrupt       | server=bob path=job-1/proof
//
// post_job takes the size keys of the app input format. compute modes are
// honest, tamper (alters one output after proving) and stall (never submits).
// Within a tick, actor directives run in script order, then `env` directives,
// then the miner applies pending transactions in submission order.

#ifndef CIC_HARNESS_HPP_
#define CIC_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cic/broker.hpp"

namespace cic {

/// In-process stand-in for a publicly readable file server.
class ContentServer {
 public:
  explicit ContentServer(std::string name = "server") : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  std::string url(const std::string& path) const { return name_ + "/" + path; }

  /// Write-once; returns the content hash.
  std::string publish(const std::string& path, Bytes bytes);
  std::string publish(const std::string& path, std::string_view text);
  /// Throws NotFound, or HashMismatch when the stored bytes were corrupted.
  Bytes fetch(const std::string& path) const;
  std::string fetch_text(const std::string& path) const;
  bool contains(const std::string& path) const { return store_.count(path) != 0; }
  std::optional<std::string> hash_of(const std::string& path) const;
  /// Flips one byte of the stored content without touching its hash.
  void corrupt(const std::string& path);
  /// "name/path sha256" per entry, sorted by path.
  std::vector<std::string> digest() const;

 private:
  struct Entry {
    Bytes bytes;
    std::string hash;
  };
  std::string name_;
  std::map<std::string, Entry> store_;
};

enum class ComputeMode { honest, tamper, stall };

struct Directive {
  Tick tick = 0;
  std::size_t line = 0;
  AccountId actor;
  std::string action;
  std::map<std::string, std::string> args;
};

struct ScenarioScript {
  std::vector<Directive> directives;
};

/// Throws MalformedScript with the offending line number.
ScenarioScript parse_scenario(std::string_view text);
ScenarioScript read_scenario(const std::string& path);

struct JobOutcome {
  JobState state = JobState::open;
  std::optional<AccountId> worker;
  bool worker_paid = false;
  bool result_delivered = false;
  std::vector<std::uint64_t> delivered_outputs;
  std::vector<std::uint64_t> expected_outputs;
};

struct ScenarioTrace {
  std::vector<LogEntry> events;       // protocol events and broker transitions, tick ordered
  std::vector<LogEntry> transitions;  // the broker's own log
  std::vector<std::string> server_digests;
  std::map<AccountId, Amount> balances;
  std::map<JobId, JobOutcome> jobs;

  std::string text() const;
};

ScenarioTrace run_scenario(const ScenarioScript& script, std::uint64_t seed);

}  // namespace cic

#endif  // CIC_HARNESS_HPP_
