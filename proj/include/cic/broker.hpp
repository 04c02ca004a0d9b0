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

// Escrow contract run by the simulated miner. Every mutation goes through
// one of the transition methods below and appends to the transition log.

#ifndef CIC_BROKER_HPP_
#define CIC_BROKER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cic/proof_system.hpp"

namespace cic {

using AccountId = std::string;
using JobId = std::uint64_t;
using Tick = std::uint64_t;
using Amount = std::uint64_t;

enum class JobState { open, registered, proof_submitted, paid, slashed, cancelled };

std::string_view to_string(JobState s) noexcept;
inline bool is_terminal(JobState s) noexcept {
  return s == JobState::paid || s == JobState::slashed || s == JobState::cancelled;
}

struct JobTerms {
  std::string spec_url;
  std::string spec_hash;
  std::shared_ptr<const VerificationKey> vk;
  Amount fee = 0;
  Amount collateral = 0;
  Tick max_duration = 0;
  // Optional commitment (commit_values) to the client-supplied public
  // inputs. The last `worker_chosen_inputs` public inputs are excluded and
  // left to the worker, e.g. a random seed the proof then binds.
  std::string input_hash;
  std::uint32_t worker_chosen_inputs = 0;
};

struct Job {
  JobId id = 0;
  AccountId client;
  JobTerms terms;
  JobState state = JobState::open;
  std::optional<AccountId> worker;
  Tick registered_at = 0;
  std::string proof_url;
  std::string result_hash;

  Tick deadline() const noexcept {
    const Tick d = registered_at + terms.max_duration;
    return d < registered_at ? ~Tick{0} : d;
  }
};

/// What the miner fetched from the worker's server. Absent when the fetch
/// failed (missing path, hash mismatch).
struct Submission {
  Bytes proof;
  std::vector<std::uint64_t> public_io;
};

struct Payout {
  JobState outcome = JobState::slashed;
  std::string reason;  // "verified", "late", "invalid-proof", ...
};

struct LogEntry {
  Tick tick = 0;
  std::string op;
  std::optional<JobId> job;
  AccountId actor;
  std::string outcome;
  std::vector<std::pair<std::string, std::int64_t>> deltas;

  std::string to_string() const;
};

class Broker {
 public:
  Broker() = default;

  /// Genesis credit; only allowed at tick 0 and logged as such.
  void fund(const AccountId& account, Amount amount);

  /// Moves the clock forward; ticks never go back.
  void advance_to(Tick tick);
  Tick tick() const noexcept { return tick_; }

  JobId create_job(const AccountId& client, JobTerms terms);
  void register_worker(const AccountId& worker, JobId job);
  Payout get_paid(const AccountId& worker, JobId job, const std::string& proof_url, const std::string& result_hash,
                  const std::optional<Submission>& fetched);
  void claim_timeout(const AccountId& caller, JobId job);
  void cancel_job(const AccountId& client, JobId job);

  const Job& job(JobId id) const;
  const std::map<JobId, Job>& jobs() const noexcept { return jobs_; }
  Amount balance(const AccountId& account) const;
  Amount escrow(JobId id) const;
  const std::map<AccountId, Amount>& balances() const noexcept { return balances_; }
  /// Sum of all balances and escrows.
  Amount total_supply() const;
  /// Sum of genesis credits; equals total_supply() after every transition.
  Amount minted() const noexcept { return minted_; }

  const std::vector<LogEntry>& log() const noexcept { return log_; }
  std::string log_text() const;

 private:
  Job& find(JobId id);
  void debit(LogEntry& e, const AccountId& account, Amount amount);
  void credit(LogEntry& e, const AccountId& account, Amount amount);
  void to_escrow(LogEntry& e, JobId id, Amount amount);
  Amount drain_escrow(LogEntry& e, JobId id);
  [[noreturn]] void reject(LogEntry e, ErrorCode code, const std::string& why);
  void settle(LogEntry& e, Job& j, const AccountId& to, JobState state);

  Tick tick_ = 0;
  JobId next_id_ = 1;
  Amount minted_ = 0;
  std::map<AccountId, Amount> balances_;
  std::map<JobId, Amount> escrow_;
  std::map<JobId, Job> jobs_;
  std::vector<LogEntry> log_;
};

}  // namespace cic

#endif  // CIC_BROKER_HPP_
