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

#include "cic/broker.hpp"

#include <numeric>
#include <sstream>

#include "cic/hash.hpp"

namespace cic {

std::string_view to_string(JobState s) noexcept {
  switch (s) {
    case JobState::open: return "OPEN";
    case JobState::registered: return "REGISTERED";
    case JobState::proof_submitted: return "PROOF_SUBMITTED";
    case JobState::paid: return "PAID";
    case JobState::slashed: return "SLASHED";
    case JobState::cancelled: return "CANCELLED";
  }
  return "?";
}

std::string LogEntry::to_string() const {
  std::ostringstream os;
  os << tick << " | " << op << " | ";
  if (job) {
    os << *job;
  } else {
    os << '-';
  }
  os << " | " << actor << " | " << outcome << " | ";
  if (deltas.empty()) os << '-';
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) os << ' ';
    os << deltas[i].first << ':' << (deltas[i].second >= 0 ? "+" : "") << deltas[i].second;
  }
  return os.str();
}

namespace {

std::string escrow_account(JobId id) { return "escrow#" + std::to_string(id); }

}  // namespace

void Broker::fund(const AccountId& account, Amount amount) {
  LogEntry e{tick_, "fund", std::nullopt, account, "", {}};
  if (tick_ != 0) reject(std::move(e), ErrorCode::InvalidParameters, "funding only happens at genesis");
  if (account.empty()) reject(std::move(e), ErrorCode::InvalidParameters, "empty account name");
  if (minted_ + amount < minted_) reject(std::move(e), ErrorCode::InvalidParameters, "supply overflow");
  minted_ += amount;
  credit(e, account, amount);
  e.outcome = "OK";
  log_.push_back(std::move(e));
}

void Broker::advance_to(Tick tick) {
  if (tick < tick_) {
    throw Error(ErrorCode::InvalidParameters,
                "clock cannot go back from " + std::to_string(tick_) + " to " + std::to_string(tick));
  }
  tick_ = tick;
}

JobId Broker::create_job(const AccountId& client, JobTerms terms) {
  LogEntry e{tick_, "create_job", std::nullopt, client, "", {}};
  if (terms.fee == 0 || terms.collateral == 0 || terms.max_duration == 0) {
    reject(std::move(e), ErrorCode::InvalidParameters, "fee, collateral and max_duration must be positive");
  }
  if (!terms.vk) reject(std::move(e), ErrorCode::InvalidParameters, "job needs a verification key");
  if (terms.worker_chosen_inputs > terms.vk->num_public_inputs) {
    reject(std::move(e), ErrorCode::InvalidParameters, "more worker-chosen inputs than public inputs");
  }
  if (balance(client) < terms.fee) {
    reject(std::move(e), ErrorCode::InsufficientBalance,
           client + " holds " + std::to_string(balance(client)) + ", fee is " + std::to_string(terms.fee));
  }
  const JobId id = next_id_++;
  e.job = id;
  debit(e, client, terms.fee);
  to_escrow(e, id, terms.fee);
  Job j;
  j.id = id;
  j.client = client;
  j.terms = std::move(terms);
  jobs_.emplace(id, std::move(j));
  e.outcome = "OPEN";
  log_.push_back(std::move(e));
  return id;
}

void Broker::register_worker(const AccountId& worker, JobId id) {
  LogEntry e{tick_, "register", id, worker, "", {}};
  const auto it = jobs_.find(id);
  if (it == jobs_.end()) reject(std::move(e), ErrorCode::UnknownJob, "no job " + std::to_string(id));
  Job& j = it->second;
  if (j.state != JobState::open) {
    reject(std::move(e), ErrorCode::JobNotOpen, "job " + std::to_string(id) + " is " + std::string(to_string(j.state)));
  }
  if (balance(worker) < j.terms.collateral) {
    reject(std::move(e), ErrorCode::InsufficientBalance,
           worker + " cannot cover collateral " + std::to_string(j.terms.collateral));
  }
  debit(e, worker, j.terms.collateral);
  to_escrow(e, id, j.terms.collateral);
  j.state = JobState::registered;
  j.worker = worker;
  j.registered_at = tick_;
  e.outcome = "REGISTERED deadline=" + std::to_string(j.deadline());
  log_.push_back(std::move(e));
}

Payout Broker::get_paid(const AccountId& worker, JobId id, const std::string& proof_url,
                        const std::string& result_hash, const std::optional<Submission>& fetched) {
  LogEntry e{tick_, "get_paid", id, worker, "", {}};
  const auto it = jobs_.find(id);
  if (it == jobs_.end()) reject(std::move(e), ErrorCode::UnknownJob, "no job " + std::to_string(id));
  Job& j = it->second;
  if (j.state != JobState::registered) {
    reject(std::move(e), ErrorCode::JobNotRegistered,
           "job " + std::to_string(id) + " is " + std::string(to_string(j.state)));
  }
  if (j.worker != worker) reject(std::move(e), ErrorCode::NotTheWorker, worker + " is not registered for the job");

  j.state = JobState::proof_submitted;
  j.proof_url = proof_url;
  j.result_hash = result_hash;
  log_.push_back(LogEntry{tick_, "submit_proof", id, worker, "PROOF_SUBMITTED " + proof_url, {}});

  const VerificationKey& vk = *j.terms.vk;
  std::string reason;
  if (tick_ > j.deadline()) {
    reason = "late";
  } else if (!fetched) {
    reason = "unavailable";
  } else if (fetched->public_io.size() != vk.num_io()) {
    reason = "io-shape";
  } else if (commit_values(fetched->public_io) != result_hash) {
    reason = "result-hash";
  } else if (!j.terms.input_hash.empty() &&
             commit_values(std::span(fetched->public_io)
                               .first(vk.num_public_inputs - j.terms.worker_chosen_inputs)) != j.terms.input_hash) {
    reason = "input-hash";
  } else {
    bool ok = false;
    try {
      ok = verify(vk, fetched->public_io, fetched->proof);
    } catch (const Error&) {
      ok = false;
    }
    reason = ok ? "verified" : "invalid-proof";
  }

  Payout out;
  out.reason = reason;
  if (reason == "verified") {
    settle(e, j, worker, JobState::paid);
  } else {
    settle(e, j, j.client, JobState::slashed);
  }
  out.outcome = j.state;
  e.outcome = std::string(to_string(j.state)) + " " + reason;
  log_.push_back(std::move(e));
  return out;
}

void Broker::claim_timeout(const AccountId& caller, JobId id) {
  LogEntry e{tick_, "claim_timeout", id, caller, "", {}};
  const auto it = jobs_.find(id);
  if (it == jobs_.end()) reject(std::move(e), ErrorCode::UnknownJob, "no job " + std::to_string(id));
  Job& j = it->second;
  if (j.state != JobState::registered) {
    reject(std::move(e), ErrorCode::JobNotRegistered,
           "job " + std::to_string(id) + " is " + std::string(to_string(j.state)));
  }
  if (tick_ <= j.deadline()) {
    reject(std::move(e), ErrorCode::DeadlineNotPassed,
           "deadline " + std::to_string(j.deadline()) + " not passed at tick " + std::to_string(tick_));
  }
  settle(e, j, j.client, JobState::slashed);
  e.outcome = "SLASHED timeout";
  log_.push_back(std::move(e));
}

void Broker::cancel_job(const AccountId& client, JobId id) {
  LogEntry e{tick_, "cancel", id, client, "", {}};
  const auto it = jobs_.find(id);
  if (it == jobs_.end()) reject(std::move(e), ErrorCode::UnknownJob, "no job " + std::to_string(id));
  Job& j = it->second;
  if (j.state != JobState::open) {
    reject(std::move(e), ErrorCode::JobNotOpen, "job " + std::to_string(id) + " is " + std::string(to_string(j.state)));
  }
  if (j.client != client) reject(std::move(e), ErrorCode::NotTheClient, client + " did not post the job");
  settle(e, j, client, JobState::cancelled);
  e.outcome = "CANCELLED";
  log_.push_back(std::move(e));
}

const Job& Broker::job(JobId id) const {
  const auto it = jobs_.find(id);
  if (it == jobs_.end()) throw Error(ErrorCode::UnknownJob, "no job " + std::to_string(id));
  return it->second;
}

Amount Broker::balance(const AccountId& account) const {
  const auto it = balances_.find(account);
  return it == balances_.end() ? 0 : it->second;
}

Amount Broker::escrow(JobId id) const {
  const auto it = escrow_.find(id);
  return it == escrow_.end() ? 0 : it->second;
}

Amount Broker::total_supply() const {
  Amount total = 0;
  for (const auto& [k, v] : balances_) total += v;
  for (const auto& [k, v] : escrow_) total += v;
  return total;
}

std::string Broker::log_text() const {
  std::string out;
  for (const auto& e : log_) {
    out += e.to_string();
    out += '\n';
  }
  return out;
}

void Broker::debit(LogEntry& e, const AccountId& account, Amount amount) {
  balances_[account] -= amount;
  e.deltas.emplace_back(account, -static_cast<std::int64_t>(amount));
}

void Broker::credit(LogEntry& e, const AccountId& account, Amount amount) {
  balances_[account] += amount;
  e.deltas.emplace_back(account, static_cast<std::int64_t>(amount));
}

void Broker::to_escrow(LogEntry& e, JobId id, Amount amount) {
  escrow_[id] += amount;
  e.deltas.emplace_back(escrow_account(id), static_cast<std::int64_t>(amount));
}

Amount Broker::drain_escrow(LogEntry& e, JobId id) {
  const Amount amount = escrow_[id];
  escrow_.erase(id);
  e.deltas.emplace_back(escrow_account(id), -static_cast<std::int64_t>(amount));
  return amount;
}

void Broker::settle(LogEntry& e, Job& j, const AccountId& to, JobState state) {
  credit(e, to, drain_escrow(e, j.id));
  j.state = state;
}

void Broker::reject(LogEntry e, ErrorCode code, const std::string& why) {
  e.outcome = "REJECTED " + std::string(cic::to_string(code));
  log_.push_back(std::move(e));
  throw Error(code, why);
}

}  // namespace cic
