// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_BENCH_HPP
#define HUTXO_BENCH_HPP

#include "serialize.hpp"

namespace hutxo {

// A replayable benchmark workload: genesis deposits plus a pre-built valid
// event sequence. Generators compile and validate every transaction while
// building, so a replay accepts all of them; expectedSigVerifies is the
// signature-check count a full replay must report.
struct Workload {
    std::string benchmark;
    std::string mode; // "distributed" or "centralized"
    uint64_t size = 0;
    uint64_t seed = 0;
    std::vector<Output> genesis;
    std::vector<SeqEvent> events;
    uint64_t expectedSigVerifies = 0;
};

// Shared counter map: `ops` point rewrites, each hitting one hot index
// with probability hotShare and an otherwise fresh index. The initial
// state pre-seeds every index, so updates never change the partition
// geometry and the only write contention is the hot point itself.
Workload gen_map(uint64_t ops, double hotShare, uint64_t seed);

// Crowdfunding: one donation per donor, then a full refund round.
// Distributed mode compiles the rule contract (per-donor state points);
// centralized mode drives the covenant that rewrites the whole donor book
// in a single output every operation.
Workload gen_crowdfund(uint64_t donors, uint64_t seed, bool centralized);

// Shared wallet with per-user authorization: all `users` get authorized,
// then `ops` operations split evenly between deposits and withdrawals.
// A withdrawal needs users/2 co-signers, so the total signature count is
// linear in `users` while everything else stays fixed.
Workload gen_multisig(uint64_t users, uint64_t ops, uint64_t seed);

// Commit-reveal name registry: every name is committed, claimed, and
// finally proven owned after the reveal delay has passed.
Workload gen_registry(uint64_t names, uint64_t seed);

// Contract sources the generators compile; exposed so tests can run the
// same contracts through the reference interpreter.
std::string map_contract_source();
std::string crowdfund_contract_source(const std::string& owner, uint64_t goal,
                                      uint64_t deadline, uint64_t refundTime);
std::string multisig_contract_source(const std::string& owner, size_t cosigners);
std::string registry_contract_source(uint64_t revealDelay);

struct ExperimentResult {
    RunReport report;
    std::string digest;
    uint64_t ledgerBytes = 0;
};

// Replays the workload on a fresh ledger. threads == 0 selects the
// sequential reference mode, otherwise batched validation with that many
// workers.
ExperimentResult run_workload(const Workload& w, size_t threads);

std::string csv_header();
std::string csv_row(const Workload& w, size_t threads, uint64_t rep,
                    const ExperimentResult& r);

} // namespace hutxo

#endif // HUTXO_BENCH_HPP
