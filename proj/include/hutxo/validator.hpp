// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_VALIDATOR_HPP
#define HUTXO_VALIDATOR_HPP

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "ledger.hpp"

namespace hutxo {

// One element of a validation workload: a transaction, or a clock tick
// that advances the chain time (and, in batched mode, ends the batch).
struct SeqEvent {
    enum Kind { TX, TICK } kind = TX;
    Tx tx;
    uint64_t time = 0;

    static SeqEvent of(Tx t) { return {TX, std::move(t), 0}; }
    static SeqEvent tick(uint64_t t) { return {TICK, Tx{}, t}; }
};

struct RunReport {
    uint64_t txCount = 0;
    uint64_t accepted = 0;
    uint64_t rejected = 0;
    uint64_t batches = 0;       // batched mode only
    uint64_t softConflicts = 0; // prefixes ended by a conflicting transaction
    uint64_t sigVerifies = 0;   // signature checks performed during the run
    double wallMs = 0.0;

    double softConflictPct() const {
        return txCount ? 100.0 * double(softConflicts) / double(txCount) : 0.0;
    }
};

// Running description of the batch being formed: which outputs its members
// spend and read, and how much of each contract account they have frozen.
// Admission happens in sequence order, so batch formation is deterministic
// regardless of how many workers later validate the members.
struct BatchState {
    uint64_t baseSize = 0; // committed transaction count at batch start
    std::unordered_set<OutputRef> spent;
    std::unordered_set<OutputRef> read;
    std::map<CtrId, Wallet> frozen;
};

// True when tx cannot join the batch: it touches an output created inside
// the batch, spends or reads against the members' spends and reads, or
// draws more from a contract account than the unfrozen remainder covers.
bool conflicts_with(const Ledger& l, const BatchState& b, const Tx& tx);

// Records tx as a member: spend and read sets grow, and its account draw
// is frozen (capped at what is left, so a doomed transaction cannot block
// the batch; validation rejects it the same way sequential order would).
void admit(const Ledger& l, BatchState& b, const Tx& tx);

// Validates every event in order, applying accepted transactions one by
// one. The reference mode: batched validation must match its ledger.
RunReport validate_sequential(Ledger& l, const std::vector<SeqEvent>& events);

// Conflict-free prefixes validated by `threads` workers against the
// immutable pre-batch ledger, then committed in sequence order. The final
// ledger is identical to sequential validation for any worker count.
RunReport validate_parallel(Ledger& l, const std::vector<SeqEvent>& events,
                            size_t threads);

// Persistent worker pool. run() validates the span against the snapshot,
// with the calling thread participating; results land by index.
class ValidationPool {
  public:
    explicit ValidationPool(size_t threads);
    ~ValidationPool();

    ValidationPool(const ValidationPool&) = delete;
    ValidationPool& operator=(const ValidationPool&) = delete;

    void run(const Ledger& snapshot, const Tx* const* txs, size_t count,
             ValidationResult* results);

  private:
    void work();

    std::vector<std::thread> workers;
    std::mutex mu;
    std::condition_variable wake;
    std::condition_variable done;
    uint64_t generation = 0;
    size_t active = 0; // workers currently inside work(), guarded by mu
    bool stopping = false;

    const Ledger* snapshot = nullptr;
    const Tx* const* txs = nullptr;
    size_t count = 0;
    ValidationResult* results = nullptr;
    std::atomic<size_t> next{0};
    std::atomic<size_t> finished{0};
};

} // namespace hutxo

#endif // HUTXO_VALIDATOR_HPP
