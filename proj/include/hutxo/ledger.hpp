// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_LEDGER_HPP
#define HUTXO_LEDGER_HPP

#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "tx.hpp"

namespace hutxo {

// Validity conditions, numbered. Condition 0 means "accepted".
enum Cond : int {
    COND_OK = 0,
    COND_UNSPENT = 1,          // every input refers to an unspent output
    COND_DISTINCT_SPENDS = 2,  // spending inputs are pairwise distinct
    COND_HAS_SPEND = 3,        // at least one spending input
    COND_TIME = 4,             // current time inside the validity interval
    COND_SCRIPTS = 5,          // every referenced output's validator accepts
    COND_CONTRACT_MATCH = 6,   // contract inputs only from the tx's own contract
    COND_CTR_ID = 7,           // contract id rules for contract-free inputs
    COND_VALUE = 8,            // plain tx: inputs cover outputs plus fee
    COND_ACCOUNT = 9           // contract tx: inputs plus account cover outputs plus fee
};

struct ValidationResult {
    bool accepted = false;
    int failed = COND_OK;     // first violated condition, COND_OK if accepted
    std::string detail;       // human-readable diagnostics

    static ValidationResult ok() { return {true, COND_OK, ""}; }
    static ValidationResult fail(int cond, std::string why) {
        return {false, cond, std::move(why)};
    }
};

// The chain state: every transaction ever accepted (id = position), the
// spent-output index derived from them, per-contract balance accounts and
// the current time. During batch validation a Ledger acts as an immutable
// snapshot: workers only read; a single coordinator applies and ticks.
struct Ledger {
    std::vector<Tx> txs;
    std::unordered_set<OutputRef> spent;
    std::map<CtrId, Wallet> accounts;
    uint64_t time = 0;
    const HashProvider* hasher = &blake2b();

    // Genesis bootstrap: one synthetic transaction holding the initial
    // deposits. Outputs must be plain (not inContract).
    static Ledger genesis(std::vector<Output> outputs,
                          const HashProvider* h = &blake2b());

    const Output* resolve(const OutputRef& r) const {
        if (r.txId >= txs.size()) return nullptr;
        const auto& outs = txs[r.txId].out;
        if (r.index >= outs.size()) return nullptr;
        return &outs[r.index];
    }

    bool is_unspent(const OutputRef& r) const {
        return resolve(r) && !spent.count(r);
    }

    Wallet account(const CtrId& id) const {
        auto it = accounts.find(id);
        return it == accounts.end() ? Wallet{} : it->second;
    }
};

struct ValueFlow {
    Wallet in;    // sum over spending inputs of the referenced values
    Wallet out;   // sum over outputs
    uint64_t fee = 0;
};

std::vector<std::pair<OutputRef, const Output*>> unspent_outputs(const Ledger& l);

// Requires all spending inputs to resolve.
ValueFlow tx_value_flow(const Ledger& l, const Tx& tx);

// Contract id minted by a deploying transaction: digest of the canonical
// encoding of its first spending input's output reference.
CtrId derive_ctr_id(const Tx& tx, const HashProvider& h);

// Checks conditions 1-9 in order against the ledger snapshot and reports
// the first violation. Performs one fixed signature verification per entry
// of tx.signers once the structural conditions (1-4) hold. `accountsOverride`
// substitutes the balance used by condition 9 (parallel validation hook).
ValidationResult validate_tx(const Ledger& l, const Tx& tx,
                             const Wallet* accountOverride = nullptr);

// Appends an accepted transaction: assigns it the next id, marks its spends,
// and updates the contract account by inputs - outputs - fee. The caller
// must have validated the transaction against this very ledger state.
void apply_tx(Ledger& l, const Tx& tx);

void advance_time(Ledger& l, uint64_t t);

} // namespace hutxo

#endif // HUTXO_LEDGER_HPP
