// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_COMPILER_HPP
#define HUTXO_COMPILER_HPP

#include <stdexcept>

#include "hurf/interp.hpp"
#include "ledger.hpp"
#include "state/items.hpp"

namespace hutxo {

struct CompileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One rule bound to its checked contract; the payload of a logic output's
// validator. Distinct deployments of the same source share this object but
// never their outputs: the contract id keeps their items apart.
struct CompiledRule {
    std::shared_ptr<const hurf::CheckedContract> contract;
    size_t ruleIndex = 0;

    const hurf::CheckedRule& checked() const { return contract->rules[ruleIndex]; }
    const std::string& name() const { return checked().rule.name; }
};

// Rule parameters travel as the redeemer of the logic input.
Datum params_datum(const std::vector<BVal>& params);
std::optional<std::vector<BVal>> params_of(const Datum& d);

// Client-side index over one deployed contract's live outputs: where each
// rule's logic output sits and which output carries each state item. Fed
// by note_apply after every accepted transaction.
struct NodeView {
    CtrId id{};
    std::shared_ptr<const hurf::CheckedContract> contract;
    const HashProvider* hasher = &blake2b();

    std::map<std::string, OutputRef> logicRefs;
    StateIndex state;
    std::map<Hash512, OutputRef> pointRefs;    // by key hash
    std::map<Hash512, OutputRef> intervalRefs; // by left endpoint
    std::map<OutputRef, StateItem> liveItems;  // reverse index for removal

    OutputRef ref_of(const StateItem& it) const;

    // Committed value of a key hash: the point's value, or 0 inside an
    // interval. Throws if the view does not cover the key.
    BVal read(const Hash512& h) const;

    // Folds an accepted transaction of this contract into the index.
    void note_apply(const Tx& tx, uint64_t txId);
};

struct DeploySpec {
    OutputRef feeRef;               // spent whole as the fee; native only
    std::vector<OutputRef> funding; // spent; must sum exactly to the balance
    std::vector<std::string> signers;
    TimeInterval validity;
};

// Deploying transaction: mints the contract id from the fee spend, emits
// one logic output per rule and the alternating state partition of sigma0.
// Returns the transaction and a view primed with the contract (call
// note_apply once the transaction is accepted to fill in the refs).
Tx compile_deploy(const Ledger& l, std::shared_ptr<const hurf::CheckedContract> c,
                  const Store& sigma0, const Wallet& beta0, const DeploySpec& spec,
                  NodeView& view);

struct InvokeSpec {
    std::string rule;
    std::vector<BVal> params;
    std::vector<std::string> signers;
    std::vector<OutputRef> receiveRefs; // one per receive clause, exact value
    OutputRef feeRef;                   // spent whole as the fee; native only
    TimeInterval validity;
};

// Rule invocation against the current view. Throws CompileError when the
// precondition fails or a referenced deposit does not fit.
Tx compile_invoke(const Ledger& l, const NodeView& view, const InvokeSpec& spec);

// The whole-transaction check a logic output's validator runs: layout,
// fee binding, witnessed reads, exact receives, the precondition, and the
// send and state outputs recomputed from scratch. `ctx.self` must be the
// logic input (position 0). Throws only EvalError subclasses, which the
// caller treats as rejection.
bool check_rule_tx(const CompiledRule& rule, const ScriptContext& ctx);

} // namespace hutxo

#endif // HUTXO_COMPILER_HPP
