// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_HURF_INTERP_HPP
#define HUTXO_HURF_INTERP_HPP

#include "../state/items.hpp"
#include "frontend.hpp"

namespace hutxo::hurf {

// Reference semantics: contract instances as plain stores and balances,
// deposits as named wallets. The ledger pipeline must agree with this
// interpreter on every accepted action.

struct Instance {
    std::shared_ptr<const CheckedContract> contract;
    Store store;
    Wallet balance;
};

struct Deposit {
    std::string owner;
    Wallet value;
};

struct Configuration {
    std::map<uint64_t, Instance> instances;
    std::map<std::string, Deposit> deposits;
    uint64_t time = 0;

    uint64_t nextInstance = 1;
    uint64_t nextDeposit = 1;

    std::string add_deposit(const std::string& owner, Wallet w) {
        std::string name = "d" + std::to_string(nextDeposit++);
        deposits.emplace(name, Deposit{owner, std::move(w)});
        return name;
    }
};

struct Action {
    uint64_t instance = 0;
    std::string rule;
    std::vector<BVal> params;
    std::vector<std::string> signers;
    std::vector<std::string> receiveDeposits; // one name per receive clause
    std::string feeDeposit;
    TimeInterval validity;
};

struct StepOutcome {
    bool ok = false;
    std::string error;

    static StepOutcome success() { return {true, ""}; }
    static StepOutcome fail(std::string why) { return {false, std::move(why)}; }
};

// Store built from the declared initializers.
Store initial_store(const CheckedContract& c);

// Creates an instance funded by the named deposits, which must sum exactly
// to the initial balance. Returns the fresh instance id through `id`.
StepOutcome hurf_deploy(Configuration& conf,
                        std::shared_ptr<const CheckedContract> contract,
                        Store sigma0, const Wallet& beta0,
                        const std::vector<std::string>& funding,
                        const std::string& feeDeposit, uint64_t& id);

// Fires one rule: checks the preconditions against the current store and
// time, consumes the named deposits, applies all writes simultaneously and
// settles the balance. The configuration is untouched on failure.
StepOutcome hurf_step(Configuration& conf, const Action& a, const HashProvider& h);

// Evaluated write list of a rule under an environment, as concrete cells.
// Shared by the interpreter and the transaction builder.
struct CellWrite {
    StateRef ref;                 // symbolic form (for diagnostics)
    std::string var;              // resolved variable, or
    std::string map;              //   resolved map point
    std::vector<BVal> indices;
    BVal value;
};

std::vector<CellWrite> eval_writes(const CheckedRule& r, const Env& env);

// Flattened committed state of an instance (defaults dropped).
inline FlatState flatten_instance(const Instance& inst, const HashProvider& h) {
    return flatten_state(inst.store, h);
}

} // namespace hutxo::hurf

#endif // HUTXO_HURF_INTERP_HPP
