// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_SCRIPT_HPP
#define HUTXO_SCRIPT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "datum.hpp"
#include "wallet.hpp"

namespace hutxo {

struct Tx;
struct Output;
struct CompiledRule;

// Signature lock: true iff the key appears among the transaction signers.
struct PkLock {
    std::string key;
    bool operator==(const PkLock&) const = default;
};

// Guards every distributed state output. True iff the first input of the
// spending transaction refers to a sibling contract output tagged "logic",
// which routes the whole-transaction check through that rule's script.
struct StateScript {
    bool operator==(const StateScript&) const = default;
};

// Guards a contract logic output; runs the full rule transaction check.
struct LogicScript {
    std::shared_ptr<const CompiledRule> rule;
    bool operator==(const LogicScript& o) const;
};

// Baseline covenant for the centralized crowdfunding benchmark: the whole
// donor map lives in one output datum and every operation rewrites it.
struct CentralizedCrowdfund {
    std::string owner;
    uint64_t goal = 0;
    uint64_t withdrawTime = 0;
    uint64_t refundTime = 0;
    TokenId token = 1;
    bool operator==(const CentralizedCrowdfund&) const = default;
};

using Script = std::variant<PkLock, StateScript, LogicScript, CentralizedCrowdfund>;

// Donor book encoding used by the centralized crowdfund covenant: a list
// of [key, amount] pairs sorted by key.
Datum crowdfund_book_datum(const std::map<std::string, uint64_t>& book);

struct ScriptContext {
    const Tx& tx;
    // Resolved source output for each transaction input, in input order.
    const std::vector<const Output*>& inputs;
    size_t self; // index of the input whose validator is being evaluated
    const HashProvider& hasher;
};

bool eval_script(const Script& s, const ScriptContext& ctx);

} // namespace hutxo

#endif // HUTXO_SCRIPT_HPP
