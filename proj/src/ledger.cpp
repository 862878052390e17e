// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/ledger.hpp"

#include <algorithm>
#include <stdexcept>

namespace hutxo {

Ledger Ledger::genesis(std::vector<Output> outputs, const HashProvider* h) {
    for (const auto& o : outputs)
        if (o.inContract) throw std::invalid_argument("genesis output inside a contract");
    Ledger l;
    l.hasher = h;
    Tx g;
    g.out = std::move(outputs);
    l.txs.push_back(std::move(g));
    return l;
}

std::vector<std::pair<OutputRef, const Output*>> unspent_outputs(const Ledger& l) {
    std::vector<std::pair<OutputRef, const Output*>> res;
    for (uint64_t t = 0; t < l.txs.size(); ++t) {
        const auto& outs = l.txs[t].out;
        for (uint32_t i = 0; i < outs.size(); ++i) {
            OutputRef r{t, i};
            if (!l.spent.count(r)) res.emplace_back(r, &outs[i]);
        }
    }
    return res;
}

ValueFlow tx_value_flow(const Ledger& l, const Tx& tx) {
    ValueFlow f;
    f.fee = tx.fee;
    for (const auto& in : tx.in) {
        if (!in.spent) continue;
        const Output* o = l.resolve(in.ref);
        if (!o) throw std::runtime_error("tx_value_flow: unresolvable input");
        f.in += o->value;
    }
    for (const auto& o : tx.out) f.out += o.value;
    return f;
}

CtrId derive_ctr_id(const Tx& tx, const HashProvider& h) {
    for (const auto& in : tx.in)
        if (in.spent) return h.hash(encode_outref(in.ref));
    throw std::runtime_error("derive_ctr_id: no spending input");
}

ValidationResult validate_tx(const Ledger& l, const Tx& tx,
                             const Wallet* accountOverride) {
    // 1: all inputs (spending and read-only) resolve to live outputs.
    std::vector<const Output*> sources;
    sources.reserve(tx.in.size());
    for (size_t i = 0; i < tx.in.size(); ++i) {
        const Output* o = l.resolve(tx.in[i].ref);
        if (!o || l.spent.count(tx.in[i].ref))
            return ValidationResult::fail(
                COND_UNSPENT, "input " + std::to_string(i) + " is spent or missing");
        sources.push_back(o);
    }

    // 2: spending inputs are pairwise distinct.
    {
        std::vector<OutputRef> refs;
        for (const auto& in : tx.in)
            if (in.spent) refs.push_back(in.ref);
        std::sort(refs.begin(), refs.end());
        if (std::adjacent_find(refs.begin(), refs.end()) != refs.end())
            return ValidationResult::fail(COND_DISTINCT_SPENDS, "duplicate spend");
        // 3: at least one spending input.
        if (refs.empty())
            return ValidationResult::fail(COND_HAS_SPEND, "no spending input");
    }

    // 4: the chain time lies inside the declared validity interval.
    if (!tx.validityTime.contains(l.time))
        return ValidationResult::fail(COND_TIME, "outside validity interval");

    // Witness check: one fixed signature verification per signer.
    for (size_t i = 0; i < tx.signers.size(); ++i) fixed_ed25519_verify();

    // 5: every referenced output's validator accepts the transaction.
    for (size_t i = 0; i < tx.in.size(); ++i) {
        ScriptContext ctx{tx, sources, i, *l.hasher};
        bool ok;
        try {
            ok = eval_script(sources[i]->validator, ctx);
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok)
            return ValidationResult::fail(
                COND_SCRIPTS, "validator of input " + std::to_string(i) + " rejected");
    }

    // 6: inputs referring into a contract must stay inside this contract.
    bool anyContractInput = false;
    for (size_t i = 0; i < tx.in.size(); ++i) {
        if (!sources[i]->inContract) continue;
        anyContractInput = true;
        if (l.txs[tx.in[i].ref.txId].ctrId != tx.ctrId)
            return ValidationResult::fail(
                COND_CONTRACT_MATCH, "input " + std::to_string(i) + " crosses contracts");
    }

    // 7: transactions without contract inputs either stay plain or mint a
    // fresh contract id from their first spend.
    if (!anyContractInput) {
        bool anyContractOutput = false;
        for (const auto& o : tx.out) anyContractOutput |= o.inContract;
        if (!anyContractOutput) {
            if (tx.ctrId != no_contract())
                return ValidationResult::fail(COND_CTR_ID, "plain tx declares a contract");
        } else if (tx.ctrId != derive_ctr_id(tx, *l.hasher)) {
            return ValidationResult::fail(COND_CTR_ID, "contract id not derived from first spend");
        }
    }

    ValueFlow f = tx_value_flow(l, tx);
    Wallet need = f.out;
    need.add(NATIVE_TOKEN, f.fee);

    if (tx.ctrId == no_contract()) {
        // 8: inputs cover outputs plus fee pointwise (surplus is burned).
        if (!f.in.covers(need))
            return ValidationResult::fail(COND_VALUE, "inputs do not cover outputs plus fee");
    } else {
        // 9: inputs plus the contract account cover outputs plus fee.
        Wallet avail = accountOverride ? *accountOverride : l.account(tx.ctrId);
        avail += f.in;
        if (!avail.covers(need))
            return ValidationResult::fail(COND_ACCOUNT, "account cannot cover outputs plus fee");
    }
    return ValidationResult::ok();
}

void apply_tx(Ledger& l, const Tx& tx) {
    ValueFlow f = tx_value_flow(l, tx);
    if (tx.ctrId != no_contract()) {
        Wallet bal = l.account(tx.ctrId);
        bal += f.in;
        bal -= f.out;
        bal -= Wallet(NATIVE_TOKEN, f.fee);
        if (bal.empty()) l.accounts.erase(tx.ctrId);
        else l.accounts[tx.ctrId] = std::move(bal);
    }
    for (const auto& in : tx.in)
        if (in.spent) l.spent.insert(in.ref);
    l.txs.push_back(tx);
}

void advance_time(Ledger& l, uint64_t t) {
    if (t < l.time) throw std::invalid_argument("time cannot go backwards");
    l.time = t;
}

} // namespace hutxo
