// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <set>

#include "hutxo/hurf/interp.hpp"

namespace hutxo::hurf {

Store initial_store(const CheckedContract& c) {
    Store s;
    for (const auto& [name, v] : c.varInit)
        if (!v.is_default()) s.vars[name] = v;
    return s;
}

std::vector<CellWrite> eval_writes(const CheckedRule& r, const Env& env) {
    std::vector<CellWrite> cells;
    for (const Write& w : r.writes) {
        CellWrite c;
        c.ref = w.ref;
        if (w.ref.is_var()) {
            c.var = w.ref.var;
        } else {
            c.map = w.ref.map;
            for (const auto& ix : w.ref.indices) c.indices.push_back(eval_expr(ix, env));
        }
        c.value = eval_expr(w.value, env);
        cells.push_back(std::move(c));
    }
    // Simultaneous writes: literal duplicates collapse, contradictions are a
    // failure (the injected guards make them unreachable for checked rules).
    std::vector<CellWrite> dedup;
    for (auto& c : cells) {
        bool drop = false;
        for (const auto& d : dedup) {
            if (c.var == d.var && c.map == d.map && c.indices == d.indices) {
                if (c.value != d.value)
                    throw EvalError("conflicting writes to one state cell");
                drop = true;
                break;
            }
        }
        if (!drop) dedup.push_back(std::move(c));
    }
    return dedup;
}

StepOutcome hurf_deploy(Configuration& conf,
                        std::shared_ptr<const CheckedContract> contract,
                        Store sigma0, const Wallet& beta0,
                        const std::vector<std::string>& funding,
                        const std::string& feeDeposit, uint64_t& id) {
    for (const auto& [name, v] : sigma0.vars)
        if (!contract->varInit.count(name))
            return StepOutcome::fail("initial store sets undeclared variable " + name);
    for (const auto& [name, entries] : sigma0.maps) {
        auto it = contract->mapArity.find(name);
        if (it == contract->mapArity.end())
            return StepOutcome::fail("initial store sets undeclared map " + name);
        for (const auto& [idx, v] : entries)
            if (idx.size() != it->second)
                return StepOutcome::fail("initial store point of wrong arity in " + name);
    }

    std::set<std::string> names(funding.begin(), funding.end());
    if (names.size() != funding.size() || names.count(feeDeposit))
        return StepOutcome::fail("deploy reuses a deposit");
    auto fee = conf.deposits.find(feeDeposit);
    if (fee == conf.deposits.end()) return StepOutcome::fail("missing fee deposit");
    for (const auto& [tok, n] : fee->second.value.amounts)
        if (tok != NATIVE_TOKEN)
            return StepOutcome::fail("fee deposit must hold only the native token");

    Wallet sum;
    for (const auto& f : funding) {
        auto it = conf.deposits.find(f);
        if (it == conf.deposits.end()) return StepOutcome::fail("missing funding deposit " + f);
        sum += it->second.value;
    }
    if (!(sum == beta0))
        return StepOutcome::fail("funding does not match the initial balance");

    // Normalize: drop default cells so store equality is structural.
    Store store;
    for (auto& [name, v] : sigma0.vars)
        if (!v.is_default()) store.vars[name] = v;
    for (auto& [name, entries] : sigma0.maps)
        for (auto& [idx, v] : entries)
            if (!v.is_default()) store.maps[name][idx] = v;

    for (const auto& f : funding) conf.deposits.erase(f);
    conf.deposits.erase(feeDeposit);
    id = conf.nextInstance++;
    conf.instances.emplace(id, Instance{std::move(contract), std::move(store), beta0});
    return StepOutcome::success();
}

StepOutcome hurf_step(Configuration& conf, const Action& a, const HashProvider& h) {
    auto it = conf.instances.find(a.instance);
    if (it == conf.instances.end()) return StepOutcome::fail("no such instance");
    Instance& inst = it->second;
    const CheckedRule* rule = inst.contract->rule(a.rule);
    if (!rule) return StepOutcome::fail("no such rule " + a.rule);
    if (a.params.size() != rule->rule.params.size())
        return StepOutcome::fail("wrong parameter count");
    if (a.receiveDeposits.size() != rule->rule.receives.size())
        return StepOutcome::fail("wrong receive deposit count");

    if (!a.validity.contains(conf.time)) return StepOutcome::fail("outside validity");

    std::map<std::string, BVal> params;
    for (size_t i = 0; i < a.params.size(); ++i)
        params[rule->rule.params[i]] = a.params[i];

    Env env;
    env.params = &params;
    env.readVar = [&](const std::string& n) { return inst.store.var(n); };
    env.readMap = [&](const std::string& m, const std::vector<BVal>& k) {
        return inst.store.map_at(m, k);
    };
    env.signers = &a.signers;
    env.validFrom = a.validity.from;
    env.validTo = a.validity.to;
    env.hasher = &h;

    // All evaluation happens against the pre-step store; nothing below
    // mutates the configuration until every check has passed.
    try {
        std::set<std::string> used;
        auto claim = [&](const std::string& name) -> const Deposit* {
            auto dit = conf.deposits.find(name);
            if (dit == conf.deposits.end()) return nullptr;
            if (!used.insert(name).second) return nullptr;
            return &dit->second;
        };

        Wallet received;
        for (size_t i = 0; i < rule->rule.receives.size(); ++i) {
            const Receive& rc = rule->rule.receives[i];
            uint64_t amt = token_amount(eval_expr(rc.amount, env));
            const Deposit* dep = claim(a.receiveDeposits[i]);
            if (!dep) return StepOutcome::fail("missing or reused receive deposit");
            if (!(dep->value == Wallet(rc.token, amt)))
                return StepOutcome::fail("receive deposit does not match the amount");
            received += dep->value;
        }

        const Deposit* fee = claim(a.feeDeposit);
        if (!fee) return StepOutcome::fail("missing or reused fee deposit");
        for (const auto& [tok, n] : fee->value.amounts)
            if (tok != NATIVE_TOKEN)
                return StepOutcome::fail("fee deposit must hold only the native token");

        if (!eval_expr(rule->require, env).as_bool())
            return StepOutcome::fail("precondition failed");

        std::vector<CellWrite> writes = eval_writes(*rule, env);

        struct Payment {
            std::string to;
            Wallet value;
        };
        std::vector<Payment> payments;
        Wallet sent;
        for (const Stmt& s : rule->sends) {
            std::string to = eval_expr(s.target, env).as_str();
            uint64_t amt = token_amount(eval_expr(s.value, env));
            Wallet w(s.token, amt);
            sent += w;
            payments.push_back({std::move(to), std::move(w)});
        }

        Wallet balance = inst.balance;
        balance += received;
        if (!balance.covers(sent)) return StepOutcome::fail("balance cannot cover sends");
        balance -= sent;

        // Commit.
        for (const auto& w : writes) {
            if (!w.map.empty()) {
                if (w.value.is_default()) {
                    auto mit = inst.store.maps.find(w.map);
                    if (mit != inst.store.maps.end()) {
                        mit->second.erase(w.indices);
                        if (mit->second.empty()) inst.store.maps.erase(mit);
                    }
                } else {
                    inst.store.maps[w.map][w.indices] = w.value;
                }
            } else if (w.value.is_default()) {
                inst.store.vars.erase(w.var);
            } else {
                inst.store.vars[w.var] = w.value;
            }
        }
        inst.balance = std::move(balance);
        for (const auto& name : used) conf.deposits.erase(name);
        for (auto& p : payments) conf.add_deposit(p.to, std::move(p.value));
        return StepOutcome::success();
    } catch (const EvalError& e) {
        return StepOutcome::fail(std::string("evaluation failed: ") + e.what());
    }
}

} // namespace hutxo::hurf
