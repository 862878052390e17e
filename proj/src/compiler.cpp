// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/compiler.hpp"

#include <algorithm>
#include <set>

namespace hutxo {

bool LogicScript::operator==(const LogicScript& o) const {
    if (rule == o.rule) return true;
    if (!rule || !o.rule) return false;
    if (rule->ruleIndex != o.rule->ruleIndex) return false;
    if (rule->contract == o.rule->contract) return true;
    return rule->contract->canon == o.rule->contract->canon;
}

Datum params_datum(const std::vector<BVal>& params) {
    Datum::List l;
    l.reserve(params.size());
    for (const auto& p : params) l.emplace_back(p);
    return Datum(std::move(l));
}

std::optional<std::vector<BVal>> params_of(const Datum& d) {
    if (!d.is_list()) return std::nullopt;
    std::vector<BVal> out;
    out.reserve(d.list().size());
    for (const auto& e : d.list()) {
        if (!e.is_bval()) return std::nullopt;
        out.push_back(e.bval());
    }
    return out;
}

namespace {

std::string cell_preimage(const hurf::CellWrite& c) {
    return c.map.empty() ? var_preimage(c.var) : map_preimage(c.map, c.indices);
}

// Key of one syntactic read entry once the parameters are known. Index
// expressions may themselves read state through the environment.
Hash512 entry_key(const hurf::StateRef& ref, const hurf::Env& env,
                  const HashProvider& h) {
    if (ref.is_var()) return state_key(h, var_preimage(ref.var));
    std::vector<BVal> idx;
    idx.reserve(ref.indices.size());
    for (const auto& e : ref.indices) idx.push_back(hurf::eval_expr(e, env));
    return state_key(h, map_preimage(ref.map, idx));
}

bool item_covers(const StateItem& it, const Hash512& h) {
    return it.is_point() ? it.lo == h : it.contains(h);
}

// Sorted update list from the evaluated writes; rejects digest collisions
// between distinct cells.
UpdateList update_list(const std::vector<hurf::CellWrite>& cells,
                       const HashProvider& h) {
    UpdateList u;
    u.reserve(cells.size());
    for (const auto& c : cells) {
        Hash512 k = state_key(h, cell_preimage(c));
        if (k == hash_min() || k == hash_max())
            throw EvalError("state key hit key-space endpoint");
        u.emplace_back(k, c.value);
    }
    std::sort(u.begin(), u.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < u.size(); ++i)
        if (u[i - 1].first == u[i].first) throw EvalError("state key collision");
    return u;
}

} // namespace

OutputRef NodeView::ref_of(const StateItem& it) const {
    const auto& m = it.is_point() ? pointRefs : intervalRefs;
    auto f = m.find(it.lo);
    if (f == m.end()) throw CompileError("view holds no output for a state item");
    return f->second;
}

BVal NodeView::read(const Hash512& h) const {
    StateItem it = state.cover(h);
    return it.is_point() ? it.value : BVal();
}

void NodeView::note_apply(const Tx& tx, uint64_t txId) {
    if (tx.ctrId != id) return;
    for (const auto& in : tx.in) {
        if (!in.spent) continue;
        auto it = liveItems.find(in.ref);
        if (it == liveItems.end()) continue;
        const StateItem& item = it->second;
        if (item.is_point()) {
            state.points.erase(item.lo);
            pointRefs.erase(item.lo);
        } else {
            state.intervals.erase(item.lo);
            intervalRefs.erase(item.lo);
        }
        liveItems.erase(it);
    }
    for (uint32_t i = 0; i < tx.out.size(); ++i) {
        const Output& o = tx.out[i];
        if (!o.inContract) continue;
        OutputRef ref{txId, i};
        if (auto item = state_item_of(o)) {
            if (item->is_point()) {
                state.points[item->lo] = item->value;
                pointRefs[item->lo] = ref;
            } else {
                state.intervals[item->lo] = item->hi;
                intervalRefs[item->lo] = ref;
            }
            liveItems.emplace(ref, *item);
        } else if (o.datum.tag() == "logic") {
            const auto& l = o.datum.list();
            if (l.size() == 2 && l[1].is_bval() && l[1].bval().is_str())
                logicRefs[l[1].bval().as_str()] = ref;
        }
    }
}

Tx compile_deploy(const Ledger& l, std::shared_ptr<const hurf::CheckedContract> c,
                  const Store& sigma0, const Wallet& beta0, const DeploySpec& spec,
                  NodeView& view) {
    Tx tx;
    tx.signers = spec.signers;
    tx.validityTime = spec.validity;

    auto resolve_live = [&](const OutputRef& r, const char* what) {
        const Output* o = l.resolve(r);
        if (!o || l.spent.count(r))
            throw CompileError(std::string(what) + " is spent or missing");
        if (o->inContract)
            throw CompileError(std::string(what) + " sits inside a contract");
        return o;
    };

    const Output* feeOut = resolve_live(spec.feeRef, "fee deposit");
    for (const auto& [t, n] : feeOut->value.amounts)
        if (t != NATIVE_TOKEN)
            throw CompileError("fee deposit must hold only the native token");
    tx.fee = feeOut->value.get(NATIVE_TOKEN);
    tx.in.push_back({spec.feeRef, Datum::unit(), true});

    std::set<OutputRef> seen{spec.feeRef};
    Wallet sum;
    for (const auto& r : spec.funding) {
        if (!seen.insert(r).second) throw CompileError("deploy reuses a deposit");
        sum += resolve_live(r, "funding deposit")->value;
        tx.in.push_back({r, Datum::unit(), true});
    }
    if (!(sum == beta0))
        throw CompileError("funding does not match the initial balance");

    tx.ctrId = derive_ctr_id(tx, *l.hasher);

    for (size_t i = 0; i < c->rules.size(); ++i) {
        Output o;
        o.validator = LogicScript{std::make_shared<CompiledRule>(CompiledRule{c, i})};
        o.datum = datum_list({Datum("logic"), Datum(BVal(c->rules[i].rule.name))});
        o.inContract = true;
        tx.out.push_back(std::move(o));
    }
    for (const auto& item : encode_state_outputs(flatten_state(sigma0, *l.hasher)))
        tx.out.push_back(state_item_output(item));

    view = NodeView{};
    view.id = tx.ctrId;
    view.contract = std::move(c);
    view.hasher = l.hasher;
    return tx;
}

Tx compile_invoke(const Ledger& l, const NodeView& view, const InvokeSpec& spec) {
    const hurf::CheckedRule* cr = view.contract->rule(spec.rule);
    if (!cr) throw CompileError("no rule named " + spec.rule);
    if (spec.params.size() != cr->rule.params.size())
        throw CompileError("wrong parameter count for " + spec.rule);
    if (spec.receiveRefs.size() != cr->rule.receives.size())
        throw CompileError("wrong receive deposit count for " + spec.rule);

    std::map<std::string, BVal> params;
    for (size_t i = 0; i < spec.params.size(); ++i)
        params[cr->rule.params[i]] = spec.params[i];

    const HashProvider& hasher = *view.hasher;
    hurf::Env env;
    env.params = &params;
    env.readVar = [&](const std::string& n) {
        return view.read(state_key(hasher, var_preimage(n)));
    };
    env.readMap = [&](const std::string& m, const std::vector<BVal>& k) {
        return view.read(state_key(hasher, map_preimage(m, k)));
    };
    env.signers = &spec.signers;
    env.validFrom = spec.validity.from;
    env.validTo = spec.validity.to;
    env.hasher = &hasher;

    Tx tx;
    tx.ctrId = view.id;
    tx.signers = spec.signers;
    tx.validityTime = spec.validity;

    auto lref = view.logicRefs.find(spec.rule);
    if (lref == view.logicRefs.end())
        throw CompileError("view holds no logic output for " + spec.rule);
    tx.in.push_back({lref->second, params_datum(spec.params), false});

    auto resolve_live = [&](const OutputRef& r, const char* what) {
        const Output* o = l.resolve(r);
        if (!o || l.spent.count(r))
            throw CompileError(std::string(what) + " is spent or missing");
        if (o->inContract)
            throw CompileError(std::string(what) + " sits inside a contract");
        return o;
    };

    const Output* feeOut = resolve_live(spec.feeRef, "fee deposit");
    for (const auto& [t, n] : feeOut->value.amounts)
        if (t != NATIVE_TOKEN)
            throw CompileError("fee deposit must hold only the native token");
    tx.fee = feeOut->value.get(NATIVE_TOKEN);
    tx.in.push_back({spec.feeRef, Datum::unit(), true});

    try {
        // Read witnesses, ordered by key hash (ties keep entry order).
        std::vector<std::pair<Hash512, size_t>> plan;
        plan.reserve(cr->reads.size());
        for (size_t i = 0; i < cr->reads.size(); ++i)
            plan.emplace_back(entry_key(cr->reads[i], env, hasher), i);
        std::sort(plan.begin(), plan.end());
        for (const auto& [h, i] : plan)
            tx.in.push_back({view.ref_of(view.state.cover(h)), Datum::unit(), false});

        for (size_t i = 0; i < cr->rule.receives.size(); ++i) {
            const hurf::Receive& rc = cr->rule.receives[i];
            uint64_t amt = hurf::token_amount(hurf::eval_expr(rc.amount, env));
            const Output* o = resolve_live(spec.receiveRefs[i], "receive deposit");
            if (!(o->value == Wallet(rc.token, amt)))
                throw CompileError("receive deposit does not match the amount");
            tx.in.push_back({spec.receiveRefs[i], Datum::unit(), true});
        }

        if (!hurf::eval_expr(cr->require, env).as_bool())
            throw CompileError("precondition fails for " + spec.rule);

        UpdateList u = update_list(hurf::eval_writes(*cr, env), hasher);
        std::vector<StateItem> gi = gen_inputs(view.state, u);
        for (const auto& item : gi)
            tx.in.push_back({view.ref_of(item), Datum::unit(), true});

        for (const hurf::Stmt& s : cr->sends) {
            std::string to = hurf::eval_expr(s.target, env).as_str();
            uint64_t amt = hurf::token_amount(hurf::eval_expr(s.value, env));
            tx.out.push_back({Wallet(s.token, amt), PkLock{std::move(to)},
                              Datum::unit(), false});
        }

        auto go = gen_outputs(gi, u);
        if (!go) throw CompileError("state update does not fit the committed state");
        for (const auto& item : *go) tx.out.push_back(state_item_output(item));
    } catch (const EvalError& e) {
        throw CompileError(std::string("evaluation failed: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw CompileError(e.what());
    }
    return tx;
}

bool check_rule_tx(const CompiledRule& rule, const ScriptContext& ctx) {
    const Tx& tx = ctx.tx;
    const hurf::CheckedRule& r = rule.checked();

    // The logic output must be the first input, referenced without spending.
    if (ctx.self != 0 || tx.in.empty() || tx.in[0].spent) return false;

    // Only the logic input carries a redeemer; pinning the rest to the unit
    // datum leaves the transaction a single canonical byte form.
    for (size_t i = 1; i < tx.in.size(); ++i)
        if (!(tx.in[i].redeemer == Datum::unit())) return false;

    auto params = params_of(tx.in[0].redeemer);
    if (!params || params->size() != r.rule.params.size()) return false;
    std::map<std::string, BVal> bound;
    for (size_t i = 0; i < params->size(); ++i)
        bound[r.rule.params[i]] = (*params)[i];

    const size_t k = r.reads.size();
    const size_t n = r.rule.receives.size();
    if (tx.in.size() < 2 + k + n) return false;

    // The second input pays exactly the declared fee from a plain output.
    if (!tx.in[1].spent || ctx.inputs[1]->inContract) return false;
    if (!(ctx.inputs[1]->value == Wallet(NATIVE_TOKEN, tx.fee))) return false;

    // Read witnesses: non-spending references to state items.
    std::vector<StateItem> witness;
    witness.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        if (tx.in[2 + i].spent) return false;
        auto item = state_item_of(*ctx.inputs[2 + i]);
        if (!item) return false;
        witness.push_back(std::move(*item));
    }

    auto witness_value = [&](const Hash512& h) -> BVal {
        for (const auto& w : witness) {
            if (w.is_point() && w.lo == h) return w.value;
            if (w.contains(h)) return BVal();
        }
        throw EvalError("read not covered by any witness");
    };

    hurf::Env env;
    env.params = &bound;
    env.readVar = [&](const std::string& name) {
        return witness_value(state_key(ctx.hasher, var_preimage(name)));
    };
    env.readMap = [&](const std::string& m, const std::vector<BVal>& idx) {
        return witness_value(state_key(ctx.hasher, map_preimage(m, idx)));
    };
    env.signers = &tx.signers;
    env.validFrom = tx.validityTime.from;
    env.validTo = tx.validityTime.to;
    env.hasher = &ctx.hasher;

    // Receive inputs: plain outputs worth exactly the declared amounts.
    for (size_t i = 0; i < n; ++i) {
        uint64_t amt = hurf::token_amount(hurf::eval_expr(r.rule.receives[i].amount, env));
        const Input& in = tx.in[2 + k + i];
        const Output& o = *ctx.inputs[2 + k + i];
        if (!in.spent || o.inContract) return false;
        if (!(o.value == Wallet(r.rule.receives[i].token, amt))) return false;
    }

    if (!hurf::eval_expr(r.require, env).as_bool()) return false;

    UpdateList u = update_list(hurf::eval_writes(r, env), ctx.hasher);

    // Remaining inputs feed the state update.
    std::vector<StateItem> gi;
    gi.reserve(tx.in.size() - 2 - k - n);
    for (size_t i = 2 + k + n; i < tx.in.size(); ++i) {
        if (!tx.in[i].spent) return false;
        auto item = state_item_of(*ctx.inputs[i]);
        if (!item) return false;
        gi.push_back(std::move(*item));
    }
    auto go = gen_outputs(gi, u);
    if (!go) return false;

    // Outputs are exactly the sends followed by the recomputed state items.
    if (tx.out.size() != r.sends.size() + go->size()) return false;
    size_t oi = 0;
    for (const hurf::Stmt& s : r.sends) {
        std::string to = hurf::eval_expr(s.target, env).as_str();
        uint64_t amt = hurf::token_amount(hurf::eval_expr(s.value, env));
        Output expect{Wallet(s.token, amt), PkLock{std::move(to)}, Datum::unit(), false};
        if (!(tx.out[oi++] == expect)) return false;
    }
    for (const auto& item : *go)
        if (!(tx.out[oi++] == state_item_output(item))) return false;

    // Each read entry must be covered by the witness at its planned slot,
    // pinning both the keys and the input order.
    std::vector<std::pair<Hash512, size_t>> plan;
    plan.reserve(k);
    for (size_t i = 0; i < k; ++i)
        plan.emplace_back(entry_key(r.reads[i], env, ctx.hasher), i);
    std::sort(plan.begin(), plan.end());
    for (size_t i = 0; i < k; ++i)
        if (!item_covers(witness[i], plan[i].first)) return false;

    // A rule transaction can never mint logic outputs.
    for (const auto& o : tx.out)
        if (o.datum.tag() == "logic") return false;

    return true;
}

} // namespace hutxo
