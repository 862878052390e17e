// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <algorithm>
#include <set>

#include "hutxo/hurf/frontend.hpp"

namespace hutxo::hurf {

namespace {

bool stateref_equal(const StateRef& a, const StateRef& b) {
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) return a.var == b.var;
    if (a.map != b.map || a.indices.size() != b.indices.size()) return false;
    for (size_t i = 0; i < a.indices.size(); ++i)
        if (!expr_equal(a.indices[i], b.indices[i])) return false;
    return true;
}

struct RuleChecker {
    const CheckedContract& ctx;
    const Rule& rule;
    std::set<std::string> params;

    void fail(const std::string& msg) const {
        throw CheckError("rule " + rule.name + ": " + msg);
    }

    void check_expr(const ExprPtr& e) {
        switch (e->kind) {
        case Expr::Ident:
            if (!params.count(e->op) && !ctx.varInit.count(e->op))
                fail("unknown identifier '" + e->op + "'");
            break;
        case Expr::MapAccess: {
            auto it = ctx.mapArity.find(e->op);
            if (it == ctx.mapArity.end()) fail("unknown map '" + e->op + "'");
            if (e->args.size() != it->second)
                fail("map '" + e->op + "' used with wrong arity");
            break;
        }
        default:
            break;
        }
        for (const auto& a : e->args) check_expr(a);
    }

    void scan_reads(const ExprPtr& e, std::vector<StateRef>& reads) {
        if (e->kind == Expr::Ident && ctx.varInit.count(e->op)) {
            StateRef r;
            r.var = e->op;
            if (std::none_of(reads.begin(), reads.end(),
                             [&](const StateRef& x) { return stateref_equal(x, r); }))
                reads.push_back(std::move(r));
        }
        for (const auto& a : e->args) scan_reads(a, reads);
        if (e->kind == Expr::MapAccess) {
            StateRef r;
            r.map = e->op;
            r.indices = e->args;
            if (std::none_of(reads.begin(), reads.end(),
                             [&](const StateRef& x) { return stateref_equal(x, r); }))
                reads.push_back(std::move(r));
        }
    }
};

} // namespace

void read_write_sets(const CheckedContract& ctx, const Rule& r,
                     std::vector<StateRef>& reads, std::vector<Write>& writes) {
    RuleChecker rc{ctx, r, {r.params.begin(), r.params.end()}};
    reads.clear();
    writes.clear();
    for (const auto& rcv : r.receives) rc.scan_reads(rcv.amount, reads);
    if (r.require) rc.scan_reads(r.require, reads);
    for (const auto& s : r.effects) {
        if (s.kind == Stmt::Send) rc.scan_reads(s.target, reads);
        for (const auto& ix : s.indices) rc.scan_reads(ix, reads);
        rc.scan_reads(s.value, reads);
        if (s.kind == Stmt::AssignVar) {
            Write w;
            w.ref.var = s.name;
            w.value = s.value;
            writes.push_back(std::move(w));
        } else if (s.kind == Stmt::AssignMap) {
            Write w;
            w.ref.map = s.name;
            w.ref.indices = s.indices;
            w.value = s.value;
            writes.push_back(std::move(w));
        }
    }
}

std::shared_ptr<const CheckedContract> check_contract(const Contract& c) {
    auto out = std::make_shared<CheckedContract>();
    out->source = c;
    out->canon = pretty_print(c);

    for (const auto& v : c.vars)
        if (!out->varInit.emplace(v.name, v.init).second)
            throw CheckError("duplicate variable '" + v.name + "'");
    for (const auto& m : c.maps) {
        if (out->varInit.count(m.name))
            throw CheckError("'" + m.name + "' declared as both variable and map");
        if (!out->mapArity.emplace(m.name, m.arity).second)
            throw CheckError("duplicate map '" + m.name + "'");
    }

    std::set<std::string> ruleNames;
    for (const Rule& r : c.rules) {
        if (!ruleNames.insert(r.name).second)
            throw CheckError("duplicate rule '" + r.name + "'");

        RuleChecker rc{*out, r, {}};
        for (const auto& p : r.params) {
            if (!rc.params.insert(p).second)
                rc.fail("duplicate parameter '" + p + "'");
            if (out->varInit.count(p) || out->mapArity.count(p))
                rc.fail("parameter '" + p + "' shadows a state name");
        }

        for (const auto& rcv : r.receives) rc.check_expr(rcv.amount);
        if (r.require) rc.check_expr(r.require);
        for (const auto& s : r.effects) {
            if (s.kind == Stmt::AssignVar) {
                if (!out->varInit.count(s.name))
                    rc.fail("assignment to undeclared variable '" + s.name + "'");
            } else if (s.kind == Stmt::AssignMap) {
                auto it = out->mapArity.find(s.name);
                if (it == out->mapArity.end())
                    rc.fail("write to undeclared map '" + s.name + "'");
                if (s.indices.size() != it->second)
                    rc.fail("map '" + s.name + "' written with wrong arity");
            }
            for (const auto& ix : s.indices) rc.check_expr(ix);
            rc.check_expr(s.value);
            if (s.target) rc.check_expr(s.target);
        }

        // Single assignment per variable; byte-identical duplicates pass.
        for (size_t i = 0; i < r.effects.size(); ++i) {
            const Stmt& a = r.effects[i];
            if (a.kind != Stmt::AssignVar) continue;
            for (size_t j = i + 1; j < r.effects.size(); ++j) {
                const Stmt& b = r.effects[j];
                if (b.kind == Stmt::AssignVar && a.name == b.name &&
                    !expr_equal(a.value, b.value))
                    rc.fail("variable '" + a.name + "' assigned two different values");
            }
        }

        // Map-write pairs with differing right-hand sides must target
        // provably distinct points: conjoin the distinctness guard.
        ExprPtr require = r.require ? r.require : mk_lit(BVal(true));
        for (size_t i = 0; i < r.effects.size(); ++i) {
            const Stmt& a = r.effects[i];
            if (a.kind != Stmt::AssignMap) continue;
            for (size_t j = i + 1; j < r.effects.size(); ++j) {
                const Stmt& b = r.effects[j];
                if (b.kind != Stmt::AssignMap || a.name != b.name) continue;
                if (expr_equal(a.value, b.value)) continue;
                ExprPtr same;
                for (size_t k = 0; k < a.indices.size(); ++k) {
                    ExprPtr eq = mk_binary("==", a.indices[k], b.indices[k]);
                    same = same ? mk_binary("&&", same, eq) : eq;
                }
                require = mk_binary("&&", require, mk_unary("not", same));
            }
        }

        CheckedRule cr;
        cr.rule = r;
        cr.require = require;
        read_write_sets(*out, r, cr.reads, cr.writes);
        for (const auto& s : r.effects)
            if (s.kind == Stmt::Send) cr.sends.push_back(s);
        out->rules.push_back(std::move(cr));
    }
    return out;
}

} // namespace hutxo::hurf
