// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <algorithm>

#include "hutxo/hurf/frontend.hpp"

namespace hutxo::hurf {

namespace {

Int to_index(const Int& v, size_t limit) {
    if (v < 0) return 0;
    if (v > Int(limit)) return Int(limit);
    return v;
}

BVal eval_binary(const std::string& op, const BVal& l, const BVal& r) {
    if (op == "==") return BVal(l == r);
    if (op == "!=") return BVal(l != r);
    if (op == "@") return BVal(l.as_str() + r.as_str());
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
        int c;
        if (l.is_int() && r.is_int())
            c = l.as_int() < r.as_int() ? -1 : (l.as_int() == r.as_int() ? 0 : 1);
        else if (l.is_str() && r.is_str())
            c = l.as_str().compare(r.as_str()) < 0 ? -1
                : (l.as_str() == r.as_str() ? 0 : 1);
        else
            throw EvalError("ordered comparison needs two ints or two strings");
        if (op == "<") return BVal(c < 0);
        if (op == "<=") return BVal(c <= 0);
        if (op == ">") return BVal(c > 0);
        return BVal(c >= 0);
    }
    const Int& a = l.as_int();
    const Int& b = r.as_int();
    if (op == "+") return BVal(Int(a + b));
    if (op == "-") return BVal(Int(a - b));
    if (op == "*") return BVal(Int(a * b));
    if (op == "/") {
        if (b == 0) throw EvalError("division by zero");
        return BVal(Int(a / b));
    }
    if (op == "%") {
        if (b == 0) throw EvalError("modulo by zero");
        return BVal(Int(a % b));
    }
    throw EvalError("unknown operator " + op);
}

} // namespace

std::string hash_expr_hex(const HashProvider& h, const std::vector<BVal>& args) {
    return hash_hex(h.hash(encode_bvals(args)));
}

uint64_t token_amount(const BVal& v) {
    const Int& x = v.as_int();
    if (x < 0) throw EvalError("negative token amount");
    if (x > Int(UINT64_MAX)) throw EvalError("token amount too large");
    return x.convert_to<uint64_t>();
}

BVal eval_expr(const ExprPtr& e, const Env& env) {
    switch (e->kind) {
    case Expr::Lit:
        return e->value;
    case Expr::Ident: {
        if (env.params) {
            auto it = env.params->find(e->op);
            if (it != env.params->end()) return it->second;
        }
        if (!env.readVar) throw EvalError("no state access for '" + e->op + "'");
        return env.readVar(e->op);
    }
    case Expr::MapAccess: {
        std::vector<BVal> idx;
        idx.reserve(e->args.size());
        for (const auto& a : e->args) idx.push_back(eval_expr(a, env));
        if (!env.readMap) throw EvalError("no state access for map '" + e->op + "'");
        return env.readMap(e->op, idx);
    }
    case Expr::Unary: {
        BVal v = eval_expr(e->args[0], env);
        if (e->op == "-") return BVal(Int(-v.as_int()));
        return BVal(!v.as_bool()); // not
    }
    case Expr::Binary: {
        // Boolean connectives short-circuit.
        if (e->op == "&&") {
            if (!eval_expr(e->args[0], env).as_bool()) return BVal(false);
            return BVal(eval_expr(e->args[1], env).as_bool());
        }
        if (e->op == "||") {
            if (eval_expr(e->args[0], env).as_bool()) return BVal(true);
            return BVal(eval_expr(e->args[1], env).as_bool());
        }
        BVal l = eval_expr(e->args[0], env);
        BVal r = eval_expr(e->args[1], env);
        return eval_binary(e->op, l, r);
    }
    case Expr::If:
        return eval_expr(e->args[0], env).as_bool() ? eval_expr(e->args[1], env)
                                                    : eval_expr(e->args[2], env);
    case Expr::Call: {
        std::vector<BVal> args;
        args.reserve(e->args.size());
        for (const auto& a : e->args) args.push_back(eval_expr(a, env));
        if (e->op == "hash") return BVal(hash_expr_hex(*env.hasher, args));
        if (e->op == "toStr") return BVal(bval_str(args));
        if (e->op == "len") return BVal(Int(args[0].as_str().size()));
        // substr(s, start, count), clamped to the string bounds.
        const std::string& s = args[0].as_str();
        size_t start = to_index(args[1].as_int(), s.size()).convert_to<size_t>();
        size_t count =
            to_index(args[2].as_int(), s.size() - start).convert_to<size_t>();
        return BVal(s.substr(start, count));
    }
    case Expr::SignedBy: {
        const std::string& key = eval_expr(e->args[0], env).as_str();
        if (!env.signers) return BVal(false);
        return BVal(std::find(env.signers->begin(), env.signers->end(), key) !=
                    env.signers->end());
    }
    case Expr::ValidFrom:
        return BVal(Int(env.validFrom));
    case Expr::ValidTo:
        return BVal(Int(env.validTo));
    }
    throw EvalError("unreachable expression kind");
}

} // namespace hutxo::hurf
