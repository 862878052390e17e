// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_HURF_FRONTEND_HPP
#define HUTXO_HURF_FRONTEND_HPP

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "../crypto.hpp"
#include "../tx.hpp"
#include "ast.hpp"

namespace hutxo::hurf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Contract parse_contract(const std::string& source);

// Canonical source form; parse(pretty(parse(s))) == parse(s).
std::string pretty_print(const Contract& c);
std::string pretty_print(const ExprPtr& e);

// A state cell a rule touches, before parameters are known: a variable, or
// a map point addressed by index expressions.
struct StateRef {
    std::string map;              // empty for variables
    std::string var;              // empty for map points
    std::vector<ExprPtr> indices; // map points only

    bool is_var() const { return map.empty(); }
};

struct Write {
    StateRef ref;
    ExprPtr value;
};

// A rule after static checking: the syntactic read set (duplicates
// collapsed), the write list, and the effective precondition with the
// distinct-point guards for ambiguous map writes conjoined in.
struct CheckedRule {
    Rule rule;
    std::vector<StateRef> reads;
    std::vector<Write> writes;
    std::vector<Stmt> sends;
    ExprPtr require; // never null after checking
};

struct CheckedContract {
    Contract source;
    std::string canon; // pretty-printed source; the identity used by equality
    std::map<std::string, BVal> varInit;
    std::map<std::string, size_t> mapArity;
    std::vector<CheckedRule> rules;

    const CheckedRule* rule(const std::string& name) const {
        for (const auto& r : rules)
            if (r.rule.name == name) return &r;
        return nullptr;
    }
};

// Validates declarations and rules, enforces single assignment per variable
// (syntactically identical duplicates allowed), injects distinct-point
// guards for map-write pairs with differing right-hand sides, and derives
// the read/write sets.
std::shared_ptr<const CheckedContract> check_contract(const Contract& c);

// Syntactic reads and writes of one rule body.
void read_write_sets(const CheckedContract& ctx, const Rule& r,
                     std::vector<StateRef>& reads, std::vector<Write>& writes);

// Evaluation environment. State reads go through the two functors so the
// same evaluator serves the interpreter (direct store), the transaction
// builder (node view) and the on-chain check (witness inputs).
struct Env {
    const std::map<std::string, BVal>* params = nullptr;
    std::function<BVal(const std::string&)> readVar;
    std::function<BVal(const std::string&, const std::vector<BVal>&)> readMap;
    const std::vector<std::string>* signers = nullptr;
    uint64_t validFrom = 0;
    uint64_t validTo = UINT64_MAX;
    const HashProvider* hasher = &blake2b();
};

BVal eval_expr(const ExprPtr& e, const Env& env);

// hash(...) expression semantics, shared with off-chain callers that need
// to precompute commitment strings.
std::string hash_expr_hex(const HashProvider& h, const std::vector<BVal>& args);

// Receive and send amounts: non-negative integers that fit a wallet slot.
uint64_t token_amount(const BVal& v);

} // namespace hutxo::hurf

#endif // HUTXO_HURF_FRONTEND_HPP
