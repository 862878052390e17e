// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_HURF_AST_HPP
#define HUTXO_HURF_AST_HPP

#include <memory>
#include <string>
#include <vector>

#include "../bval.hpp"
#include "../wallet.hpp"

namespace hutxo::hurf {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One expression node. `op` holds the operator spelling for Unary/Binary,
// the identifier for Ident, and the map name for MapAccess.
struct Expr {
    enum Kind {
        Lit,       // value
        Ident,     // op = name (parameter or state variable)
        MapAccess, // op = map name, args = indices
        Unary,     // op in { -, not }, args = {e}
        Binary,    // op in { + - * / % @ == != < <= > >= && || }, args = {l, r}
        If,        // args = {cond, then, else}
        Call,      // op in { hash, len, substr, toStr }, args = arguments
        SignedBy,  // args = {key expr}
        ValidFrom, // validity interval bounds of the enclosing action
        ValidTo,
    };

    Kind kind = Lit;
    BVal value;
    std::string op;
    std::vector<ExprPtr> args;
};

ExprPtr mk_lit(BVal v);
ExprPtr mk_ident(std::string name);
ExprPtr mk_map(std::string name, std::vector<ExprPtr> idx);
ExprPtr mk_unary(std::string op, ExprPtr e);
ExprPtr mk_binary(std::string op, ExprPtr l, ExprPtr r);
ExprPtr mk_if(ExprPtr c, ExprPtr t, ExprPtr e);
ExprPtr mk_call(std::string fn, std::vector<ExprPtr> args);
ExprPtr mk_signed_by(ExprPtr e);
ExprPtr mk_valid(bool from);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Effect statement. All right-hand sides of one rule evaluate against the
// state before the rule fires; the writes land simultaneously.
struct Stmt {
    enum Kind { AssignVar, AssignMap, Send } kind = AssignVar;
    std::string name;             // variable or map
    std::vector<ExprPtr> indices; // AssignMap
    ExprPtr value;                // assigned value or sent amount
    ExprPtr target;               // Send recipient
    TokenId token = 0;            // Send token
};

struct Receive {
    ExprPtr amount;
    TokenId token = 0;
};

struct Rule {
    std::string name;
    std::vector<std::string> params;
    std::vector<Receive> receives;
    ExprPtr require; // null means no precondition
    std::vector<Stmt> effects;
};

struct VarDecl {
    std::string name;
    BVal init;
};

struct MapDecl {
    std::string name;
    size_t arity = 1;
};

struct Contract {
    std::string name;
    std::vector<VarDecl> vars;
    std::vector<MapDecl> maps;
    std::vector<Rule> rules;
};

} // namespace hutxo::hurf

#endif // HUTXO_HURF_AST_HPP
