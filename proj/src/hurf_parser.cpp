// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <cctype>
#include <sstream>

#include "hutxo/hurf/frontend.hpp"

namespace hutxo::hurf {

ExprPtr mk_lit(BVal v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Lit;
    e->value = std::move(v);
    return e;
}
ExprPtr mk_ident(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Ident;
    e->op = std::move(name);
    return e;
}
ExprPtr mk_map(std::string name, std::vector<ExprPtr> idx) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::MapAccess;
    e->op = std::move(name);
    e->args = std::move(idx);
    return e;
}
ExprPtr mk_unary(std::string op, ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Unary;
    e->op = std::move(op);
    e->args = {std::move(x)};
    return e;
}
ExprPtr mk_binary(std::string op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Binary;
    e->op = std::move(op);
    e->args = {std::move(l), std::move(r)};
    return e;
}
ExprPtr mk_if(ExprPtr c, ExprPtr t, ExprPtr f) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::If;
    e->args = {std::move(c), std::move(t), std::move(f)};
    return e;
}
ExprPtr mk_call(std::string fn, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Call;
    e->op = std::move(fn);
    e->args = std::move(args);
    return e;
}
ExprPtr mk_signed_by(ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::SignedBy;
    e->args = {std::move(x)};
    return e;
}
ExprPtr mk_valid(bool from) {
    auto e = std::make_shared<Expr>();
    e->kind = from ? Expr::ValidFrom : Expr::ValidTo;
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->op != b->op) return false;
    if (a->kind == Expr::Lit && a->value != b->value) return false;
    if (a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!expr_equal(a->args[i], b->args[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
    enum Kind { Ident, Num, Str, Punct, End } kind = End;
    std::string text;
    Int number;
    size_t line = 1;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    size_t line = 1;
    Token cur;

    explicit Lexer(const std::string& s) : src(s) { next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(cur.line) + ": " + msg);
    }

    void next() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (std::isspace(uint8_t(c))) {
                ++pos;
            } else if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
                while (pos < src.size() && src[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        cur = Token{};
        cur.line = line;
        if (pos >= src.size()) return;

        char c = src[pos];
        if (std::isalpha(uint8_t(c)) || c == '_') {
            size_t s = pos;
            while (pos < src.size() &&
                   (std::isalnum(uint8_t(src[pos])) || src[pos] == '_'))
                ++pos;
            cur.kind = Token::Ident;
            cur.text = src.substr(s, pos - s);
            return;
        }
        if (std::isdigit(uint8_t(c))) {
            size_t s = pos;
            while (pos < src.size() && std::isdigit(uint8_t(src[pos]))) ++pos;
            cur.kind = Token::Num;
            cur.number = Int(src.substr(s, pos - s));
            return;
        }
        if (c == '"') {
            ++pos;
            std::string v;
            while (pos < src.size() && src[pos] != '"') {
                if (src[pos] == '\\' && pos + 1 < src.size()) {
                    ++pos;
                    char e = src[pos];
                    if (e == 'n') v.push_back('\n');
                    else if (e == 't') v.push_back('\t');
                    else v.push_back(e);
                } else {
                    if (src[pos] == '\n') ++line;
                    v.push_back(src[pos]);
                }
                ++pos;
            }
            if (pos >= src.size()) throw ParseError("unterminated string literal");
            ++pos;
            cur.kind = Token::Str;
            cur.text = std::move(v);
            return;
        }
        static const char* two[] = {"==", "!=", "<=", ">=", "&&", "||"};
        for (const char* t : two) {
            if (src.compare(pos, 2, t) == 0) {
                cur.kind = Token::Punct;
                cur.text = t;
                pos += 2;
                return;
            }
        }
        cur.kind = Token::Punct;
        cur.text = std::string(1, c);
        ++pos;
    }

    bool is_punct(const std::string& p) const {
        return cur.kind == Token::Punct && cur.text == p;
    }
    bool is_kw(const std::string& k) const {
        return cur.kind == Token::Ident && cur.text == k;
    }
    void expect_punct(const std::string& p) {
        if (!is_punct(p)) fail("expected '" + p + "', found '" + cur.text + "'");
        next();
    }
    void expect_kw(const std::string& k) {
        if (!is_kw(k)) fail("expected '" + k + "', found '" + cur.text + "'");
        next();
    }
    std::string expect_ident() {
        if (cur.kind != Token::Ident) fail("expected identifier, found '" + cur.text + "'");
        std::string s = cur.text;
        next();
        return s;
    }
};

// Token-unit literal: T means token 1, Tk means token k.
TokenId parse_token_name(Lexer& lx) {
    if (lx.cur.kind != Token::Ident || lx.cur.text[0] != 'T')
        lx.fail("expected a token name (T, T0, T1, ...)");
    std::string t = lx.cur.text;
    lx.next();
    if (t == "T") return 1;
    for (size_t i = 1; i < t.size(); ++i)
        if (!std::isdigit(uint8_t(t[i]))) throw ParseError("bad token name " + t);
    return TokenId(std::stoull(t.substr(1)));
}

struct Parser {
    Lexer lx;

    explicit Parser(const std::string& s) : lx(s) {}

    ExprPtr expr() {
        if (lx.is_kw("if")) {
            lx.next();
            ExprPtr c = expr();
            lx.expect_kw("then");
            ExprPtr t = expr();
            lx.expect_kw("else");
            ExprPtr f = expr();
            return mk_if(c, t, f);
        }
        return or_expr();
    }

    ExprPtr or_expr() {
        ExprPtr l = and_expr();
        while (lx.is_punct("||")) {
            lx.next();
            l = mk_binary("||", l, and_expr());
        }
        return l;
    }

    ExprPtr and_expr() {
        ExprPtr l = cmp_expr();
        while (lx.is_punct("&&")) {
            lx.next();
            l = mk_binary("&&", l, cmp_expr());
        }
        return l;
    }

    ExprPtr cmp_expr() {
        ExprPtr l = add_expr();
        static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
        for (const char* op : ops) {
            if (lx.is_punct(op)) {
                lx.next();
                return mk_binary(op, l, add_expr());
            }
        }
        return l;
    }

    ExprPtr add_expr() {
        ExprPtr l = mul_expr();
        while (lx.is_punct("+") || lx.is_punct("-") || lx.is_punct("@")) {
            std::string op = lx.cur.text;
            lx.next();
            l = mk_binary(op, l, mul_expr());
        }
        return l;
    }

    ExprPtr mul_expr() {
        ExprPtr l = unary_expr();
        while (lx.is_punct("*") || lx.is_punct("/") || lx.is_punct("%")) {
            std::string op = lx.cur.text;
            lx.next();
            l = mk_binary(op, l, unary_expr());
        }
        return l;
    }

    ExprPtr unary_expr() {
        if (lx.is_punct("-")) {
            lx.next();
            return mk_unary("-", unary_expr());
        }
        if (lx.is_kw("not")) {
            lx.next();
            return mk_unary("not", unary_expr());
        }
        return primary();
    }

    std::vector<ExprPtr> arg_list() {
        std::vector<ExprPtr> args;
        lx.expect_punct("(");
        if (!lx.is_punct(")")) {
            args.push_back(expr());
            while (lx.is_punct(",")) {
                lx.next();
                args.push_back(expr());
            }
        }
        lx.expect_punct(")");
        return args;
    }

    ExprPtr primary() {
        if (lx.cur.kind == Token::Num) {
            Int v = lx.cur.number;
            lx.next();
            return mk_lit(BVal(std::move(v)));
        }
        if (lx.cur.kind == Token::Str) {
            std::string s = lx.cur.text;
            lx.next();
            return mk_lit(BVal(std::move(s)));
        }
        if (lx.is_kw("true")) {
            lx.next();
            return mk_lit(BVal(true));
        }
        if (lx.is_kw("false")) {
            lx.next();
            return mk_lit(BVal(false));
        }
        if (lx.is_kw("validFrom")) {
            lx.next();
            return mk_valid(true);
        }
        if (lx.is_kw("validTo")) {
            lx.next();
            return mk_valid(false);
        }
        if (lx.is_kw("signedBy")) {
            lx.next();
            auto args = arg_list();
            if (args.size() != 1) lx.fail("signedBy takes one argument");
            return mk_signed_by(args[0]);
        }
        if (lx.is_kw("hash") || lx.is_kw("len") || lx.is_kw("substr") ||
            lx.is_kw("toStr")) {
            std::string fn = lx.cur.text;
            lx.next();
            auto args = arg_list();
            if (fn == "len" && args.size() != 1) lx.fail("len takes one argument");
            if (fn == "substr" && args.size() != 3) lx.fail("substr takes three arguments");
            if ((fn == "hash" || fn == "toStr") && args.empty())
                lx.fail(fn + " needs at least one argument");
            return mk_call(fn, std::move(args));
        }
        if (lx.cur.kind == Token::Ident) {
            std::string name = lx.expect_ident();
            if (lx.is_punct("[")) {
                lx.next();
                std::vector<ExprPtr> idx;
                idx.push_back(expr());
                while (lx.is_punct(",")) {
                    lx.next();
                    idx.push_back(expr());
                }
                lx.expect_punct("]");
                return mk_map(name, std::move(idx));
            }
            return mk_ident(name);
        }
        if (lx.is_punct("(")) {
            lx.next();
            ExprPtr e = expr();
            lx.expect_punct(")");
            return e;
        }
        lx.fail("expected expression, found '" + lx.cur.text + "'");
    }

    Stmt statement() {
        ExprPtr e = expr();
        if (lx.is_punct("=")) {
            lx.next();
            Stmt s;
            s.value = expr();
            if (e->kind == Expr::Ident) {
                s.kind = Stmt::AssignVar;
                s.name = e->op;
                return s;
            }
            if (e->kind == Expr::MapAccess) {
                s.kind = Stmt::AssignMap;
                s.name = e->op;
                s.indices = e->args;
                return s;
            }
            lx.fail("left side of '=' must be a variable or a map point");
        }
        if (lx.is_punct(".")) {
            lx.next();
            lx.expect_kw("send");
            lx.expect_punct("(");
            Stmt s;
            s.kind = Stmt::Send;
            s.target = e;
            s.value = expr();
            lx.expect_punct(":");
            s.token = parse_token_name(lx);
            lx.expect_punct(")");
            return s;
        }
        lx.fail("expected '=' or '.send' in effect");
    }

    Rule rule() {
        Rule r;
        r.name = lx.expect_ident();
        lx.expect_punct("(");
        if (!lx.is_punct(")")) {
            r.params.push_back(lx.expect_ident());
            while (lx.is_punct(",")) {
                lx.next();
                r.params.push_back(lx.expect_ident());
            }
        }
        lx.expect_punct(")");
        lx.expect_punct("{");

        while (lx.is_kw("receive")) {
            lx.next();
            lx.expect_punct("(");
            Receive rc;
            rc.amount = expr();
            lx.expect_punct(":");
            rc.token = parse_token_name(lx);
            lx.expect_punct(")");
            lx.expect_punct(";");
            r.receives.push_back(std::move(rc));
        }
        if (lx.is_kw("require")) {
            lx.next();
            lx.expect_punct("(");
            r.require = expr();
            lx.expect_punct(")");
            lx.expect_punct(";");
        }
        if (!lx.is_punct("}")) {
            r.effects.push_back(statement());
            while (lx.is_punct("|")) {
                lx.next();
                r.effects.push_back(statement());
            }
            lx.expect_punct(";");
        }
        lx.expect_punct("}");
        return r;
    }

    Contract contract() {
        lx.expect_kw("contract");
        Contract c;
        c.name = lx.expect_ident();
        lx.expect_punct("{");
        while (!lx.is_punct("}")) {
            if (lx.is_kw("var")) {
                lx.next();
                VarDecl d;
                d.name = lx.expect_ident();
                if (lx.is_punct("=")) {
                    lx.next();
                    bool neg = false;
                    if (lx.is_punct("-")) {
                        neg = true;
                        lx.next();
                    }
                    if (lx.cur.kind == Token::Num) {
                        Int v = lx.cur.number;
                        lx.next();
                        d.init = BVal(neg ? Int(-v) : v);
                    } else if (neg) {
                        lx.fail("expected integer literal after '-'");
                    } else if (lx.cur.kind == Token::Str) {
                        d.init = BVal(lx.cur.text);
                        lx.next();
                    } else if (lx.is_kw("true") || lx.is_kw("false")) {
                        d.init = BVal(lx.cur.text == "true");
                        lx.next();
                    } else {
                        lx.fail("expected literal initializer");
                    }
                }
                lx.expect_punct(";");
                c.vars.push_back(std::move(d));
            } else if (lx.is_kw("map")) {
                lx.next();
                MapDecl d;
                d.name = lx.expect_ident();
                lx.expect_punct("(");
                lx.expect_kw("arity");
                lx.expect_punct("=");
                if (lx.cur.kind != Token::Num || lx.cur.number <= 0)
                    lx.fail("map arity must be a positive integer");
                d.arity = size_t(lx.cur.number.convert_to<uint64_t>());
                lx.next();
                lx.expect_punct(")");
                lx.expect_punct(";");
                c.maps.push_back(std::move(d));
            } else {
                c.rules.push_back(rule());
            }
        }
        lx.expect_punct("}");
        if (lx.cur.kind != Token::End) lx.fail("trailing input after contract");
        return c;
    }
};

} // namespace

Contract parse_contract(const std::string& source) {
    Parser p(source);
    return p.contract();
}

// ---------------------------------------------------------------------------
// Pretty printer

namespace {

int precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=" || op == "<" || op == "<=" || op == ">" || op == ">=")
        return 3;
    if (op == "+" || op == "-" || op == "@") return 4;
    return 5; // * / %
}

void print_expr(std::ostream& os, const ExprPtr& e, int parent);

void print_lit(std::ostream& os, const BVal& v) {
    if (v.is_bool()) {
        os << (v.as_bool() ? "true" : "false");
    } else if (v.is_int()) {
        os << v.as_int().str();
    } else {
        os << '"';
        for (char c : v.as_str()) {
            if (c == '"' || c == '\\') os << '\\' << c;
            else if (c == '\n') os << "\\n";
            else if (c == '\t') os << "\\t";
            else os << c;
        }
        os << '"';
    }
}

void print_args(std::ostream& os, const std::vector<ExprPtr>& args) {
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, args[i], 0);
    }
}

void print_expr(std::ostream& os, const ExprPtr& e, int parent) {
    switch (e->kind) {
    case Expr::Lit:
        print_lit(os, e->value);
        break;
    case Expr::Ident:
        os << e->op;
        break;
    case Expr::MapAccess:
        os << e->op << '[';
        print_args(os, e->args);
        os << ']';
        break;
    case Expr::Unary:
        if (e->op == "not") {
            os << "not ";
            print_expr(os, e->args[0], 6);
        } else {
            os << '-';
            print_expr(os, e->args[0], 6);
        }
        break;
    case Expr::Binary: {
        int prec = precedence(e->op);
        if (prec < parent) os << '(';
        print_expr(os, e->args[0], prec);
        os << ' ' << e->op << ' ';
        print_expr(os, e->args[1], prec + 1);
        if (prec < parent) os << ')';
        break;
    }
    case Expr::If:
        if (parent > 0) os << '(';
        os << "if ";
        print_expr(os, e->args[0], 0);
        os << " then ";
        print_expr(os, e->args[1], 0);
        os << " else ";
        print_expr(os, e->args[2], 0);
        if (parent > 0) os << ')';
        break;
    case Expr::Call:
        os << e->op << '(';
        print_args(os, e->args);
        os << ')';
        break;
    case Expr::SignedBy:
        os << "signedBy(";
        print_expr(os, e->args[0], 0);
        os << ')';
        break;
    case Expr::ValidFrom:
        os << "validFrom";
        break;
    case Expr::ValidTo:
        os << "validTo";
        break;
    }
}

void print_stmt(std::ostream& os, const Stmt& s) {
    if (s.kind == Stmt::AssignVar) {
        os << s.name << " = ";
        print_expr(os, s.value, 0);
    } else if (s.kind == Stmt::AssignMap) {
        os << s.name << '[';
        print_args(os, s.indices);
        os << "] = ";
        print_expr(os, s.value, 0);
    } else {
        print_expr(os, s.target, 6);
        os << ".send(";
        print_expr(os, s.value, 0);
        os << ":T" << s.token << ')';
    }
}

} // namespace

std::string pretty_print(const ExprPtr& e) {
    std::ostringstream os;
    print_expr(os, e, 0);
    return os.str();
}

std::string pretty_print(const Contract& c) {
    std::ostringstream os;
    os << "contract " << c.name << " {\n";
    for (const auto& m : c.maps)
        os << "    map " << m.name << "(arity=" << m.arity << ");\n";
    for (const auto& v : c.vars) {
        os << "    var " << v.name << " = ";
        print_lit(os, v.init);
        os << ";\n";
    }
    for (const auto& r : c.rules) {
        os << "    " << r.name << '(';
        for (size_t i = 0; i < r.params.size(); ++i) {
            if (i) os << ", ";
            os << r.params[i];
        }
        os << ") {\n";
        for (const auto& rc : r.receives) {
            os << "        receive(";
            print_expr(os, rc.amount, 0);
            os << ":T" << rc.token << ");\n";
        }
        if (r.require) {
            os << "        require(";
            print_expr(os, r.require, 0);
            os << ");\n";
        }
        for (size_t i = 0; i < r.effects.size(); ++i) {
            os << (i ? "            | " : "        ");
            print_stmt(os, r.effects[i]);
            os << (i + 1 == r.effects.size() ? ";\n" : "\n");
        }
        os << "    }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace hutxo::hurf
