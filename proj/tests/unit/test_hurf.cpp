// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <doctest.h>

#include "hutxo/bench.hpp"
#include "hutxo/hurf/interp.hpp"

using namespace hutxo;
using namespace hutxo::hurf;

namespace {

// Wraps an expression in a one-write rule so the full pipeline (lexer,
// parser, checker) sees it, then hands back the bare expression.
ExprPtr parse_expr(const std::string& e, const std::string& decls) {
    Contract c = parse_contract("contract X { var sink = 0; " + decls +
                                " t(p, q) { sink = " + e + "; } }");
    auto chk = check_contract(c);
    REQUIRE(chk->rules.size() == 1);
    REQUIRE(chk->rules[0].writes.size() == 1);
    return chk->rules[0].writes[0].value;
}

struct EvalFixture {
    Store store;
    std::map<std::string, BVal> params{{"p", BVal(3)}, {"q", BVal("Q")}};
    std::vector<std::string> signers{"alice", "bob"};
    Env env;

    EvalFixture() {
        store.vars["n"] = BVal(7);
        store.vars["s"] = BVal("abc");
        store.maps["m"][{BVal(1), BVal(2)}] = BVal("mv");
        env.params = &params;
        env.readVar = [this](const std::string& v) { return store.var(v); };
        env.readMap = [this](const std::string& m, const std::vector<BVal>& k) {
            return store.map_at(m, k);
        };
        env.signers = &signers;
        env.validFrom = 5;
        env.validTo = 99;
    }

    BVal ev(const std::string& src) {
        return eval_expr(
            parse_expr(src, "var n = 7; var s = \"abc\"; map m(arity=2);"), env);
    }
};

std::shared_ptr<const CheckedContract> compile(const std::string& src) {
    return check_contract(parse_contract(src));
}

} // namespace

TEST_CASE("pretty printing reaches a fixed point") {
    const std::string sources[] = {
        map_contract_source(),
        crowdfund_contract_source("pk_owner", 100, 10, 20),
        multisig_contract_source("pk_owner", 2),
        registry_contract_source(5),
        "contract Kitchen {\n"
        "  map m(arity=2);\n"
        "  var a = -4; var b = \"x\\\"y\\n\"; var c = true; var d;\n"
        "  // comment\n"
        "  go(p) {\n"
        "    receive(p + 1:T3);\n"
        "    require(if signedBy(b) then validFrom + 1 <= validTo else not c);\n"
        "    a = (p + 2) * 3 - -1 | m[hash(p), len(\"s\")] = substr(toStr(p, a), 0, 2)\n"
        "      | b.send(a % 2 + a / 2:T0);\n"
        "  }\n"
        "}\n",
    };
    for (const std::string& src : sources) {
        CAPTURE(src.substr(0, 30));
        std::string canon = pretty_print(parse_contract(src));
        CHECK(pretty_print(parse_contract(canon)) == canon);
        CHECK(compile(canon)->canon == canon);
    }
}

TEST_CASE("printer drops only redundant parentheses") {
    std::string d = "var a = 1; var b = 2; var c = 3;";
    CHECK(pretty_print(parse_expr("a + b * c", d)) == "a + b * c");
    CHECK(pretty_print(parse_expr("(a + b) * c", d)) == "(a + b) * c");
    CHECK(pretty_print(parse_expr("a - (b - c)", d)) == "a - (b - c)");
    CHECK(pretty_print(parse_expr("(a - b) - c", d)) == "a - b - c");
    CHECK(pretty_print(parse_expr("not (a == b)", d)) == "not (a == b)");
}

TEST_CASE("parse errors carry a line and reason") {
    auto bad = [](const std::string& src) {
        CHECK_THROWS_AS(parse_contract(src), ParseError);
    };
    bad("contract X { var a = 1 }");                    // missing semicolon
    bad("contract X { map m(arity=0); }");              // arity must be positive
    bad("contract X { map m(); }");                     // arity clause required
    bad("contract X { r() { receive(1:K0); } }");       // bad token name
    bad("contract X { r() { 1 = 2; } }");               // unassignable left side
    bad("contract X { var s = \"oops; }");              // unterminated string
    bad("contract X { var a = -\"s\"; }");              // negative non-integer
    bad("contract X { r() { require(signedBy()); } }"); // signedBy arity
    bad("contract X { r() { require(len(1, 2)); } }");  // len arity
    bad("contract X {} trailing");                      // trailing input
    bad("agreement X {}");                              // wrong keyword
}

TEST_CASE("token names map to token ids") {
    Contract c = parse_contract(
        "contract X { r() { receive(1:T); receive(1:T0); receive(1:T7); } }");
    REQUIRE(c.rules[0].receives.size() == 3);
    CHECK(c.rules[0].receives[0].token == 1); // bare T is the first token
    CHECK(c.rules[0].receives[1].token == 0); // T0 is the native token
    CHECK(c.rules[0].receives[2].token == 7);
}

TEST_CASE("static checking rejects malformed contracts") {
    auto bad = [](const std::string& src) {
        CHECK_THROWS_AS(check_contract(parse_contract(src)), CheckError);
    };
    bad("contract X { var a; var a; }");
    bad("contract X { var a; map a(arity=1); }");
    bad("contract X { map m(arity=1); map m(arity=2); }");
    bad("contract X { r() {} r() {} }");
    bad("contract X { r(p, p) {} }");
    bad("contract X { var v; r(v) {} }");                  // param shadows state
    bad("contract X { r() { require(ghost == 1); } }");    // unknown identifier
    bad("contract X { r() { require(m[1] == 1); } }");     // unknown map
    bad("contract X { map m(arity=2); r() { require(m[1] == 1); } }");
    bad("contract X { map m(arity=1); r() { m[1, 2] = 3; } }");
    bad("contract X { r() { ghost = 1; } }");              // undeclared variable
    bad("contract X { r() { m[1] = 1; } }");               // undeclared map
    bad("contract X { var a; r() { a = 1 | a = 2; } }");   // two values for one cell
}

TEST_CASE("identical duplicate writes collapse") {
    auto c = compile("contract X { var a; r(p) { a = p + 1 | a = p + 1; } }");
    CHECK(c->rules[0].writes.size() == 2); // syntactic list keeps both

    Configuration conf;
    conf.deposits["f"] = {"x", Wallet{}};
    uint64_t id = 0;
    REQUIRE(hurf_deploy(conf, c, {}, Wallet{}, {}, "f", id).ok);
    conf.deposits["f2"] = {"x", Wallet{}};
    Action a{id, "r", {BVal(4)}, {}, {}, "f2", {0, UINT64_MAX}};
    REQUIRE(hurf_step(conf, a, blake2b()).ok);
    CHECK(conf.instances.at(id).store.var("a") == BVal(5));
}

TEST_CASE("read and write sets are syntactic and collapsed") {
    auto c = compile(
        "contract X { map m(arity=1); var a; var b;"
        "  r(p) { require(a > 0 && m[p] == a); b = m[p] + m[1] | m[a] = b; } }");
    const CheckedRule& r = c->rules[0];

    // a, m[p], m[p] dup collapsed, m[1], b, m[a]'s index reads a (dup).
    REQUIRE(r.reads.size() == 4);
    CHECK(r.reads[0].var == "a");
    CHECK(r.reads[1].map == "m"); // m[p]
    CHECK(r.reads[2].map == "m"); // m[1]
    CHECK(r.reads[3].var == "b");

    REQUIRE(r.writes.size() == 2);
    CHECK(r.writes[0].ref.var == "b");
    CHECK(r.writes[1].ref.map == "m");
    CHECK(r.sends.empty());
}

TEST_CASE("ambiguous map writes get a distinctness guard") {
    auto c = compile(
        "contract X { map m(arity=1);"
        "  w(i, j) { m[i] = 1 | m[j] = 2; } }");

    Configuration conf;
    conf.deposits["f"] = {"x", Wallet{}};
    uint64_t id = 0;
    REQUIRE(hurf_deploy(conf, c, {}, Wallet{}, {}, "f", id).ok);

    conf.deposits["g"] = {"x", Wallet{}};
    Action clash{id, "w", {BVal(5), BVal(5)}, {}, {}, "g", {0, UINT64_MAX}};
    StepOutcome out = hurf_step(conf, clash, blake2b());
    CHECK(!out.ok); // the injected guard rejects i == j
    CHECK(conf.deposits.count("g") == 1);

    Action fine{id, "w", {BVal(5), BVal(6)}, {}, {}, "g", {0, UINT64_MAX}};
    REQUIRE(hurf_step(conf, fine, blake2b()).ok);
    CHECK(conf.instances.at(id).store.map_at("m", {BVal(5)}) == BVal(1));
    CHECK(conf.instances.at(id).store.map_at("m", {BVal(6)}) == BVal(2));

    // Identical right-hand sides need no guard even on equal indices.
    auto c2 = compile("contract X { map m(arity=1); w(i, j) { m[i] = 9 | m[j] = 9; } }");
    Configuration conf2;
    conf2.deposits["f"] = {"x", Wallet{}};
    REQUIRE(hurf_deploy(conf2, c2, {}, Wallet{}, {}, "f", id).ok);
    conf2.deposits["g"] = {"x", Wallet{}};
    Action same{id, "w", {BVal(3), BVal(3)}, {}, {}, "g", {0, UINT64_MAX}};
    REQUIRE(hurf_step(conf2, same, blake2b()).ok);
    CHECK(conf2.instances.at(id).store.map_at("m", {BVal(3)}) == BVal(9));
}

TEST_CASE("expression evaluation") {
    EvalFixture f;

    SUBCASE("arithmetic") {
        CHECK(f.ev("1 + 2 * 3") == BVal(7));
        CHECK(f.ev("(1 + 2) * 3") == BVal(9));
        CHECK(f.ev("10 / 3") == BVal(3));
        CHECK(f.ev("-10 / 3") == BVal(-3)); // division truncates toward zero
        CHECK(f.ev("10 % 3") == BVal(1));
        CHECK(f.ev("-10 % 3") == BVal(-1)); // remainder keeps the dividend sign
        CHECK(f.ev("- -5") == BVal(5));
        CHECK_THROWS_AS(f.ev("1 / 0"), EvalError);
        CHECK_THROWS_AS(f.ev("1 % 0"), EvalError);
        CHECK_THROWS_AS(f.ev("1 + \"a\""), EvalError);

        // Integers are unbounded: 2^100 round-trips through arithmetic.
        Int big = Int(1) << 100;
        CHECK(f.ev("(2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2) "
                   "* (2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2 * 2)") == BVal(big));
    }

    SUBCASE("strings and comparisons") {
        CHECK(f.ev("\"a\" @ \"b\"") == BVal("ab"));
        CHECK_THROWS_AS(f.ev("1 @ 2"), EvalError);
        CHECK(f.ev("2 < 3") == BVal(true));
        CHECK(f.ev("\"abc\" < \"abd\"") == BVal(true));
        CHECK(f.ev("\"b\" >= \"b\"") == BVal(true));
        CHECK_THROWS_AS(f.ev("\"a\" < 1"), EvalError);
        CHECK_THROWS_AS(f.ev("true < false"), EvalError);
        CHECK(f.ev("1 == 1") == BVal(true));
        CHECK(f.ev("1 == \"1\"") == BVal(false)); // equality never crosses types
        CHECK(f.ev("1 != true") == BVal(true));
    }

    SUBCASE("boolean connectives short-circuit") {
        CHECK(f.ev("false && 1 / 0 == 0") == BVal(false));
        CHECK(f.ev("true || 1 / 0 == 0") == BVal(true));
        CHECK(f.ev("not (1 == 2)") == BVal(true));
        CHECK_THROWS_AS(f.ev("not 5"), EvalError);
    }

    SUBCASE("conditionals evaluate one branch") {
        CHECK(f.ev("if 2 > 1 then \"yes\" else toStr(1 / 0)") == BVal("yes"));
        CHECK(f.ev("if 2 < 1 then toStr(1 / 0) else \"no\"") == BVal("no"));
        CHECK_THROWS_AS(f.ev("if 7 then 1 else 2"), EvalError);
    }

    SUBCASE("state and parameter access") {
        CHECK(f.ev("n + p") == BVal(10));
        CHECK(f.ev("q @ s") == BVal("Qabc"));
        CHECK(f.ev("m[1, 2]") == BVal("mv"));
        CHECK(f.ev("m[1, 3]") == BVal(0)); // absent cells read as the default
        CHECK(f.ev("m[p - 2, p - 1]") == BVal("mv"));
    }

    SUBCASE("built-in calls") {
        CHECK(f.ev("len(s)") == BVal(3));
        CHECK(f.ev("substr(s, 1, 2)") == BVal("bc"));
        CHECK(f.ev("substr(s, -5, 99)") == BVal("abc")); // clamped at both ends
        CHECK(f.ev("substr(s, 2, 0)") == BVal(""));
        CHECK(f.ev("toStr(p, s, true)") == BVal("3,abc,true"));
        CHECK_THROWS_AS(f.ev("len(5)"), EvalError);

        BVal h = f.ev("hash(p, s)");
        CHECK(h == BVal(hash_expr_hex(blake2b(), {BVal(3), BVal("abc")})));
        CHECK(h == BVal(hash_hex(blake2b().hash(encode_bvals({BVal(3), BVal("abc")})))));
    }

    SUBCASE("signers and validity bounds") {
        CHECK(f.ev("signedBy(\"alice\")") == BVal(true));
        CHECK(f.ev("signedBy(\"carol\")") == BVal(false));
        CHECK(f.ev("validFrom") == BVal(5));
        CHECK(f.ev("validTo") == BVal(99));
        CHECK(f.ev("validFrom + 1 <= validTo") == BVal(true));

        Env bare = f.env;
        bare.signers = nullptr;
        CHECK(eval_expr(parse_expr("signedBy(\"alice\")", ""), bare) == BVal(false));
    }
}

TEST_CASE("token amounts must fit a wallet slot") {
    CHECK(token_amount(BVal(5)) == 5);
    CHECK(token_amount(BVal(0)) == 0);
    CHECK(token_amount(BVal(Int(UINT64_MAX))) == UINT64_MAX);
    CHECK_THROWS_AS(token_amount(BVal(-1)), EvalError);
    CHECK_THROWS_AS(token_amount(BVal(Int(UINT64_MAX) + 1)), EvalError);
    CHECK_THROWS_AS(token_amount(BVal("5")), EvalError);
}

TEST_CASE("initial store drops defaults") {
    auto c = compile("contract X { var a = 0; var b = 1; var s = \"\"; }");
    Store s = initial_store(*c);
    CHECK(s.vars.count("a") == 0);
    CHECK(s.vars.at("b") == BVal(1));
    CHECK(s.vars.at("s") == BVal("")); // empty string is not the default
}

TEST_CASE("deployment consumes exact funding") {
    auto c = compile("contract X { var a = 1; }");
    Configuration conf;
    conf.deposits["fee"] = {"x", Wallet(NATIVE_TOKEN, 2)};
    conf.deposits["f1"] = {"x", Wallet(1, 30)};
    conf.deposits["f2"] = {"x", Wallet(1, 70)};

    uint64_t id = 0;
    SUBCASE("funding must sum exactly to the balance") {
        Wallet beta0(1, 100);
        CHECK(!hurf_deploy(conf, c, initial_store(*c), beta0, {"f1"}, "fee", id).ok);
        REQUIRE(hurf_deploy(conf, c, initial_store(*c), beta0, {"f1", "f2"}, "fee", id).ok);
        CHECK(conf.instances.at(id).balance == beta0);
        CHECK(conf.instances.at(id).store.var("a") == BVal(1));
        CHECK(conf.deposits.empty()); // funding and fee all consumed
    }
    SUBCASE("a deposit cannot fund twice") {
        CHECK(!hurf_deploy(conf, c, {}, Wallet(1, 60), {"f1", "f1"}, "fee", id).ok);
        CHECK(!hurf_deploy(conf, c, {}, Wallet(1, 30), {"f1"}, "f1", id).ok);
    }
    SUBCASE("the fee deposit must be native") {
        CHECK(!hurf_deploy(conf, c, {}, Wallet(1, 30), {"f1"}, "f2", id).ok);
    }
    SUBCASE("the initial store must match the declarations") {
        Store bad;
        bad.vars["ghost"] = BVal(1);
        CHECK(!hurf_deploy(conf, c, bad, Wallet{}, {}, "fee", id).ok);
        Store badMap;
        badMap.maps["m"][{BVal(1)}] = BVal(1);
        CHECK(!hurf_deploy(conf, c, badMap, Wallet{}, {}, "fee", id).ok);
    }
}

TEST_CASE("rule firing is transactional") {
    auto c = compile(
        "contract Pot { var x = 1; var y = 2; var owner = \"al\";"
        "  swap() { x = y | y = x; }"
        "  drain(k) { require(signedBy(owner) && validFrom >= 4); owner.send(k:T1); }"
        "  topup(k) { receive(k:T1); x = x + k; }"
        "  clear() { x = 0; } }");

    Configuration conf;
    conf.deposits["fee0"] = {"a", Wallet(NATIVE_TOKEN, 1)};
    conf.deposits["pot"] = {"a", Wallet(1, 10)};
    uint64_t id = 0;
    REQUIRE(hurf_deploy(conf, c, initial_store(*c), Wallet(1, 10), {"pot"}, "fee0", id).ok);
    Instance& inst = conf.instances.at(id);

    SUBCASE("writes land simultaneously") {
        conf.deposits["f"] = {"a", Wallet{}};
        Action a{id, "swap", {}, {}, {}, "f", {0, UINT64_MAX}};
        REQUIRE(hurf_step(conf, a, blake2b()).ok);
        CHECK(inst.store.var("x") == BVal(2));
        CHECK(inst.store.var("y") == BVal(1));
    }

    SUBCASE("failed preconditions leave everything untouched") {
        conf.deposits["f"] = {"a", Wallet{}};
        Action a{id, "drain", {BVal(5)}, {"wrong"}, {}, "f", {0, UINT64_MAX}};
        CHECK(!hurf_step(conf, a, blake2b()).ok); // not signed by the owner
        a.signers = {"al"};
        CHECK(!hurf_step(conf, a, blake2b()).ok); // validFrom below the bound
        CHECK(inst.balance == Wallet(1, 10));
        CHECK(conf.deposits.count("f") == 1);

        a.validity = {4, 20};
        conf.time = 3;
        CHECK(!hurf_step(conf, a, blake2b()).ok); // chain time outside validity
        conf.time = 4;
        REQUIRE(hurf_step(conf, a, blake2b()).ok);
        CHECK(inst.balance == Wallet(1, 5));
        CHECK(conf.deposits.count("f") == 0);
        // The payment shows up as a fresh deposit owned by the recipient.
        bool paid = false;
        for (const auto& [name, d] : conf.deposits)
            paid |= (d.owner == "al" && d.value == Wallet(1, 5));
        CHECK(paid);
    }

    SUBCASE("sends cannot overdraw the balance") {
        conf.deposits["f"] = {"a", Wallet{}};
        conf.time = 5;
        Action a{id, "drain", {BVal(11)}, {"al"}, {}, "f", {5, 20}};
        CHECK(!hurf_step(conf, a, blake2b()).ok);
        CHECK(inst.balance == Wallet(1, 10));
    }

    SUBCASE("receive deposits must match the evaluated amount exactly") {
        conf.deposits["f"] = {"a", Wallet{}};
        conf.deposits["in"] = {"a", Wallet(1, 4)};
        Action a{id, "topup", {BVal(5)}, {}, {"in"}, "f", {0, UINT64_MAX}};
        CHECK(!hurf_step(conf, a, blake2b()).ok); // 4 != 5
        a.params = {BVal(4)};
        REQUIRE(hurf_step(conf, a, blake2b()).ok);
        CHECK(inst.balance == Wallet(1, 14));
        CHECK(inst.store.var("x") == BVal(5));
        CHECK(conf.deposits.count("in") == 0);
    }

    SUBCASE("one deposit cannot serve two roles") {
        conf.deposits["f"] = {"a", Wallet{}};
        Action a{id, "topup", {BVal(0)}, {}, {"f"}, "f", {0, UINT64_MAX}};
        CHECK(!hurf_step(conf, a, blake2b()).ok);
    }

    SUBCASE("writing the default clears the cell") {
        conf.deposits["f"] = {"a", Wallet{}};
        Action a{id, "clear", {}, {}, {}, "f", {0, UINT64_MAX}};
        REQUIRE(hurf_step(conf, a, blake2b()).ok);
        CHECK(inst.store.vars.count("x") == 0);
    }

    SUBCASE("unknown action pieces fail cleanly") {
        conf.deposits["f"] = {"a", Wallet{}};
        Action a{id + 9, "swap", {}, {}, {}, "f", {0, UINT64_MAX}};
        CHECK(!hurf_step(conf, a, blake2b()).ok);
        a.instance = id;
        a.rule = "nope";
        CHECK(!hurf_step(conf, a, blake2b()).ok);
        a.rule = "swap";
        a.params = {BVal(1)};
        CHECK(!hurf_step(conf, a, blake2b()).ok); // wrong parameter count
        a.params = {};
        a.receiveDeposits = {"f"};
        CHECK(!hurf_step(conf, a, blake2b()).ok); // wrong receive count
        a.receiveDeposits = {};
        a.feeDeposit = "missing";
        CHECK(!hurf_step(conf, a, blake2b()).ok);
    }

    SUBCASE("evaluation errors reject the step") {
        auto c2 = compile("contract Y { var v; boom(k) { v = 1 / k; } }");
        Configuration conf2;
        conf2.deposits["fee"] = {"a", Wallet{}};
        uint64_t id2 = 0;
        REQUIRE(hurf_deploy(conf2, c2, {}, Wallet{}, {}, "fee", id2).ok);
        conf2.deposits["f"] = {"a", Wallet{}};
        Action a{id2, "boom", {BVal(0)}, {}, {}, "f", {0, UINT64_MAX}};
        CHECK(!hurf_step(conf2, a, blake2b()).ok);
        CHECK(conf2.deposits.count("f") == 1);
    }
}

TEST_CASE("map cells clear through the interpreter") {
    auto c = compile(
        "contract M { map m(arity=1);"
        "  set(k, v) { m[k] = v; } }");
    Configuration conf;
    conf.deposits["fee"] = {"a", Wallet{}};
    uint64_t id = 0;
    REQUIRE(hurf_deploy(conf, c, {}, Wallet{}, {}, "fee", id).ok);

    auto fire = [&](BVal k, BVal v) {
        std::string f = "d" + std::to_string(conf.nextDeposit);
        conf.deposits[f] = {"a", Wallet{}};
        Action a{id, "set", {k, v}, {}, {}, f, {0, UINT64_MAX}};
        return hurf_step(conf, a, blake2b()).ok;
    };

    REQUIRE(fire(BVal("k"), BVal(3)));
    CHECK(conf.instances.at(id).store.map_at("m", {BVal("k")}) == BVal(3));
    REQUIRE(fire(BVal("k"), BVal(0)));
    CHECK(conf.instances.at(id).store.maps.count("m") == 0); // empty map pruned
}
