// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/bench.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "hutxo/compiler.hpp"

namespace hutxo {

namespace {

constexpr const char* FEE_KEY = "pk_fees";
constexpr const char* OWNER = "pk_owner";
constexpr uint64_t FAR = 1000000000;

Output fee_output() {
    return Output{Wallet(NATIVE_TOKEN, 1), PkLock{FEE_KEY}, Datum::unit(), false};
}

Output deposit_output(const std::string& owner, TokenId t, uint64_t amt) {
    return Output{Wallet(t, amt), PkLock{owner}, Datum::unit(), false};
}

// Genesis deposits are all outputs of transaction 0, handed out in the
// order they were planned.
struct GenesisPlan {
    std::vector<Output> outs;

    OutputRef fee() {
        outs.push_back(fee_output());
        return {0, uint32_t(outs.size() - 1)};
    }
    OutputRef deposit(const std::string& owner, TokenId t, uint64_t amt) {
        outs.push_back(deposit_output(owner, t, amt));
        return {0, uint32_t(outs.size() - 1)};
    }
};

// Builds the event list by compiling against a private ledger; every
// transaction is validated before it is recorded, so replays accept all
// of them and generator bugs surface here, not in a benchmark run.
struct Driver {
    Ledger l;
    NodeView view;
    std::vector<SeqEvent> events;
    uint64_t sigs = 0;

    explicit Driver(std::vector<Output> genesis)
        : l(Ledger::genesis(std::move(genesis))) {}

    void push(Tx tx) {
        ValidationResult vr = validate_tx(l, tx);
        if (!vr.accepted)
            throw std::logic_error("generated transaction rejected (condition " +
                                   std::to_string(vr.failed) + "): " + vr.detail);
        sigs += tx.signers.size();
        apply_tx(l, tx);
        view.note_apply(tx, l.txs.size() - 1);
        events.push_back(SeqEvent::of(std::move(tx)));
    }

    void deploy(std::shared_ptr<const hurf::CheckedContract> c, const Store& sigma0,
                OutputRef feeRef, std::vector<std::string> signers,
                TimeInterval validity) {
        DeploySpec spec{feeRef, {}, std::move(signers), validity};
        push(compile_deploy(l, std::move(c), sigma0, Wallet{}, spec, view));
    }

    void invoke(InvokeSpec spec) { push(compile_invoke(l, view, spec)); }

    void tick(uint64_t t) {
        advance_time(l, t);
        events.push_back(SeqEvent::tick(t));
    }
};

// [0, 1) from the top 53 bits; engines are portable, distributions not.
double unit_real(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 seeded(uint64_t seed, uint64_t stream) {
    return std::mt19937_64(seed * 0x9e3779b97f4a7c15ull + stream);
}

} // namespace

std::string map_contract_source() {
    return "contract CounterMap {\n"
           "    map m(arity=1);\n"
           "    inc(i, v) {\n"
           "        m[i] = m[i] + v;\n"
           "    }\n"
           "}\n";
}

std::string crowdfund_contract_source(const std::string& owner, uint64_t goal,
                                      uint64_t deadline, uint64_t refundTime) {
    std::ostringstream os;
    os << "contract Crowdfund {\n"
       << "    map donated(arity=1);\n"
       << "    var owner = \"" << owner << "\";\n"
       << "    var goal = " << goal << ";\n"
       << "    var deadline = " << deadline << ";\n"
       << "    var refundTime = " << refundTime << ";\n"
       << "    donate(a, x) {\n"
       << "        receive(x:T1);\n"
       << "        require(x > 0);\n"
       << "        donated[a] = donated[a] + x;\n"
       << "    }\n"
       << "    withdraw(x) {\n"
       << "        require(signedBy(owner) && validFrom >= deadline"
          " && validTo < refundTime && x >= goal);\n"
       << "        owner.send(x:T1);\n"
       << "    }\n"
       << "    refund(a) {\n"
       << "        require(validFrom >= refundTime && donated[a] > 0);\n"
       << "        a.send(donated[a]:T1)\n"
       << "            | donated[a] = 0;\n"
       << "    }\n"
       << "}\n";
    return os.str();
}

std::string multisig_contract_source(const std::string& owner, size_t cosigners) {
    std::ostringstream os;
    os << "contract SharedWallet {\n"
       << "    map auth(arity=1);\n"
       << "    var owner = \"" << owner << "\";\n"
       << "    authorize(u) {\n"
       << "        require(signedBy(owner));\n"
       << "        auth[u] = 1;\n"
       << "    }\n"
       << "    deposit(x) {\n"
       << "        receive(x:T1);\n"
       << "    }\n"
       << "    withdraw(x, a";
    for (size_t k = 1; k <= cosigners; ++k) os << ", u" << k;
    os << ") {\n"
       << "        require(";
    for (size_t k = 1; k <= cosigners; ++k) {
        if (k > 1) os << " && ";
        os << "auth[u" << k << "] == 1 && signedBy(u" << k << ")";
    }
    os << ");\n"
       << "        a.send(x:T1);\n"
       << "    }\n"
       << "}\n";
    return os.str();
}

std::string registry_contract_source(uint64_t revealDelay) {
    std::ostringstream os;
    os << "contract NameRegistry {\n"
       << "    map claimed(arity=1);\n"
       << "    map committed(arity=1);\n"
       << "    var reveal = " << revealDelay << ";\n"
       << "    commit(hh) {\n"
       << "        committed[hh] = validTo;\n"
       << "    }\n"
       << "    claim(h, a) {\n"
       << "        require(committed[hash(h)] != 0 && signedBy(a));\n"
       << "        claimed[h] = a;\n"
       << "    }\n"
       << "    own(h, a) {\n"
       << "        require(claimed[h] == a && signedBy(a)"
          " && validFrom > committed[hash(h)] + reveal);\n"
       << "    }\n"
       << "}\n";
    return os.str();
}

Workload gen_map(uint64_t ops, double hotShare, uint64_t seed) {
    auto hotRng = seeded(seed, 1);
    auto valRng = seeded(seed, 2);

    struct Op {
        uint64_t idx, v;
    };
    std::vector<Op> plan;
    plan.reserve(ops);
    uint64_t fresh = 1;
    for (uint64_t k = 0; k < ops; ++k) {
        bool hot = unit_real(hotRng) < hotShare;
        plan.push_back({hot ? 0 : fresh++, 1 + valRng() % 9});
    }

    GenesisPlan g;
    OutputRef deployFee = g.fee();
    std::vector<OutputRef> opFee;
    opFee.reserve(ops);
    for (uint64_t k = 0; k < ops; ++k) opFee.push_back(g.fee());

    Driver d(g.outs);
    auto checked = hurf::check_contract(hurf::parse_contract(map_contract_source()));

    // Every index the run can touch starts out as a live point, so each
    // update rewrites one point and leaves the interval partition alone.
    Store sigma0;
    auto& m = sigma0.maps["m"];
    for (uint64_t i = 0; i <= ops; ++i) m[{BVal(i)}] = BVal(uint64_t(1));

    d.deploy(checked, sigma0, deployFee, {FEE_KEY}, {0, FAR});
    for (uint64_t k = 0; k < ops; ++k) {
        InvokeSpec spec;
        spec.rule = "inc";
        spec.params = {BVal(plan[k].idx), BVal(plan[k].v)};
        spec.signers = {FEE_KEY};
        spec.feeRef = opFee[k];
        spec.validity = {0, FAR};
        d.invoke(std::move(spec));
    }

    return {"map",   "distributed",       ops,     seed,
            g.outs,  std::move(d.events), d.sigs};
}

namespace {

Workload gen_crowdfund_distributed(uint64_t donors, uint64_t seed) {
    const uint64_t deadline = 10, refundTime = 20;
    GenesisPlan g;
    OutputRef deployFee = g.fee();
    struct DonorPlan {
        OutputRef donateFee, donation, refundFee;
    };
    std::vector<DonorPlan> dp(donors);
    for (uint64_t i = 0; i < donors; ++i) {
        dp[i].donateFee = g.fee();
        dp[i].donation = g.deposit("don" + std::to_string(i), 1, 1);
    }
    for (uint64_t i = 0; i < donors; ++i) dp[i].refundFee = g.fee();

    Driver d(g.outs);
    auto checked = hurf::check_contract(
        hurf::parse_contract(crowdfund_contract_source(OWNER, donors, deadline, refundTime)));
    d.deploy(checked, hurf::initial_store(*checked), deployFee, {FEE_KEY}, {0, FAR});

    for (uint64_t i = 0; i < donors; ++i) {
        std::string donor = "don" + std::to_string(i);
        InvokeSpec spec;
        spec.rule = "donate";
        spec.params = {BVal(donor), BVal(uint64_t(1))};
        spec.signers = {donor, FEE_KEY};
        spec.receiveRefs = {dp[i].donation};
        spec.feeRef = dp[i].donateFee;
        spec.validity = {0, deadline - 1};
        d.invoke(std::move(spec));
    }
    d.tick(refundTime);
    for (uint64_t i = 0; i < donors; ++i) {
        InvokeSpec spec;
        spec.rule = "refund";
        spec.params = {BVal("don" + std::to_string(i))};
        spec.signers = {FEE_KEY};
        spec.feeRef = dp[i].refundFee;
        spec.validity = {refundTime, FAR};
        d.invoke(std::move(spec));
    }

    return {"crowdfund", "distributed",       donors,  seed,
            g.outs,      std::move(d.events), d.sigs};
}

Workload gen_crowdfund_centralized(uint64_t donors, uint64_t seed) {
    const uint64_t withdrawTime = 10, refundTime = 20;
    CentralizedCrowdfund cf{OWNER, donors, withdrawTime, refundTime, 1};

    GenesisPlan g;
    OutputRef bootFee = g.fee();
    struct DonorPlan {
        OutputRef donateFee, donation, refundFee;
    };
    std::vector<DonorPlan> dp(donors);
    for (uint64_t i = 0; i < donors; ++i) {
        dp[i].donateFee = g.fee();
        dp[i].donation = g.deposit("don" + std::to_string(i), 1, 1);
    }
    for (uint64_t i = 0; i < donors; ++i) dp[i].refundFee = g.fee();

    Driver d(g.outs);
    std::map<std::string, uint64_t> book;
    Wallet held;
    OutputRef covRef;

    Tx boot;
    boot.in = {Input{bootFee, Datum::unit(), true}};
    boot.out = {Output{held, cf, crowdfund_book_datum(book), false}};
    boot.signers = {FEE_KEY};
    boot.validityTime = {0, FAR};
    boot.fee = 1;
    d.push(std::move(boot));
    covRef = {d.l.txs.size() - 1, 0};

    for (uint64_t i = 0; i < donors; ++i) {
        std::string donor = "don" + std::to_string(i);
        Tx t;
        t.in = {Input{covRef,
                      datum_list({Datum("donate"), Datum(BVal(donor)),
                                  Datum(BVal(uint64_t(1)))}),
                      true},
                Input{dp[i].donateFee, Datum::unit(), true},
                Input{dp[i].donation, Datum::unit(), true}};
        book[donor] += 1;
        held.add(cf.token, 1);
        t.out = {Output{held, cf, crowdfund_book_datum(book), false}};
        t.signers = {donor, FEE_KEY};
        t.validityTime = {0, withdrawTime - 1};
        t.fee = 1;
        d.push(std::move(t));
        covRef = {d.l.txs.size() - 1, 0};
    }

    d.tick(refundTime);
    for (uint64_t i = 0; i < donors; ++i) {
        std::string donor = "don" + std::to_string(i);
        Tx t;
        t.in = {Input{covRef, datum_list({Datum("refund"), Datum(BVal(donor))}), true},
                Input{dp[i].refundFee, Datum::unit(), true}};
        book.erase(donor);
        held -= Wallet(cf.token, 1);
        t.out = {Output{held, cf, crowdfund_book_datum(book), false},
                 Output{Wallet(cf.token, 1), PkLock{donor}, Datum::unit(), false}};
        t.signers = {FEE_KEY};
        t.validityTime = {refundTime, FAR};
        t.fee = 1;
        d.push(std::move(t));
        covRef = {d.l.txs.size() - 1, 0};
    }

    return {"crowdfund", "centralized",       donors,  seed,
            g.outs,      std::move(d.events), d.sigs};
}

} // namespace

Workload gen_crowdfund(uint64_t donors, uint64_t seed, bool centralized) {
    return centralized ? gen_crowdfund_centralized(donors, seed)
                       : gen_crowdfund_distributed(donors, seed);
}

Workload gen_multisig(uint64_t users, uint64_t ops, uint64_t seed) {
    if (users < 2 || users % 2) throw std::invalid_argument("users must be even, >= 2");
    const size_t K = users / 2;

    // Independent streams: operation types and amounts never depend on the
    // user count, so the only thing that varies with it is who signs.
    auto typeRng = seeded(seed, 11);
    auto amtRng = seeded(seed, 12);
    auto pickRng = seeded(seed, 13);

    struct Op {
        bool isDeposit;
        uint64_t x;
        size_t who = 0;                // depositor
        size_t recipient = 0;          // withdrawal payee
        std::vector<size_t> cosigners; // withdrawal approvers
    };
    std::vector<Op> plan;
    plan.reserve(ops);
    uint64_t balance = 0;
    std::vector<size_t> idx(users);
    for (size_t j = 0; j < users; ++j) idx[j] = j;
    for (uint64_t k = 0; k < ops; ++k) {
        bool coin = typeRng() & 1;
        Op op;
        op.isDeposit = balance == 0 ? true : coin;
        if (op.isDeposit) {
            op.x = 1 + amtRng() % 100;
            op.who = pickRng() % users;
            balance += op.x;
        } else {
            op.x = 1 + amtRng() % balance;
            op.recipient = pickRng() % users;
            for (size_t s = 0; s < K; ++s) {
                size_t j = s + pickRng() % (users - s);
                std::swap(idx[s], idx[j]);
            }
            op.cosigners.assign(idx.begin(), idx.begin() + K);
            balance -= op.x;
        }
        plan.push_back(std::move(op));
    }

    GenesisPlan g;
    OutputRef deployFee = g.fee();
    std::vector<OutputRef> authFee(users);
    for (size_t j = 0; j < users; ++j) authFee[j] = g.fee();
    std::vector<OutputRef> opFee(ops), opDep(ops);
    for (uint64_t k = 0; k < ops; ++k) {
        opFee[k] = g.fee();
        if (plan[k].isDeposit)
            opDep[k] = g.deposit("user" + std::to_string(plan[k].who), 1, plan[k].x);
    }

    Driver d(g.outs);
    auto checked = hurf::check_contract(
        hurf::parse_contract(multisig_contract_source(OWNER, K)));
    d.deploy(checked, hurf::initial_store(*checked), deployFee, {FEE_KEY}, {0, FAR});

    for (size_t j = 0; j < users; ++j) {
        InvokeSpec spec;
        spec.rule = "authorize";
        spec.params = {BVal("user" + std::to_string(j))};
        spec.signers = {OWNER, FEE_KEY};
        spec.feeRef = authFee[j];
        spec.validity = {0, FAR};
        d.invoke(std::move(spec));
    }

    for (uint64_t k = 0; k < ops; ++k) {
        const Op& op = plan[k];
        InvokeSpec spec;
        spec.feeRef = opFee[k];
        spec.validity = {0, FAR};
        if (op.isDeposit) {
            spec.rule = "deposit";
            spec.params = {BVal(op.x)};
            spec.signers = {"user" + std::to_string(op.who), FEE_KEY};
            spec.receiveRefs = {opDep[k]};
        } else {
            spec.rule = "withdraw";
            spec.params = {BVal(op.x), BVal("user" + std::to_string(op.recipient))};
            for (size_t u : op.cosigners) {
                std::string name = "user" + std::to_string(u);
                spec.params.push_back(BVal(name));
                spec.signers.push_back(name);
            }
            spec.signers.push_back(FEE_KEY);
        }
        d.invoke(std::move(spec));
    }

    return {"multisig", "distributed",       users,   seed,
            g.outs,     std::move(d.events), d.sigs};
}

Workload gen_registry(uint64_t names, uint64_t seed) {
    const uint64_t revealDelay = 5, commitTo = 10, ownFrom = 16;

    GenesisPlan g;
    OutputRef deployFee = g.fee();
    std::vector<OutputRef> commitFee(names), claimFee(names), ownFee(names);
    for (auto* v : {&commitFee, &claimFee, &ownFee})
        for (uint64_t i = 0; i < names; ++i) (*v)[i] = g.fee();

    Driver d(g.outs);
    auto checked = hurf::check_contract(
        hurf::parse_contract(registry_contract_source(revealDelay)));
    d.deploy(checked, hurf::initial_store(*checked), deployFee, {FEE_KEY}, {0, FAR});

    auto name_of = [](uint64_t i) { return "name" + std::to_string(i); };
    auto acct_of = [](uint64_t i) { return "acct" + std::to_string(i); };

    for (uint64_t i = 0; i < names; ++i) {
        InvokeSpec spec;
        spec.rule = "commit";
        spec.params = {BVal(hurf::hash_expr_hex(blake2b(), {BVal(name_of(i))}))};
        spec.signers = {FEE_KEY};
        spec.feeRef = commitFee[i];
        spec.validity = {0, commitTo};
        d.invoke(std::move(spec));
    }
    for (uint64_t i = 0; i < names; ++i) {
        InvokeSpec spec;
        spec.rule = "claim";
        spec.params = {BVal(name_of(i)), BVal(acct_of(i))};
        spec.signers = {acct_of(i), FEE_KEY};
        spec.feeRef = claimFee[i];
        spec.validity = {0, commitTo};
        d.invoke(std::move(spec));
    }
    d.tick(ownFrom);
    for (uint64_t i = 0; i < names; ++i) {
        InvokeSpec spec;
        spec.rule = "own";
        spec.params = {BVal(name_of(i)), BVal(acct_of(i))};
        spec.signers = {acct_of(i), FEE_KEY};
        spec.feeRef = ownFee[i];
        spec.validity = {ownFrom, FAR};
        d.invoke(std::move(spec));
    }

    return {"registry", "distributed",       names,   seed,
            g.outs,     std::move(d.events), d.sigs};
}

ExperimentResult run_workload(const Workload& w, size_t threads) {
    Ledger l = Ledger::genesis(w.genesis);
    RunReport r = threads == 0 ? validate_sequential(l, w.events)
                               : validate_parallel(l, w.events, threads);
    return {r, ledger_digest_hex(l), ledger_bytes(l)};
}

std::string csv_header() {
    return "benchmark,mode,size,threads,seed,rep,wall_ms,accepted,rejected,"
           "soft_conflict_pct,ledger_bytes,final_digest";
}

std::string csv_row(const Workload& w, size_t threads, uint64_t rep,
                    const ExperimentResult& r) {
    std::ostringstream os;
    os << w.benchmark << ',' << w.mode << ',' << w.size << ','
       << (threads ? std::to_string(threads) : "seq") << ',' << w.seed << ','
       << rep << ',' << std::fixed << std::setprecision(3) << r.report.wallMs
       << ',' << r.report.accepted << ',' << r.report.rejected << ','
       << std::setprecision(4) << r.report.softConflictPct() << ','
       << r.ledgerBytes << ',' << r.digest;
    return os.str();
}

} // namespace hutxo
