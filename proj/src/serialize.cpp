// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/serialize.hpp"

#include <fstream>
#include <mutex>

#include "hutxo/compiler.hpp"
#include "hutxo/hurf/frontend.hpp"

namespace hutxo {

namespace {

std::string u64_str(uint64_t n) { return std::to_string(n); }

uint64_t u64_of(const Json& j) {
    if (!j.is_string()) throw SerializeError("expected decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.size() > 20) throw SerializeError("bad u64: " + s);
    uint64_t n = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw SerializeError("bad u64: " + s);
        uint64_t d = uint64_t(c - '0');
        if (n > (UINT64_MAX - d) / 10) throw SerializeError("u64 overflow: " + s);
        n = n * 10 + d;
    }
    return n;
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SerializeError(std::string("missing field ") + key);
    return *it;
}

// Checked-contract cache for logic validators: one parse+check per
// distinct canonical source per process.
std::shared_ptr<const hurf::CheckedContract> contract_of(const std::string& src) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const hurf::CheckedContract>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(src);
    if (it != cache.end()) return it->second;
    auto checked = hurf::check_contract(hurf::parse_contract(src));
    cache.emplace(src, checked);
    return checked;
}

} // namespace

Json to_json(const BVal& b) {
    Json j;
    if (b.is_bool()) {
        j["k"] = "b";
        j["v"] = b.as_bool();
    } else if (b.is_int()) {
        j["k"] = "i";
        j["v"] = b.as_int().str();
    } else {
        j["k"] = "s";
        j["v"] = b.as_str();
    }
    return j;
}

BVal bval_from_json(const Json& j) {
    const std::string k = field(j, "k").get<std::string>();
    const Json& v = field(j, "v");
    if (k == "b") return BVal(v.get<bool>());
    if (k == "i") return BVal(Int(v.get<std::string>()));
    if (k == "s") return BVal(v.get<std::string>());
    throw SerializeError("bad value kind: " + k);
}

Json to_json(const Datum& d) {
    Json j;
    if (d.is_unit()) {
        j["t"] = "unit";
    } else if (d.is_bval()) {
        j["t"] = "val";
        j["v"] = to_json(d.bval());
    } else if (d.is_bytes()) {
        j["t"] = "bytes";
        j["v"] = to_hex(d.bytes().data(), d.bytes().size());
    } else {
        j["t"] = "list";
        Json arr = Json::array();
        for (const auto& e : d.list()) arr.push_back(to_json(e));
        j["v"] = std::move(arr);
    }
    return j;
}

Datum datum_from_json(const Json& j) {
    const std::string t = field(j, "t").get<std::string>();
    if (t == "unit") return Datum::unit();
    if (t == "val") return Datum(bval_from_json(field(j, "v")));
    if (t == "bytes") return Datum(from_hex(field(j, "v").get<std::string>()));
    if (t == "list") {
        Datum::List l;
        for (const auto& e : field(j, "v")) l.push_back(datum_from_json(e));
        return Datum(std::move(l));
    }
    throw SerializeError("bad datum type: " + t);
}

Json to_json(const Wallet& w) {
    Json j = Json::object();
    for (const auto& [t, n] : w.amounts) j[u64_str(t)] = u64_str(n);
    return j;
}

Wallet wallet_from_json(const Json& j) {
    Wallet w;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Json key = it.key();
        w.add(u64_of(key), u64_of(it.value()));
    }
    return w;
}

Json to_json(const Script& s) {
    Json j;
    if (const auto* pk = std::get_if<PkLock>(&s)) {
        j["type"] = "pklock";
        j["key"] = pk->key;
    } else if (std::holds_alternative<StateScript>(s)) {
        j["type"] = "state";
    } else if (const auto* lg = std::get_if<LogicScript>(&s)) {
        j["type"] = "logic";
        j["rule"] = lg->rule->ruleIndex;
        j["src"] = lg->rule->contract->canon;
    } else {
        const auto& cf = std::get<CentralizedCrowdfund>(s);
        j["type"] = "crowdfund";
        j["owner"] = cf.owner;
        j["goal"] = u64_str(cf.goal);
        j["withdrawTime"] = u64_str(cf.withdrawTime);
        j["refundTime"] = u64_str(cf.refundTime);
        j["token"] = u64_str(cf.token);
    }
    return j;
}

Script script_from_json(const Json& j) {
    const std::string t = field(j, "type").get<std::string>();
    if (t == "pklock") return PkLock{field(j, "key").get<std::string>()};
    if (t == "state") return StateScript{};
    if (t == "logic") {
        auto checked = contract_of(field(j, "src").get<std::string>());
        size_t idx = field(j, "rule").get<size_t>();
        if (idx >= checked->rules.size()) throw SerializeError("rule index out of range");
        return LogicScript{std::make_shared<CompiledRule>(CompiledRule{checked, idx})};
    }
    if (t == "crowdfund") {
        CentralizedCrowdfund cf;
        cf.owner = field(j, "owner").get<std::string>();
        cf.goal = u64_of(field(j, "goal"));
        cf.withdrawTime = u64_of(field(j, "withdrawTime"));
        cf.refundTime = u64_of(field(j, "refundTime"));
        cf.token = u64_of(field(j, "token"));
        return cf;
    }
    throw SerializeError("bad script type: " + t);
}

Json to_json(const Output& o) {
    Json j;
    j["value"] = to_json(o.value);
    j["validator"] = to_json(o.validator);
    j["datum"] = to_json(o.datum);
    j["inContract"] = o.inContract;
    return j;
}

Output output_from_json(const Json& j) {
    Output o;
    o.value = wallet_from_json(field(j, "value"));
    o.validator = script_from_json(field(j, "validator"));
    o.datum = datum_from_json(field(j, "datum"));
    o.inContract = field(j, "inContract").get<bool>();
    return o;
}

Json to_json(const Input& i) {
    Json j;
    j["tx"] = i.ref.txId;
    j["ix"] = i.ref.index;
    j["redeemer"] = to_json(i.redeemer);
    j["spent"] = i.spent;
    return j;
}

Input input_from_json(const Json& j) {
    Input i;
    i.ref.txId = field(j, "tx").get<uint64_t>();
    i.ref.index = field(j, "ix").get<uint32_t>();
    i.redeemer = datum_from_json(field(j, "redeemer"));
    i.spent = field(j, "spent").get<bool>();
    return i;
}

Json to_json(const Tx& t) {
    Json j;
    Json in = Json::array();
    for (const auto& i : t.in) in.push_back(to_json(i));
    Json out = Json::array();
    for (const auto& o : t.out) out.push_back(to_json(o));
    j["in"] = std::move(in);
    j["out"] = std::move(out);
    j["signers"] = t.signers;
    j["validFrom"] = u64_str(t.validityTime.from);
    j["validTo"] = u64_str(t.validityTime.to);
    j["fee"] = u64_str(t.fee);
    j["ctrId"] = hash_hex(t.ctrId);
    return j;
}

Tx tx_from_json(const Json& j) {
    Tx t;
    for (const auto& e : field(j, "in")) t.in.push_back(input_from_json(e));
    for (const auto& e : field(j, "out")) t.out.push_back(output_from_json(e));
    t.signers = field(j, "signers").get<std::vector<std::string>>();
    t.validityTime.from = u64_of(field(j, "validFrom"));
    t.validityTime.to = u64_of(field(j, "validTo"));
    t.fee = u64_of(field(j, "fee"));
    t.ctrId = hash_from_hex(field(j, "ctrId").get<std::string>());
    return t;
}

// Serialized transaction by transaction: a tree for the whole ledger can
// dwarf the ledger itself when datums are large.
std::string ledger_dump(const Ledger& l) {
    std::string s = "{\"time\":" + Json(u64_str(l.time)).dump() + ",\"txs\":[";
    bool first = true;
    for (const auto& t : l.txs) {
        if (!first) s += ',';
        first = false;
        s += to_json(t).dump();
    }
    s += "]}";
    return s;
}

std::string ledger_digest_hex(const Ledger& l) {
    return hash_hex(blake2b().hash(ledger_dump(l)));
}

uint64_t ledger_bytes(const Ledger& l) { return ledger_dump(l).size(); }

std::string sequence_dump(const SequenceFile& f) {
    Json j;
    Json gen = Json::array();
    for (const auto& o : f.genesis) gen.push_back(to_json(o));
    Json ev = Json::array();
    for (const auto& e : f.events) {
        Json je;
        if (e.kind == SeqEvent::TICK) {
            je["type"] = "tick";
            je["time"] = u64_str(e.time);
        } else {
            je["type"] = "tx";
            je["tx"] = to_json(e.tx);
        }
        ev.push_back(std::move(je));
    }
    j["genesis"] = std::move(gen);
    j["events"] = std::move(ev);
    return j.dump(1);
}

SequenceFile sequence_parse(const std::string& text) {
    Json j = Json::parse(text);
    SequenceFile f;
    for (const auto& e : field(j, "genesis")) f.genesis.push_back(output_from_json(e));
    for (const auto& e : field(j, "events")) {
        const std::string t = field(e, "type").get<std::string>();
        if (t == "tick") {
            f.events.push_back(SeqEvent::tick(u64_of(field(e, "time"))));
        } else if (t == "tx") {
            f.events.push_back(SeqEvent::of(tx_from_json(field(e, "tx"))));
        } else {
            throw SerializeError("bad event type: " + t);
        }
    }
    return f;
}

void save_sequence_file(const std::string& path, const SequenceFile& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SerializeError("cannot write " + path);
    out << sequence_dump(f);
    if (!out) throw SerializeError("write failed: " + path);
}

SequenceFile load_sequence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SerializeError("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return sequence_parse(text);
}

} // namespace hutxo
