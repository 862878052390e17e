// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <algorithm>
#include <map>
#include <optional>

#include "hutxo/compiler.hpp"

namespace hutxo {

namespace {

bool signed_by(const Tx& tx, const std::string& key) {
    return std::find(tx.signers.begin(), tx.signers.end(), key) != tx.signers.end();
}

// Donor book of the centralized crowdfund: a list of [key, amount] pairs,
// sorted by key, amounts positive.
std::optional<std::map<std::string, uint64_t>> donors_of(const Datum& d) {
    if (!d.is_list() || !d.tag().empty()) return std::nullopt;
    std::map<std::string, uint64_t> m;
    std::string prev;
    for (const Datum& e : d.list()) {
        if (!e.is_list() || e.list().size() != 2) return std::nullopt;
        const Datum& kd = e.list()[0];
        const Datum& vd = e.list()[1];
        if (!kd.is_bval() || !kd.bval().is_str()) return std::nullopt;
        if (!vd.is_bval() || !vd.bval().is_int()) return std::nullopt;
        const std::string& key = kd.bval().as_str();
        if (!m.empty() && !(prev < key)) return std::nullopt;
        const Int& v = vd.bval().as_int();
        if (v <= 0 || v > Int(UINT64_MAX)) return std::nullopt;
        m[key] = v.convert_to<uint64_t>();
        prev = key;
    }
    return m;
}


// Covenant dispatch. The whole donor book lives in the datum, so every
// operation rewrites the single contract output in place.
bool check_covenant(const CentralizedCrowdfund& cf, const ScriptContext& ctx) {
    const Tx& tx = ctx.tx;
    if (ctx.self != 0 || tx.in.empty() || !tx.in[0].spent) return false;
    const Output& cur = *ctx.inputs[0];
    auto donors = donors_of(cur.datum);
    if (!donors) return false;

    const Datum& red = tx.in[0].redeemer;
    const std::string op = red.tag();
    auto arg_str = [&](size_t i) -> std::optional<std::string> {
        const auto& l = red.list();
        if (i >= l.size() || !l[i].is_bval() || !l[i].bval().is_str())
            return std::nullopt;
        return l[i].bval().as_str();
    };
    auto arg_amt = [&](size_t i) -> std::optional<uint64_t> {
        const auto& l = red.list();
        if (i >= l.size() || !l[i].is_bval() || !l[i].bval().is_int())
            return std::nullopt;
        const Int& v = l[i].bval().as_int();
        if (v <= 0 || v > Int(UINT64_MAX)) return std::nullopt;
        return v.convert_to<uint64_t>();
    };

    auto covenant_out = [&](const std::map<std::string, uint64_t>& book, Wallet value) {
        Output o;
        o.value = std::move(value);
        o.validator = cf;
        o.datum = crowdfund_book_datum(book);
        return o;
    };

    if (op == "donate") {
        // ["donate", donor, amount]: the third input contributes the
        // donation; the book and the held value grow by exactly that.
        if (red.list().size() != 3) return false;
        auto donor = arg_str(1);
        auto amt = arg_amt(2);
        if (!donor || !amt) return false;
        if (tx.in.size() != 3 || tx.out.size() != 1) return false;
        if (!tx.in[1].spent || !tx.in[2].spent) return false;
        if (ctx.inputs[1]->inContract || ctx.inputs[2]->inContract) return false;
        if (!(ctx.inputs[2]->value == Wallet(cf.token, *amt))) return false;
        auto book = *donors;
        uint64_t& slot = book[*donor];
        if (slot > UINT64_MAX - *amt) return false;
        slot += *amt;
        Wallet value = cur.value;
        value.add(cf.token, *amt);
        return tx.out[0] == covenant_out(book, std::move(value));
    }

    if (op == "withdraw") {
        // ["withdraw"]: after the deadline and before the refund window the
        // owner collects everything raised, provided the goal was met.
        if (red.list().size() != 1) return false;
        if (!signed_by(tx, cf.owner)) return false;
        if (tx.validityTime.from < cf.withdrawTime) return false;
        if (tx.validityTime.to >= cf.refundTime) return false;
        uint64_t total = cur.value.get(cf.token);
        if (total < cf.goal) return false;
        if (tx.in.size() != 2 || tx.out.size() != 2) return false;
        if (!tx.in[1].spent || ctx.inputs[1]->inContract) return false;
        Wallet value = cur.value;
        value -= Wallet(cf.token, total);
        if (!(tx.out[0] == covenant_out(*donors, std::move(value)))) return false;
        Output pay{Wallet(cf.token, total), PkLock{cf.owner}, Datum::unit(), false};
        return tx.out[1] == pay;
    }

    if (op == "refund") {
        // ["refund", donor]: once the refund window opens, the donor's
        // entry leaves the book and its amount goes back to the donor.
        if (red.list().size() != 2) return false;
        auto donor = arg_str(1);
        if (!donor) return false;
        if (tx.validityTime.from < cf.refundTime) return false;
        auto it = donors->find(*donor);
        if (it == donors->end()) return false;
        uint64_t amt = it->second;
        if (cur.value.get(cf.token) < amt) return false;
        if (tx.in.size() != 2 || tx.out.size() != 2) return false;
        if (!tx.in[1].spent || ctx.inputs[1]->inContract) return false;
        auto book = *donors;
        book.erase(*donor);
        Wallet value = cur.value;
        value -= Wallet(cf.token, amt);
        if (!(tx.out[0] == covenant_out(book, std::move(value)))) return false;
        Output pay{Wallet(cf.token, amt), PkLock{*donor}, Datum::unit(), false};
        return tx.out[1] == pay;
    }

    return false;
}

} // namespace

Datum crowdfund_book_datum(const std::map<std::string, uint64_t>& book) {
    Datum::List l;
    l.reserve(book.size());
    for (const auto& [key, amt] : book)
        l.push_back(datum_list({Datum(BVal(key)), Datum(BVal(amt))}));
    return Datum(std::move(l));
}

bool eval_script(const Script& s, const ScriptContext& ctx) {
    if (const auto* pk = std::get_if<PkLock>(&s))
        return signed_by(ctx.tx, pk->key);

    if (std::get_if<StateScript>(&s)) {
        // State outputs move only under the authority of a logic output
        // referenced in front, whose own script checks the whole update.
        if (ctx.tx.in.empty() || ctx.inputs.empty()) return false;
        const Output& first = *ctx.inputs[0];
        return first.inContract && first.datum.tag() == "logic";
    }

    if (const auto* ls = std::get_if<LogicScript>(&s))
        return ls->rule && check_rule_tx(*ls->rule, ctx);

    if (const auto* cf = std::get_if<CentralizedCrowdfund>(&s))
        return check_covenant(*cf, ctx);

    return false;
}

} // namespace hutxo
