// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_DATUM_HPP
#define HUTXO_DATUM_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bval.hpp"
#include "crypto.hpp"

namespace hutxo {

// Structured data carried by outputs (datum) and inputs (redeemer).
// Lists whose first element is a tag string encode the built-in shapes:
//   ["logic", ruleName]            contract logic output
//   ["non-default", h, v]          state point, key hash h, value v
//   ["default", h1, h2]            state interval (h1, h2), all-default inside
// Plain outputs (deposits, payments) carry the unit datum.
struct Datum {
    struct Unit {
        bool operator==(const Unit&) const = default;
    };
    using List = std::vector<Datum>;

    std::variant<Unit, BVal, Bytes, List> v;

    Datum() : v(Unit{}) {}
    Datum(BVal b) : v(std::move(b)) {}
    Datum(Bytes b) : v(std::move(b)) {}
    Datum(List l) : v(std::move(l)) {}
    Datum(const char* s) : v(BVal(s)) {}
    Datum(const Hash512& h) : v(Bytes(h.begin(), h.end())) {}

    bool is_unit() const { return std::holds_alternative<Unit>(v); }
    bool is_bval() const { return std::holds_alternative<BVal>(v); }
    bool is_bytes() const { return std::holds_alternative<Bytes>(v); }
    bool is_list() const { return std::holds_alternative<List>(v); }

    const BVal& bval() const { return std::get<BVal>(v); }
    const Bytes& bytes() const { return std::get<Bytes>(v); }
    const List& list() const { return std::get<List>(v); }

    // Tag of a tagged list, "" for anything else.
    std::string tag() const {
        if (!is_list()) return "";
        const List& l = list();
        if (l.empty() || !l[0].is_bval() || !l[0].bval().is_str()) return "";
        return l[0].bval().as_str();
    }

    Hash512 hash512() const {
        if (!is_bytes() || bytes().size() != 64) throw EvalError("datum: not a hash");
        Hash512 h;
        std::copy(bytes().begin(), bytes().end(), h.begin());
        return h;
    }

    bool operator==(const Datum& o) const { return v == o.v; }
    bool operator!=(const Datum& o) const { return !(v == o.v); }

    static Datum unit() { return Datum(); }
};

inline Datum datum_list(std::initializer_list<Datum> items) {
    return Datum(Datum::List(items));
}

inline void put_datum(Bytes& out, const Datum& d) {
    if (d.is_unit()) {
        out.push_back('u');
    } else if (d.is_bval()) {
        out.push_back('v');
        put_bval(out, d.bval());
    } else if (d.is_bytes()) {
        out.push_back('h');
        put_bytes(out, d.bytes());
    } else {
        out.push_back('l');
        put_u32be(out, uint32_t(d.list().size()));
        for (const auto& e : d.list()) put_datum(out, e);
    }
}

} // namespace hutxo

#endif // HUTXO_DATUM_HPP
