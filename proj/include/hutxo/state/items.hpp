// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_STATE_ITEMS_HPP
#define HUTXO_STATE_ITEMS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../script.hpp"
#include "../tx.hpp"

namespace hutxo {

// Contract store as the interpreter sees it: named scalars plus named
// finite maps with tuple keys. Absent cells read as integer 0.
struct Store {
    std::map<std::string, BVal> vars;
    std::map<std::string, std::map<std::vector<BVal>, BVal>> maps;

    BVal var(const std::string& n) const {
        auto it = vars.find(n);
        return it == vars.end() ? BVal() : it->second;
    }
    BVal map_at(const std::string& m, const std::vector<BVal>& k) const {
        auto it = maps.find(m);
        if (it == maps.end()) return BVal();
        auto jt = it->second.find(k);
        return jt == it->second.end() ? BVal() : jt->second;
    }
};

// Preimages of state-cell keys.
inline std::string var_preimage(const std::string& name) { return "var_" + name; }
inline std::string map_preimage(const std::string& name, const std::vector<BVal>& idx) {
    return "map_" + name + "[" + bval_str(idx) + "]";
}

inline Hash512 state_key(const HashProvider& h, const std::string& preimage) {
    return h.hash(preimage);
}

// Key hash -> non-default value. The committed content of one contract.
using FlatState = std::map<Hash512, BVal>;

// Key hash -> new value (0 clears), strictly ascending by key.
using UpdateList = std::vector<std::pair<Hash512, BVal>>;

// One unit of committed contract state: either a key carrying a value, or
// an open interval certifying that every key strictly inside is default.
struct StateItem {
    enum Kind { Point, Interval } kind = Point;
    Hash512 lo{};  // point hash, or left endpoint
    Hash512 hi{};  // right endpoint (intervals only)
    BVal value;    // points only

    static StateItem point(const Hash512& h, BVal v) {
        return {Point, h, Hash512{}, std::move(v)};
    }
    static StateItem interval(const Hash512& a, const Hash512& b) {
        return {Interval, a, b, BVal()};
    }

    bool is_point() const { return kind == Point; }
    bool contains(const Hash512& h) const {
        return kind == Interval && lo < h && h < hi;
    }

    bool operator==(const StateItem&) const = default;
};

Output state_item_output(const StateItem& it);
std::optional<StateItem> state_item_of(const Output& o);

// Flattens a store into key-hash -> value, dropping defaults. Throws on a
// digest collision between two distinct live cells.
FlatState flatten_state(const Store& s, const HashProvider& h);

// 2n+1 alternating items covering the whole key space: interval, point,
// interval, ..., point, interval.
std::vector<StateItem> encode_state_outputs(const FlatState& flat);

// Inverse of encode: checks the items form an exact alternating partition
// of the key space and extracts the points. Throws on malformed input.
FlatState decode_state(std::vector<StateItem> items);

inline BVal lookup(const FlatState& flat, const Hash512& h) {
    auto it = flat.find(h);
    return it == flat.end() ? BVal() : it->second;
}

// Searchable form of one contract's live items: the points, and the open
// intervals keyed by left endpoint. Together they partition the key space.
struct StateIndex {
    std::map<Hash512, BVal> points;
    std::map<Hash512, Hash512> intervals; // left endpoint -> right endpoint

    static StateIndex from_items(const std::vector<StateItem>& items);

    // The live item covering h: the exact point, or the interval around a
    // default key. Throws if the index does not cover h.
    StateItem cover(const Hash512& h) const;
    // The interval ending exactly at the live point h.
    StateItem left_of(const Hash512& h) const;
    // The interval starting exactly at the live point h.
    StateItem right_of(const Hash512& h) const;
};

// The state items an update list consumes, in generation order, answered
// against the current committed state.
std::vector<StateItem> gen_inputs(const StateIndex& s, const UpdateList& u);

// The replacement items for consumed inputs under an update list; nullopt
// when the inputs do not fit the updates (the check is fail-closed, this is
// what the on-chain script recomputes).
std::optional<std::vector<StateItem>> gen_outputs(const std::vector<StateItem>& in,
                                                  const UpdateList& u);

} // namespace hutxo

#endif // HUTXO_STATE_ITEMS_HPP
