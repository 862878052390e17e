// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/state/items.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hutxo {

Output state_item_output(const StateItem& it) {
    Output o;
    o.value = Wallet{};
    o.validator = StateScript{};
    o.inContract = true;
    if (it.is_point())
        o.datum = datum_list({Datum("non-default"), Datum(it.lo), Datum(it.value)});
    else
        o.datum = datum_list({Datum("default"), Datum(it.lo), Datum(it.hi)});
    return o;
}

std::optional<StateItem> state_item_of(const Output& o) {
    if (!o.inContract || !std::holds_alternative<StateScript>(o.validator)) return std::nullopt;
    if (!o.value.empty()) return std::nullopt;
    const std::string tag = o.datum.tag();
    const auto& l = o.datum.is_list() ? o.datum.list() : Datum::List{};
    try {
        if (tag == "non-default" && l.size() == 3 && l[2].is_bval())
            return StateItem::point(l[1].hash512(), l[2].bval());
        if (tag == "default" && l.size() == 3)
            return StateItem::interval(l[1].hash512(), l[2].hash512());
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

FlatState flatten_state(const Store& s, const HashProvider& h) {
    FlatState flat;
    auto insert = [&](const std::string& preimage, const BVal& v) {
        if (v.is_default()) return;
        Hash512 k = state_key(h, preimage);
        if (k == hash_min() || k == hash_max())
            throw std::runtime_error("state key hit key-space endpoint: " + preimage);
        if (!flat.emplace(k, v).second)
            throw std::runtime_error("state key collision: " + preimage);
    };
    for (const auto& [name, v] : s.vars) insert(var_preimage(name), v);
    for (const auto& [name, entries] : s.maps)
        for (const auto& [idx, v] : entries) insert(map_preimage(name, idx), v);
    return flat;
}

std::vector<StateItem> encode_state_outputs(const FlatState& flat) {
    std::vector<StateItem> items;
    items.reserve(2 * flat.size() + 1);
    Hash512 prev = hash_min();
    for (const auto& [h, v] : flat) {
        items.push_back(StateItem::interval(prev, h));
        items.push_back(StateItem::point(h, v));
        prev = h;
    }
    items.push_back(StateItem::interval(prev, hash_max()));
    return items;
}

FlatState decode_state(std::vector<StateItem> items) {
    std::sort(items.begin(), items.end(), [](const StateItem& a, const StateItem& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.is_point() && !b.is_point();
    });
    if (items.empty() || items.size() % 2 == 0)
        throw std::runtime_error("decode: wrong item count");
    FlatState flat;
    Hash512 edge = hash_min();
    for (size_t i = 0; i < items.size(); ++i) {
        const StateItem& it = items[i];
        if (i % 2 == 0) {
            if (it.is_point() || it.lo != edge || !(it.lo < it.hi))
                throw std::runtime_error("decode: broken interval chain");
            edge = it.hi;
        } else {
            if (!it.is_point() || it.lo != edge)
                throw std::runtime_error("decode: point off the interval chain");
            if (it.value.is_default())
                throw std::runtime_error("decode: default value stored as a point");
            flat[it.lo] = it.value;
        }
    }
    if (edge != hash_max()) throw std::runtime_error("decode: key space not closed");
    return flat;
}

StateIndex StateIndex::from_items(const std::vector<StateItem>& items) {
    StateIndex s;
    for (const auto& it : items) {
        if (it.is_point()) s.points[it.lo] = it.value;
        else s.intervals[it.lo] = it.hi;
    }
    return s;
}

StateItem StateIndex::cover(const Hash512& h) const {
    auto p = points.find(h);
    if (p != points.end()) return StateItem::point(h, p->second);
    auto it = intervals.upper_bound(h);
    if (it == intervals.begin()) throw std::runtime_error("state index: uncovered key");
    --it;
    if (!(it->first < h && h < it->second))
        throw std::runtime_error("state index: uncovered key");
    return StateItem::interval(it->first, it->second);
}

StateItem StateIndex::left_of(const Hash512& h) const {
    auto it = intervals.lower_bound(h);
    if (it == intervals.begin()) throw std::runtime_error("state index: no left interval");
    --it;
    if (it->second != h) throw std::runtime_error("state index: no left interval");
    return StateItem::interval(it->first, it->second);
}

StateItem StateIndex::right_of(const Hash512& h) const {
    auto it = intervals.find(h);
    if (it == intervals.end()) throw std::runtime_error("state index: no right interval");
    return StateItem::interval(it->first, it->second);
}

std::vector<StateItem> gen_inputs(const StateIndex& s, const UpdateList& u) {
    std::vector<StateItem> in;
    auto append = [&](const StateItem& it) {
        // Updates are sorted, so a repeat can only be the last item appended.
        if (!in.empty() && in.back() == it) return;
        in.push_back(it);
    };
    for (const auto& [h, v] : u) {
        StateItem site = s.cover(h);
        if (site.is_point()) {
            if (v.is_default()) {
                // Clearing a live key: consume its neighbourhood for a merge.
                append(s.left_of(h));
                append(site);
                append(s.right_of(h));
            } else {
                append(site);
            }
        } else {
            // Default key: consume the interval around it. A later update in
            // the same interval reuses the already appended copy.
            append(site);
        }
    }
    return in;
}

std::optional<std::vector<StateItem>> gen_outputs(const std::vector<StateItem>& in,
                                                  const UpdateList& u) {
    std::deque<StateItem> work(in.begin(), in.end());
    std::vector<StateItem> out;
    size_t j = 0;
    bool resuming = false; // between updates: the head interval may be done

    while (true) {
        if (resuming) {
            if (j == u.size()) {
                if (work.empty()) return out;
                if (work.size() == 1 && !work[0].is_point()) {
                    out.push_back(work[0]);
                    return out;
                }
                return std::nullopt;
            }
            if (work.empty() || work.front().is_point()) return std::nullopt;
            const auto& [h, v] = u[j];
            const StateItem& head = work.front();
            // The head interval is finished once the next update lies beyond
            // it; an update at its right endpoint still needs it in the
            // stream when that endpoint is being cleared (merge).
            if (head.hi < h || (head.hi == h && !v.is_default())) {
                out.push_back(head);
                work.pop_front();
            }
            resuming = false;
            continue;
        }

        if (j == u.size()) {
            if (work.empty()) return out;
            return std::nullopt;
        }
        if (work.empty()) return std::nullopt;

        const auto& [h, v] = u[j];
        const StateItem head = work.front();

        if (head.contains(h)) {
            if (v.is_default()) {
                // Default stays default: the interval survives untouched.
                ++j;
                resuming = true;
            } else {
                // Split: carve the new point out of the interval.
                out.push_back(StateItem::interval(head.lo, h));
                out.push_back(StateItem::point(h, v));
                work.front() = StateItem::interval(h, head.hi);
                ++j;
                resuming = true;
            }
            continue;
        }
        if (head.is_point() && head.lo == h && !v.is_default()) {
            // Rewrite a live key in place.
            out.push_back(StateItem::point(h, v));
            work.pop_front();
            ++j;
            continue;
        }
        if (!head.is_point() && work.size() >= 3 && head.hi == h && v.is_default() &&
            work[1].is_point() && work[1].lo == h && !work[2].is_point() &&
            work[2].lo == h) {
            // Merge: the cleared point and both neighbours fuse.
            Hash512 right = work[2].hi;
            work.pop_front();
            work.pop_front();
            work.pop_front();
            work.push_front(StateItem::interval(head.lo, right));
            ++j;
            resuming = true;
            continue;
        }
        return std::nullopt;
    }
}

} // namespace hutxo
