// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_TX_HPP
#define HUTXO_TX_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "script.hpp"

namespace hutxo {

// Contract identifier: a digest; the all-zero digest means "no contract".
using CtrId = Hash512;

inline CtrId no_contract() { return hash_min(); }

struct TimeInterval {
    uint64_t from = 0;
    uint64_t to = UINT64_MAX;

    bool contains(uint64_t t) const { return from <= t && t <= to; }
    bool operator==(const TimeInterval&) const = default;
};

struct OutputRef {
    uint64_t txId = 0;
    uint32_t index = 0;

    bool operator==(const OutputRef&) const = default;
    auto operator<=>(const OutputRef&) const = default;
};

struct Input {
    OutputRef ref;
    Datum redeemer;
    bool spent = true; // false: read-only reference, the output stays live

    bool operator==(const Input&) const = default;
};

struct Output {
    Wallet value;
    Script validator;
    Datum datum;
    bool inContract = false;

    bool operator==(const Output&) const = default;
};

struct Tx {
    std::vector<Input> in;
    std::vector<Output> out;
    std::vector<std::string> signers;
    TimeInterval validityTime;
    uint64_t fee = 0;          // paid in the native token
    CtrId ctrId = no_contract();

    bool operator==(const Tx&) const = default;
};

inline Bytes encode_outref(const OutputRef& r) {
    Bytes b;
    put_uint(b, r.txId);
    put_uint(b, r.index);
    return b;
}

} // namespace hutxo

template <>
struct std::hash<hutxo::OutputRef> {
    size_t operator()(const hutxo::OutputRef& r) const noexcept {
        return std::hash<uint64_t>()(r.txId * 0x9e3779b97f4a7c15ull + r.index);
    }
};

#endif // HUTXO_TX_HPP
