// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_WALLET_HPP
#define HUTXO_WALLET_HPP

#include <cstdint>
#include <map>
#include <stdexcept>

namespace hutxo {

using TokenId = uint64_t;

inline constexpr TokenId NATIVE_TOKEN = 0; // fee token

// Finite map token -> positive amount. No zero entries are stored, so
// equality is structural.
struct Wallet {
    std::map<TokenId, uint64_t> amounts;

    Wallet() = default;
    Wallet(TokenId t, uint64_t n) {
        if (n) amounts[t] = n;
    }

    uint64_t get(TokenId t) const {
        auto it = amounts.find(t);
        return it == amounts.end() ? 0 : it->second;
    }

    void add(TokenId t, uint64_t n) {
        if (!n) return;
        uint64_t& slot = amounts[t];
        if (slot > UINT64_MAX - n) throw std::overflow_error("wallet overflow");
        slot += n;
    }

    Wallet& operator+=(const Wallet& o) {
        for (auto& [t, n] : o.amounts) add(t, n);
        return *this;
    }

    friend Wallet operator+(Wallet a, const Wallet& b) { return a += b; }

    // Pointwise subtraction; throws if it would go negative anywhere.
    Wallet& operator-=(const Wallet& o) {
        for (auto& [t, n] : o.amounts) {
            uint64_t have = get(t);
            if (have < n) throw std::underflow_error("wallet underflow");
            if (have == n) amounts.erase(t);
            else amounts[t] = have - n;
        }
        return *this;
    }

    friend Wallet operator-(Wallet a, const Wallet& b) { return a -= b; }

    // Pointwise >=.
    bool covers(const Wallet& o) const {
        for (auto& [t, n] : o.amounts)
            if (get(t) < n) return false;
        return true;
    }

    bool empty() const { return amounts.empty(); }
    bool operator==(const Wallet& o) const = default;
};

} // namespace hutxo

#endif // HUTXO_WALLET_HPP
