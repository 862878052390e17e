// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/crypto.hpp"

#include <mutex>
#include <stdexcept>

#include <sodium.h>

namespace hutxo {

namespace {

void sodium_ready() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    });
}

std::atomic<uint64_t> g_sig_verifies{0};

struct FixedSig {
    uint8_t pk[crypto_sign_PUBLICKEYBYTES];
    uint8_t sig[crypto_sign_BYTES];
    uint8_t msg[32];
};

const FixedSig& fixed_sig() {
    static FixedSig f = [] {
        sodium_ready();
        FixedSig r{};
        uint8_t sk[crypto_sign_SECRETKEYBYTES];
        uint8_t seed[crypto_sign_SEEDBYTES] = {0x42};
        crypto_sign_seed_keypair(r.pk, sk, seed);
        for (size_t i = 0; i < sizeof(r.msg); ++i) r.msg[i] = uint8_t(i * 7 + 1);
        crypto_sign_detached(r.sig, nullptr, r.msg, sizeof(r.msg), sk);
        return r;
    }();
    return f;
}

} // namespace

Hash512 hash_from_hex(const std::string& s) {
    Bytes b = from_hex(s);
    if (b.size() != 64) throw std::runtime_error("hash hex must be 64 bytes");
    Hash512 h;
    std::copy(b.begin(), b.end(), h.begin());
    return h;
}

Hash512 Blake2b512::hash(const uint8_t* data, size_t len) const {
    sodium_ready();
    Hash512 out;
    crypto_generichash_blake2b(out.data(), out.size(), data, len, nullptr, 0);
    return out;
}

void TableHash::set(const std::string& preimage, uint8_t rank) {
    if (rank == 0x00 || rank == 0xff)
        throw std::runtime_error("table rank collides with key-space endpoint");
    table_[preimage] = rank;
}

Hash512 TableHash::hash(const uint8_t* data, size_t len) const {
    auto it = table_.find(std::string(reinterpret_cast<const char*>(data), len));
    if (it != table_.end()) {
        Hash512 h{};
        h[0] = it->second;
        return h;
    }
    Hash512 h = fallback_.hash(data, len);
    h[0] = 0xfe; // keep fallback digests clear of table ranks and endpoints
    if (h == hash_max()) h[1] = 0;
    return h;
}

const HashProvider& blake2b() {
    static Blake2b512 p;
    return p;
}

void fixed_ed25519_verify() {
    const FixedSig& f = fixed_sig();
    int rc = crypto_sign_verify_detached(f.sig, f.msg, sizeof(f.msg), f.pk);
    // Volatile sink keeps the verify observable work on every call.
    static volatile int sink;
    sink = rc;
    if (rc != 0) throw std::runtime_error("fixed signature verify failed");
    g_sig_verifies.fetch_add(1, std::memory_order_relaxed);
}

uint64_t sig_verify_count() { return g_sig_verifies.load(std::memory_order_relaxed); }
void reset_sig_verify_count() { g_sig_verifies.store(0, std::memory_order_relaxed); }

} // namespace hutxo
