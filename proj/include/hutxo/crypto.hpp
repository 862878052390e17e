// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_CRYPTO_HPP
#define HUTXO_CRYPTO_HPP

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "bytes.hpp"

namespace hutxo {

// 512-bit digest. Comparison is lexicographic over big-endian bytes, which
// is exactly the numeric order of the digest read as one big number.
using Hash512 = std::array<uint8_t, 64>;

inline Hash512 hash_min() { Hash512 h{}; return h; }
inline Hash512 hash_max() { Hash512 h{}; h.fill(0xff); return h; }
inline bool is_zero_hash(const Hash512& h) { return h == hash_min(); }
inline std::string hash_hex(const Hash512& h) { return to_hex(h.data(), h.size()); }
Hash512 hash_from_hex(const std::string& s);

// Pluggable digest so tests can pin a chosen key order while production
// code uses BLAKE2b-512.
class HashProvider {
public:
    virtual ~HashProvider() = default;
    virtual Hash512 hash(const uint8_t* data, size_t len) const = 0;

    Hash512 hash(const Bytes& b) const { return hash(b.data(), b.size()); }
    Hash512 hash(const std::string& s) const {
        return hash(reinterpret_cast<const uint8_t*>(s.data()), s.size());
    }
};

class Blake2b512 final : public HashProvider {
public:
    using HashProvider::hash;
    Hash512 hash(const uint8_t* data, size_t len) const override;
};

// Deterministic test double: preimages registered in the table map to a
// digest whose leading byte encodes the requested rank, everything else
// falls back to BLAKE2b-512. Ranks must be in (0x00, 0xff).
class TableHash final : public HashProvider {
public:
    using HashProvider::hash;
    void set(const std::string& preimage, uint8_t rank);
    Hash512 hash(const uint8_t* data, size_t len) const override;

private:
    std::map<std::string, uint8_t> table_;
    Blake2b512 fallback_;
};

// Process-wide default provider (BLAKE2b-512).
const HashProvider& blake2b();

// Signature realism: validation verifies one fixed Ed25519 signature over a
// fixed message per required signer. The verify is real libsodium work; its
// result feeds a volatile sink so it cannot be hoisted or elided.
void fixed_ed25519_verify();

// Verified-signature counter (process-wide, thread-safe).
uint64_t sig_verify_count();
void reset_sig_verify_count();

} // namespace hutxo

#endif // HUTXO_CRYPTO_HPP
