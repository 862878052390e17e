// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_BYTES_HPP
#define HUTXO_BYTES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hutxo {

using Bytes = std::vector<uint8_t>;

// Canonical byte encoding used everywhere hash preimages are built:
// unsigned integers are minimal big-endian with a one-byte length prefix,
// strings are raw UTF-8 with a u32 big-endian length prefix.

inline void put_u32be(Bytes& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

inline void put_uint(Bytes& out, uint64_t v) {
    uint8_t tmp[8];
    int n = 0;
    while (v > 0) {
        tmp[n++] = uint8_t(v & 0xff);
        v >>= 8;
    }
    out.push_back(uint8_t(n));
    for (int i = n - 1; i >= 0; --i) out.push_back(tmp[i]);
}

inline void put_str(Bytes& out, const std::string& s) {
    put_u32be(out, uint32_t(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

inline void put_bytes(Bytes& out, const Bytes& b) {
    put_u32be(out, uint32_t(b.size()));
    out.insert(out.end(), b.begin(), b.end());
}

inline std::string to_hex(const uint8_t* p, size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) {
        s.push_back(digits[p[i] >> 4]);
        s.push_back(digits[p[i] & 0xf]);
    }
    return s;
}

inline std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

inline Bytes from_hex(const std::string& s) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::runtime_error("bad hex digit");
    };
    if (s.size() % 2) throw std::runtime_error("odd hex length");
    Bytes out(s.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = uint8_t(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    return out;
}

} // namespace hutxo

#endif // HUTXO_BYTES_HPP
