// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_BVAL_HPP
#define HUTXO_BVAL_HPP

#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bytes.hpp"

namespace hutxo {

using Int = boost::multiprecision::cpp_int;

// Base contract value: bool, arbitrary-precision integer, or string.
// The default value of every state cell is integer 0.
struct BVal {
    std::variant<bool, Int, std::string> v;

    BVal() : v(Int(0)) {}
    BVal(bool b) : v(b) {}
    BVal(Int i) : v(std::move(i)) {}
    BVal(int i) : v(Int(i)) {}
    BVal(long long i) : v(Int(i)) {}
    BVal(uint64_t i) : v(Int(i)) {}
    BVal(std::string s) : v(std::move(s)) {}
    BVal(const char* s) : v(std::string(s)) {}

    bool is_bool() const { return std::holds_alternative<bool>(v); }
    bool is_int() const { return std::holds_alternative<Int>(v); }
    bool is_str() const { return std::holds_alternative<std::string>(v); }

    bool as_bool() const;
    const Int& as_int() const;
    const std::string& as_str() const;

    // Mixed-type equality is total and false across types, so injected
    // same-point guards can compare heterogeneous map indices.
    bool operator==(const BVal& o) const { return v == o.v; }
    bool operator!=(const BVal& o) const { return !(v == o.v); }
    bool operator<(const BVal& o) const { return v < o.v; }

    bool is_default() const { return is_int() && as_int() == 0; }
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool BVal::as_bool() const {
    if (!is_bool()) throw EvalError("expected bool");
    return std::get<bool>(v);
}
inline const Int& BVal::as_int() const {
    if (!is_int()) throw EvalError("expected int");
    return std::get<Int>(v);
}
inline const std::string& BVal::as_str() const {
    if (!is_str()) throw EvalError("expected string");
    return std::get<std::string>(v);
}

// Rendering shared by the toStr expression and map-key preimages. Multiple
// values joined with ','.
inline std::string bval_str(const BVal& b) {
    if (b.is_bool()) return b.as_bool() ? "true" : "false";
    if (b.is_int()) return b.as_int().str();
    return b.as_str();
}

inline std::string bval_str(const std::vector<BVal>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s.push_back(',');
        s += bval_str(vs[i]);
    }
    return s;
}

// Canonical bytes, fed to hash() and redeemer encoding. One tag byte, then
// the payload in the canonical integer/string encoding.
inline void put_bval(Bytes& out, const BVal& b) {
    if (b.is_bool()) {
        out.push_back('b');
        out.push_back(b.as_bool() ? 1 : 0);
    } else if (b.is_int()) {
        out.push_back('i');
        const Int& x = b.as_int();
        out.push_back(x < 0 ? 1 : 0);
        Int mag = x < 0 ? Int(-x) : x;
        Bytes m;
        boost::multiprecision::export_bits(mag, std::back_inserter(m), 8);
        if (mag == 0) m.clear();
        put_bytes(out, m);
    } else {
        out.push_back('s');
        put_str(out, b.as_str());
    }
}

inline Bytes encode_bvals(const std::vector<BVal>& vs) {
    Bytes out;
    put_u32be(out, uint32_t(vs.size()));
    for (const auto& b : vs) put_bval(out, b);
    return out;
}

} // namespace hutxo

#endif // HUTXO_BVAL_HPP
