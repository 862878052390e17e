// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#ifndef HUTXO_SERIALIZE_HPP
#define HUTXO_SERIALIZE_HPP

#include <json.hpp>

#include "validator.hpp"

namespace hutxo {

using Json = nlohmann::json;

struct SerializeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON codec. Object keys are emitted sorted, 64-bit quantities travel as
// decimal strings, digests as hex; dump() of these values is canonical.
Json to_json(const BVal& b);
BVal bval_from_json(const Json& j);

Json to_json(const Datum& d);
Datum datum_from_json(const Json& j);

Json to_json(const Wallet& w);
Wallet wallet_from_json(const Json& j);

// Logic validators serialize as their rule index plus the canonical
// contract source; loading re-parses and re-checks the source (cached per
// distinct text, so a sequence with thousands of invocations checks once).
Json to_json(const Script& s);
Script script_from_json(const Json& j);

Json to_json(const Output& o);
Output output_from_json(const Json& j);

Json to_json(const Input& i);
Input input_from_json(const Json& j);

Json to_json(const Tx& t);
Tx tx_from_json(const Json& j);

// Canonical ledger serialization: current time plus every transaction.
// The digest is BLAKE2b-512 over those bytes; equal digests mean equal
// post-run chain states. The byte count is the space metric reported by
// the benchmarks.
std::string ledger_dump(const Ledger& l);
std::string ledger_digest_hex(const Ledger& l);
uint64_t ledger_bytes(const Ledger& l);

// A replayable workload: genesis outputs plus the event sequence.
struct SequenceFile {
    std::vector<Output> genesis;
    std::vector<SeqEvent> events;
};

std::string sequence_dump(const SequenceFile& f);
SequenceFile sequence_parse(const std::string& text);

void save_sequence_file(const std::string& path, const SequenceFile& f);
SequenceFile load_sequence_file(const std::string& path);

} // namespace hutxo

#endif // HUTXO_SERIALIZE_HPP
