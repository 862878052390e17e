// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "hutxo/validator.hpp"

#include <chrono>

#include "hutxo/crypto.hpp"
#include "hutxo/script.hpp"

namespace hutxo {

namespace {

// Per-token amount the transaction draws from its contract account:
// positive part of outputs + fee - resolvable spent inputs. Unresolvable
// inputs contribute nothing; such a transaction fails validation anyway,
// the draw only has to be a safe upper bound for admission.
std::map<TokenId, uint64_t> account_draw(const Ledger& l, const Tx& tx) {
    std::map<TokenId, unsigned __int128> need;
    for (const auto& o : tx.out)
        for (const auto& [t, n] : o.value.amounts) need[t] += n;
    need[NATIVE_TOKEN] += tx.fee;
    for (const auto& in : tx.in) {
        if (!in.spent) continue;
        const Output* o = l.resolve(in.ref);
        if (!o) continue;
        for (const auto& [t, n] : o->value.amounts) {
            auto it = need.find(t);
            if (it == need.end()) continue;
            it->second = it->second > n ? it->second - n : 0;
        }
    }
    std::map<TokenId, uint64_t> draw;
    for (const auto& [t, n] : need)
        if (n) draw[t] = n > UINT64_MAX ? UINT64_MAX : uint64_t(n);
    return draw;
}

uint64_t unfrozen(const Ledger& l, const BatchState& b, const CtrId& id,
                  TokenId t) {
    uint64_t have = l.account(id).get(t);
    auto it = b.frozen.find(id);
    uint64_t cold = it == b.frozen.end() ? 0 : it->second.get(t);
    return have > cold ? have - cold : 0;
}

} // namespace

bool conflicts_with(const Ledger& l, const BatchState& b, const Tx& tx) {
    for (const auto& in : tx.in) {
        if (in.ref.txId >= b.baseSize) return true; // created inside the batch
        if (in.spent) {
            if (b.spent.count(in.ref) || b.read.count(in.ref)) return true;
        } else {
            if (b.spent.count(in.ref)) return true;
        }
    }
    if (tx.ctrId != no_contract()) {
        for (const auto& [t, n] : account_draw(l, tx))
            if (n > unfrozen(l, b, tx.ctrId, t)) return true;
    }
    return false;
}

void admit(const Ledger& l, BatchState& b, const Tx& tx) {
    for (const auto& in : tx.in)
        (in.spent ? b.spent : b.read).insert(in.ref);
    if (tx.ctrId != no_contract()) {
        Wallet& cold = b.frozen[tx.ctrId];
        for (const auto& [t, n] : account_draw(l, tx))
            cold.add(t, std::min(n, unfrozen(l, b, tx.ctrId, t)));
    }
}

RunReport validate_sequential(Ledger& l, const std::vector<SeqEvent>& events) {
    RunReport r;
    uint64_t sig0 = sig_verify_count();
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& ev : events) {
        if (ev.kind == SeqEvent::TICK) {
            advance_time(l, ev.time);
            continue;
        }
        ++r.txCount;
        if (validate_tx(l, ev.tx).accepted) {
            apply_tx(l, ev.tx);
            ++r.accepted;
        } else {
            ++r.rejected;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.wallMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.sigVerifies = sig_verify_count() - sig0;
    return r;
}

RunReport validate_parallel(Ledger& l, const std::vector<SeqEvent>& events,
                            size_t threads) {
    RunReport r;
    uint64_t sig0 = sig_verify_count();
    ValidationPool pool(threads);
    std::vector<const Tx*> span;
    std::vector<ValidationResult> verdicts;
    auto t0 = std::chrono::steady_clock::now();

    size_t i = 0;
    const size_t n = events.size();
    while (i < n) {
        if (events[i].kind == SeqEvent::TICK) {
            advance_time(l, events[i].time);
            ++i;
            continue;
        }

        // Form the longest conflict-free prefix. The first transaction is
        // always admitted: sequential validation gets to judge it too, so
        // a doomed head cannot stall progress or change the outcome.
        BatchState b;
        b.baseSize = l.txs.size();
        size_t j = i;
        admit(l, b, events[j].tx);
        ++j;
        while (j < n && events[j].kind == SeqEvent::TX &&
               !conflicts_with(l, b, events[j].tx)) {
            admit(l, b, events[j].tx);
            ++j;
        }
        if (j < n && events[j].kind == SeqEvent::TX) ++r.softConflicts;

        size_t len = j - i;
        span.resize(len);
        verdicts.assign(len, ValidationResult{});
        for (size_t k = 0; k < len; ++k) span[k] = &events[i + k].tx;
        pool.run(l, span.data(), len, verdicts.data());

        // Commit in sequence order; workers judged against the pre-batch
        // snapshot, admission guarantees the verdicts carry over.
        for (size_t k = 0; k < len; ++k) {
            ++r.txCount;
            if (verdicts[k].accepted) {
                apply_tx(l, events[i + k].tx);
                ++r.accepted;
            } else {
                ++r.rejected;
            }
        }
        ++r.batches;
        i = j;
    }

    auto t1 = std::chrono::steady_clock::now();
    r.wallMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.sigVerifies = sig_verify_count() - sig0;
    return r;
}

ValidationPool::ValidationPool(size_t threads) {
    size_t extra = threads > 1 ? threads - 1 : 0;
    workers.reserve(extra);
    for (size_t w = 0; w < extra; ++w) {
        workers.emplace_back([this] {
            uint64_t seen = 0;
            std::unique_lock<std::mutex> lk(mu);
            for (;;) {
                wake.wait(lk, [&] { return stopping || generation != seen; });
                if (stopping) return;
                seen = generation;
                ++active;
                lk.unlock();
                work();
                lk.lock();
                --active;
                done.notify_all();
            }
        });
    }
}

ValidationPool::~ValidationPool() {
    {
        std::lock_guard<std::mutex> lk(mu);
        stopping = true;
    }
    wake.notify_all();
    for (auto& w : workers) w.join();
}

void ValidationPool::work() {
    for (;;) {
        size_t k = next.fetch_add(1, std::memory_order_relaxed);
        if (k >= count) break;
        results[k] = validate_tx(*snapshot, *txs[k]);
        finished.fetch_add(1, std::memory_order_acq_rel);
    }
}

void ValidationPool::run(const Ledger& snap, const Tx* const* t, size_t c,
                         ValidationResult* res) {
    if (!c) return;
    {
        std::unique_lock<std::mutex> lk(mu);
        // A worker waking late for the previous batch may still hold the
        // task cursor; wait it out before repointing the shared fields.
        done.wait(lk, [&] { return active == 0; });
        snapshot = &snap;
        txs = t;
        count = c;
        results = res;
        next.store(0, std::memory_order_relaxed);
        finished.store(0, std::memory_order_relaxed);
        ++generation;
    }
    wake.notify_all();
    work();
    std::unique_lock<std::mutex> lk(mu);
    done.wait(lk, [&] {
        return active == 0 &&
               finished.load(std::memory_order_acquire) == count;
    });
}

} // namespace hutxo
