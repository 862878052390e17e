// Copyright (c) 2026 The hUTXO developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hutxo/bench.hpp"
#include "hutxo/compiler.hpp"

namespace {

using namespace hutxo;

int run_bench(const std::string& name, const std::string& mode, uint64_t users,
              uint64_t ops, double p, uint64_t n, size_t threads, uint64_t seed,
              uint64_t reps, const std::string& outPath, const std::string& seqOut) {
    Workload w;
    if (name == "map") {
        w = gen_map(ops, p, seed);
    } else if (name == "crowdfund") {
        w = gen_crowdfund(users, seed, mode == "centralized");
    } else if (name == "multisig") {
        w = gen_multisig(n, ops, seed);
    } else if (name == "registry") {
        w = gen_registry(users, seed);
    } else {
        std::cerr << "unknown benchmark: " << name
                  << " (expected map, crowdfund, multisig, registry)\n";
        return 2;
    }

    if (!seqOut.empty())
        save_sequence_file(seqOut, SequenceFile{w.genesis, w.events});

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!outPath.empty()) {
        file.open(outPath);
        if (!file) {
            std::cerr << "cannot write " << outPath << "\n";
            return 1;
        }
        os = &file;
    }
    *os << csv_header() << "\n";
    for (uint64_t rep = 0; rep < reps; ++rep) {
        ExperimentResult r = run_workload(w, threads);
        *os << csv_row(w, threads, rep, r) << "\n";
    }
    return 0;
}

int run_sequence(const std::string& seqPath, size_t threads) {
    SequenceFile f = load_sequence_file(seqPath);
    Ledger l = Ledger::genesis(f.genesis);
    RunReport r = threads == 0 ? validate_sequential(l, f.events)
                               : validate_parallel(l, f.events, threads);
    std::cout << "transactions: " << r.txCount << "\n"
              << "accepted: " << r.accepted << "\n"
              << "rejected: " << r.rejected << "\n"
              << "batches: " << r.batches << "\n"
              << "soft_conflict_pct: " << r.softConflictPct() << "\n"
              << "sig_verifies: " << r.sigVerifies << "\n"
              << "wall_ms: " << r.wallMs << "\n"
              << "ledger_bytes: " << ledger_bytes(l) << "\n"
              << "final_digest: " << ledger_digest_hex(l) << "\n";
    return 0;
}

int run_compile(const std::string& hurfPath, const std::string& outPath) {
    std::ifstream in(hurfPath);
    if (!in) {
        std::cerr << "cannot read " << hurfPath << "\n";
        return 1;
    }
    std::string src((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    auto checked = hurf::check_contract(hurf::parse_contract(src));

    // Deployment transaction against a one-deposit genesis: input {0,0}
    // pays the fee, the initial state comes from the declarations.
    Ledger l = Ledger::genesis({Output{
        Wallet(NATIVE_TOKEN, 1), PkLock{"pk_fees"}, Datum::unit(), false}});
    NodeView view;
    DeploySpec spec{{0, 0}, {}, {"pk_fees"}, {0, UINT64_MAX}};
    Tx tx = compile_deploy(l, checked, hurf::initial_store(*checked), Wallet{},
                           spec, view);

    Json j;
    j["contract"] = checked->canon;
    j["ctrId"] = hash_hex(tx.ctrId);
    j["deployTx"] = to_json(tx);
    std::string text = j.dump(1);

    if (outPath.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot write " << outPath << "\n";
            return 1;
        }
        out << text << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hUTXO node simulator and contract toolchain"};
    app.require_subcommand(1);

    std::string name, mode = "distributed", outPath, seqOut, seqPath, hurfPath;
    uint64_t users = 1000, ops = 10000, n = 4, seed = 1, reps = 1;
    double p = 0.1;
    size_t threads = 0;

    auto* bench = app.add_subcommand("bench", "generate and run a benchmark workload");
    bench->add_option("name", name, "map | crowdfund | multisig | registry")->required();
    bench->add_option("--mode", mode, "crowdfund only: centralized | distributed")
        ->check(CLI::IsMember({"centralized", "distributed"}));
    bench->add_option("--users", users, "crowdfund donors / registry names");
    bench->add_option("--ops", ops, "map / multisig operation count");
    bench->add_option("--p", p, "map hot-index share in [0,1]");
    bench->add_option("--n", n, "multisig wallet user count (even)");
    bench->add_option("--threads", threads, "0 = sequential, otherwise workers");
    bench->add_option("--seed", seed, "workload RNG seed");
    bench->add_option("--reps", reps, "replay count");
    bench->add_option("--out", outPath, "CSV output file (default stdout)");
    bench->add_option("--seq-out", seqOut, "also save the sequence as JSON");

    auto* run = app.add_subcommand("run", "replay a serialized sequence file");
    run->add_option("--seq", seqPath, "sequence JSON file")->required();
    run->add_option("--threads", threads, "0 = sequential, otherwise workers");

    auto* compile = app.add_subcommand("compile", "compile a contract into a deployment tx");
    compile->add_option("--hurf", hurfPath, "contract source file")->required();
    compile->add_option("--out", outPath, "JSON output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed())
            return run_bench(name, mode, users, ops, p, n, threads, seed, reps,
                             outPath, seqOut);
        if (run->parsed()) return run_sequence(seqPath, threads);
        if (compile->parsed()) return run_compile(hurfPath, outPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
