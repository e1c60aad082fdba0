// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/harness.hpp"
#include "ftmcfe/stats.hpp"

#include <map>
#include <string>

namespace ftmcfe {

struct BenchCase {
    std::string name;
    uint32_t n = 0;
    uint32_t t = 0;  // also the quorum size |B| for PKeyGen and Dec
    uint32_t reps = 1;
};

struct AlgoTiming {
    MeanStddev setup;
    MeanStddev pkeygen;
    MeanStddev enc;
    MeanStddev dec;
};

struct BenchReport {
    // one timing row per case, keyed by case name
    std::vector<BenchCase> cases;
    std::vector<AlgoTiming> timings;
    // scaling fits; absent when the point set is degenerate
    std::optional<LinearFit> setup_vs_n;
    std::optional<LinearFit> pkeygen_vs_n;
    std::optional<LinearFit> enc_vs_n;
    std::optional<LinearFit> dec_vs_quorum;
    bool single_threaded = true;
};

// Default case lists. The trio mirrors the (n, t) pairs used for the paper's
// measurements; the scaling lists drive the linearity fits.
inline std::vector<BenchCase> default_trio_cases(uint32_t reps)
{
    return {
        {"case-i", 10, 5, reps},
        {"case-ii", 10, 10, reps},
        {"case-iii", 20, 10, reps},
    };
}

inline std::vector<BenchCase> scaling_n_cases(uint32_t reps)
{
    return {
        {"n5", 5, 5, reps},
        {"n10", 10, 5, reps},
        {"n20", 20, 5, reps},
        {"n40", 40, 5, reps},
    };
}

inline std::vector<BenchCase> scaling_quorum_cases(uint32_t reps)
{
    return {
        {"b5", 20, 5, reps},
        {"b10", 20, 10, reps},
        {"b15", 20, 15, reps},
        {"b20", 20, 20, reps},
    };
}

// Times the four algorithms at the paper's measurement boundaries: Setup is
// the TA computation plus every client's key generation, PKeyGen and Enc are
// totals across the participating clients, Dec is the aggregator's work.
// All in-memory; file I/O is excluded. Hash-to-group work is included.
template <PairingEngine E>
AlgoTiming run_bench_case(const BenchCase& bc, uint64_t seed)
{
    AlgoTiming timing;
    std::vector<double> setup_ms, pkeygen_ms, enc_ms, dec_ms;

    const auto ctx = init_pairing<E>();
    for (uint32_t rep = 0; rep < bc.reps; ++rep) {
        Rng rng(seed + rep);

        harness_detail::Stopwatch sw_setup;
        auto mpk = ta_setup<E>(bc.n, ctx, rng);
        std::vector<ClientKeyPair<E>> clients;
        for (uint32_t i = 1; i <= bc.n; ++i)
            clients.push_back(client_init<E>(i, bc.n, rng));
        setup_ms.push_back(sw_setup.ms());

        std::vector<uint32_t> members;
        for (uint32_t i = 1; i <= bc.t; ++i)
            members.push_back(i);
        const ParticipationSet set(bc.n, members);
        std::vector<int64_t> ys(bc.n);
        for (uint32_t i = 0; i < bc.n; ++i)
            ys[i] = 1 + static_cast<int64_t>(i % 5);
        const auto y = FunctionVector<E>::from_int64(ys);

        harness_detail::Stopwatch sw_pk;
        std::vector<PartialFunctionalKey<E>> keys;
        for (uint32_t i : set.members())
            keys.push_back(pkeygen<E>(set, clients[i - 1], y, bc.t, mpk));
        pkeygen_ms.push_back(sw_pk.ms());

        const std::string label = "bench-" + bc.name + "-" + std::to_string(rep);
        harness_detail::Stopwatch sw_enc;
        std::vector<Ciphertext<E>> all_cts;
        for (uint32_t i = 1; i <= bc.n; ++i)
            all_cts.push_back(encrypt<E>(static_cast<int64_t>(i % 7), clients[i - 1], bc.t, label, mpk));
        enc_ms.push_back(sw_enc.ms());

        std::vector<Ciphertext<E>> quorum_cts;
        for (uint32_t i : set.members())
            quorum_cts.push_back(all_cts[i - 1]);

        harness_detail::Stopwatch sw_dec;
        const int64_t got = decrypt<E>(set, y, std::span<const PartialFunctionalKey<E>>(keys),
            std::span<const Ciphertext<E>>(quorum_cts), label, DlogConfig{1 << 20}, mpk);
        dec_ms.push_back(sw_dec.ms());

        int64_t expect = 0;
        for (uint32_t i : set.members())
            expect += static_cast<int64_t>(i % 7) * ys[i - 1];
        if (got != expect)
            fail(ErrorCode::UsageError, "bench decryption produced a wrong value");
    }

    timing.setup = mean_stddev(setup_ms);
    timing.pkeygen = mean_stddev(pkeygen_ms);
    timing.enc = mean_stddev(enc_ms);
    timing.dec = mean_stddev(dec_ms);
    return timing;
}

template <PairingEngine E>
BenchReport run_bench(const std::vector<BenchCase>& cases, uint64_t seed = 1)
{
    BenchReport report;
    report.cases = cases;
    for (const auto& bc : cases)
        report.timings.push_back(run_bench_case<E>(bc, seed));

    // scaling fits from whichever cases vary the right variable
    std::vector<double> ns, setup_y, pk_y, enc_y;
    std::vector<double> bs, dec_y;
    for (size_t i = 0; i < cases.size(); ++i) {
        if (cases[i].t == cases.front().t) {
            ns.push_back(cases[i].n);
            setup_y.push_back(report.timings[i].setup.mean);
            pk_y.push_back(report.timings[i].pkeygen.mean);
            enc_y.push_back(report.timings[i].enc.mean);
        }
        if (cases[i].n == cases.front().n) {
            bs.push_back(cases[i].t);
            dec_y.push_back(report.timings[i].dec.mean);
        }
    }
    report.setup_vs_n = linear_fit(ns, setup_y);
    report.pkeygen_vs_n = linear_fit(ns, pk_y);
    report.enc_vs_n = linear_fit(ns, enc_y);
    report.dec_vs_quorum = linear_fit(bs, dec_y);
    return report;
}

inline std::string bench_csv(const BenchReport& report)
{
    std::string out = "case,algorithm,n,t,mean_ms,stddev_ms\n";
    const auto row = [&](const BenchCase& bc, const char* algo, const MeanStddev& ms) {
        out += bc.name;
        out += ",";
        out += algo;
        out += "," + std::to_string(bc.n) + "," + std::to_string(bc.t);
        out += "," + std::to_string(ms.mean) + "," + std::to_string(ms.stddev) + "\n";
    };
    for (size_t i = 0; i < report.cases.size(); ++i) {
        row(report.cases[i], "setup", report.timings[i].setup);
        row(report.cases[i], "pkeygen", report.timings[i].pkeygen);
        row(report.cases[i], "enc", report.timings[i].enc);
        row(report.cases[i], "dec", report.timings[i].dec);
    }
    return out;
}

}  // namespace ftmcfe
