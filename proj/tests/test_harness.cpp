// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftmcfe/harness.hpp"
#include "ftmcfe/toy/engine.hpp"

#include <filesystem>

using namespace ftmcfe;
using E = toy::ToyPairing;

namespace {

std::filesystem::path temp_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("ftmcfe_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

double oracle_weighted_sum(const std::vector<uint32_t>& online, const std::vector<std::vector<double>>& g,
    const std::vector<double>& w, uint32_t coord)
{
    double acc = 0;
    for (uint32_t i : online)
        acc += g[i - 1][coord] * w[i - 1];
    return acc;
}

}  // namespace

TEST_CASE("fixed point codec basics")
{
    CHECK(FixedPointCodec::encode(0.25, 100) == 25);
    CHECK(FixedPointCodec::encode(-0.5, 1000) == -500);
    CHECK(FixedPointCodec::encode(0.0, 1000) == 0);
    const FixedPointCodec codec{1000, 100};
    CHECK(codec.decode(450000) == doctest::Approx(4.5));
    CHECK_THROWS_WITH_AS(
        FixedPointCodec::encode(1.0e30, 1000000), doctest::Contains("codec-overflow"), Error);
}

TEST_CASE("codec pipeline agrees with real arithmetic within quantization error")
{
    Rng rng(61);
    const FixedPointCodec codec{1000, 100};
    for (int trial = 0; trial < 200; ++trial) {
        const size_t n = 1 + rng.below(10);
        double real = 0;
        int64_t fixed = 0;
        double bound = 0;
        for (size_t i = 0; i < n; ++i) {
            const double x = (static_cast<double>(rng.below(2000001)) - 1000000) / 1000000.0;
            // weights kept exactly representable at scale_y
            const double w = static_cast<double>(rng.below(201)) / 100.0 - 1.0;
            real += x * w;
            fixed += FixedPointCodec::encode(x, codec.scale_x) * FixedPointCodec::encode(w, codec.scale_y);
            bound += std::abs(w) * 0.5 / static_cast<double>(codec.scale_x);
        }
        CHECK(std::abs(codec.decode(fixed) - real) <= bound + 1e-12);
        CHECK(std::abs(codec.decode(fixed) - real) <= 1e-2);
    }
}

TEST_CASE("simulate_dropout explicit and probabilistic modes")
{
    RoundSpec spec;
    spec.weights = {1, 1, 1};
    spec.dropout.offline = {2};
    CHECK(simulate_dropout(3, spec) == std::vector<uint32_t>{1, 3});

    spec.dropout.offline.clear();
    CHECK(simulate_dropout(3, spec).size() == 3);

    // q = 0 keeps everyone
    spec.dropout.probability = 0.0;
    CHECK(simulate_dropout(3, spec).size() == 3);

    // binomial expectation: n=20, q=0.3 -> mean 14 +- 1 over 1000 trials
    spec.dropout.probability = 0.3;
    double total = 0;
    for (uint64_t trial = 0; trial < 1000; ++trial) {
        spec.round = trial;
        spec.seed = 99;
        total += static_cast<double>(simulate_dropout(20, spec).size());
    }
    const double mean = total / 1000.0;
    CHECK(mean > 13.0);
    CHECK(mean < 15.0);

    spec.dropout.probability = 1.5;
    CHECK_THROWS_WITH_AS((void)simulate_dropout(3, spec), doctest::Contains("config-parse-error"), Error);
}

TEST_CASE("keystore init, load, determinism, corruption")
{
    const auto dir = temp_dir("keystore");
    const auto store = KeyStore<E>::init(4, dir, 7);
    const auto loaded = KeyStore<E>::load(dir);
    CHECK(serialize_mpk<E>(store.mpk()) == serialize_mpk<E>(loaded.mpk()));
    for (uint32_t i = 1; i <= 4; ++i)
        CHECK(serialize_client_key<E>(store.client(i)) == serialize_client_key<E>(loaded.client(i)));

    // same seed, different directory: byte-identical stores
    const auto dir2 = temp_dir("keystore2");
    const auto store2 = KeyStore<E>::init(4, dir2, 7);
    CHECK(read_file(dir / "mpk.key", true) == read_file(dir2 / "mpk.key", true));
    CHECK(read_file(dir / "client_2.key", true) == read_file(dir2 / "client_2.key", true));

    // different seed differs
    const auto dir3 = temp_dir("keystore3");
    const auto store3 = KeyStore<E>::init(4, dir3, 8);
    CHECK(read_file(dir / "mpk.key", true) != read_file(dir3 / "mpk.key", true));

    // flip one byte in a client key: corrupt-key on load
    auto raw = read_file(dir / "client_2.key", false);
    raw[raw.size() / 2] ^= 0x40;
    write_file(dir / "client_2.key", BytesView(raw.data(), raw.size() - 32), false);
    // rewrite without fixing the checksum: the trailer is now stale
    {
        std::ofstream out(dir / "client_2.key", std::ios::binary | std::ios::app);
        out.write(reinterpret_cast<const char*>(raw.data() + raw.size() - 32), 32);
    }
    CHECK_THROWS_WITH_AS((void)KeyStore<E>::load(dir), doctest::Contains("corrupt-key"), Error);

    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
    std::filesystem::remove_all(dir3);
}

TEST_CASE("run_round pinned examples")
{
    const auto dir = temp_dir("round");
    const auto store = KeyStore<E>::init(3, dir, 11);

    RoundSpec spec;
    spec.round = 1;
    spec.label_prefix = "ts-2026-08-10";
    spec.t = 2;
    spec.d = 1;
    spec.weights = {1, 1, 1};
    spec.codec = {10, 1};
    spec.dlog_bound = 1 << 16;

    const std::vector<std::vector<double>> grads = {{0.5}, {1.5}, {2.5}};

    auto result = run_round<E>(spec, store, grads);
    REQUIRE(result.sums.size() == 1);
    CHECK(result.sums[0] == doctest::Approx(4.5));

    // client 3 offline: sum over {1,2}
    spec.dropout.offline = {3};
    result = run_round<E>(spec, store, grads);
    CHECK(result.sums[0] == doctest::Approx(2.0));
    CHECK(result.online == std::vector<uint32_t>{1, 2});

    // dropout below the quorum
    spec.dropout.offline = {2, 3};
    CHECK_THROWS_WITH_AS((void)run_round<E>(spec, store, grads), doctest::Contains("quorum-too-small"), Error);

    std::filesystem::remove_all(dir);
}

TEST_CASE("ciphertext store ignores duplicate (i, l, t) submissions")
{
    const auto dir = temp_dir("ctstore");
    const auto store = KeyStore<E>::init(2, dir, 12);
    CiphertextStore<E> cts;
    const auto ct = encrypt<E>(5, store.client(1), 1, "lbl", store.mpk());
    CHECK(cts.add(ct));
    CHECK(!cts.add(ct));  // second submission for the same triple is ignored
    CHECK(cts.add(encrypt<E>(5, store.client(1), 2, "lbl", store.mpk())));  // different t
    CHECK(cts.add(encrypt<E>(5, store.client(1), 1, "lbl2", store.mpk())));  // different label
    CHECK(cts.size() == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("one keystore serves rounds with different thresholds")
{
    const auto dir = temp_dir("flex");
    const uint32_t n = 8;
    const auto store = KeyStore<E>::init(n, dir, 13);

    RoundSpec spec;
    spec.label_prefix = "flex";
    spec.d = 2;
    spec.weights.assign(n, 0.25);
    spec.codec = {1000, 100};

    const std::vector<std::vector<double>> grads = [&] {
        std::vector<std::vector<double>> g(n, std::vector<double>(2));
        Rng rng(77);
        for (auto& row : g)
            for (auto& v : row)
                v = static_cast<double>(rng.below(2001)) / 1000.0 - 1.0;
        return g;
    }();

    uint64_t round = 0;
    for (uint32_t t : {n / 4, n / 2, n}) {
        spec.t = std::max(1u, t);
        spec.round = ++round;
        spec.label_prefix = "flex-" + std::to_string(round);
        const auto result = run_round<E>(spec, store, grads);
        for (uint32_t j = 0; j < spec.d; ++j) {
            const double expect = oracle_weighted_sum(result.online, grads, spec.weights, j);
            CHECK(std::abs(result.sums[j] - expect) <= 1e-2);
        }
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("randomized end-to-end rounds match the real-arithmetic oracle")
{
    Rng rng(88);
    for (int trial = 0; trial < 8; ++trial) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.below(7));
        const auto dir = temp_dir("e2e" + std::to_string(trial));
        const auto store = KeyStore<E>::init(n, dir, 500 + trial);

        RoundSpec spec;
        spec.round = trial;
        spec.label_prefix = "e2e-" + std::to_string(trial);
        spec.d = 1 + static_cast<uint32_t>(rng.below(4));
        spec.codec = {1000, 100};
        spec.weights.resize(n);
        for (auto& w : spec.weights)
            w = static_cast<double>(rng.below(101)) / 100.0;  // exactly representable
        spec.t = 1 + static_cast<uint32_t>(rng.below(n));

        std::vector<std::vector<double>> grads(n, std::vector<double>(spec.d));
        for (auto& row : grads)
            for (auto& v : row)
                v = static_cast<double>(rng.below(2001)) / 1000.0 - 1.0;

        // random dropout that keeps the quorum
        std::vector<uint32_t> offline;
        for (uint32_t i = 1; i <= n && n - offline.size() > spec.t; ++i)
            if (rng.below(3) == 0)
                offline.push_back(i);
        spec.dropout.offline = offline;

        const auto result = run_round<E>(spec, store, grads);
        const double bound = [&] {
            double b = 0;
            for (uint32_t i : result.online)
                b += std::abs(spec.weights[i - 1]) * 0.5 / static_cast<double>(spec.codec.scale_x);
            return b + 1e-9;
        }();
        for (uint32_t j = 0; j < spec.d; ++j) {
            const double expect = oracle_weighted_sum(result.online, grads, spec.weights, j);
            CHECK(std::abs(result.sums[j] - expect) <= bound);
        }
        std::filesystem::remove_all(dir);
    }
}

TEST_CASE("codec overflow is predicted before any encryption")
{
    const auto dir = temp_dir("overflow");
    const auto store = KeyStore<E>::init(3, dir, 14);
    RoundSpec spec;
    spec.label_prefix = "o";
    spec.t = 2;
    spec.d = 1;
    spec.weights = {100.0, 100.0, 100.0};
    spec.codec = {1000000, 1000000};
    spec.dlog_bound = 1000;  // tiny bound, guaranteed overflow
    const std::vector<std::vector<double>> grads = {{0.9}, {0.9}, {0.9}};
    CHECK_THROWS_WITH_AS((void)run_round<E>(spec, store, grads), doctest::Contains("codec-overflow"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("wire round trips for every object kind")
{
    const auto dir = temp_dir("wire");
    const auto store = KeyStore<E>::init(3, dir, 15);
    const ParticipationSet set(3, {1, 2, 3});
    const auto y = FunctionVector<E>::from_int64({{1, 2, 3}});

    const auto key = pkeygen<E>(set, store.client(1), y, 2, store.mpk());
    const auto bytes = serialize_partial_key<E>(key);
    const auto back = deserialize_partial_key<E>(bytes);
    CHECK(serialize_partial_key<E>(back) == bytes);

    const auto ct = encrypt<E>(42, store.client(2), 2, "wire-label", store.mpk());
    const auto ct_bytes = serialize_ciphertext<E>(ct);
    const auto ct_back = deserialize_ciphertext<E>(ct_bytes);
    CHECK(serialize_ciphertext<E>(ct_back) == ct_bytes);
    CHECK(ct_back.label == "wire-label");

    // truncation is rejected
    Bytes truncated(ct_bytes.begin(), ct_bytes.end() - 3);
    CHECK_THROWS_AS((void)deserialize_ciphertext<E>(truncated), Error);

    std::filesystem::remove_all(dir);
}
