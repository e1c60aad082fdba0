// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/fsio.hpp"
#include "ftmcfe/wire.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ftmcfe {

// --- fixed-point codec ---

// Gradients and weights are reals; the scheme encrypts integers. Values are
// scaled by powers of ten and rounded; the decoded sum divides by both scales.
struct FixedPointCodec {
    int64_t scale_x = 1000;  // gradients
    int64_t scale_y = 100;   // weights

    static int64_t encode(double value, int64_t scale)
    {
        if (!std::isfinite(value))
            fail(ErrorCode::CodecOverflow, "non-finite value");
        const double scaled = value * static_cast<double>(scale);
        if (std::abs(scaled) > 9.0e18)
            fail(ErrorCode::CodecOverflow, "scaled value exceeds the integer range");
        return static_cast<int64_t>(std::llround(scaled));
    }

    double decode(int64_t sum) const
    {
        return static_cast<double>(sum) / (static_cast<double>(scale_x) * static_cast<double>(scale_y));
    }
};

// --- round specification ---

struct DropoutSpec {
    std::vector<uint32_t> offline;        // explicit mode
    std::optional<double> probability;    // probabilistic mode, q in [0,1)
};

struct RoundSpec {
    uint64_t round = 0;
    std::string label_prefix;
    uint32_t t = 1;
    uint32_t d = 1;
    std::vector<double> weights;  // length n
    DropoutSpec dropout;
    FixedPointCodec codec;
    uint64_t dlog_bound = 1ull << 20;
    uint64_t seed = 0;  // drives probabilistic dropout

    uint32_t n() const { return static_cast<uint32_t>(weights.size()); }
};

/// Online indices after dropout; may come back empty (the caller enforces the
/// quorum). Probabilistic mode keeps each client independently with
/// probability 1 - q using a stream seeded from (spec.seed, spec.round).
inline std::vector<uint32_t> simulate_dropout(uint32_t n, const RoundSpec& spec)
{
    std::vector<uint32_t> online;
    if (spec.dropout.probability.has_value()) {
        const double q = *spec.dropout.probability;
        if (q < 0.0 || q >= 1.0)
            fail(ErrorCode::ConfigParseError, "dropout probability must lie in [0,1)");
        Bytes seed;
        append(seed, std::string_view("ftmcfe/dropout"));
        append_u64_be(seed, spec.seed);
        append_u64_be(seed, spec.round);
        Rng rng{BytesView(seed)};
        for (uint32_t i = 1; i <= n; ++i) {
            const double u = static_cast<double>(rng.next_u64()) / static_cast<double>(UINT64_MAX);
            if (u >= q)
                online.push_back(i);
        }
        return online;
    }
    for (uint32_t i = 1; i <= n; ++i)
        online.push_back(i);
    for (uint32_t off : spec.dropout.offline) {
        if (off < 1 || off > n)
            fail(ErrorCode::IndexOutOfRange, "offline index outside 1..n");
        online.erase(std::remove(online.begin(), online.end(), off), online.end());
    }
    return online;
}

// --- ciphertext store ---

/// One ciphertext per (i, l, t); later submissions for the same triple are
/// ignored, mirroring the single-query discipline of the security model.
template <PairingEngine E>
class CiphertextStore {
public:
    bool add(const Ciphertext<E>& ct)
    {
        const auto key = std::make_tuple(ct.index, ct.label, ct.t);
        return store_.emplace(key, ct).second;
    }

    const Ciphertext<E>* find(uint32_t index, const std::string& label, uint32_t t) const
    {
        const auto it = store_.find(std::make_tuple(index, label, t));
        return it == store_.end() ? nullptr : &it->second;
    }

    size_t size() const { return store_.size(); }

private:
    std::map<std::tuple<uint32_t, std::string, uint32_t>, Ciphertext<E>> store_;
};

// --- key store ---

template <PairingEngine E>
class KeyStore {
public:
    static KeyStore init(uint32_t n, const std::filesystem::path& dir, uint64_t seed)
    {
        KeyStore store;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            fail(ErrorCode::IoError, "cannot create " + dir.string());
        Rng rng(seed);
        store.dir_ = dir;
        store.mpk_ = ta_setup<E>(n, init_pairing<E>(), rng);
        for (uint32_t i = 1; i <= n; ++i)
            store.clients_.push_back(client_init<E>(i, n, rng));
        store.persist();
        return store;
    }

    static KeyStore load(const std::filesystem::path& dir)
    {
        KeyStore store;
        store.dir_ = dir;
        store.mpk_ = deserialize_mpk<E>(read_file(dir / "mpk.key", true));
        store.mpk_.validate();
        for (uint32_t i = 1; i <= store.mpk_.n; ++i) {
            auto kp = deserialize_client_key<E>(read_file(dir / client_file(i), true));
            if (kp.index != i)
                fail(ErrorCode::CorruptKey, "client key file holds the wrong index");
            store.clients_.push_back(std::move(kp));
        }
        return store;
    }

    const MasterPublicKey<E>& mpk() const { return mpk_; }
    const ClientKeyPair<E>& client(uint32_t index) const
    {
        if (index < 1 || index > clients_.size())
            fail(ErrorCode::IndexOutOfRange, "client index outside 1..n");
        return clients_[index - 1];
    }
    uint32_t n() const { return mpk_.n; }
    const std::filesystem::path& dir() const { return dir_; }

    static std::string client_file(uint32_t index) { return "client_" + std::to_string(index) + ".key"; }

private:
    void persist() const
    {
        write_file(dir_ / "mpk.key", BytesView(serialize_mpk<E>(mpk_)), true);
        for (const auto& kp : clients_)
            write_file(dir_ / client_file(kp.index), BytesView(serialize_client_key<E>(kp)), true);
    }

    std::filesystem::path dir_;
    MasterPublicKey<E> mpk_;
    std::vector<ClientKeyPair<E>> clients_;
};

// --- round orchestration ---

struct PhaseMetrics {
    double pkeygen_ms = 0;
    double encrypt_ms = 0;
    double verify_ms = 0;
    double decrypt_ms = 0;
};

struct AggregateResult {
    uint64_t round = 0;
    std::vector<double> sums;        // decoded weighted sums per coordinate
    std::vector<uint32_t> online;    // the participation set B
    PhaseMetrics metrics;
};

namespace harness_detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace harness_detail

/// One simulated federated round: per-coordinate labels `prefix:j` run d
/// independent scheme instances over the same per-round keys. Coordinates are
/// mutually independent and may be processed in any order or concurrently.
template <PairingEngine E>
AggregateResult run_round(
    const RoundSpec& spec, const KeyStore<E>& store, const std::vector<std::vector<double>>& gradients)
{
    const uint32_t n = store.n();
    if (spec.n() != n)
        fail(ErrorCode::ConfigParseError, "weight vector length differs from the store's client count");
    if (spec.d < 1)
        fail(ErrorCode::ConfigParseError, "dimension must be at least 1");
    if (spec.t < 1 || spec.t > n)
        fail(ErrorCode::ConfigParseError, "threshold outside 1..n");
    if (gradients.size() != n)
        fail(ErrorCode::ConfigParseError, "gradient matrix must have n rows");
    for (const auto& row : gradients)
        if (row.size() != spec.d)
            fail(ErrorCode::ConfigParseError, "gradient matrix must have d columns");

    const auto online = simulate_dropout(n, spec);
    if (online.size() < spec.t)
        fail(ErrorCode::QuorumTooSmall, "dropout left fewer online clients than the threshold");
    const ParticipationSet set(n, online);

    // encode weights once; the function vector is shared across coordinates
    std::vector<int64_t> y_int(n);
    for (uint32_t i = 0; i < n; ++i)
        y_int[i] = FixedPointCodec::encode(spec.weights[i], spec.codec.scale_y);
    const auto y = FunctionVector<E>::from_int64(y_int);

    // encode gradients and bound the reachable inner product
    std::vector<std::vector<int64_t>> x_int(n, std::vector<int64_t>(spec.d));
    for (uint32_t j = 0; j < spec.d; ++j) {
        __int128 worst = 0;
        for (uint32_t i : set.members()) {
            x_int[i - 1][j] = FixedPointCodec::encode(gradients[i - 1][j], spec.codec.scale_x);
            const __int128 term = static_cast<__int128>(std::abs(x_int[i - 1][j])) *
                                  static_cast<__int128>(std::abs(y_int[i - 1]));
            worst += term;
        }
        if (worst > static_cast<__int128>(spec.dlog_bound))
            fail(ErrorCode::CodecOverflow, "predicted inner product exceeds the dlog bound");
    }

    AggregateResult result;
    result.round = spec.round;
    result.online = set.members();

    // one partial key per online client serves every coordinate
    std::vector<PartialFunctionalKey<E>> keys;
    {
        harness_detail::Stopwatch sw;
        for (uint32_t i : set.members())
            keys.push_back(pkeygen<E>(set, store.client(i), y, spec.t, store.mpk()));
        result.metrics.pkeygen_ms = sw.ms();
    }
    {
        harness_detail::Stopwatch sw;
        for (const auto& key : keys)
            if (!verify_partial_key<E>(key, spec.t, store.mpk()))
                fail(ErrorCode::WrongSubgroup, "partial key failed the degree check");
        result.metrics.verify_ms = sw.ms();
    }

    CiphertextStore<E> cts;
    {
        harness_detail::Stopwatch sw;
        for (uint32_t j = 0; j < spec.d; ++j) {
            const std::string label = spec.label_prefix + ":" + std::to_string(j);
            for (uint32_t i : set.members()) {
                const auto ct = encrypt<E>(x_int[i - 1][j], store.client(i), spec.t, label, store.mpk());
                if (!cts.add(ct))
                    fail(ErrorCode::UsageError, "duplicate ciphertext for (i, l, t)");
            }
        }
        result.metrics.encrypt_ms = sw.ms();
    }

    {
        harness_detail::Stopwatch sw;
        const DlogConfig dlog{spec.dlog_bound};
        for (uint32_t j = 0; j < spec.d; ++j) {
            const std::string label = spec.label_prefix + ":" + std::to_string(j);
            std::vector<Ciphertext<E>> round_cts;
            for (uint32_t i : set.members())
                round_cts.push_back(*cts.find(i, label, spec.t));
            const int64_t sum = decrypt<E>(set, y, std::span<const PartialFunctionalKey<E>>(keys),
                std::span<const Ciphertext<E>>(round_cts), label, dlog, store.mpk());
            result.sums.push_back(spec.codec.decode(sum));
        }
        result.metrics.decrypt_ms = sw.ms();
    }
    return result;
}

}  // namespace ftmcfe
