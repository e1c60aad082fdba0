// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/core.hpp"
#include "ftmcfe/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ftmcfe {

template <PairingEngine E>
struct MasterPublicKey {
    PairingContext<E> ctx;
    uint32_t n = 0;
    PowersOfGamma<E> powers;

    // Reference-string consistency: e(row[j], ghat1) == e(row[0], ghat1_row[j])
    // for both G-side rows; throws corrupt-key on the first violation.
    void validate() const
    {
        if (n < 1 || powers.g1_row.size() != n + 1 || powers.g2_row.size() != n + 1 ||
            powers.ghat1_row.size() != n + 1)
            fail(ErrorCode::CorruptKey, "reference string has the wrong shape");
        using Term = typename E::PairTerm;
        for (uint32_t j = 0; j <= n; ++j) {
            const Term t1[2] = {Term{powers.g1_row[j], powers.ghat1_row[0], false},
                Term{powers.g1_row[0], powers.ghat1_row[j], true}};
            if (!E::gt_is_one(E::multi_pair(t1)))
                fail(ErrorCode::CorruptKey, "g1 row inconsistent with ghat1 row");
            const Term t2[2] = {Term{powers.g2_row[j], powers.ghat1_row[0], false},
                Term{powers.g2_row[0], powers.ghat1_row[j], true}};
            if (!E::gt_is_one(E::multi_pair(t2)))
                fail(ErrorCode::CorruptKey, "g2 row inconsistent with ghat1 row");
        }
    }
};

/// Per-client key material; serves as both sk_i and ek_i.
template <PairingEngine E>
struct ClientKeyPair {
    uint32_t index = 0;
    DiagScalar<E> s;
    DiagScalar<E> t;
    typename E::Scalar w;
};

template <PairingEngine E>
struct PartialFunctionalKey {
    uint32_t index = 0;
    DiagG2<E> sk1;
    DiagG2<E> sk2;
    DiagG1<E> sk3;
    DiagG2<E> sk4;
    DiagG1<E> sk5;
    // Commitment pair published for aggregator-side degree verification.
    typename E::G1 commit_g2_shifted;
    typename E::G2 set_commit_ghat1;
    Digest b_digest{};
    Digest y_digest{};
    uint32_t t = 0;
};

template <PairingEngine E>
struct Ciphertext {
    uint32_t index = 0;
    std::string label;
    uint32_t t = 0;
    DiagG1<E> c1;
    DiagG1<E> c2;
    typename E::G1 c3;
    typename E::G2 c4;
    DiagG1<E> c5;
};

template <PairingEngine E>
struct FunctionVector {
    std::vector<typename E::Scalar> y;

    static FunctionVector from_int64(std::span<const int64_t> values)
    {
        FunctionVector fv;
        fv.y.reserve(values.size());
        for (int64_t v : values)
            fv.y.push_back(scalar_from_int64<E>(v));
        return fv;
    }

    Bytes encode() const { return encode_function_vector<E>(std::span<const typename E::Scalar>(y)); }
    Digest digest() const
    {
        Bytes buf;
        append(buf, std::string_view("ftmcfe/y/v1"));
        append(buf, BytesView(encode()));
        return sha256(buf);
    }
};

struct DlogConfig {
    uint64_t bound = 1ull << 20;  // max |<x,y>| recoverable

    uint64_t table_size() const
    {
        uint64_t m = 1;
        while (m * m < 2 * bound + 1)
            ++m;
        return m;
    }
};

// Largest plaintext magnitude encrypt accepts; decrypt-side recovery is
// bounded separately by DlogConfig.
inline constexpr uint64_t kMaxPlaintextMagnitude = 1ull << 40;

// --- Setup ---

template <PairingEngine E>
struct SetupOracle {
    typename E::Scalar gamma;  // retained only in test-oracle mode
};

template <PairingEngine E>
MasterPublicKey<E> ta_setup_with_oracle(
    uint32_t n, const PairingContext<E>& ctx, Rng& rng, SetupOracle<E>* oracle)
{
    if (n < 1)
        fail(ErrorCode::UsageError, "client count must be at least 1");
    MasterPublicKey<E> mpk;
    mpk.ctx = ctx;
    mpk.n = n;
    const auto gamma = random_nonzero_scalar<E>(rng);
    auto power = E::Scalar::from_u64(1);
    mpk.powers.g1_row.reserve(n + 1);
    mpk.powers.g2_row.reserve(n + 1);
    mpk.powers.ghat1_row.reserve(n + 1);
    for (uint32_t j = 0; j <= n; ++j) {
        mpk.powers.g1_row.push_back(E::g1_mul(ctx.g1, power));
        mpk.powers.g2_row.push_back(E::g1_mul(ctx.g2, power));
        mpk.powers.ghat1_row.push_back(E::g2_mul(ctx.ghat1, power));
        power = power * gamma;
    }
    if (oracle != nullptr)
        oracle->gamma = gamma;
    // gamma goes out of scope here; nothing else retains it
    return mpk;
}

template <PairingEngine E>
MasterPublicKey<E> ta_setup(uint32_t n, const PairingContext<E>& ctx, Rng& rng)
{
    return ta_setup_with_oracle<E>(n, ctx, rng, nullptr);
}

template <PairingEngine E>
ClientKeyPair<E> client_init(uint32_t index, uint32_t n, Rng& rng)
{
    if (index < 1 || index > n)
        fail(ErrorCode::IndexOutOfRange, "client index outside 1..n");
    ClientKeyPair<E> kp;
    kp.index = index;
    kp.s = {random_scalar<E>(rng), random_scalar<E>(rng)};
    kp.t = {random_scalar<E>(rng), random_scalar<E>(rng)};
    kp.w = random_scalar<E>(rng);
    return kp;
}

// --- PKeyGen ---

template <PairingEngine E>
PartialFunctionalKey<E> pkeygen(const ParticipationSet& set, const ClientKeyPair<E>& sk,
    const FunctionVector<E>& y, uint32_t t, const MasterPublicKey<E>& mpk)
{
    if (y.y.size() != mpk.n)
        fail(ErrorCode::UsageError, "function vector length differs from the client count");
    if (set.n() != mpk.n)
        fail(ErrorCode::UsageError, "participation set sized for a different client count");
    if (t < 1 || t > mpk.n)
        fail(ErrorCode::ThresholdOutOfRange, "threshold outside 1..n");
    if (!set.contains(sk.index))
        fail(ErrorCode::NotAMember, "issuing client is not in the participation set");
    if (set.size() < t)
        fail(ErrorCode::QuorumTooSmall, "participation set smaller than the threshold");

    const auto h1 = hash_h1<E>(y.encode());
    const auto coeffs = vanishing_poly<E>(set);
    const auto c_g1 = commit_g<E>(mpk.powers.g1_row, coeffs);
    const auto c_ghat1 = commit_ghat<E>(mpk.powers.ghat1_row, coeffs);
    const auto c_g2_shifted = shifted_commit<E>(coeffs, t, mpk.powers.g2_row);

    const auto yi = y.y[sk.index - 1];

    PartialFunctionalKey<E> key;
    key.index = sk.index;
    key.sk1 = {E::g2_add(E::g2_mul(mpk.ctx.ghat0, sk.s.d1 * yi), E::g2_mul(h1.c1, sk.t.d1)),
        E::g2_add(E::g2_mul(mpk.ctx.ghat0, sk.s.d2 * yi), E::g2_mul(h1.c2, sk.t.d2))};
    key.sk2 = {E::g2_mul(E::g2_add(h1.c1, c_ghat1), sk.t.d1), E::g2_mul(E::g2_add(h1.c2, c_ghat1), sk.t.d2)};
    key.sk3 = {E::g1_mul(c_g1, sk.t.d1), E::g1_mul(c_g1, sk.t.d2)};
    key.sk4 = {E::g2_mul(h1.c1, sk.w), E::g2_mul(h1.c2, sk.w)};
    key.sk5 = {E::g1_mul(c_g2_shifted, sk.t.d1), E::g1_mul(c_g2_shifted, sk.t.d2)};
    key.commit_g2_shifted = c_g2_shifted;
    key.set_commit_ghat1 = c_ghat1;
    key.b_digest = set.digest();
    key.y_digest = y.digest();
    key.t = t;
    return key;
}

/// Aggregator-side check of the exposed commitment pair for threshold t.
template <PairingEngine E>
bool verify_partial_key(const PartialFunctionalKey<E>& key, uint32_t t, const MasterPublicKey<E>& mpk)
{
    return verify_degree<E>(key.commit_g2_shifted, key.set_commit_ghat1, t, mpk.powers);
}

// --- Enc ---

template <PairingEngine E>
Ciphertext<E> encrypt(int64_t x, const ClientKeyPair<E>& ek, uint32_t t, std::string_view label,
    const MasterPublicKey<E>& mpk)
{
    if (t < 1 || t > mpk.n)
        fail(ErrorCode::ThresholdOutOfRange, "threshold outside 1..n");
    const uint64_t mag = x < 0 ? static_cast<uint64_t>(-(x + 1)) + 1 : static_cast<uint64_t>(x);
    if (mag > kMaxPlaintextMagnitude)
        fail(ErrorCode::PlaintextOutOfRange, "plaintext magnitude too large");

    const auto h2 = hash_h2<E>(from_string(label));
    const auto xs = scalar_from_int64<E>(x);
    const auto g0x = E::g1_mul(mpk.ctx.g0, xs);
    const auto& g2t = mpk.powers.g2_row[t];

    Ciphertext<E> ct;
    ct.index = ek.index;
    ct.label = std::string(label);
    ct.t = t;
    ct.c1 = {E::g1_add(E::g1_mul(h2.c1, ek.s.d1), g0x), E::g1_add(E::g1_mul(h2.c2, ek.s.d2), g0x)};
    const auto g1w = E::g1_mul(mpk.ctx.g1, ek.w);
    ct.c2 = {E::g1_mul(E::g1_add(h2.c1, g1w), ek.t.d1), E::g1_mul(E::g1_add(h2.c2, g1w), ek.t.d2)};
    ct.c3 = E::g1_mul(E::g1_add(mpk.ctx.g1, g2t), ek.w);
    ct.c4 = E::g2_mul(mpk.ctx.ghat1, ek.w);
    ct.c5 = {E::g1_mul(g2t, ek.t.d1), E::g1_mul(g2t, ek.t.d2)};
    return ct;
}

// --- Dec ---

/// Baby-step/giant-step discrete log of `target` base `base` over the
/// symmetric range [-bound, bound].
template <PairingEngine E>
int64_t bsgs_dlog(const typename E::GT& target, const typename E::GT& base, uint64_t bound)
{
    if (bound < 1)
        fail(ErrorCode::UsageError, "dlog bound must be at least 1");
    const uint64_t m = DlogConfig{bound}.table_size();

    const auto key_of = [](const typename E::GT& v) {
        std::vector<uint8_t> buf(E::kGtBytes);
        E::gt_write(v, buf.data());
        return std::string(buf.begin(), buf.end());
    };

    std::unordered_map<std::string, uint64_t> table;
    table.reserve(m);
    auto step = E::gt_one();
    for (uint64_t j = 0; j < m; ++j) {
        table.emplace(key_of(step), j);
        step = E::gt_mul(step, base);
    }
    // step is now base^m
    const auto giant = E::gt_inv(step);

    // find v' = v + bound in [0, 2*bound] with base^{v'} = target * base^{bound}
    auto cur = E::gt_mul(target, E::gt_pow(base, E::Scalar::from_u64(bound)));
    const uint64_t span = 2 * bound + 1;
    for (uint64_t k = 0; k * m < span; ++k) {
        const auto it = table.find(key_of(cur));
        if (it != table.end()) {
            const uint64_t vprime = k * m + it->second;
            if (vprime <= 2 * bound)
                return static_cast<int64_t>(vprime) - static_cast<int64_t>(bound);
        }
        cur = E::gt_mul(cur, giant);
    }
    fail(ErrorCode::DlogNotFound, "no exponent within the configured bound");
}

// Quorum decryption. Per component lane the aggregator folds, over i in B,
//   e(C1,ghat0^{y_i}) e(C2,H1(y)) e(sk3,C4) e(C5,sk4) e(sk5,C4)
//     / [ e(H2(l),sk1) e(C3,sk2) ]
// into one multi-pairing; the two lanes must agree and their common value is
// e(g0,ghat0)^{sum x_i y_i}, recovered by bounded BSGS. The per-client blocks
// commute in GT, so assembly order (and any parallel schedule) cannot change
// the result.
template <PairingEngine E>
int64_t decrypt(const ParticipationSet& set, const FunctionVector<E>& y,
    std::span<const PartialFunctionalKey<E>> keys, std::span<const Ciphertext<E>> cts,
    std::string_view label, const DlogConfig& dlog, const MasterPublicKey<E>& mpk)
{
    if (y.y.size() != mpk.n || set.n() != mpk.n)
        fail(ErrorCode::UsageError, "function vector or participation set sized incorrectly");
    if (cts.empty() || keys.empty())
        fail(ErrorCode::QuorumTooSmall, "no shares supplied");

    const uint32_t t = cts[0].t;
    if (t < 1 || t > mpk.n)
        fail(ErrorCode::ThresholdOutOfRange, "ciphertext threshold outside 1..n");
    if (set.size() < t)
        fail(ErrorCode::QuorumTooSmall, "fewer online clients than the threshold");

    std::unordered_map<uint32_t, const Ciphertext<E>*> ct_by_index;
    for (const auto& ct : cts) {
        if (ct.label != label)
            fail(ErrorCode::MismatchedLabel, "ciphertext bound to a different label");
        if (ct.t != t)
            fail(ErrorCode::MismatchedThreshold, "ciphertext bound to a different threshold");
        if (!set.contains(ct.index))
            fail(ErrorCode::UsageError, "ciphertext from a client outside the participation set");
        if (!ct_by_index.emplace(ct.index, &ct).second)
            fail(ErrorCode::UsageError, "duplicate ciphertext for a client");
    }

    const Digest b_digest = set.digest();
    const Digest y_digest = y.digest();
    std::unordered_map<uint32_t, const PartialFunctionalKey<E>*> key_by_index;
    for (const auto& key : keys) {
        if (key.t != t)
            fail(ErrorCode::MismatchedThreshold, "partial key issued for a different threshold");
        if (key.b_digest != b_digest)
            fail(ErrorCode::UsageError, "partial key issued for a different participation set");
        if (key.y_digest != y_digest)
            fail(ErrorCode::UsageError, "partial key issued for a different function vector");
        if (!set.contains(key.index))
            fail(ErrorCode::UsageError, "partial key from a client outside the participation set");
        if (!key_by_index.emplace(key.index, &key).second)
            fail(ErrorCode::UsageError, "duplicate partial key for a client");
    }

    for (uint32_t i : set.members()) {
        if (!ct_by_index.count(i) || !key_by_index.count(i))
            fail(ErrorCode::QuorumTooSmall, "missing shares for the claimed participation set");
    }

    // public hashes recomputed locally; wire objects never carry them
    const auto h1 = hash_h1<E>(y.encode());
    const auto h2 = hash_h2<E>(from_string(label));

    using Term = typename E::PairTerm;
    std::vector<Term> lane1, lane2;
    lane1.reserve(7 * set.size());
    lane2.reserve(7 * set.size());
    for (uint32_t i : set.members()) {
        const auto& ct = *ct_by_index.at(i);
        const auto& key = *key_by_index.at(i);
        const auto ghat0_yi = E::g2_mul(mpk.ctx.ghat0, y.y[i - 1]);

        lane1.push_back(Term{ct.c1.c1, ghat0_yi, false});
        lane1.push_back(Term{ct.c2.c1, h1.c1, false});
        lane1.push_back(Term{key.sk3.c1, ct.c4, false});
        lane1.push_back(Term{ct.c5.c1, key.sk4.c1, false});
        lane1.push_back(Term{key.sk5.c1, ct.c4, false});
        lane1.push_back(Term{h2.c1, key.sk1.c1, true});
        lane1.push_back(Term{ct.c3, key.sk2.c1, true});

        lane2.push_back(Term{ct.c1.c2, ghat0_yi, false});
        lane2.push_back(Term{ct.c2.c2, h1.c2, false});
        lane2.push_back(Term{key.sk3.c2, ct.c4, false});
        lane2.push_back(Term{ct.c5.c2, key.sk4.c2, false});
        lane2.push_back(Term{key.sk5.c2, ct.c4, false});
        lane2.push_back(Term{h2.c2, key.sk1.c2, true});
        lane2.push_back(Term{ct.c3, key.sk2.c2, true});
    }

    const auto z1 = multi_pair<E>(std::span<const Term>(lane1));
    const auto z2 = multi_pair<E>(std::span<const Term>(lane2));
    if (!(z1 == z2))
        fail(ErrorCode::ComponentMismatch, "diagonal lanes disagree; inputs are inconsistent");

    const auto base = E::pair(mpk.ctx.g0, mpk.ctx.ghat0);
    return bsgs_dlog<E>(z1, base, dlog.bound);
}

}  // namespace ftmcfe
