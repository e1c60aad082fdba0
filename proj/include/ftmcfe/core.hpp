// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/bytes.hpp"
#include "ftmcfe/errors.hpp"
#include "ftmcfe/hash.hpp"

#include <concepts>
#include <span>
#include <string_view>
#include <vector>

namespace ftmcfe {

// Compile-time pairing engine interface; see bls::Bls12381 and toy::ToyPairing.
template <typename E>
concept PairingEngine = requires(const typename E::G1& p, const typename E::G2& q,
    const typename E::GT& t, const typename E::Scalar& s) {
    { E::kCurveId } -> std::convertible_to<std::string_view>;
    { E::pair(p, q) } -> std::same_as<typename E::GT>;
    { E::g1_mul(p, s) } -> std::same_as<typename E::G1>;
    { E::g2_mul(q, s) } -> std::same_as<typename E::G2>;
    { E::gt_mul(t, t) } -> std::same_as<typename E::GT>;
};

// All matrices in the construction are diagonal, so matrix algebra reduces to
// two independent component lanes.
template <typename E>
struct DiagScalar {
    typename E::Scalar d1, d2;
};

template <typename E>
struct DiagG1 {
    typename E::G1 c1, c2;
    bool operator==(const DiagG1& o) const { return c1 == o.c1 && c2 == o.c2; }
};

template <typename E>
struct DiagG2 {
    typename E::G2 c1, c2;
    bool operator==(const DiagG2& o) const { return c1 == o.c1 && c2 == o.c2; }
};

template <typename E>
struct DiagGT {
    typename E::GT c1, c2;
};

// Hash-derived group descriptors, fixed system-wide. Derivation is
// deterministic, so two contexts for the same curve are bit-identical.
template <PairingEngine E>
struct PairingContext {
    typename E::G1 g0, g1, g2, g;
    typename E::G2 ghat0, ghat1, ghat2, ghat;
};

template <PairingEngine E>
PairingContext<E> init_pairing()
{
    PairingContext<E> ctx;
    const Bytes empty;
    ctx.g0 = E::hash_to_g1(empty, "ftmcfe/g0");
    ctx.g1 = E::hash_to_g1(empty, "ftmcfe/g1");
    ctx.g2 = E::hash_to_g1(empty, "ftmcfe/g2");
    ctx.g = E::hash_to_g1(empty, "ftmcfe/g");
    ctx.ghat0 = E::hash_to_g2(empty, "ftmcfe/ghat0");
    ctx.ghat1 = E::hash_to_g2(empty, "ftmcfe/ghat1");
    ctx.ghat2 = E::hash_to_g2(empty, "ftmcfe/ghat2");
    ctx.ghat = E::hash_to_g2(empty, "ftmcfe/ghat");
    return ctx;
}

// --- hash oracles H1 / H2 ---

// H1: canonical function-vector bytes -> diagonal pair in the second group.
template <PairingEngine E>
DiagG2<E> hash_h1(BytesView y_encoding)
{
    if (y_encoding.empty())
        fail(ErrorCode::EmptyInput, "H1 requires a non-empty function-vector encoding");
    return {E::hash_to_g2(y_encoding, "ftmcfe/H1/c1"), E::hash_to_g2(y_encoding, "ftmcfe/H1/c2")};
}

// H2: label bytes -> diagonal pair in the first group. Empty labels allowed.
template <PairingEngine E>
DiagG1<E> hash_h2(BytesView label)
{
    return {E::hash_to_g1(label, "ftmcfe/H2/c1"), E::hash_to_g1(label, "ftmcfe/H2/c2")};
}

// --- scalars ---

template <PairingEngine E>
typename E::Scalar random_scalar(Rng& rng)
{
    // wide reduction: 2x the scalar size keeps the bias negligible
    return E::Scalar::from_bytes_reduce(rng.bytes(E::Scalar::kBytes * 2));
}

template <PairingEngine E>
typename E::Scalar random_nonzero_scalar(Rng& rng)
{
    for (;;) {
        const auto s = random_scalar<E>(rng);
        if (!s.is_zero())
            return s;
    }
}

template <PairingEngine E>
typename E::Scalar scalar_from_int64(int64_t v)
{
    const auto mag = E::Scalar::from_u64(v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v));
    return v < 0 ? -mag : mag;
}

// Fixed 32-byte big-endian scalar encoding used by the wire formats.
template <PairingEngine E>
void scalar_to_bytes32(const typename E::Scalar& s, uint8_t out[32])
{
    static_assert(E::Scalar::kBytes <= 32);
    std::fill(out, out + 32 - E::Scalar::kBytes, 0);
    s.to_bytes_be(out + 32 - E::Scalar::kBytes);
}

template <PairingEngine E>
typename E::Scalar scalar_from_bytes32(const uint8_t in[32])
{
    for (size_t i = 0; i < 32 - E::Scalar::kBytes; ++i)
        if (in[i] != 0)
            fail(ErrorCode::MalformedEncoding, "scalar exceeds the group order");
    typename E::Scalar s;
    if (!E::Scalar::from_bytes_be(in + 32 - E::Scalar::kBytes, s))
        fail(ErrorCode::MalformedEncoding, "scalar exceeds the group order");
    return s;
}

// Canonical H1 input: 4-byte big-endian count, then 32-byte big-endian coords.
template <PairingEngine E>
Bytes encode_function_vector(std::span<const typename E::Scalar> y)
{
    Bytes out;
    out.reserve(4 + 32 * y.size());
    append_u32_be(out, static_cast<uint32_t>(y.size()));
    for (const auto& s : y) {
        uint8_t buf[32];
        scalar_to_bytes32<E>(s, buf);
        out.insert(out.end(), buf, buf + 32);
    }
    return out;
}

// --- product of pairings ---

template <PairingEngine E>
typename E::PairTerm make_term(const typename E::G1& a, const typename E::G2& b, int sign)
{
    return {a, b, sign < 0};
}

template <PairingEngine E>
typename E::GT multi_pair(std::span<const typename E::PairTerm> terms)
{
    if (terms.empty())
        fail(ErrorCode::EmptyInput, "multi_pair needs at least one term");
    return E::multi_pair(terms);
}

// --- element wire format: 1-byte kind tag, then the compressed encoding ---

enum class ElementKind : uint8_t { G1 = 0x01, G2 = 0x02, GT = 0x03 };

template <PairingEngine E>
Bytes serialize_element(const typename E::G1& p)
{
    Bytes out(1 + E::kG1Bytes);
    out[0] = static_cast<uint8_t>(ElementKind::G1);
    E::g1_write(p, out.data() + 1);
    return out;
}

template <PairingEngine E>
Bytes serialize_element(const typename E::G2& p)
{
    Bytes out(1 + E::kG2Bytes);
    out[0] = static_cast<uint8_t>(ElementKind::G2);
    E::g2_write(p, out.data() + 1);
    return out;
}

template <PairingEngine E>
Bytes serialize_gt(const typename E::GT& t)
{
    Bytes out(1 + E::kGtBytes);
    out[0] = static_cast<uint8_t>(ElementKind::GT);
    E::gt_write(t, out.data() + 1);
    return out;
}

template <PairingEngine E>
typename E::G1 deserialize_g1(BytesView in)
{
    if (in.size() != 1 + E::kG1Bytes || in[0] != static_cast<uint8_t>(ElementKind::G1))
        fail(ErrorCode::MalformedEncoding, "bad length or kind tag for a G element");
    typename E::G1 p;
    if (auto err = E::g1_read(in.data() + 1, p))
        throw Error(*err, "G element rejected");
    return p;
}

template <PairingEngine E>
typename E::G2 deserialize_g2(BytesView in)
{
    if (in.size() != 1 + E::kG2Bytes || in[0] != static_cast<uint8_t>(ElementKind::G2))
        fail(ErrorCode::MalformedEncoding, "bad length or kind tag for a Ghat element");
    typename E::G2 p;
    if (auto err = E::g2_read(in.data() + 1, p))
        throw Error(*err, "Ghat element rejected");
    return p;
}

template <PairingEngine E>
typename E::GT deserialize_gt(BytesView in)
{
    if (in.size() != 1 + E::kGtBytes || in[0] != static_cast<uint8_t>(ElementKind::GT))
        fail(ErrorCode::MalformedEncoding, "bad length or kind tag for a GT element");
    typename E::GT t;
    if (auto err = E::gt_read(in.data() + 1, t))
        throw Error(*err, "GT element rejected");
    return t;
}

}  // namespace ftmcfe
