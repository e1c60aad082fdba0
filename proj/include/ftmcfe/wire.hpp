// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/scheme.hpp"

#include <cstring>
#include <string>

namespace ftmcfe {

// Binary containers. Element fields use the tagged element encoding from
// core.hpp; integers are big-endian.
//
//   FTMC header: magic "FTMC", version u8, kind u8
//   FTPG header: magic "FTPG", version u8, n u32-BE (powers-of-gamma blob)

inline constexpr uint8_t kWireVersion = 1;

enum class WireKind : uint8_t {
    MasterPublicKey = 1,
    ClientKey = 2,
    PartialKey = 3,
    Ciphertext = 4,
};

class WireReader {
public:
    explicit WireReader(BytesView data) : data_(data) {}

    uint8_t u8()
    {
        need(1);
        return data_[pos_++];
    }

    uint32_t u32()
    {
        need(4);
        const uint32_t v = read_u32_be(data_, pos_);
        pos_ += 4;
        return v;
    }

    uint64_t u64()
    {
        need(8);
        const uint64_t v = read_u64_be(data_, pos_);
        pos_ += 8;
        return v;
    }

    BytesView take(size_t len)
    {
        need(len);
        BytesView v = data_.subspan(pos_, len);
        pos_ += len;
        return v;
    }

    void expect_magic(std::string_view magic)
    {
        const auto got = take(magic.size());
        if (!std::equal(magic.begin(), magic.end(), got.begin()))
            fail(ErrorCode::MalformedEncoding, "bad magic");
    }

    void expect_version()
    {
        if (u8() != kWireVersion)
            fail(ErrorCode::VersionMismatch, "unsupported wire version");
    }

    bool done() const { return pos_ == data_.size(); }

    void expect_done() const
    {
        if (!done())
            fail(ErrorCode::MalformedEncoding, "trailing bytes");
    }

private:
    void need(size_t len) const
    {
        if (pos_ + len > data_.size())
            fail(ErrorCode::MalformedEncoding, "truncated buffer");
    }

    BytesView data_;
    size_t pos_ = 0;
};

namespace wire_detail {

template <PairingEngine E>
void put_g1(Bytes& out, const typename E::G1& p)
{
    append(out, BytesView(serialize_element<E>(p)));
}

template <PairingEngine E>
void put_g2(Bytes& out, const typename E::G2& p)
{
    append(out, BytesView(serialize_element<E>(p)));
}

template <PairingEngine E>
void put_scalar(Bytes& out, const typename E::Scalar& s)
{
    uint8_t buf[32];
    scalar_to_bytes32<E>(s, buf);
    out.insert(out.end(), buf, buf + 32);
}

template <PairingEngine E>
typename E::G1 get_g1(WireReader& r)
{
    return deserialize_g1<E>(r.take(1 + E::kG1Bytes));
}

template <PairingEngine E>
typename E::G2 get_g2(WireReader& r)
{
    return deserialize_g2<E>(r.take(1 + E::kG2Bytes));
}

template <PairingEngine E>
typename E::Scalar get_scalar(WireReader& r)
{
    return scalar_from_bytes32<E>(r.take(32).data());
}

inline void put_digest(Bytes& out, const Digest& d)
{
    out.insert(out.end(), d.begin(), d.end());
}

inline Digest get_digest(WireReader& r)
{
    Digest d;
    const auto v = r.take(32);
    std::copy(v.begin(), v.end(), d.begin());
    return d;
}

inline void header(Bytes& out, WireKind kind)
{
    append(out, std::string_view("FTMC"));
    append_u8(out, kWireVersion);
    append_u8(out, static_cast<uint8_t>(kind));
}

inline void expect_header(WireReader& r, WireKind kind)
{
    r.expect_magic("FTMC");
    r.expect_version();
    if (r.u8() != static_cast<uint8_t>(kind))
        fail(ErrorCode::MalformedEncoding, "unexpected object kind");
}

}  // namespace wire_detail

// --- powers-of-gamma blob (FTPG) ---

template <PairingEngine E>
Bytes serialize_powers(const PowersOfGamma<E>& powers)
{
    Bytes out;
    append(out, std::string_view("FTPG"));
    append_u8(out, kWireVersion);
    append_u32_be(out, powers.n());
    for (const auto& p : powers.g1_row)
        wire_detail::put_g1<E>(out, p);
    for (const auto& p : powers.g2_row)
        wire_detail::put_g1<E>(out, p);
    for (const auto& p : powers.ghat1_row)
        wire_detail::put_g2<E>(out, p);
    return out;
}

template <PairingEngine E>
PowersOfGamma<E> deserialize_powers(WireReader& r)
{
    r.expect_magic("FTPG");
    r.expect_version();
    const uint32_t n = r.u32();
    if (n < 1 || n > (1u << 20))
        fail(ErrorCode::MalformedEncoding, "implausible client count");
    PowersOfGamma<E> powers;
    powers.g1_row.reserve(n + 1);
    powers.g2_row.reserve(n + 1);
    powers.ghat1_row.reserve(n + 1);
    for (uint32_t j = 0; j <= n; ++j)
        powers.g1_row.push_back(wire_detail::get_g1<E>(r));
    for (uint32_t j = 0; j <= n; ++j)
        powers.g2_row.push_back(wire_detail::get_g1<E>(r));
    for (uint32_t j = 0; j <= n; ++j)
        powers.ghat1_row.push_back(wire_detail::get_g2<E>(r));
    return powers;
}

// --- master public key ---

template <PairingEngine E>
Bytes serialize_mpk(const MasterPublicKey<E>& mpk)
{
    Bytes out;
    wire_detail::header(out, WireKind::MasterPublicKey);
    append_u8(out, static_cast<uint8_t>(E::kCurveId.size()));
    append(out, E::kCurveId);
    wire_detail::put_g1<E>(out, mpk.ctx.g0);
    wire_detail::put_g1<E>(out, mpk.ctx.g1);
    wire_detail::put_g1<E>(out, mpk.ctx.g2);
    wire_detail::put_g1<E>(out, mpk.ctx.g);
    wire_detail::put_g2<E>(out, mpk.ctx.ghat0);
    wire_detail::put_g2<E>(out, mpk.ctx.ghat1);
    wire_detail::put_g2<E>(out, mpk.ctx.ghat2);
    wire_detail::put_g2<E>(out, mpk.ctx.ghat);
    append_u32_be(out, mpk.n);
    append(out, BytesView(serialize_powers<E>(mpk.powers)));
    return out;
}

template <PairingEngine E>
MasterPublicKey<E> deserialize_mpk(BytesView data)
{
    WireReader r(data);
    wire_detail::expect_header(r, WireKind::MasterPublicKey);
    const uint8_t idlen = r.u8();
    const auto id = r.take(idlen);
    if (std::string_view(reinterpret_cast<const char*>(id.data()), id.size()) != E::kCurveId)
        fail(ErrorCode::UnsupportedCurve, "key material from a different curve");

    MasterPublicKey<E> mpk;
    mpk.ctx = init_pairing<E>();
    // generators are derived, not trusted from the wire; any difference means
    // the blob was not produced for this context
    const auto check_g1 = [&](const typename E::G1& expect) {
        if (!(wire_detail::get_g1<E>(r) == expect))
            fail(ErrorCode::CorruptKey, "generator mismatch");
    };
    const auto check_g2 = [&](const typename E::G2& expect) {
        if (!(wire_detail::get_g2<E>(r) == expect))
            fail(ErrorCode::CorruptKey, "generator mismatch");
    };
    check_g1(mpk.ctx.g0);
    check_g1(mpk.ctx.g1);
    check_g1(mpk.ctx.g2);
    check_g1(mpk.ctx.g);
    check_g2(mpk.ctx.ghat0);
    check_g2(mpk.ctx.ghat1);
    check_g2(mpk.ctx.ghat2);
    check_g2(mpk.ctx.ghat);

    mpk.n = r.u32();
    mpk.powers = deserialize_powers<E>(r);
    r.expect_done();
    if (mpk.powers.n() != mpk.n)
        fail(ErrorCode::CorruptKey, "reference string sized for a different n");
    return mpk;
}

// --- client key pair ---

template <PairingEngine E>
Bytes serialize_client_key(const ClientKeyPair<E>& kp)
{
    Bytes out;
    wire_detail::header(out, WireKind::ClientKey);
    append_u32_be(out, kp.index);
    wire_detail::put_scalar<E>(out, kp.s.d1);
    wire_detail::put_scalar<E>(out, kp.s.d2);
    wire_detail::put_scalar<E>(out, kp.t.d1);
    wire_detail::put_scalar<E>(out, kp.t.d2);
    wire_detail::put_scalar<E>(out, kp.w);
    return out;
}

template <PairingEngine E>
ClientKeyPair<E> deserialize_client_key(BytesView data)
{
    WireReader r(data);
    wire_detail::expect_header(r, WireKind::ClientKey);
    ClientKeyPair<E> kp;
    kp.index = r.u32();
    kp.s.d1 = wire_detail::get_scalar<E>(r);
    kp.s.d2 = wire_detail::get_scalar<E>(r);
    kp.t.d1 = wire_detail::get_scalar<E>(r);
    kp.t.d2 = wire_detail::get_scalar<E>(r);
    kp.w = wire_detail::get_scalar<E>(r);
    r.expect_done();
    return kp;
}

// --- partial functional key ---

template <PairingEngine E>
Bytes serialize_partial_key(const PartialFunctionalKey<E>& key)
{
    Bytes out;
    wire_detail::header(out, WireKind::PartialKey);
    append_u32_be(out, key.index);
    wire_detail::put_g2<E>(out, key.sk1.c1);
    wire_detail::put_g2<E>(out, key.sk1.c2);
    wire_detail::put_g2<E>(out, key.sk2.c1);
    wire_detail::put_g2<E>(out, key.sk2.c2);
    wire_detail::put_g1<E>(out, key.sk3.c1);
    wire_detail::put_g1<E>(out, key.sk3.c2);
    wire_detail::put_g2<E>(out, key.sk4.c1);
    wire_detail::put_g2<E>(out, key.sk4.c2);
    wire_detail::put_g1<E>(out, key.sk5.c1);
    wire_detail::put_g1<E>(out, key.sk5.c2);
    wire_detail::put_g1<E>(out, key.commit_g2_shifted);
    wire_detail::put_g2<E>(out, key.set_commit_ghat1);
    wire_detail::put_digest(out, key.b_digest);
    wire_detail::put_digest(out, key.y_digest);
    append_u32_be(out, key.t);
    return out;
}

template <PairingEngine E>
PartialFunctionalKey<E> deserialize_partial_key(BytesView data)
{
    WireReader r(data);
    wire_detail::expect_header(r, WireKind::PartialKey);
    PartialFunctionalKey<E> key;
    key.index = r.u32();
    key.sk1 = {wire_detail::get_g2<E>(r), wire_detail::get_g2<E>(r)};
    key.sk2 = {wire_detail::get_g2<E>(r), wire_detail::get_g2<E>(r)};
    key.sk3 = {wire_detail::get_g1<E>(r), wire_detail::get_g1<E>(r)};
    key.sk4 = {wire_detail::get_g2<E>(r), wire_detail::get_g2<E>(r)};
    key.sk5 = {wire_detail::get_g1<E>(r), wire_detail::get_g1<E>(r)};
    key.commit_g2_shifted = wire_detail::get_g1<E>(r);
    key.set_commit_ghat1 = wire_detail::get_g2<E>(r);
    key.b_digest = wire_detail::get_digest(r);
    key.y_digest = wire_detail::get_digest(r);
    key.t = r.u32();
    r.expect_done();
    return key;
}

// --- ciphertext ---

template <PairingEngine E>
Bytes serialize_ciphertext(const Ciphertext<E>& ct)
{
    Bytes out;
    wire_detail::header(out, WireKind::Ciphertext);
    append_u32_be(out, ct.index);
    append_u32_be(out, static_cast<uint32_t>(ct.label.size()));
    append(out, std::string_view(ct.label));
    append_u32_be(out, ct.t);
    wire_detail::put_g1<E>(out, ct.c1.c1);
    wire_detail::put_g1<E>(out, ct.c1.c2);
    wire_detail::put_g1<E>(out, ct.c2.c1);
    wire_detail::put_g1<E>(out, ct.c2.c2);
    wire_detail::put_g1<E>(out, ct.c3);
    wire_detail::put_g2<E>(out, ct.c4);
    wire_detail::put_g1<E>(out, ct.c5.c1);
    wire_detail::put_g1<E>(out, ct.c5.c2);
    return out;
}

template <PairingEngine E>
Ciphertext<E> deserialize_ciphertext(BytesView data)
{
    WireReader r(data);
    wire_detail::expect_header(r, WireKind::Ciphertext);
    Ciphertext<E> ct;
    ct.index = r.u32();
    const uint32_t label_len = r.u32();
    if (label_len > (1u << 20))
        fail(ErrorCode::MalformedEncoding, "implausible label length");
    const auto label = r.take(label_len);
    ct.label.assign(label.begin(), label.end());
    ct.t = r.u32();
    ct.c1 = {wire_detail::get_g1<E>(r), wire_detail::get_g1<E>(r)};
    ct.c2 = {wire_detail::get_g1<E>(r), wire_detail::get_g1<E>(r)};
    ct.c3 = wire_detail::get_g1<E>(r);
    ct.c4 = wire_detail::get_g2<E>(r);
    ct.c5 = {wire_detail::get_g1<E>(r), wire_detail::get_g1<E>(r)};
    r.expect_done();
    return ct;
}

}  // namespace ftmcfe
