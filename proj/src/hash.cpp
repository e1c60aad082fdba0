// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ftmcfe/hash.hpp"

#include "ftmcfe/errors.hpp"

#include <openssl/sha.h>

#include <cstring>

namespace ftmcfe {

Digest sha256(BytesView data)
{
    Digest out;
    SHA256(data.data(), data.size(), out.data());
    return out;
}

Bytes expand_message_xmd(BytesView msg, std::string_view dst, size_t len)
{
    constexpr size_t b_in_bytes = 32;
    constexpr size_t s_in_bytes = 64;
    const size_t ell = (len + b_in_bytes - 1) / b_in_bytes;
    if (ell > 255 || len == 0 || dst.size() > 255)
        fail(ErrorCode::UsageError, "expand_message_xmd parameter out of range");

    Bytes dst_prime(dst.begin(), dst.end());
    dst_prime.push_back(static_cast<uint8_t>(dst.size()));

    Bytes b0_in(s_in_bytes, 0);
    append(b0_in, msg);
    append_u8(b0_in, static_cast<uint8_t>(len >> 8));
    append_u8(b0_in, static_cast<uint8_t>(len));
    append_u8(b0_in, 0);
    append(b0_in, BytesView(dst_prime));
    const Digest b0 = sha256(b0_in);

    Bytes bi_in(b0.begin(), b0.end());
    append_u8(bi_in, 1);
    append(bi_in, BytesView(dst_prime));
    Digest bi = sha256(bi_in);

    Bytes out(bi.begin(), bi.end());
    for (size_t i = 2; i <= ell; ++i) {
        Bytes next;
        next.reserve(32 + 1 + dst_prime.size());
        for (size_t j = 0; j < 32; ++j)
            next.push_back(static_cast<uint8_t>(b0[j] ^ bi[j]));
        append_u8(next, static_cast<uint8_t>(i));
        append(next, BytesView(dst_prime));
        bi = sha256(next);
        out.insert(out.end(), bi.begin(), bi.end());
    }
    out.resize(len);
    return out;
}

Rng::Rng(uint64_t seed)
{
    Bytes s;
    append(s, std::string_view("ftmcfe/rng/v1"));
    append_u64_be(s, seed);
    key_ = sha256(s);
}

Rng::Rng(BytesView seed)
{
    Bytes s;
    append(s, std::string_view("ftmcfe/rng/v1"));
    append(s, seed);
    key_ = sha256(s);
}

void Rng::fill(uint8_t* out, size_t len)
{
    while (len > 0) {
        if (avail_ == 0) {
            Bytes block(key_.begin(), key_.end());
            append_u64_be(block, counter_++);
            buf_ = sha256(block);
            avail_ = buf_.size();
        }
        const size_t take = std::min(len, avail_);
        std::memcpy(out, buf_.data() + (buf_.size() - avail_), take);
        avail_ -= take;
        out += take;
        len -= take;
    }
}

Bytes Rng::bytes(size_t len)
{
    Bytes out(len);
    fill(out.data(), len);
    return out;
}

uint64_t Rng::next_u64()
{
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v = (v << 8) | b[i];
    return v;
}

uint64_t Rng::below(uint64_t bound)
{
    const uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        const uint64_t v = next_u64();
        if (v < limit || limit == 0)
            return v % bound;
    }
}

}  // namespace ftmcfe
