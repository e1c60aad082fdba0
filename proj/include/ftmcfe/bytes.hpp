// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ftmcfe {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

inline void append(Bytes& out, BytesView more)
{
    out.insert(out.end(), more.begin(), more.end());
}

inline void append(Bytes& out, std::string_view s)
{
    out.insert(out.end(), s.begin(), s.end());
}

inline void append_u8(Bytes& out, uint8_t v)
{
    out.push_back(v);
}

inline void append_u32_be(Bytes& out, uint32_t v)
{
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline void append_u64_be(Bytes& out, uint64_t v)
{
    for (int i = 7; i >= 0; --i)
        out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline uint32_t read_u32_be(BytesView in, size_t off)
{
    return (uint32_t(in[off]) << 24) | (uint32_t(in[off + 1]) << 16) | (uint32_t(in[off + 2]) << 8) |
           uint32_t(in[off + 3]);
}

inline uint64_t read_u64_be(BytesView in, size_t off)
{
    uint64_t v = 0;
    for (size_t i = 0; i < 8; ++i)
        v = (v << 8) | in[off + i];
    return v;
}

inline Bytes from_string(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

inline std::string to_hex(BytesView in)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(in.size() * 2);
    for (uint8_t b : in) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace ftmcfe
