// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/bytes.hpp"

#include <array>
#include <string_view>

namespace ftmcfe {

using Digest = std::array<uint8_t, 32>;

Digest sha256(BytesView data);

/// expand_message_xmd with SHA-256 (RFC 9380 §5.3.1). `len` up to 255*32 bytes.
Bytes expand_message_xmd(BytesView msg, std::string_view dst, size_t len);

/// Deterministic byte stream: SHA-256 over (seed, counter). Used wherever the
/// caller owns the randomness; two streams with the same seed are identical.
class Rng {
public:
    explicit Rng(uint64_t seed);
    explicit Rng(BytesView seed);

    void fill(uint8_t* out, size_t len);
    Bytes bytes(size_t len);
    uint64_t next_u64();

    /// Uniform in [0, bound) by rejection from 64-bit draws. bound > 0.
    uint64_t below(uint64_t bound);

private:
    Digest key_{};
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> buf_{};
    size_t avail_ = 0;
};

}  // namespace ftmcfe
