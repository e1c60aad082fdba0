// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace ftmcfe {

// Fixed-width Montgomery arithmetic over an odd modulus of N 64-bit limbs
// (little-endian). All derived constants come out of the modulus at compile
// time, so a field is fully specified by its limb array.

using u128 = unsigned __int128;

template <size_t N>
using Limbs = std::array<uint64_t, N>;

template <size_t N>
constexpr int limbs_cmp(const Limbs<N>& a, const Limbs<N>& b)
{
    for (size_t i = N; i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

template <size_t N>
constexpr bool limbs_is_zero(const Limbs<N>& a)
{
    for (size_t i = 0; i < N; ++i)
        if (a[i] != 0)
            return false;
    return true;
}

// a -= b, returns borrow.
template <size_t N>
constexpr uint64_t limbs_sub(Limbs<N>& a, const Limbs<N>& b)
{
    uint64_t borrow = 0;
    for (size_t i = 0; i < N; ++i) {
        const u128 cur = (u128)a[i] - b[i] - borrow;
        a[i] = (uint64_t)cur;
        borrow = (uint64_t)(cur >> 64) & 1;
    }
    return borrow;
}

// a += b, returns carry.
template <size_t N>
constexpr uint64_t limbs_add(Limbs<N>& a, const Limbs<N>& b)
{
    uint64_t carry = 0;
    for (size_t i = 0; i < N; ++i) {
        const u128 cur = (u128)a[i] + b[i] + carry;
        a[i] = (uint64_t)cur;
        carry = (uint64_t)(cur >> 64);
    }
    return carry;
}

template <size_t N>
struct MontDomain {
    Limbs<N> mod{};
    uint64_t n0inv = 0;   // -mod^{-1} mod 2^64
    Limbs<N> r2{};        // R^2 mod p, R = 2^(64N)
    Limbs<N> r_mod_p{};   // R mod p (Montgomery form of 1)

    constexpr explicit MontDomain(const Limbs<N>& m) : mod(m)
    {
        uint64_t inv = 1;
        for (int i = 0; i < 6; ++i)
            inv *= 2 - m[0] * inv;
        n0inv = ~inv + 1;  // -inv mod 2^64

        Limbs<N> x{};
        x[0] = 1;
        // R mod p after 64N doublings, R^2 mod p after 128N.
        for (size_t i = 0; i < 128 * N; ++i) {
            uint64_t top = 0;
            for (size_t j = 0; j < N; ++j) {
                const uint64_t next = x[j] >> 63;
                x[j] = (x[j] << 1) | top;
                top = next;
            }
            if (top || limbs_cmp(x, mod) >= 0)
                limbs_sub(x, mod);
            if (i + 1 == 64 * N)
                r_mod_p = x;
        }
        r2 = x;
    }

    // CIOS Montgomery multiplication: returns a*b*R^{-1} mod p.
    constexpr Limbs<N> mul(const Limbs<N>& a, const Limbs<N>& b) const
    {
        std::array<uint64_t, N + 2> t{};
        for (size_t i = 0; i < N; ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < N; ++j) {
                const u128 cur = (u128)t[j] + (u128)a[i] * b[j] + carry;
                t[j] = (uint64_t)cur;
                carry = (uint64_t)(cur >> 64);
            }
            u128 cur = (u128)t[N] + carry;
            t[N] = (uint64_t)cur;
            t[N + 1] = (uint64_t)(cur >> 64);

            const uint64_t m = t[0] * n0inv;
            cur = (u128)t[0] + (u128)m * mod[0];
            carry = (uint64_t)(cur >> 64);
            for (size_t j = 1; j < N; ++j) {
                cur = (u128)t[j] + (u128)m * mod[j] + carry;
                t[j - 1] = (uint64_t)cur;
                carry = (uint64_t)(cur >> 64);
            }
            cur = (u128)t[N] + carry;
            t[N - 1] = (uint64_t)cur;
            t[N] = t[N + 1] + (uint64_t)(cur >> 64);
            t[N + 1] = 0;
        }
        Limbs<N> r{};
        for (size_t i = 0; i < N; ++i)
            r[i] = t[i];
        if (t[N] != 0 || limbs_cmp(r, mod) >= 0)
            limbs_sub(r, mod);
        return r;
    }

    constexpr Limbs<N> add(const Limbs<N>& a, const Limbs<N>& b) const
    {
        Limbs<N> r = a;
        const uint64_t carry = limbs_add(r, b);
        if (carry || limbs_cmp(r, mod) >= 0)
            limbs_sub(r, mod);
        return r;
    }

    constexpr Limbs<N> sub(const Limbs<N>& a, const Limbs<N>& b) const
    {
        Limbs<N> r = a;
        if (limbs_sub(r, b))
            limbs_add(r, mod);
        return r;
    }

    constexpr Limbs<N> neg(const Limbs<N>& a) const
    {
        if (limbs_is_zero(a))
            return a;
        Limbs<N> r = mod;
        limbs_sub(r, a);
        return r;
    }

    constexpr Limbs<N> to_mont(const Limbs<N>& a) const { return mul(a, r2); }

    constexpr Limbs<N> from_mont(const Limbs<N>& a) const
    {
        Limbs<N> one{};
        one[0] = 1;
        return mul(a, one);
    }
};

}  // namespace ftmcfe
