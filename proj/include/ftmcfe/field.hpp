// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/errors.hpp"
#include "ftmcfe/gmp_util.hpp"
#include "ftmcfe/mont.hpp"

#include <cstring>
#include <vector>

namespace ftmcfe {

// Prime field with Montgomery representation. Tag supplies the modulus:
//   struct Tag { static constexpr size_t kLimbs; static constexpr Limbs<kLimbs> kModulus; };
template <typename Tag>
class PrimeField {
public:
    static constexpr size_t kLimbs = Tag::kLimbs;
    static constexpr size_t kBytes = kLimbs * 8;
    static constexpr MontDomain<kLimbs> kDomain{Tag::kModulus};

    using Repr = Limbs<kLimbs>;

    constexpr PrimeField() = default;

    static constexpr PrimeField zero() { return PrimeField{}; }
    static constexpr PrimeField one() { return from_repr(kDomain.r_mod_p); }

    static constexpr PrimeField from_u64(uint64_t v)
    {
        Repr r{};
        r[0] = v;
        // values below the modulus need no reduction before to_mont
        return from_repr(kDomain.to_mont(r));
    }

    // Montgomery-form constructor; internal use and serialization paths.
    static constexpr PrimeField from_repr(const Repr& r)
    {
        PrimeField f;
        f.v_ = r;
        return f;
    }
    constexpr const Repr& repr() const { return v_; }

    // Canonical little-endian limb value in [0, p).
    Repr to_limbs() const { return kDomain.from_mont(v_); }

    static PrimeField from_limbs(const Repr& canonical) { return from_repr(kDomain.to_mont(canonical)); }

    friend constexpr PrimeField operator+(const PrimeField& a, const PrimeField& b)
    {
        return from_repr(kDomain.add(a.v_, b.v_));
    }
    friend constexpr PrimeField operator-(const PrimeField& a, const PrimeField& b)
    {
        return from_repr(kDomain.sub(a.v_, b.v_));
    }
    friend constexpr PrimeField operator*(const PrimeField& a, const PrimeField& b)
    {
        return from_repr(kDomain.mul(a.v_, b.v_));
    }
    constexpr PrimeField operator-() const { return from_repr(kDomain.neg(v_)); }
    constexpr PrimeField square() const { return *this * *this; }

    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    constexpr bool operator==(const PrimeField& o) const { return v_ == o.v_; }
    constexpr bool is_zero() const { return limbs_is_zero(v_); }

    PrimeField dbl() const { return *this + *this; }

    PrimeField inverse() const
    {
        if (is_zero())
            fail(ErrorCode::UsageError, "inverse of zero");
        Repr canonical = to_limbs();
        mont_limbs_invert<kLimbs>(canonical, Tag::kModulus);
        return from_limbs(canonical);
    }

    // Exponentiation by a canonical little-endian limb value.
    PrimeField pow(const std::vector<uint64_t>& exp) const
    {
        PrimeField result = one();
        PrimeField base = *this;
        bool started = false;
        for (size_t i = exp.size(); i-- > 0;) {
            for (int bit = 63; bit >= 0; --bit) {
                if (started)
                    result = result.square();
                if ((exp[i] >> bit) & 1) {
                    if (started)
                        result = result * base;
                    else {
                        result = base;
                        started = true;
                    }
                }
            }
        }
        return started ? result : one();
    }

    // Square root for p = 3 (mod 4): candidate a^((p+1)/4), verified.
    bool sqrt(PrimeField& out) const
    {
        static const std::vector<uint64_t> e = [] {
            Mpz p = Mpz::from_limbs(Tag::kModulus);
            mpz_add_ui(p.raw(), p.raw(), 1);
            mpz_fdiv_q_2exp(p.raw(), p.raw(), 2);
            std::vector<uint64_t> limbs(kLimbs, 0);
            size_t count = 0;
            mpz_export(limbs.data(), &count, -1, sizeof(uint64_t), 0, 0, p.raw());
            return limbs;
        }();
        const PrimeField cand = pow(e);
        if (cand.square() == *this) {
            out = cand;
            return true;
        }
        return false;
    }

    // Canonical big-endian encoding, kBytes wide.
    void to_bytes_be(uint8_t* out) const
    {
        const Repr c = to_limbs();
        for (size_t i = 0; i < kLimbs; ++i) {
            const uint64_t limb = c[kLimbs - 1 - i];
            for (int b = 0; b < 8; ++b)
                out[i * 8 + b] = static_cast<uint8_t>(limb >> (56 - 8 * b));
        }
    }

    Bytes to_bytes() const
    {
        Bytes out(kBytes);
        to_bytes_be(out.data());
        return out;
    }

    // Rejects non-canonical (>= p) encodings.
    static bool from_bytes_be(const uint8_t* in, PrimeField& out)
    {
        Repr c{};
        for (size_t i = 0; i < kLimbs; ++i) {
            uint64_t limb = 0;
            for (int b = 0; b < 8; ++b)
                limb = (limb << 8) | in[i * 8 + b];
            c[kLimbs - 1 - i] = limb;
        }
        if (limbs_cmp(c, Tag::kModulus) >= 0)
            return false;
        out = from_limbs(c);
        return true;
    }

    // Wide reduction of an arbitrary big-endian byte string (hash outputs).
    static PrimeField from_bytes_reduce(BytesView bytes)
    {
        return from_limbs(limbs_mod_from_bytes<kLimbs>(bytes, Tag::kModulus));
    }

    // True if the canonical value is > (p-1)/2; fixes the "largest root" sign bit.
    bool is_lexicographically_largest() const
    {
        static const Repr half = [] {
            Mpz p = Mpz::from_limbs(Tag::kModulus);
            mpz_sub_ui(p.raw(), p.raw(), 1);
            mpz_fdiv_q_2exp(p.raw(), p.raw(), 1);
            return p.to_limbs<kLimbs>();
        }();
        return limbs_cmp(to_limbs(), half) > 0;
    }

private:
    Repr v_{};
};

}  // namespace ftmcfe
