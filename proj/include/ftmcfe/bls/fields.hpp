// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/field.hpp"
#include "ftmcfe/quad_ext.hpp"

namespace ftmcfe::bls {

struct BaseFieldTag {
    static constexpr size_t kLimbs = 6;
    static constexpr Limbs<6> kModulus = {0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL,
        0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL};
};

struct ScalarFieldTag {
    static constexpr size_t kLimbs = 4;
    static constexpr Limbs<4> kModulus = {
        0xffffffff00000001ULL, 0x53bda402fffe5bfeULL, 0x3339d80809a1d805ULL, 0x73eda753299d7d48ULL};
};

using Fp = PrimeField<BaseFieldTag>;
using Fr = PrimeField<ScalarFieldTag>;
using Fp2 = QuadExt<Fp>;

// BLS parameter z = -0xd201000000010000; |z| fits one limb.
inline constexpr uint64_t kAbsZ = 0xd201000000010000ULL;

inline Fp2 xi()
{
    return {Fp::one(), Fp::one()};  // 1 + i, the Fp6/Fp12 tower non-residue
}

inline Fp2 mul_by_xi(const Fp2& a)
{
    return {a.c0 - a.c1, a.c0 + a.c1};
}

// Fp6 = Fp2[v]/(v^3 - xi)
struct Fp6 {
    Fp2 c0, c1, c2;

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }
    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }

    friend Fp6 operator+(const Fp6& a, const Fp6& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
    friend Fp6 operator-(const Fp6& a, const Fp6& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
    Fp6 operator-() const { return {-c0, -c1, -c2}; }

    friend Fp6 operator*(const Fp6& a, const Fp6& b)
    {
        const Fp2 t0 = a.c0 * b.c0;
        const Fp2 t1 = a.c1 * b.c1;
        const Fp2 t2 = a.c2 * b.c2;
        const Fp2 r0 = t0 + mul_by_xi((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2);
        const Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + mul_by_xi(t2);
        const Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1;
        return {r0, r1, r2};
    }

    Fp6 square() const { return *this * *this; }

    // Multiplication by v: (c0, c1, c2) -> (xi*c2, c0, c1).
    Fp6 mul_by_v() const { return {mul_by_xi(c2), c0, c1}; }

    Fp6 inverse() const
    {
        const Fp2 a = c0.square() - mul_by_xi(c1 * c2);
        const Fp2 b = mul_by_xi(c2.square()) - c0 * c1;
        const Fp2 c = c1.square() - c0 * c2;
        const Fp2 f = (c0 * a + mul_by_xi(c1 * c + c2 * b)).inverse();
        return {a * f, b * f, c * f};
    }
};

// Fp12 = Fp6[w]/(w^2 - v)
struct Fp12 {
    Fp6 c0, c1;

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }

    friend Fp12 operator*(const Fp12& a, const Fp12& b)
    {
        const Fp6 aa = a.c0 * b.c0;
        const Fp6 bb = a.c1 * b.c1;
        const Fp6 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - aa - bb;
        return {aa + bb.mul_by_v(), r1};
    }

    Fp12 square() const
    {
        const Fp6 ab = c0 * c1;
        const Fp6 t = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t - ab - ab.mul_by_v(), ab + ab};
    }

    // Conjugation over Fp6; equals inversion on the cyclotomic subgroup.
    Fp12 conjugate() const { return {c0, -c1}; }

    Fp12 inverse() const
    {
        const Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * t, -(c1 * t)};
    }

    // x -> x^p. Tower constants derived from xi at first use.
    Fp12 frobenius() const;

    Fp12 pow(const std::vector<uint64_t>& exp) const
    {
        Fp12 result = one();
        bool started = false;
        for (size_t i = exp.size(); i-- > 0;) {
            for (int bit = 63; bit >= 0; --bit) {
                if (started)
                    result = result.square();
                if ((exp[i] >> bit) & 1) {
                    if (started)
                        result = result * *this;
                    else {
                        result = *this;
                        started = true;
                    }
                }
            }
        }
        return started ? result : one();
    }
};

struct FrobeniusConstants {
    Fp2 a;   // xi^((p-1)/3): multiplies the v^j coefficients
    Fp2 b;   // xi^((p-1)/6): multiplies the w part
    Fp2 a2;  // a^2
};

inline const FrobeniusConstants& frobenius_constants()
{
    static const FrobeniusConstants k = [] {
        Mpz p = Mpz::from_limbs(BaseFieldTag::kModulus);
        mpz_sub_ui(p.raw(), p.raw(), 1);
        Mpz e3 = p, e6 = p;
        mpz_fdiv_q_ui(e3.raw(), p.raw(), 3);
        mpz_fdiv_q_ui(e6.raw(), p.raw(), 6);
        const auto to_vec = [](const Mpz& z) {
            std::vector<uint64_t> limbs(6, 0);
            size_t count = 0;
            mpz_export(limbs.data(), &count, -1, sizeof(uint64_t), 0, 0, z.raw());
            return limbs;
        };
        FrobeniusConstants c;
        c.a = xi().pow(to_vec(e3));
        c.b = xi().pow(to_vec(e6));
        c.a2 = c.a.square();
        return c;
    }();
    return k;
}

inline Fp12 Fp12::frobenius() const
{
    const auto& k = frobenius_constants();
    Fp6 a{c0.c0.conjugate(), c0.c1.conjugate() * k.a, c0.c2.conjugate() * k.a2};
    Fp6 b{c1.c0.conjugate() * k.b, c1.c1.conjugate() * k.a * k.b, c1.c2.conjugate() * k.a2 * k.b};
    return {a, b};
}

}  // namespace ftmcfe::bls
