// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/bytes.hpp"
#include "ftmcfe/ec.hpp"
#include "ftmcfe/errors.hpp"
#include "ftmcfe/field.hpp"
#include "ftmcfe/hash.hpp"
#include "ftmcfe/quad_ext.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <vector>

namespace ftmcfe::toy {

// Small supersingular pairing configuration for fast exhaustive testing:
// E: y^2 = x^3 + x over F_q, q = 4r - 1, both prime, q = 3 (mod 4). The
// second source group is the image of E(F_q)[r] under the distortion map
// (x, y) -> (-x, iy); elements store the preimage, so G2 arithmetic is plain
// curve arithmetic and the groups stay distinct at the type level. Pairing is
// the reduced Tate pairing with denominator elimination (embedding degree 2).
// Test-scale parameters only; no security is claimed at this size.

struct QTag {
    static constexpr size_t kLimbs = 1;
    static constexpr Limbs<1> kModulus = {4398046511731ULL};
};

struct RTag {
    static constexpr size_t kLimbs = 1;
    static constexpr Limbs<1> kModulus = {1099511627933ULL};
};

using Fq = PrimeField<QTag>;
using Frt = PrimeField<RTag>;
using Fq2 = QuadExt<Fq>;

struct CurveConfig {
    static constexpr bool kAIsZero = false;
    static Fq a() { return Fq::one(); }
    static Fq b() { return Fq::zero(); }
};

using CurveE = Curve<Fq, CurveConfig>;

struct G2Point {
    CurveE::Affine pre;  // actual element is (-pre.x, i*pre.y)

    bool is_identity() const { return pre.is_identity(); }
    bool operator==(const G2Point& o) const { return pre == o.pre; }
};

namespace detail {

inline const std::vector<uint64_t>& order_limbs()
{
    static const std::vector<uint64_t> r = {RTag::kModulus[0]};
    return r;
}

// f_{r,P} evaluated at the distorted point (-xq, i*yq), verticals elided.
inline Fq2 miller_loop(const CurveE::Affine& p, const CurveE::Affine& q)
{
    const Fq xh = -q.x;
    const Fq yh = q.y;
    const Fq three = Fq::from_u64(3);
    Fq2 f = Fq2::one();
    CurveE::Affine t = p;
    const uint64_t r = RTag::kModulus[0];
    int top = 63;
    while (!((r >> top) & 1))
        --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        {
            const Fq lambda = (t.x.square() * three + Fq::one()) * (t.y.dbl()).inverse();
            const Fq2 line{-t.y - lambda * (xh - t.x), yh};
            f = f.square() * line;
            const Fq x3 = lambda.square() - t.x - t.x;
            t = {x3, lambda * (t.x - x3) - t.y, false};
        }
        if ((r >> bit) & 1) {
            if (t.x == p.x && (t.y + p.y).is_zero()) {
                // vertical line through T and -T; value lies in F_q and is
                // killed by the final exponentiation
                t = CurveE::Affine::identity();
            } else {
                const Fq lambda = (p.y - t.y) * (p.x - t.x).inverse();
                const Fq2 line{-t.y - lambda * (xh - t.x), yh};
                f = f * line;
                const Fq x3 = lambda.square() - t.x - p.x;
                t = {x3, lambda * (t.x - x3) - t.y, false};
            }
        }
    }
    assert(t.is_identity());
    return f;
}

// f^((q^2-1)/r) = (f^(q-1))^4; Frobenius is conjugation.
inline Fq2 final_exponentiation(const Fq2& f)
{
    const Fq2 t = f.conjugate() * f.inverse();
    return t.square().square();
}

}  // namespace detail

struct ToyPairing {
    static constexpr std::string_view kCurveId = "toy-ss42";

    using Scalar = Frt;
    using G1 = CurveE::Affine;
    using G2 = G2Point;
    using GT = Fq2;

    static constexpr size_t kG1Bytes = 9;
    static constexpr size_t kG2Bytes = 9;
    static constexpr size_t kGtBytes = 16;

    static G1 g1_identity() { return G1::identity(); }
    static G1 g1_add(const G1& a, const G1& b)
    {
        return CurveE::to_affine(CurveE::add(CurveE::to_jacobian(a), CurveE::to_jacobian(b)));
    }
    static G1 g1_neg(const G1& a) { return a.negate(); }
    static G1 g1_mul(const G1& a, const Scalar& s)
    {
        const auto limbs = s.to_limbs();
        return CurveE::mul_affine(a, std::span<const uint64_t>(limbs.data(), limbs.size()));
    }
    static G1 g1_multi_mul(std::span<const G1> bases, std::span<const Scalar> scalars)
    {
        CurveE::Jacobian acc{};
        for (size_t i = 0; i < bases.size(); ++i) {
            const auto limbs = scalars[i].to_limbs();
            acc = CurveE::add(
                acc, CurveE::mul(CurveE::to_jacobian(bases[i]), std::span<const uint64_t>(limbs)));
        }
        return CurveE::to_affine(acc);
    }

    static G2 g2_identity() { return G2{G1::identity()}; }
    static G2 g2_add(const G2& a, const G2& b) { return G2{g1_add(a.pre, b.pre)}; }
    static G2 g2_neg(const G2& a) { return G2{a.pre.negate()}; }
    static G2 g2_mul(const G2& a, const Scalar& s) { return G2{g1_mul(a.pre, s)}; }
    static G2 g2_multi_mul(std::span<const G2> bases, std::span<const Scalar> scalars)
    {
        CurveE::Jacobian acc{};
        for (size_t i = 0; i < bases.size(); ++i) {
            const auto limbs = scalars[i].to_limbs();
            acc = CurveE::add(
                acc, CurveE::mul(CurveE::to_jacobian(bases[i].pre), std::span<const uint64_t>(limbs)));
        }
        return G2{CurveE::to_affine(acc)};
    }

    static GT gt_one() { return GT::one(); }
    static GT gt_mul(const GT& a, const GT& b) { return a * b; }
    static GT gt_inv(const GT& a) { return a.conjugate(); }  // unit-norm invariant
    static GT gt_pow(const GT& a, const Scalar& s)
    {
        const auto limbs = s.to_limbs();
        return a.pow(std::vector<uint64_t>(limbs.begin(), limbs.end()));
    }
    static bool gt_is_one(const GT& a) { return a == GT::one(); }

    static GT pair(const G1& p, const G2& q)
    {
        if (p.is_identity() || q.is_identity())
            return GT::one();
        return detail::final_exponentiation(detail::miller_loop(p, q.pre));
    }

    struct PairTerm {
        G1 a;
        G2 b;
        bool negate = false;
    };

    static GT multi_pair(std::span<const PairTerm> terms)
    {
        Fq2 f = Fq2::one();
        bool any = false;
        for (const auto& t : terms) {
            if (t.a.is_identity() || t.b.is_identity())
                continue;
            const Fq2 v = detail::miller_loop(t.negate ? t.a.negate() : t.a, t.b.pre);
            f = f * v;
            any = true;
        }
        if (!any)
            return GT::one();
        return detail::final_exponentiation(f);
    }

    static bool g1_in_subgroup(const G1& p)
    {
        if (p.is_identity())
            return true;
        if (!p.on_curve())
            return false;
        return CurveE::mul(CurveE::to_jacobian(p), detail::order_limbs()).is_identity();
    }
    static bool g2_in_subgroup(const G2& p) { return g1_in_subgroup(p.pre); }
    static bool gt_in_subgroup(const GT& a)
    {
        if (a.is_zero())
            return false;
        return a.pow(detail::order_limbs()) == GT::one();
    }

    static G1 hash_to_g1(BytesView msg, std::string_view dst)
    {
        for (uint32_t ctr = 0; ctr < 256; ++ctr) {
            Bytes input(msg.begin(), msg.end());
            append_u8(input, static_cast<uint8_t>(ctr));
            const Bytes u = expand_message_xmd(input, dst, 17);
            const Fq x = Fq::from_bytes_reduce(BytesView(u.data(), 16));
            Fq y;
            if (!(x * x * x + x).sqrt(y))
                continue;
            if (y.is_lexicographically_largest() != ((u[16] & 1) != 0))
                y = -y;
            // clear the cofactor of 4
            auto j = CurveE::to_jacobian(G1{x, y, false});
            j = CurveE::dbl(CurveE::dbl(j));
            if (!j.is_identity())
                return CurveE::to_affine(j);
        }
        fail(ErrorCode::UsageError, "hash_to_g1 exhausted counter space");
    }

    static G2 hash_to_g2(BytesView msg, std::string_view dst) { return G2{hash_to_g1(msg, dst)}; }

    static void g1_write(const G1& p, uint8_t* out)
    {
        if (p.is_identity()) {
            std::fill(out, out + kG1Bytes, 0);
            out[0] = 0xc0;
            return;
        }
        out[0] = 0x80;
        if (p.y.is_lexicographically_largest())
            out[0] |= 0x20;
        p.x.to_bytes_be(out + 1);
    }

    static std::optional<ErrorCode> g1_read(const uint8_t* in, G1& out)
    {
        const uint8_t flags = in[0];
        if (!(flags & 0x80) || (flags & 0x1f))
            return ErrorCode::MalformedEncoding;
        if (flags & 0x40) {
            for (size_t i = 1; i < kG1Bytes; ++i)
                if (in[i] != 0)
                    return ErrorCode::MalformedEncoding;
            if (flags != 0xc0)
                return ErrorCode::MalformedEncoding;
            out = G1::identity();
            return std::nullopt;
        }
        Fq x;
        if (!Fq::from_bytes_be(in + 1, x))
            return ErrorCode::MalformedEncoding;
        Fq y;
        if (!(x * x * x + x).sqrt(y))
            return ErrorCode::MalformedEncoding;
        if (y.is_lexicographically_largest() != ((flags & 0x20) != 0))
            y = -y;
        const G1 p{x, y, false};
        if (!g1_in_subgroup(p))
            return ErrorCode::WrongSubgroup;
        out = p;
        return std::nullopt;
    }

    static void g2_write(const G2& p, uint8_t* out) { g1_write(p.pre, out); }

    static std::optional<ErrorCode> g2_read(const uint8_t* in, G2& out)
    {
        G1 pre;
        if (auto err = g1_read(in, pre))
            return err;
        out = G2{pre};
        return std::nullopt;
    }

    static void gt_write(const GT& a, uint8_t* out)
    {
        a.c0.to_bytes_be(out);
        a.c1.to_bytes_be(out + 8);
    }

    static std::optional<ErrorCode> gt_read(const uint8_t* in, GT& out)
    {
        Fq c0, c1;
        if (!Fq::from_bytes_be(in, c0) || !Fq::from_bytes_be(in + 8, c1))
            return ErrorCode::MalformedEncoding;
        const GT a{c0, c1};
        if (!gt_in_subgroup(a))
            return ErrorCode::WrongSubgroup;
        out = a;
        return std::nullopt;
    }
};

}  // namespace ftmcfe::toy
