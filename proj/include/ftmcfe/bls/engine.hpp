// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/bls/fields.hpp"
#include "ftmcfe/bytes.hpp"
#include "ftmcfe/ec.hpp"
#include "ftmcfe/errors.hpp"
#include "ftmcfe/hash.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ftmcfe::bls {

struct G1Config {
    static constexpr bool kAIsZero = true;
    static Fp a() { return Fp::zero(); }
    static Fp b() { return Fp::from_u64(4); }
};

struct G2Config {
    static constexpr bool kAIsZero = true;
    static Fp2 a() { return Fp2::zero(); }
    static Fp2 b() { return mul_by_xi(Fp2{Fp::from_u64(4), Fp::zero()}); }  // 4(1+i), M-twist
};

using CurveG1 = Curve<Fp, G1Config>;
using CurveG2 = Curve<Fp2, G2Config>;

namespace detail {

inline const std::vector<uint64_t>& order_limbs()
{
    static const std::vector<uint64_t> r = {0xffffffff00000001ULL, 0x53bda402fffe5bfeULL,
        0x3339d80809a1d805ULL, 0x73eda753299d7d48ULL};
    return r;
}

inline std::vector<uint64_t> limbs_from_hex(const char* hex)
{
    Mpz z;
    mpz_set_str(z.raw(), hex, 16);
    const size_t n = (mpz_sizeinbase(z.raw(), 2) + 63) / 64;
    std::vector<uint64_t> limbs(n, 0);
    size_t count = 0;
    mpz_export(limbs.data(), &count, -1, sizeof(uint64_t), 0, 0, z.raw());
    return limbs;
}

inline const std::vector<uint64_t>& g1_cofactor()
{
    static const auto h = limbs_from_hex("396c8c005555e1568c00aaab0000aaab");
    return h;
}

inline const std::vector<uint64_t>& g2_cofactor()
{
    static const auto h = limbs_from_hex(
        "5d543a95414e7f1091d50792876a202cd91de4547085abaa68a205b2e5a7ddfa628f1cb4d9e82ef21537e293"
        "a6691ae1616ec6e786f0c70cf1c38e31c7238e5");
    return h;
}

// f *= line, where line = A + B(vw) + C(v^2 w); the sparse shape produced by
// M-twist line evaluation.
inline void mul_sparse_line(Fp12& f, const Fp2& a, const Fp2& b, const Fp2& c)
{
    const Fp6 sum{a, b, c};
    // f.c0 * (A,0,0)
    const Fp6 t0{f.c0.c0 * a, f.c0.c1 * a, f.c0.c2 * a};
    // f.c1 * (0,B,C)
    const Fp6& x = f.c1;
    const Fp6 t1{mul_by_xi(x.c1 * c + x.c2 * b), x.c0 * b + mul_by_xi(x.c2 * c), x.c0 * c + x.c1 * b};
    const Fp6 t2 = (f.c0 + f.c1) * sum;
    f.c0 = t0 + t1.mul_by_v();
    f.c1 = t2 - t0 - t1;
}

// Miller loop for the optimal ate pairing, points on the M-twist. Inputs must
// not be the identity. Returns the unreduced pairing value.
inline Fp12 miller_loop(const CurveG1::Affine& p, const CurveG2::Affine& q)
{
    const Fp2 line_a{p.y, p.y};  // xi * y_P
    const Fp three = Fp::from_u64(3);
    Fp2 xt = q.x;
    Fp2 yt = q.y;
    Fp12 f = Fp12::one();
    for (int bit = 62; bit >= 0; --bit) {
        f = f.square();
        // tangent at T
        const Fp2 lambda = (xt.square().mul_base(three)) * (yt.dbl()).inverse();
        mul_sparse_line(f, line_a, lambda * xt - yt, -(lambda.mul_base(p.x)));
        const Fp2 x3 = lambda.square() - xt - xt;
        yt = lambda * (xt - x3) - yt;
        xt = x3;
        if ((kAbsZ >> bit) & 1) {
            // chord through T and Q
            const Fp2 lambda2 = (yt - q.y) * (xt - q.x).inverse();
            mul_sparse_line(f, line_a, lambda2 * xt - yt, -(lambda2.mul_base(p.x)));
            const Fp2 x4 = lambda2.square() - xt - q.x;
            yt = lambda2 * (xt - x4) - yt;
            xt = x4;
        }
    }
    return f.conjugate();  // z < 0
}

inline Fp12 pow_z_signed(const Fp12& x)
{
    Fp12 y = x;
    for (int bit = 62; bit >= 0; --bit) {
        y = y.square();
        if ((kAbsZ >> bit) & 1)
            y = y * x;
    }
    return y.conjugate();  // cyclotomic inverse; z < 0
}

inline Fp12 final_exponentiation(const Fp12& f)
{
    // easy part: f^((p^2+1)(p^6-1)); lands in the cyclotomic subgroup
    const Fp12 t = f.frobenius().frobenius() * f;
    const Fp12 m = t.conjugate() * t.inverse();
    // hard part: m^((z-1)^2 (z+p)(z^2+p^2-1) + 3) = m^(3(p^4-p^2+1)/r)
    Fp12 a0 = pow_z_signed(m);
    a0 = a0 * m.conjugate();  // m^(z-1)
    Fp12 a1 = pow_z_signed(a0);
    a0 = a0.conjugate() * a1;  // m^((z-1)^2)
    a1 = pow_z_signed(a0);
    a0 = a0.frobenius() * a1;  // m^((z-1)^2 (z+p))
    a1 = pow_z_signed(a0);
    a1 = pow_z_signed(a1);
    const Fp12 a2 = a0.frobenius().frobenius();
    a0 = a0.conjugate() * a1 * a2;  // m^((z-1)^2 (z+p)(z^2+p^2-1))
    return a0 * m.square() * m;
}

inline bool fp_sign(const Fp& y)
{
    return y.is_lexicographically_largest();
}

inline bool fp2_sign(const Fp2& y)
{
    if (!y.c1.is_zero())
        return y.c1.is_lexicographically_largest();
    return y.c0.is_lexicographically_largest();
}

}  // namespace detail

struct Bls12381 {
    static constexpr std::string_view kCurveId = "bls12-381";

    using Scalar = Fr;
    using G1 = CurveG1::Affine;
    using G2 = CurveG2::Affine;
    using GT = Fp12;

    static constexpr size_t kG1Bytes = 48;
    static constexpr size_t kG2Bytes = 96;
    static constexpr size_t kGtBytes = 576;

    // --- G1 ---
    static G1 g1_identity() { return G1::identity(); }
    static G1 g1_add(const G1& a, const G1& b)
    {
        return CurveG1::to_affine(CurveG1::add(CurveG1::to_jacobian(a), CurveG1::to_jacobian(b)));
    }
    static G1 g1_neg(const G1& a) { return a.negate(); }
    static G1 g1_mul(const G1& a, const Scalar& s)
    {
        const auto limbs = s.to_limbs();
        return CurveG1::mul_affine(a, std::span<const uint64_t>(limbs.data(), limbs.size()));
    }
    static G1 g1_multi_mul(std::span<const G1> bases, std::span<const Scalar> scalars)
    {
        CurveG1::Jacobian acc{};
        for (size_t i = 0; i < bases.size(); ++i) {
            const auto limbs = scalars[i].to_limbs();
            acc = CurveG1::add(
                acc, CurveG1::mul(CurveG1::to_jacobian(bases[i]), std::span<const uint64_t>(limbs)));
        }
        return CurveG1::to_affine(acc);
    }

    // --- G2 ---
    static G2 g2_identity() { return G2::identity(); }
    static G2 g2_add(const G2& a, const G2& b)
    {
        return CurveG2::to_affine(CurveG2::add(CurveG2::to_jacobian(a), CurveG2::to_jacobian(b)));
    }
    static G2 g2_neg(const G2& a) { return a.negate(); }
    static G2 g2_mul(const G2& a, const Scalar& s)
    {
        const auto limbs = s.to_limbs();
        return CurveG2::mul_affine(a, std::span<const uint64_t>(limbs.data(), limbs.size()));
    }
    static G2 g2_multi_mul(std::span<const G2> bases, std::span<const Scalar> scalars)
    {
        CurveG2::Jacobian acc{};
        for (size_t i = 0; i < bases.size(); ++i) {
            const auto limbs = scalars[i].to_limbs();
            acc = CurveG2::add(
                acc, CurveG2::mul(CurveG2::to_jacobian(bases[i]), std::span<const uint64_t>(limbs)));
        }
        return CurveG2::to_affine(acc);
    }

    // --- GT ---
    static GT gt_one() { return GT::one(); }
    static GT gt_mul(const GT& a, const GT& b) { return a * b; }
    // All GT values in this library are r-th roots of unity, so conjugation inverts.
    static GT gt_inv(const GT& a) { return a.conjugate(); }
    static GT gt_pow(const GT& a, const Scalar& s)
    {
        const auto limbs = s.to_limbs();
        return a.pow(std::vector<uint64_t>(limbs.begin(), limbs.end()));
    }
    static bool gt_is_one(const GT& a) { return a == GT::one(); }

    // --- pairing ---
    static GT pair(const G1& p, const G2& q)
    {
        if (p.is_identity() || q.is_identity())
            return GT::one();
        return detail::final_exponentiation(detail::miller_loop(p, q));
    }

    struct PairTerm {
        G1 a;
        G2 b;
        bool negate = false;
    };

    // Product of pairings with one shared final exponentiation; negative terms
    // negate the G1 input.
    static GT multi_pair(std::span<const PairTerm> terms)
    {
        Fp12 f = Fp12::one();
        bool any = false;
        for (const auto& t : terms) {
            if (t.a.is_identity() || t.b.is_identity())
                continue;
            f = f * detail::miller_loop(t.negate ? t.a.negate() : t.a, t.b);
            any = true;
        }
        if (!any)
            return GT::one();
        return detail::final_exponentiation(f);
    }

    // --- subgroup membership ---
    static bool g1_in_subgroup(const G1& p)
    {
        if (p.is_identity())
            return true;
        if (!p.on_curve())
            return false;
        return CurveG1::mul(CurveG1::to_jacobian(p), detail::order_limbs()).is_identity();
    }
    static bool g2_in_subgroup(const G2& p)
    {
        if (p.is_identity())
            return true;
        if (!p.on_curve())
            return false;
        return CurveG2::mul(CurveG2::to_jacobian(p), detail::order_limbs()).is_identity();
    }
    static bool gt_in_subgroup(const GT& a)
    {
        if (a.is_zero())
            return false;
        return a.pow(detail::order_limbs()) == GT::one();
    }

    // --- hash to group (hash-and-check with XMD expansion, cofactor cleared) ---
    static G1 hash_to_g1(BytesView msg, std::string_view dst)
    {
        for (uint32_t ctr = 0; ctr < 256; ++ctr) {
            Bytes input(msg.begin(), msg.end());
            append_u8(input, static_cast<uint8_t>(ctr));
            const Bytes u = expand_message_xmd(input, dst, 65);
            const Fp x = Fp::from_bytes_reduce(BytesView(u.data(), 64));
            Fp y;
            if (!(x * x * x + G1Config::b()).sqrt(y))
                continue;
            if (detail::fp_sign(y) != ((u[64] & 1) != 0))
                y = -y;
            const auto cleared =
                CurveG1::mul(CurveG1::to_jacobian(G1{x, y, false}), detail::g1_cofactor());
            if (!cleared.is_identity())
                return CurveG1::to_affine(cleared);
        }
        fail(ErrorCode::UsageError, "hash_to_g1 exhausted counter space");
    }

    static G2 hash_to_g2(BytesView msg, std::string_view dst)
    {
        for (uint32_t ctr = 0; ctr < 256; ++ctr) {
            Bytes input(msg.begin(), msg.end());
            append_u8(input, static_cast<uint8_t>(ctr));
            const Bytes u = expand_message_xmd(input, dst, 129);
            const Fp2 x{Fp::from_bytes_reduce(BytesView(u.data(), 64)),
                Fp::from_bytes_reduce(BytesView(u.data() + 64, 64))};
            Fp2 y;
            if (!(x.square() * x + G2Config::b()).sqrt(y))
                continue;
            if (detail::fp2_sign(y) != ((u[128] & 1) != 0))
                y = -y;
            const auto cleared =
                CurveG2::mul(CurveG2::to_jacobian(G2{x, y, false}), detail::g2_cofactor());
            if (!cleared.is_identity())
                return CurveG2::to_affine(cleared);
        }
        fail(ErrorCode::UsageError, "hash_to_g2 exhausted counter space");
    }

    // --- serialization (compressed points, ZCash-style flag bits) ---
    static void g1_write(const G1& p, uint8_t* out)
    {
        if (p.is_identity()) {
            std::fill(out, out + kG1Bytes, 0);
            out[0] = 0xc0;
            return;
        }
        p.x.to_bytes_be(out);
        out[0] |= 0x80;
        if (detail::fp_sign(p.y))
            out[0] |= 0x20;
    }

    static std::optional<ErrorCode> g1_read(const uint8_t* in, G1& out)
    {
        const uint8_t flags = in[0] & 0xe0;
        if (!(flags & 0x80))
            return ErrorCode::MalformedEncoding;
        if (flags & 0x40) {
            for (size_t i = 0; i < kG1Bytes; ++i)
                if ((i == 0 ? (in[0] & 0x3f) : in[i]) != 0)
                    return ErrorCode::MalformedEncoding;
            out = G1::identity();
            return std::nullopt;
        }
        uint8_t buf[kG1Bytes];
        std::copy(in, in + kG1Bytes, buf);
        buf[0] &= 0x1f;
        Fp x;
        if (!Fp::from_bytes_be(buf, x))
            return ErrorCode::MalformedEncoding;
        Fp y;
        if (!(x * x * x + G1Config::b()).sqrt(y))
            return ErrorCode::MalformedEncoding;
        if (detail::fp_sign(y) != ((flags & 0x20) != 0))
            y = -y;
        const G1 p{x, y, false};
        if (!g1_in_subgroup(p))
            return ErrorCode::WrongSubgroup;
        out = p;
        return std::nullopt;
    }

    static void g2_write(const G2& p, uint8_t* out)
    {
        if (p.is_identity()) {
            std::fill(out, out + kG2Bytes, 0);
            out[0] = 0xc0;
            return;
        }
        p.x.c1.to_bytes_be(out);
        p.x.c0.to_bytes_be(out + 48);
        out[0] |= 0x80;
        if (detail::fp2_sign(p.y))
            out[0] |= 0x20;
    }

    static std::optional<ErrorCode> g2_read(const uint8_t* in, G2& out)
    {
        const uint8_t flags = in[0] & 0xe0;
        if (!(flags & 0x80))
            return ErrorCode::MalformedEncoding;
        if (flags & 0x40) {
            for (size_t i = 0; i < kG2Bytes; ++i)
                if ((i == 0 ? (in[0] & 0x3f) : in[i]) != 0)
                    return ErrorCode::MalformedEncoding;
            out = G2::identity();
            return std::nullopt;
        }
        uint8_t buf[48];
        std::copy(in, in + 48, buf);
        buf[0] &= 0x1f;
        Fp xc1, xc0;
        if (!Fp::from_bytes_be(buf, xc1) || !Fp::from_bytes_be(in + 48, xc0))
            return ErrorCode::MalformedEncoding;
        const Fp2 x{xc0, xc1};
        Fp2 y;
        if (!(x.square() * x + G2Config::b()).sqrt(y))
            return ErrorCode::MalformedEncoding;
        if (detail::fp2_sign(y) != ((flags & 0x20) != 0))
            y = -y;
        const G2 p{x, y, false};
        if (!g2_in_subgroup(p))
            return ErrorCode::WrongSubgroup;
        out = p;
        return std::nullopt;
    }

    static void gt_write(const GT& a, uint8_t* out)
    {
        const Fp* coeffs[12] = {&a.c0.c0.c0, &a.c0.c0.c1, &a.c0.c1.c0, &a.c0.c1.c1, &a.c0.c2.c0,
            &a.c0.c2.c1, &a.c1.c0.c0, &a.c1.c0.c1, &a.c1.c1.c0, &a.c1.c1.c1, &a.c1.c2.c0,
            &a.c1.c2.c1};
        for (int i = 0; i < 12; ++i)
            coeffs[i]->to_bytes_be(out + i * 48);
    }

    static std::optional<ErrorCode> gt_read(const uint8_t* in, GT& out)
    {
        Fp c[12];
        for (int i = 0; i < 12; ++i)
            if (!Fp::from_bytes_be(in + i * 48, c[i]))
                return ErrorCode::MalformedEncoding;
        GT a{{{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}}, {{c[6], c[7]}, {c[8], c[9]}, {c[10], c[11]}}};
        if (!gt_in_subgroup(a))
            return ErrorCode::WrongSubgroup;
        out = a;
        return std::nullopt;
    }
};

}  // namespace ftmcfe::bls
