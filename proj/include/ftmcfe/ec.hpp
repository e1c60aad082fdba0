// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

namespace ftmcfe {

// Short Weierstrass curve y^2 = x^3 + a x + b over field F, Jacobian internals.
// Cfg supplies: static F a(); static F b(); static constexpr bool kAIsZero;
template <typename F, typename Cfg>
struct Curve {
    struct Affine {
        F x = F::zero();
        F y = F::zero();
        bool inf = true;

        static Affine identity() { return Affine{}; }
        bool is_identity() const { return inf; }

        bool operator==(const Affine& o) const
        {
            if (inf || o.inf)
                return inf == o.inf;
            return x == o.x && y == o.y;
        }

        bool on_curve() const
        {
            if (inf)
                return true;
            F rhs = x * x * x + Cfg::b();
            if constexpr (!Cfg::kAIsZero)
                rhs = rhs + Cfg::a() * x;
            return y * y == rhs;
        }

        Affine negate() const
        {
            if (inf)
                return *this;
            return Affine{x, -y, false};
        }
    };

    struct Jacobian {
        F X = F::one();
        F Y = F::one();
        F Z = F::zero();

        bool is_identity() const { return Z.is_zero(); }
    };

    static Jacobian to_jacobian(const Affine& p)
    {
        if (p.inf)
            return Jacobian{};
        return Jacobian{p.x, p.y, F::one()};
    }

    static Affine to_affine(const Jacobian& p)
    {
        if (p.is_identity())
            return Affine::identity();
        const F zinv = p.Z.inverse();
        const F zinv2 = zinv.square();
        return Affine{p.X * zinv2, p.Y * zinv2 * zinv, false};
    }

    static Jacobian dbl(const Jacobian& p)
    {
        if (p.is_identity() || p.Y.is_zero())
            return Jacobian{};
        const F xx = p.X.square();
        const F yy = p.Y.square();
        const F yyyy = yy.square();
        const F zz = p.Z.square();
        F s = (p.X + yy).square() - xx - yyyy;
        s = s + s;
        F m = xx + xx + xx;
        if constexpr (!Cfg::kAIsZero)
            m = m + Cfg::a() * zz.square();
        const F t = m.square() - s - s;
        const F y8 = yyyy.dbl().dbl().dbl();
        return Jacobian{t, m * (s - t) - y8, (p.Y + p.Z).square() - yy - zz};
    }

    static Jacobian add(const Jacobian& p, const Jacobian& q)
    {
        if (p.is_identity())
            return q;
        if (q.is_identity())
            return p;
        const F z1z1 = p.Z.square();
        const F z2z2 = q.Z.square();
        const F u1 = p.X * z2z2;
        const F u2 = q.X * z1z1;
        const F s1 = p.Y * q.Z * z2z2;
        const F s2 = q.Y * p.Z * z1z1;
        if (u1 == u2) {
            if (s1 == s2)
                return dbl(p);
            return Jacobian{};
        }
        const F h = u2 - u1;
        const F i = (h + h).square();
        const F j = h * i;
        F rr = s2 - s1;
        rr = rr + rr;
        const F v = u1 * i;
        const F x3 = rr.square() - j - v - v;
        const F s1j2 = (s1 * j).dbl();
        const F y3 = rr * (v - x3) - s1j2;
        const F z3 = ((p.Z + q.Z).square() - z1z1 - z2z2) * h;
        return Jacobian{x3, y3, z3};
    }

    static Jacobian add_affine(const Jacobian& p, const Affine& q)
    {
        return add(p, to_jacobian(q));
    }

    // 4-bit windowed multiplication by a canonical little-endian limb scalar.
    static Jacobian mul(const Jacobian& base, std::span<const uint64_t> scalar)
    {
        Jacobian table[16];
        table[0] = Jacobian{};
        table[1] = base;
        for (int i = 2; i < 16; ++i)
            table[i] = (i % 2 == 0) ? dbl(table[i / 2]) : add(table[i - 1], base);

        Jacobian acc{};
        bool started = false;
        for (size_t i = scalar.size(); i-- > 0;) {
            for (int w = 15; w >= 0; --w) {
                const uint64_t digit = (scalar[i] >> (4 * w)) & 0xf;
                if (started) {
                    acc = dbl(acc);
                    acc = dbl(acc);
                    acc = dbl(acc);
                    acc = dbl(acc);
                    if (digit != 0)
                        acc = add(acc, table[digit]);
                } else if (digit != 0) {
                    acc = table[digit];
                    started = true;
                }
            }
        }
        return acc;
    }

    static Affine mul_affine(const Affine& base, std::span<const uint64_t> scalar)
    {
        return to_affine(mul(to_jacobian(base), scalar));
    }
};

}  // namespace ftmcfe
