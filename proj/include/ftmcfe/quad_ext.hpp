// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace ftmcfe {

// F[i]/(i^2 + 1). Requires -1 to be a non-residue in F (p = 3 mod 4).
template <typename F>
struct QuadExt {
    F c0, c1;

    static QuadExt zero() { return {F::zero(), F::zero()}; }
    static QuadExt one() { return {F::one(), F::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const QuadExt& o) const { return c0 == o.c0 && c1 == o.c1; }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    QuadExt operator-() const { return {-c0, -c1}; }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b)
    {
        const F t0 = a.c0 * b.c0;
        const F t1 = a.c1 * b.c1;
        const F t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
        return {t0 - t1, t2 - t0 - t1};
    }

    QuadExt square() const
    {
        const F t0 = (c0 + c1) * (c0 - c1);
        const F t1 = c0 * c1;
        return {t0, t1 + t1};
    }

    QuadExt conjugate() const { return {c0, -c1}; }

    QuadExt dbl() const { return {c0.dbl(), c1.dbl()}; }

    QuadExt mul_base(const F& s) const { return {c0 * s, c1 * s}; }

    F norm() const { return c0 * c0 + c1 * c1; }

    QuadExt inverse() const
    {
        const F n = norm().inverse();
        return {c0 * n, -(c1 * n)};
    }

    QuadExt pow(const std::vector<uint64_t>& exp) const
    {
        QuadExt result = one();
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

    // Verified square root; complex method for p = 3 (mod 4).
    bool sqrt(QuadExt& out) const
    {
        if (is_zero()) {
            out = zero();
            return true;
        }
        if (c1.is_zero()) {
            F s;
            if (c0.sqrt(s)) {
                out = {s, F::zero()};
                return true;
            }
            if ((-c0).sqrt(s)) {
                out = {F::zero(), s};  // (si)^2 = -s^2 = c0
                return true;
            }
            return false;
        }
        F lambda;
        if (!norm().sqrt(lambda))
            return false;
        const F inv2 = F::from_u64(2).inverse();
        for (int attempt = 0; attempt < 2; ++attempt) {
            const F delta = (attempt == 0 ? c0 + lambda : c0 - lambda) * inv2;
            F x0;
            if (!delta.sqrt(x0) || x0.is_zero())
                continue;
            const F x1 = c1 * (x0.dbl()).inverse();
            const QuadExt cand{x0, x1};
            if (cand.square() == *this) {
                out = cand;
                return true;
            }
        }
        return false;
    }
};

}  // namespace ftmcfe
