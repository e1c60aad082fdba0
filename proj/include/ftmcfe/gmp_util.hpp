// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/bytes.hpp"
#include "ftmcfe/mont.hpp"

#include <gmp.h>

#include <cstddef>

namespace ftmcfe {

// Thin RAII mpz wrapper; GMP is used off the hot path (inversions, wide
// reductions, derived-constant setup) and as an independent oracle in tests.
class Mpz {
public:
    Mpz() { mpz_init(z_); }
    explicit Mpz(uint64_t v) { mpz_init_set_ui(z_, v); }
    Mpz(const Mpz& o) { mpz_init_set(z_, o.z_); }
    Mpz& operator=(const Mpz& o)
    {
        if (this != &o)
            mpz_set(z_, o.z_);
        return *this;
    }
    ~Mpz() { mpz_clear(z_); }

    mpz_t& raw() { return z_; }
    const mpz_t& raw() const { return z_; }

    template <size_t N>
    static Mpz from_limbs(const Limbs<N>& limbs)
    {
        Mpz r;
        mpz_import(r.z_, N, -1, sizeof(uint64_t), 0, 0, limbs.data());
        return r;
    }

    static Mpz from_bytes_be(BytesView bytes)
    {
        Mpz r;
        mpz_import(r.z_, bytes.size(), 1, 1, 0, 0, bytes.data());
        return r;
    }

    template <size_t N>
    Limbs<N> to_limbs() const
    {
        Limbs<N> out{};
        size_t count = 0;
        mpz_export(out.data(), &count, -1, sizeof(uint64_t), 0, 0, z_);
        return out;
    }

private:
    mpz_t z_;
};

template <size_t N>
inline bool mont_limbs_invert(Limbs<N>& x, const Limbs<N>& mod)
{
    Mpz a = Mpz::from_limbs(x);
    Mpz m = Mpz::from_limbs(mod);
    Mpz r;
    if (mpz_invert(r.raw(), a.raw(), m.raw()) == 0)
        return false;
    x = r.to_limbs<N>();
    return true;
}

template <size_t N>
inline Limbs<N> limbs_mod_from_bytes(BytesView bytes, const Limbs<N>& mod)
{
    Mpz a = Mpz::from_bytes_be(bytes);
    Mpz m = Mpz::from_limbs(mod);
    mpz_mod(a.raw(), a.raw(), m.raw());
    return a.to_limbs<N>();
}

}  // namespace ftmcfe
