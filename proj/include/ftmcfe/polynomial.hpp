// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/core.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ftmcfe {

/// The online-client index set B over a population of n clients, 1-based.
class ParticipationSet {
public:
    ParticipationSet(uint32_t n, std::vector<uint32_t> members) : n_(n), members_(std::move(members))
    {
        std::sort(members_.begin(), members_.end());
        if (n_ < 1)
            fail(ErrorCode::UsageError, "client count must be at least 1");
        if (members_.empty())
            fail(ErrorCode::UsageError, "participation set may not be empty");
        for (size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 1 || members_[i] > n_)
                fail(ErrorCode::IndexOutOfRange, "member index outside 1..n");
            if (i > 0 && members_[i] == members_[i - 1])
                fail(ErrorCode::UsageError, "duplicate member index");
        }
    }

    uint32_t n() const { return n_; }
    const std::vector<uint32_t>& members() const { return members_; }
    size_t size() const { return members_.size(); }

    bool contains(uint32_t index) const
    {
        return std::binary_search(members_.begin(), members_.end(), index);
    }

    /// Digest binding (n, members); carried in partial key metadata.
    Digest digest() const
    {
        Bytes buf;
        append(buf, std::string_view("ftmcfe/B/v1"));
        append_u32_be(buf, n_);
        for (uint32_t m : members_)
            append_u32_be(buf, m);
        return sha256(buf);
    }

private:
    uint32_t n_;
    std::vector<uint32_t> members_;
};

// Monic vanishing polynomial with roots at the offline indices:
// B(x) = prod_{i in {1..n} \ members} (x - i), coefficients ascending.
// Evaluates to zero exactly at offline indices, so its degree n - |members|
// is what the pairing degree check measures.
template <PairingEngine E>
std::vector<typename E::Scalar> vanishing_poly(const ParticipationSet& set)
{
    using S = typename E::Scalar;
    std::vector<S> coeffs = {S::from_u64(1)};
    for (uint32_t i = 1; i <= set.n(); ++i) {
        if (set.contains(i))
            continue;
        const S root = S::from_u64(i);
        coeffs.push_back(S::from_u64(0));
        for (size_t j = coeffs.size() - 1; j > 0; --j)
            coeffs[j] = coeffs[j - 1] - coeffs[j] * root;
        coeffs[0] = -(coeffs[0] * root);
    }
    return coeffs;
}

template <PairingEngine E>
typename E::Scalar poly_eval(std::span<const typename E::Scalar> coeffs, const typename E::Scalar& x)
{
    using S = typename E::Scalar;
    S acc = S::from_u64(0);
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = acc * x + coeffs[i];
    return acc;
}

/// Powers-of-gamma reference string, indices 0..n (index 0 holds the bare
/// generators; the commitment product needs the constant term).
template <PairingEngine E>
struct PowersOfGamma {
    std::vector<typename E::G1> g1_row;     // g1^(gamma^j)
    std::vector<typename E::G1> g2_row;     // g2^(gamma^j)
    std::vector<typename E::G2> ghat1_row;  // ghat1^(gamma^j)

    uint32_t n() const { return static_cast<uint32_t>(g1_row.size()) - 1; }
};

namespace detail {

template <PairingEngine E, typename Point, typename MultiMul>
Point commit_generic(std::span<const Point> row, std::span<const typename E::Scalar> coeffs,
    size_t shift, MultiMul&& multi_mul)
{
    if (coeffs.empty())
        fail(ErrorCode::EmptyInput, "empty coefficient vector");
    if (coeffs.size() - 1 + shift > row.size() - 1)
        fail(ErrorCode::DegreeExceedsSrs, "polynomial degree exceeds the reference string");
    std::vector<Point> bases;
    std::vector<typename E::Scalar> scalars;
    bases.reserve(coeffs.size());
    scalars.reserve(coeffs.size());
    for (size_t j = 0; j < coeffs.size(); ++j) {
        bases.push_back(row[j + shift]);
        scalars.push_back(coeffs[j]);
    }
    return multi_mul(std::span<const Point>(bases), std::span<const typename E::Scalar>(scalars));
}

}  // namespace detail

/// base^{B(gamma)} over a G-side row (g1_row or g2_row).
template <PairingEngine E>
typename E::G1 commit_g(std::span<const typename E::G1> row, std::span<const typename E::Scalar> coeffs)
{
    return detail::commit_generic<E>(row, coeffs, 0,
        [](std::span<const typename E::G1> b, std::span<const typename E::Scalar> s) {
            return E::g1_multi_mul(b, s);
        });
}

/// ghat1^{B(gamma)} over the Ghat-side row.
template <PairingEngine E>
typename E::G2 commit_ghat(
    std::span<const typename E::G2> row, std::span<const typename E::Scalar> coeffs)
{
    return detail::commit_generic<E>(row, coeffs, 0,
        [](std::span<const typename E::G2> b, std::span<const typename E::Scalar> s) {
            return E::g2_multi_mul(b, s);
        });
}

// g2^{B(gamma) * gamma^t}, by shifting coefficient j to slot j + t. Degree
// n - |members| + t > n means |members| < t, surfaced as degree-exceeds-srs.
template <PairingEngine E>
typename E::G1 shifted_commit(
    std::span<const typename E::Scalar> coeffs, uint32_t t, std::span<const typename E::G1> g2_row)
{
    return detail::commit_generic<E>(g2_row, coeffs, t,
        [](std::span<const typename E::G1> b, std::span<const typename E::Scalar> s) {
            return E::g1_multi_mul(b, s);
        });
}

// Degree check: e(g2^{B(gamma) gamma^t}, ghat1) == e(g2^{gamma^t}, ghat1^{B(gamma)}).
template <PairingEngine E>
bool verify_degree(const typename E::G1& c_shifted, const typename E::G2& c_plain, uint32_t t,
    const PowersOfGamma<E>& powers)
{
    if (t < 1 || t > powers.n())
        fail(ErrorCode::ThresholdOutOfRange, "degree check threshold outside 1..n");
    using Term = typename E::PairTerm;
    const Term terms[2] = {
        Term{c_shifted, powers.ghat1_row[0], false},
        Term{powers.g2_row[t], c_plain, true},
    };
    return E::gt_is_one(E::multi_pair(terms));
}

}  // namespace ftmcfe
