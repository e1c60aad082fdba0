// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftmcfe/polynomial.hpp"
#include "ftmcfe/scheme.hpp"
#include "ftmcfe/toy/engine.hpp"

using namespace ftmcfe;
using E = toy::ToyPairing;
using S = E::Scalar;

namespace {

ParticipationSet random_set(Rng& rng, uint32_t n, size_t min_size)
{
    std::vector<uint32_t> members;
    for (uint32_t i = 1; i <= n; ++i)
        if (rng.below(2) == 0)
            members.push_back(i);
    while (members.size() < min_size) {
        const uint32_t cand = 1 + static_cast<uint32_t>(rng.below(n));
        if (std::find(members.begin(), members.end(), cand) == members.end())
            members.push_back(cand);
    }
    return ParticipationSet(n, members);
}

}  // namespace

TEST_CASE("vanishing polynomial hand-expanded cases")
{
    // all online: empty product, the constant 1
    auto c = vanishing_poly<E>(ParticipationSet(3, {1, 2, 3}));
    REQUIRE(c.size() == 1);
    CHECK(c[0] == S::from_u64(1));

    // root at 3: (x - 3) = [-3, 1]
    c = vanishing_poly<E>(ParticipationSet(3, {1, 2}));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == -S::from_u64(3));
    CHECK(c[1] == S::from_u64(1));

    // roots {1,3}: (x-1)(x-3) = x^2 - 4x + 3 = [3, -4, 1]
    c = vanishing_poly<E>(ParticipationSet(4, {2, 4}));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == S::from_u64(3));
    CHECK(c[1] == -S::from_u64(4));
    CHECK(c[2] == S::from_u64(1));
}

TEST_CASE("vanishing polynomial degree and root structure")
{
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.below(10));
        const auto set = random_set(rng, n, 1);
        const auto coeffs = vanishing_poly<E>(set);
        CHECK(coeffs.size() == n - set.size() + 1);
        CHECK(coeffs.back() == S::from_u64(1));  // monic
        for (uint32_t i = 1; i <= n; ++i) {
            const auto v = poly_eval<E>(coeffs, S::from_u64(i));
            if (set.contains(i))
                CHECK(!v.is_zero());
            else
                CHECK(v.is_zero());
        }
    }
}

TEST_CASE("commitments match direct exponentiation via the gamma oracle")
{
    Rng rng(102);
    const auto ctx = init_pairing<E>();
    for (int trial = 0; trial < 50; ++trial) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.below(8));
        Rng setup_rng(1000 + trial);
        SetupOracle<E> oracle;
        const auto mpk = ta_setup_with_oracle<E>(n, ctx, setup_rng, &oracle);

        const auto set = random_set(rng, n, 1);
        const auto coeffs = vanishing_poly<E>(set);
        const auto b_gamma = poly_eval<E>(coeffs, oracle.gamma);

        CHECK(commit_g<E>(mpk.powers.g1_row, coeffs) == E::g1_mul(ctx.g1, b_gamma));
        CHECK(commit_ghat<E>(mpk.powers.ghat1_row, coeffs) == E::g2_mul(ctx.ghat1, b_gamma));

        const uint32_t max_t = static_cast<uint32_t>(set.size());
        const uint32_t t = 1 + static_cast<uint32_t>(rng.below(max_t));
        S gamma_t = S::from_u64(1);
        for (uint32_t k = 0; k < t; ++k)
            gamma_t = gamma_t * oracle.gamma;
        CHECK(shifted_commit<E>(coeffs, t, mpk.powers.g2_row) == E::g1_mul(ctx.g2, b_gamma * gamma_t));
    }
}

TEST_CASE("commit trivial cases hit the right powers")
{
    const auto ctx = init_pairing<E>();
    Rng rng(103);
    const auto mpk = ta_setup<E>(3, ctx, rng);

    // constant polynomial: the bare generator
    std::vector<S> one = {S::from_u64(1)};
    CHECK(commit_g<E>(mpk.powers.g1_row, one) == mpk.powers.g1_row[0]);

    // identity monomial x: base^gamma
    std::vector<S> x = {S::from_u64(0), S::from_u64(1)};
    CHECK(commit_g<E>(mpk.powers.g1_row, x) == mpk.powers.g1_row[1]);

    // constant with shift t=2: x^2 slot
    CHECK(shifted_commit<E>(one, 2, mpk.powers.g2_row) == mpk.powers.g2_row[2]);

    // n=3, coeffs [-3,1], t=2: g2^(gamma^3 - 3 gamma^2)
    std::vector<S> lin = {-S::from_u64(3), S::from_u64(1)};
    const auto got = shifted_commit<E>(lin, 2, mpk.powers.g2_row);
    const auto expect =
        E::g1_add(mpk.powers.g2_row[3], E::g1_mul(mpk.powers.g2_row[2], -S::from_u64(3)));
    CHECK(got == expect);

    // degree 2 with t=2 exceeds n=3
    std::vector<S> quad = {S::from_u64(1), S::from_u64(1), S::from_u64(1)};
    CHECK_THROWS_WITH_AS(
        shifted_commit<E>(quad, 2, mpk.powers.g2_row), doctest::Contains("degree-exceeds-srs"), Error);
}

TEST_CASE("degree check verifies honest pairs and rejects mismatches")
{
    Rng rng(104);
    const auto ctx = init_pairing<E>();

    // pinned example: n=3, members={1,2}, t=2
    {
        Rng setup_rng(1);
        const auto mpk = ta_setup<E>(3, ctx, setup_rng);
        const ParticipationSet set(3, {1, 2});
        const auto coeffs = vanishing_poly<E>(set);
        const auto c_shifted = shifted_commit<E>(coeffs, 2, mpk.powers.g2_row);
        const auto c_plain = commit_ghat<E>(mpk.powers.ghat1_row, coeffs);
        CHECK(verify_degree<E>(c_shifted, c_plain, 2, mpk.powers));

        // wrong shifted commitment with a nonconstant polynomial
        CHECK(!verify_degree<E>(mpk.powers.g2_row[0], c_plain, 2, mpk.powers));

        // constant polynomial at t=1: both sides e(g2, ghat1)^gamma
        std::vector<S> one = {S::from_u64(1)};
        CHECK(verify_degree<E>(mpk.powers.g2_row[1], mpk.powers.ghat1_row[0], 1, mpk.powers));
    }

    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.below(8));
        Rng setup_rng(2000 + trial);
        const auto mpk = ta_setup<E>(n, ctx, setup_rng);
        const auto set_a = random_set(rng, n, 1);
        auto set_b = random_set(rng, n, 1);
        while (set_b.members() == set_a.members())
            set_b = random_set(rng, n, 1);

        const auto coeffs_a = vanishing_poly<E>(set_a);
        const auto coeffs_b = vanishing_poly<E>(set_b);
        const uint32_t t = 1 + static_cast<uint32_t>(
                                   rng.below(std::min(set_a.size(), set_b.size())));

        // commitments from different polynomials must not verify
        const auto c_shifted = shifted_commit<E>(coeffs_a, t, mpk.powers.g2_row);
        const auto c_plain = commit_ghat<E>(mpk.powers.ghat1_row, coeffs_b);
        if (!verify_degree<E>(c_shifted, c_plain, t, mpk.powers))
            ++rejected;
    }
    CHECK(rejected == 50);
}

TEST_CASE("degree check passes for every valid quorum size and aborts below it")
{
    Rng rng(105);
    const auto ctx = init_pairing<E>();
    const uint32_t n = 6;
    Rng setup_rng(3);
    const auto mpk = ta_setup<E>(n, ctx, setup_rng);
    for (uint32_t size = 1; size <= n; ++size) {
        std::vector<uint32_t> members;
        for (uint32_t i = 1; i <= size; ++i)
            members.push_back(i);
        const ParticipationSet set(n, members);
        const auto coeffs = vanishing_poly<E>(set);
        for (uint32_t t = 1; t <= n; ++t) {
            if (set.size() >= t) {
                const auto c_shifted = shifted_commit<E>(coeffs, t, mpk.powers.g2_row);
                const auto c_plain = commit_ghat<E>(mpk.powers.ghat1_row, coeffs);
                CHECK(verify_degree<E>(c_shifted, c_plain, t, mpk.powers));
            } else {
                CHECK_THROWS_AS((void)shifted_commit<E>(coeffs, t, mpk.powers.g2_row), Error);
            }
        }
    }
}

TEST_CASE("participation set validation")
{
    CHECK_THROWS_AS(ParticipationSet(3, {}), Error);
    CHECK_THROWS_AS(ParticipationSet(3, {0}), Error);
    CHECK_THROWS_AS(ParticipationSet(3, {4}), Error);
    CHECK_THROWS_AS(ParticipationSet(3, {1, 1}), Error);
    const ParticipationSet ok(3, {3, 1});
    CHECK(ok.members() == std::vector<uint32_t>{1, 3});
    CHECK(ok.contains(3));
    CHECK(!ok.contains(2));
    CHECK(ok.digest() != ParticipationSet(3, {1, 2}).digest());
}

TEST_CASE("reference string consistency check")
{
    const auto ctx = init_pairing<E>();
    Rng rng(106);
    auto mpk = ta_setup<E>(10, ctx, rng);
    mpk.validate();

    // tampering with one entry must be caught
    mpk.powers.g1_row[3] = E::g1_add(mpk.powers.g1_row[3], mpk.powers.g1_row[0]);
    CHECK_THROWS_WITH_AS(mpk.validate(), doctest::Contains("corrupt-key"), Error);
}
