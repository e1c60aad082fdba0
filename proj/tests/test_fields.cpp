// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftmcfe/bls/engine.hpp"
#include "ftmcfe/gmp_util.hpp"
#include "ftmcfe/hash.hpp"
#include "ftmcfe/toy/engine.hpp"

#include <gmp.h>

using namespace ftmcfe;

namespace {

// GMP-side mirror of a prime field, used as the independent arithmetic oracle.
template <typename F>
Mpz to_mpz(const F& x)
{
    return Mpz::from_limbs(x.to_limbs());
}

template <typename F, typename Tag>
F random_field_element(Rng& rng)
{
    return F::from_bytes_reduce(rng.bytes(F::kBytes + 16));
}

template <typename Tag>
void check_field_against_gmp(uint64_t seed)
{
    using F = PrimeField<Tag>;
    Rng rng(seed);
    Mpz mod = Mpz::from_limbs(Tag::kModulus);
    for (int i = 0; i < 200; ++i) {
        const F a = random_field_element<F, Tag>(rng);
        const F b = random_field_element<F, Tag>(rng);

        Mpz za = to_mpz(a), zb = to_mpz(b), expect;
        const Mpz got_mul = to_mpz(a * b);
        const Mpz got_add = to_mpz(a + b);
        const Mpz got_sub = to_mpz(a - b);

        mpz_mul(expect.raw(), za.raw(), zb.raw());
        mpz_mod(expect.raw(), expect.raw(), mod.raw());
        CHECK(mpz_cmp(got_mul.raw(), expect.raw()) == 0);

        mpz_add(expect.raw(), za.raw(), zb.raw());
        mpz_mod(expect.raw(), expect.raw(), mod.raw());
        CHECK(mpz_cmp(got_add.raw(), expect.raw()) == 0);

        mpz_sub(expect.raw(), za.raw(), zb.raw());
        mpz_mod(expect.raw(), expect.raw(), mod.raw());
        CHECK(mpz_cmp(got_sub.raw(), expect.raw()) == 0);

        if (!a.is_zero())
            CHECK(a * a.inverse() == F::one());
    }
}

}  // namespace

TEST_CASE("bls base and scalar fields match gmp")
{
    check_field_against_gmp<bls::BaseFieldTag>(1);
    check_field_against_gmp<bls::ScalarFieldTag>(2);
}

TEST_CASE("toy fields match gmp")
{
    check_field_against_gmp<toy::QTag>(3);
    check_field_against_gmp<toy::RTag>(4);
}

TEST_CASE("bls curve parameters satisfy the family identities")
{
    // r = z^4 - z^2 + 1 and p = (z-1)^2 r / 3 + z for z = -kAbsZ; the g1
    // cofactor is (z-1)^2 / 3. Ties the hardcoded moduli to the family
    // parameter so a single wrong limb cannot survive.
    Mpz z(bls::kAbsZ);
    mpz_neg(z.raw(), z.raw());
    Mpz r, p, t;

    mpz_mul(t.raw(), z.raw(), z.raw());  // z^2
    mpz_mul(r.raw(), t.raw(), t.raw());  // z^4
    mpz_sub(r.raw(), r.raw(), t.raw());
    mpz_add_ui(r.raw(), r.raw(), 1);
    CHECK(mpz_cmp(r.raw(), Mpz::from_limbs(bls::ScalarFieldTag::kModulus).raw()) == 0);

    Mpz zm1 = z;
    mpz_sub_ui(zm1.raw(), zm1.raw(), 1);
    mpz_mul(p.raw(), zm1.raw(), zm1.raw());
    Mpz h1 = p;
    mpz_fdiv_q_ui(h1.raw(), h1.raw(), 3);
    mpz_mul(p.raw(), p.raw(), r.raw());
    CHECK(mpz_divisible_ui_p(p.raw(), 3));
    mpz_fdiv_q_ui(p.raw(), p.raw(), 3);
    mpz_add(p.raw(), p.raw(), z.raw());
    CHECK(mpz_cmp(p.raw(), Mpz::from_limbs(bls::BaseFieldTag::kModulus).raw()) == 0);

    CHECK(mpz_probab_prime_p(p.raw(), 30) > 0);
    CHECK(mpz_probab_prime_p(r.raw(), 30) > 0);

    Mpz h1_claim;
    mpz_set_str(h1_claim.raw(), "396c8c005555e1568c00aaab0000aaab", 16);
    CHECK(mpz_cmp(h1.raw(), h1_claim.raw()) == 0);
}

TEST_CASE("toy curve parameters")
{
    Mpz q = Mpz::from_limbs(toy::QTag::kModulus);
    Mpz r = Mpz::from_limbs(toy::RTag::kModulus);
    CHECK(mpz_probab_prime_p(q.raw(), 30) > 0);
    CHECK(mpz_probab_prime_p(r.raw(), 30) > 0);
    CHECK(mpz_fdiv_ui(q.raw(), 4) == 3);
    Mpz rhs;
    mpz_mul_ui(rhs.raw(), r.raw(), 4);
    mpz_sub_ui(rhs.raw(), rhs.raw(), 1);
    CHECK(mpz_cmp(q.raw(), rhs.raw()) == 0);
}

TEST_CASE("fp2 arithmetic and sqrt")
{
    using bls::Fp;
    using bls::Fp2;
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const Fp2 a{Fp::from_bytes_reduce(rng.bytes(64)), Fp::from_bytes_reduce(rng.bytes(64))};
        if (a.is_zero())
            continue;
        CHECK(a * a.inverse() == Fp2::one());
        CHECK(a.square() == a * a);

        const Fp2 sq = a.square();
        Fp2 root;
        REQUIRE(sq.sqrt(root));
        CHECK((root == a || root == -a));
    }
}

TEST_CASE("fp12 tower and frobenius")
{
    using bls::Fp;
    using bls::Fp2;
    using bls::Fp6;
    using bls::Fp12;
    Rng rng(8);
    auto rand_fp2 = [&] {
        return Fp2{Fp::from_bytes_reduce(rng.bytes(64)), Fp::from_bytes_reduce(rng.bytes(64))};
    };
    auto rand_fp12 = [&] {
        return Fp12{Fp6{rand_fp2(), rand_fp2(), rand_fp2()}, Fp6{rand_fp2(), rand_fp2(), rand_fp2()}};
    };

    const std::vector<uint64_t> p_limbs(
        bls::BaseFieldTag::kModulus.begin(), bls::BaseFieldTag::kModulus.end());

    for (int i = 0; i < 10; ++i) {
        const Fp12 a = rand_fp12();
        const Fp12 b = rand_fp12();
        const Fp12 c = rand_fp12();

        CHECK((a * b) * c == a * (b * c));
        CHECK(a.square() == a * a);
        if (!a.is_zero())
            CHECK(a * a.inverse() == Fp12::one());

        // frobenius agrees with raw exponentiation by p
        CHECK(a.frobenius() == a.pow(p_limbs));

        // twelve applications are the identity
        Fp12 f = a;
        for (int k = 0; k < 12; ++k)
            f = f.frobenius();
        CHECK(f == a);
    }
}

TEST_CASE("bls pairing bilinearity")
{
    using E = bls::Bls12381;
    const auto P = E::hash_to_g1(from_string("test point P"), "ftmcfe/test/g1");
    const auto Q = E::hash_to_g2(from_string("test point Q"), "ftmcfe/test/g2");
    REQUIRE(!P.is_identity());
    REQUIRE(!Q.is_identity());
    CHECK(E::g1_in_subgroup(P));
    CHECK(E::g2_in_subgroup(Q));

    const auto base = E::pair(P, Q);
    CHECK(!E::gt_is_one(base));
    CHECK(E::gt_in_subgroup(base));

    Rng rng(11);
    for (int i = 0; i < 5; ++i) {
        const auto a = E::Scalar::from_bytes_reduce(rng.bytes(48));
        const auto b = E::Scalar::from_bytes_reduce(rng.bytes(48));
        const auto lhs = E::pair(E::g1_mul(P, a), E::g2_mul(Q, b));
        const auto rhs = E::gt_pow(base, a * b);
        CHECK(lhs == rhs);
        // symmetry of exponents across slots
        CHECK(E::pair(E::g1_mul(P, a), E::g2_mul(Q, b)) == E::pair(E::g1_mul(P, b), E::g2_mul(Q, a)));
    }

    // additivity in the first slot
    const auto P2 = E::hash_to_g1(from_string("second point"), "ftmcfe/test/g1");
    CHECK(E::pair(E::g1_add(P, P2), Q) == E::gt_mul(E::pair(P, Q), E::pair(P2, Q)));

    // identity behaviour
    CHECK(E::gt_is_one(E::pair(E::g1_identity(), Q)));
    CHECK(E::gt_is_one(E::pair(P, E::g2_identity())));
}

TEST_CASE("toy pairing bilinearity")
{
    using E = toy::ToyPairing;
    const auto P = E::hash_to_g1(from_string("toy P"), "ftmcfe/test/g1");
    const auto Q = E::hash_to_g2(from_string("toy Q"), "ftmcfe/test/g2");
    const auto base = E::pair(P, Q);
    CHECK(!E::gt_is_one(base));
    CHECK(E::gt_in_subgroup(base));

    Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        const auto a = E::Scalar::from_bytes_reduce(rng.bytes(16));
        const auto b = E::Scalar::from_bytes_reduce(rng.bytes(16));
        CHECK(E::pair(E::g1_mul(P, a), E::g2_mul(Q, b)) == E::gt_pow(base, a * b));
    }
    const auto P2 = E::hash_to_g1(from_string("toy P2"), "ftmcfe/test/g1");
    CHECK(E::pair(E::g1_add(P, P2), Q) == E::gt_mul(E::pair(P, Q), E::pair(P2, Q)));
}

TEST_CASE("multi_pair equals the fold of single pairings")
{
    using E = bls::Bls12381;
    Rng rng(13);
    std::vector<E::PairTerm> terms;
    auto gt = E::gt_one();
    for (int i = 0; i < 7; ++i) {
        Bytes mp = rng.bytes(16), mq = rng.bytes(16);
        E::PairTerm t;
        t.a = E::hash_to_g1(mp, "ftmcfe/test/g1");
        t.b = E::hash_to_g2(mq, "ftmcfe/test/g2");
        t.negate = (i % 3 == 0);
        terms.push_back(t);
        const auto single = E::pair(t.a, t.b);
        gt = E::gt_mul(gt, t.negate ? E::gt_inv(single) : single);
    }
    CHECK(E::multi_pair(terms) == gt);

    // cancellation
    std::vector<E::PairTerm> cancel = {{terms[0].a, terms[0].b, false}, {terms[0].a, terms[0].b, true}};
    CHECK(E::gt_is_one(E::multi_pair(cancel)));
}

TEST_CASE("group serialization round trip and rejection")
{
    using E = bls::Bls12381;
    Rng rng(14);
    for (int i = 0; i < 10; ++i) {
        const auto P = E::hash_to_g1(rng.bytes(8), "ftmcfe/test/g1");
        uint8_t buf[E::kG1Bytes];
        E::g1_write(P, buf);
        E::G1 back;
        REQUIRE(!E::g1_read(buf, back));
        CHECK(back == P);

        const auto Q = E::hash_to_g2(rng.bytes(8), "ftmcfe/test/g2");
        uint8_t buf2[E::kG2Bytes];
        E::g2_write(Q, buf2);
        E::G2 back2;
        REQUIRE(!E::g2_read(buf2, back2));
        CHECK(back2 == Q);

        const auto t = E::pair(P, Q);
        std::vector<uint8_t> buf3(E::kGtBytes);
        E::gt_write(t, buf3.data());
        E::GT back3;
        REQUIRE(!E::gt_read(buf3.data(), back3));
        CHECK(back3 == t);
    }

    uint8_t zeros[E::kG1Bytes] = {0};
    E::G1 out;
    CHECK(E::g1_read(zeros, out) == ErrorCode::MalformedEncoding);

    // identity round trip
    uint8_t ident[E::kG1Bytes];
    E::g1_write(E::g1_identity(), ident);
    REQUIRE(!E::g1_read(ident, out));
    CHECK(out.is_identity());
}

TEST_CASE("hash to group determinism and separation")
{
    using E = bls::Bls12381;
    const auto a = E::hash_to_g1(from_string("msg"), "ftmcfe/H2/c1");
    const auto b = E::hash_to_g1(from_string("msg"), "ftmcfe/H2/c1");
    const auto c = E::hash_to_g1(from_string("msg"), "ftmcfe/H2/c2");
    CHECK(a == b);
    CHECK(!(a == c));
}
