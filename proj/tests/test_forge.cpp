#include <doctest.h>

#include <string>

#include "lowbits/errors.hpp"
#include "lowbits/forge.hpp"
#include "lowbits/keys.hpp"
#include "lowbits/mathcore.hpp"
#include "lowbits/oracle.hpp"
#include "lowbits/rng.hpp"
#include "lowbits/verifier.hpp"
#include "test_helpers.hpp"

using namespace lowbits;

TEST_CASE("check_bound is the integer form of b < bits/3 - 3") {
    CHECK(check_bound(160, 1024));        // 489 < 1024
    CHECK_FALSE(check_bound(160, 489));   // 489 < 489 fails
    CHECK(check_bound(0, 10));
    CHECK_FALSE(check_bound(0, 9));

    // cross-check against exact rational arithmetic on random pairs
    DeterministicRng rng(201);
    for (int i = 0; i < 100; ++i) {
        unsigned b = static_cast<unsigned>(rng.next_u64() % 600);
        unsigned bits = static_cast<unsigned>(rng.next_u64() % 2048) + 1;
        bool rational = mpq_class(b) < mpq_class(bits, 3) - 3;
        CHECK(check_bound(b, bits) == rational);
    }
}

TEST_CASE("odd construction: cube root of unity is unity") {
    RsaKeyPair key = generate_keypair(256, 202);
    PublicKey pub = key.public_key();
    EncodedMessage one = EncodedMessage::from_value(1, pub);
    ForgedSignature f = forge_odd(one, 16, pub);
    CHECK(f.sigma == 1);
    CHECK(f.construction == ForgeCase::Odd);
    CHECK(report_slack(f, one, pub, 16) == 0);
}

TEST_CASE("odd construction works for every odd residue at b = 8") {
    RsaKeyPair key = generate_keypair(256, 203);
    PublicKey pub = key.public_key();
    for (unsigned m = 1; m < 256; m += 2) {
        EncodedMessage M = EncodedMessage::from_value(m, pub);
        ForgedSignature f = forge_odd(M, 8, pub);
        CHECK(f.sigma < 256);
        CHECK(is_odd(f.sigma));
        CHECK(low_bits(f.sigma * f.sigma * f.sigma, 8) == m);
        CHECK(f.sigma * f.sigma * f.sigma < pub.n);
    }
}

TEST_CASE("odd construction stays below n across the in-bound widths") {
    RsaKeyPair key = generate_keypair(512, 204);
    PublicKey pub = key.public_key();
    DeterministicRng rng(205);
    // the in-bound range of b for a 512-bit modulus is [8, 167]
    for (unsigned b : {8u, 32u, 96u, 167u}) {
        for (int i = 0; i < 25; ++i) {
            Bignum value = rng.below(pub.n) | 1;
            EncodedMessage M = EncodedMessage::from_value(value, pub);
            ForgedSignature f = forge_odd(M, b, pub);
            CHECK(f.sigma < pow2(b));
            CHECK(is_odd(f.sigma));
            Bignum cube = f.sigma * f.sigma * f.sigma;
            CHECK(cube <= pow2(3 * b));
            CHECK(pow2(3 * b) <= pow2(512 - 9));
            CHECK(pow2(512 - 9) < pub.n);
            CHECK(low_bits(cube % pub.n, b) == low_bits(M.value, b));
        }
    }
}

TEST_CASE("even construction satisfies the proof inequalities") {
    RsaKeyPair key = generate_keypair(512, 206);
    PublicKey pub = key.public_key();
    const unsigned b = 96;
    DeterministicRng rng(207);

    for (int i = 0; i < 200; ++i) {
        Bignum value = rng.below(pub.n);
        mpz_clrbit(value.get_mpz_t(), 0);
        EncodedMessage M = EncodedMessage::from_value(value, pub);
        ForgedSignature f = forge_even(M, b, pub);

        // sigma = 2^b * c + tau with tau odd below 2^b
        CHECK(f.tau < pow2(b));
        CHECK(is_odd(f.tau));
        CHECK(f.sigma == (f.c << b) + f.tau);

        // n < sigma^3 < (125/64) n, exact in integers
        Bignum cube = f.sigma * f.sigma * f.sigma;
        CHECK(cube > pub.n);
        CHECK(64 * cube < 125 * pub.n);

        // the reduction is a single subtraction and preserves the low bits
        CHECK((cube - pub.n) % pow2(b) == low_bits(M.value, b));
        CHECK(low_bits(cube % pub.n, b) == low_bits(M.value, b));
    }
}

TEST_CASE("even construction picks the least c clearing the cube") {
    RsaKeyPair key = generate_keypair(512, 208);
    PublicKey pub = key.public_key();
    EncodedMessage M = EncodedMessage::from_value(42, pub);
    ForgedSignature f = forge_even(M, 96, pub);
    Bignum shifted = f.c << 96;
    CHECK(shifted * shifted * shifted > pub.n);
    Bignum prev = (f.c - 1) << 96;
    CHECK(prev * prev * prev <= pub.n);
}

TEST_CASE("construction dispatch follows the parity of the digest") {
    RsaKeyPair key = generate_keypair(1024, 209);
    PublicKey pub = key.public_key();
    VerifierPolicy policy{160, TransformSpec::sha1_low()};

    std::string odd_msg = message_with_digest_parity(true);
    std::string even_msg = message_with_digest_parity(false);
    CHECK(forge(as_bytes(odd_msg), pub, policy).construction == ForgeCase::Odd);
    CHECK(forge(as_bytes(even_msg), pub, policy).construction == ForgeCase::Even);
}

TEST_CASE("forged signatures verify at the deployed parameters") {
    RsaKeyPair key = generate_keypair(1024, 210);
    PublicKey pub = key.public_key();
    VerifierPolicy policy{160, TransformSpec::sha1_low()};
    for (int i = 0; i < 50; ++i) {
        std::string m = "arbitrary message #" + std::to_string(i);
        ForgedSignature f = forge(as_bytes(m), pub, policy);  // self-checks acceptance
        CHECK(verify_flawed(as_bytes(m), Signature{f.sigma}, pub, policy));
    }
}

TEST_CASE("wrong-parity input is a distinct error") {
    RsaKeyPair key = generate_keypair(256, 211);
    PublicKey pub = key.public_key();
    CHECK_THROWS_AS(forge_odd(EncodedMessage::from_value(2, pub), 16, pub), WrongCaseError);
    CHECK_THROWS_AS(forge_even(EncodedMessage::from_value(3, pub), 16, pub), WrongCaseError);
}

TEST_CASE("the bound is enforced unless explicitly overridden") {
    RsaKeyPair key = generate_keypair(512, 212);
    PublicKey pub = key.public_key();
    EncodedMessage M = EncodedMessage::from_value(5, pub);

    CHECK_THROWS_AS(forge_odd(M, 168, pub), BoundError);  // 3*171 = 513 >= 512
    CHECK_NOTHROW(forge_odd(M, 168, pub, ForgeOptions{true}));

    VerifierPolicy policy{170, TransformSpec::sha1_low()};
    CHECK_THROWS_AS(forge(as_bytes("m"), pub, policy), BoundError);
    CHECK_NOTHROW(forge(as_bytes("m"), pub, policy, ForgeOptions{true}));
}

TEST_CASE("widths below the artifact floor are rejected") {
    RsaKeyPair key = generate_keypair(256, 213);
    PublicKey pub = key.public_key();
    EncodedMessage M = EncodedMessage::from_value(3, pub);
    CHECK_THROWS_AS(forge_odd(M, 7, pub), std::domain_error);
    CHECK_THROWS_AS(forge_even(EncodedMessage::from_value(4, pub), 4, pub), std::domain_error);
    // ... while the bare cube-root core still serves tests down to b = 2
    CHECK_NOTHROW(odd_cube_root_mod_pow2(3, 4));
}

TEST_CASE("odd cube root core matches the enumeration oracle") {
    DeterministicRng rng(214);
    for (unsigned b : {8u, 12u, 16u}) {
        for (int i = 0; i < 25; ++i) {
            std::uint64_t m = rng.next_u64() | 1;
            Bignum root = odd_cube_root_mod_pow2(Bignum(static_cast<unsigned long>(m)), b);
            CubeRootSet truth =
                brute_cuberoots_mod_pow2_serial(m & ((std::uint64_t{1} << b) - 1), b);
            CHECK(truth.contains(to_u64(root)));
        }
    }
}

TEST_CASE("report_slack recomputes from the definition") {
    RsaKeyPair key = generate_keypair(512, 215);
    PublicKey pub = key.public_key();
    const unsigned b = 96;
    DeterministicRng rng(216);

    SUBCASE("odd case: sigma^3 < n, so no modular subtraction") {
        Bignum value = rng.below(pub.n) | 1;
        EncodedMessage M = EncodedMessage::from_value(value, pub);
        ForgedSignature f = forge_odd(M, b, pub);
        Bignum cube = f.sigma * f.sigma * f.sigma;
        CHECK(report_slack(f, M, pub, b) == (cube - low_bits(M.value, b)) / pow2(b));
    }

    SUBCASE("even case: sigma^3 mod n = sigma^3 - n") {
        Bignum value = rng.below(pub.n);
        mpz_clrbit(value.get_mpz_t(), 0);
        EncodedMessage M = EncodedMessage::from_value(value, pub);
        ForgedSignature f = forge_even(M, b, pub);
        Bignum cube = f.sigma * f.sigma * f.sigma;
        Bignum z = report_slack(f, M, pub, b);
        CHECK(z == (cube - pub.n - low_bits(M.value, b)) / pow2(b));
        CHECK((z << b) < pub.n);
    }
}

TEST_CASE("forgeries never survive the correct verifier") {
    RsaKeyPair key = generate_keypair(1024, 217);
    PublicKey pub = key.public_key();
    VerifierPolicy policy{160, TransformSpec::sha1_low()};
    for (int i = 0; i < 25; ++i) {
        std::string m = "soundness probe " + std::to_string(i);
        ForgedSignature f = forge(as_bytes(m), pub, policy);
        CHECK_FALSE(verify_correct(as_bytes(m), Signature{f.sigma}, pub, policy.transform));
    }
}
