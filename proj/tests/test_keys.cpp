#include <doctest.h>

#include <string>

#include "lowbits/errors.hpp"
#include "lowbits/keys.hpp"
#include "lowbits/mathcore.hpp"
#include "lowbits/rng.hpp"
#include "lowbits/transform.hpp"
#include "test_helpers.hpp"

using namespace lowbits;

TEST_CASE("generate_keypair satisfies the keypair invariants") {
    RsaKeyPair key = generate_keypair(512, 0);
    CHECK(key.has_factors());
    CHECK(key.p * key.q == key.n);
    CHECK(key.p != key.q);
    CHECK(key.n >= pow2(511));
    CHECK(key.n < pow2(512));
    CHECK(bit_length(key.n) == 512);

    Bignum phi = (key.p - 1) * (key.q - 1);
    CHECK((3 * key.d) % phi == 1);
    CHECK(ext_gcd(3, phi).g == 1);
}

TEST_CASE("generate_keypair is deterministic in the seed") {
    RsaKeyPair a = generate_keypair(256, 1234);
    RsaKeyPair b = generate_keypair(256, 1234);
    CHECK(a.n == b.n);
    CHECK(a.d == b.d);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);

    RsaKeyPair c = generate_keypair(256, 1235);
    CHECK(a.n != c.n);
}

TEST_CASE("generate_keypair rejects bad bit lengths") {
    CHECK_THROWS_AS(generate_keypair(63, 0), ConfigError);
    CHECK_THROWS_AS(generate_keypair(0, 0), ConfigError);
    CHECK_THROWS_AS(generate_keypair(66 + 1, 0), ConfigError);  // odd
    CHECK_NOTHROW(generate_keypair(64, 0));
}

TEST_CASE("sign of an encoded 1 is 1") {
    RsaKeyPair key = generate_keypair(256, 7);
    const std::uint8_t one[] = {0x01};
    Signature sig = sign(one, key, TransformSpec::identity_mod_n());
    CHECK(sig.value == 1);
}

TEST_CASE("cubing a signature recovers the encoded message") {
    RsaKeyPair key = generate_keypair(512, 21);
    TransformSpec spec = TransformSpec::sha1_low();
    for (int i = 0; i < 10; ++i) {
        std::string m = "message-" + std::to_string(i);
        Signature sig = sign(as_bytes(m), key, spec);
        CHECK(sig.value < key.n);
        CHECK(mod_pow(sig.value, 3, key.n) == encode(as_bytes(m), spec, key.public_key()).value);
    }
    // determinism
    CHECK(sign(as_bytes("x"), key, spec).value == sign(as_bytes("x"), key, spec).value);
}

TEST_CASE("verify_correct round trip and rejection") {
    RsaKeyPair key = generate_keypair(512, 33);
    PublicKey pub = key.public_key();
    TransformSpec spec = TransformSpec::sha1_low();
    std::string m = "round trip";
    Signature sig = sign(as_bytes(m), key, spec);

    CHECK(verify_correct(as_bytes(m), sig, pub, spec));
    CHECK_FALSE(verify_correct(as_bytes(m), Signature{(sig.value + 1) % key.n}, pub, spec));
    CHECK_FALSE(verify_correct(as_bytes("other message"), sig, pub, spec));
}

TEST_CASE("verify_correct accepts no random signatures") {
    RsaKeyPair key = generate_keypair(512, 44);
    PublicKey pub = key.public_key();
    TransformSpec spec = TransformSpec::sha1_low();
    std::string m = "target of random guessing";

    DeterministicRng rng(55);
    int accepted = 0;
    for (int i = 0; i < 10'000; ++i)
        if (verify_correct(as_bytes(m), Signature{rng.below(pub.n)}, pub, spec)) ++accepted;
    CHECK(accepted == 0);
}

TEST_CASE("honest signatures always verify") {
    RsaKeyPair key = generate_keypair(256, 66);
    PublicKey pub = key.public_key();
    TransformSpec spec = TransformSpec::identity_mod_n();
    DeterministicRng rng(67);
    for (int i = 0; i < 100; ++i) {
        auto m = rng.bytes(24);
        CHECK(verify_correct(m, sign(m, key, spec), pub, spec));
    }
}

TEST_CASE("out-of-range signatures are malformed, not false") {
    RsaKeyPair key = generate_keypair(256, 77);
    PublicKey pub = key.public_key();
    TransformSpec spec = TransformSpec::sha1_low();
    CHECK_THROWS_AS(verify_correct(as_bytes("m"), Signature{pub.n}, pub, spec),
                    MalformedSignatureError);
    CHECK_THROWS_AS(verify_correct(as_bytes("m"), Signature{pub.n + 5}, pub, spec),
                    MalformedSignatureError);
}

TEST_CASE("key files round trip") {
    RsaKeyPair key = generate_keypair(256, 88);

    std::string priv = serialize_private_key(key);
    RsaKeyPair loaded = parse_private_key(priv);
    CHECK(loaded.n == key.n);
    CHECK(loaded.d == key.d);
    CHECK(loaded.bit_length == key.bit_length);
    CHECK_FALSE(loaded.has_factors());  // factors never serialized

    std::string pubtext = serialize_public_key(key.public_key());
    PublicKey pub = parse_public_key(pubtext);
    CHECK(pub.n == key.n);
    CHECK(pub.bit_length == key.bit_length);
    CHECK(pubtext.find("d=") == std::string::npos);

    SUBCASE("fields are lowercase hex") {
        CHECK(priv.find_first_of("ABCDEF") == std::string::npos);
        CHECK(priv.substr(0, 2) == "n=");
        CHECK(pubtext.find("bits=100\n") != std::string::npos);  // 256 = 0x100
    }
}

TEST_CASE("key file parsing rejects malformed input") {
    RsaKeyPair key = generate_keypair(256, 99);
    std::string pubtext = serialize_public_key(key.public_key());

    CHECK_THROWS_AS(parse_public_key("n=ff\n"), ConfigError);                 // missing fields
    CHECK_THROWS_AS(parse_public_key(pubtext + "zz=1\n"), ConfigError);       // unknown field
    CHECK_THROWS_AS(parse_private_key(pubtext), ConfigError);                 // no d=
    CHECK_THROWS_AS(parse_public_key("n=ff\ne=5\nbits=8\n"), ConfigError);    // e != 3
    CHECK_THROWS_AS(parse_public_key("n=ff\ne=3\nbits=9\n"), ConfigError);    // wrong bits
    CHECK_THROWS_AS(parse_public_key("n=xy\ne=3\nbits=8\n"), std::invalid_argument);
}
