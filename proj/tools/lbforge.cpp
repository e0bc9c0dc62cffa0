// lbforge: keygen / sign / verify / forge / demo / sweep / oracle front end for
// the lowbits library. Exit codes: 0 success (verify: accept), 1 failure
// (verify: reject), 2 malformed or invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lowbits/container.hpp"
#include "lowbits/errors.hpp"
#include "lowbits/forge.hpp"
#include "lowbits/keys.hpp"
#include "lowbits/mathcore.hpp"
#include "lowbits/oracle.hpp"
#include "lowbits/rng.hpp"
#include "lowbits/sweep.hpp"
#include "lowbits/transform.hpp"
#include "lowbits/verifier.hpp"

namespace {

using namespace lowbits;

std::span<const std::uint8_t> as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string hex(const Bignum& v) { return "0x" + to_hex(v); }

void print_provenance(std::ostream& os, const ForgedSignature& f, const EncodedMessage& M,
                      const PublicKey& pub, unsigned b) {
    os << "  construction : " << (f.construction == ForgeCase::Odd ? "odd" : "even") << "\n";
    os << "  r            : " << hex(f.r) << "\n";
    if (f.construction == ForgeCase::Even) {
        os << "  c            : " << hex(f.c) << "\n";
        os << "  tau          : " << hex(f.tau) << "\n";
    }
    os << "  sigma        : " << hex(f.sigma) << "\n";
    try {
        os << "  slack z      : " << hex(report_slack(f, M, pub, b))
           << "   (sigma^3 mod n = M mod 2^b + 2^b*z)\n";
    } catch (const InternalCheckError&) {
        // only reachable with --force-out-of-bound when the forgery missed
        os << "  slack z      : undefined (low bits do not match)\n";
    }
}

void print_bound_line(std::ostream& os, unsigned b, unsigned bits) {
    const unsigned long long lhs = 3ULL * (b + 3ULL);
    if (check_bound(b, bits)) {
        os << "bound check       : 3*(b+3) = " << lhs << " < " << bits
           << " -> forgery guaranteed for every message\n";
    } else {
        os << "bound check       : WARNING: 3*(b+3) = " << lhs << " >= " << bits
           << " -> outside the guarantee; proceeding anyway\n";
    }
}

// ---------------------------------------------------------------------------

struct KeygenArgs {
    unsigned bits = 1024;
    std::optional<std::uint64_t> seed;
    std::filesystem::path private_out = "private.key";
    std::filesystem::path public_out = "public.key";
};

int cmd_keygen(const KeygenArgs& a) {
    const std::uint64_t seed = resolve_seed(a.seed);
    RsaKeyPair key = generate_keypair(a.bits, seed);
    write_private_key_file(a.private_out, key);
    write_public_key_file(a.public_out, key.public_key());
    std::cout << "generated " << a.bits << "-bit keypair (e=3, seed=" << seed << ")\n"
              << "private key -> " << a.private_out.string() << "\n"
              << "public key  -> " << a.public_out.string() << "\n";
    return 0;
}

struct SignArgs {
    std::filesystem::path key_path;
    std::filesystem::path payload_path;
    std::filesystem::path out_path = "signed.lbf";
    std::string transform = "sha1-low";
    unsigned compare_bits = 160;
};

int cmd_sign(const SignArgs& a) {
    RsaKeyPair key = load_private_key(a.key_path);
    TransformSpec spec = transform_from_name(a.transform);
    auto payload = read_file_bytes(a.payload_path);

    SignedContainer c;
    c.compare_bits = a.compare_bits;
    c.transform = spec.kind;
    c.payload = payload;
    c.signature = sign(payload, key, spec).value;
    write_container_file(a.out_path, c);
    std::cout << "signed " << payload.size() << "-byte payload -> " << a.out_path.string()
              << " (b=" << a.compare_bits << ", transform=" << a.transform << ")\n";
    return 0;
}

struct VerifyArgs {
    std::filesystem::path key_path;
    std::filesystem::path container_path;
    std::string mode = "flawed";
    std::optional<unsigned> compare_bits;   // overrides the container's b
    std::optional<std::string> transform;   // overrides the container's transform
};

int cmd_verify(const VerifyArgs& a) {
    PublicKey pub = load_public_key(a.key_path);
    SignedContainer c = load_container(a.container_path);

    TransformSpec spec = a.transform ? transform_from_name(*a.transform)
                                     : TransformSpec{c.transform, 160};
    const Signature sig{c.signature};

    bool ok = false;
    if (a.mode == "correct") {
        ok = verify_correct(c.payload, sig, pub, spec);
    } else if (a.mode == "flawed") {
        VerifierPolicy policy{a.compare_bits.value_or(c.compare_bits), spec};
        ok = verify_flawed(c.payload, sig, pub, policy);
    } else {
        throw ConfigError("--mode must be 'flawed' or 'correct'");
    }
    std::cout << (a.mode == "correct" ? "correct" : "flawed") << " verifier: "
              << (ok ? "ACCEPT" : "REJECT") << "\n";
    return ok ? 0 : 1;
}

struct ForgeArgs {
    std::filesystem::path key_path;
    std::filesystem::path payload_path;
    std::filesystem::path out_path = "forged.lbf";
    std::string transform = "sha1-low";
    unsigned compare_bits = 160;
    bool explain = false;
    bool force_out_of_bound = false;
};

int cmd_forge(const ForgeArgs& a) {
    PublicKey pub = load_public_key(a.key_path);
    TransformSpec spec = transform_from_name(a.transform);
    auto payload = read_file_bytes(a.payload_path);

    VerifierPolicy policy{a.compare_bits, spec};
    ForgedSignature f = forge(payload, pub, policy, ForgeOptions{a.force_out_of_bound});

    SignedContainer c;
    c.compare_bits = a.compare_bits;
    c.transform = spec.kind;
    c.payload = payload;
    c.signature = f.sigma;
    write_container_file(a.out_path, c);

    std::cout << "forged signature on " << payload.size() << "-byte payload -> "
              << a.out_path.string() << " (b=" << a.compare_bits
              << ", transform=" << a.transform << ", public key only)\n";
    if (a.explain) {
        EncodedMessage M = encode(payload, spec, pub);
        std::cout << "provenance:\n";
        print_provenance(std::cout, f, M, pub, a.compare_bits);
    }
    return 0;
}

struct DemoArgs {
    unsigned bits = 1024;
    unsigned compare_bits = 160;
    std::string transform = "sha1-low";
    std::optional<std::uint64_t> seed;
};

int cmd_demo(const DemoArgs& a) {
    const std::uint64_t seed = resolve_seed(a.seed);
    const TransformSpec spec = transform_from_name(a.transform);
    const std::string benign = "Authorized firmware image v1.0 (demo payload)";
    const std::string forged_payload =
        "Unauthorized demo payload - never signed by the key holder (benign stand-in)";

    std::cout << "== forging a signature for a verifier that compares only the low "
              << a.compare_bits << " bits ==\n"
              << "modulus bits      : " << a.bits << "\n"
              << "compared low bits : " << a.compare_bits << "\n"
              << "transform         : " << a.transform << "\n"
              << "seed              : " << seed << "\n";
    print_bound_line(std::cout, a.compare_bits, a.bits);

    std::cout << "\n[1] generating " << a.bits << "-bit keypair (public exponent 3)\n";
    RsaKeyPair key = generate_keypair(a.bits, seed);
    PublicKey pub = key.public_key();
    std::cout << "  n = " << hex(pub.n) << "\n";

    std::cout << "\n[2] signing the benign payload with the private key\n"
              << "  payload : \"" << benign << "\"\n";
    Signature honest = sign(as_bytes(benign), key, spec);
    std::cout << "  sigma   : " << hex(honest.value) << "\n";
    VerifierPolicy policy{a.compare_bits, spec};
    std::cout << "  flawed verifier  : "
              << (verify_flawed(as_bytes(benign), honest, pub, policy) ? "ACCEPT" : "REJECT")
              << "\n"
              << "  correct verifier : "
              << (verify_correct(as_bytes(benign), honest, pub, spec) ? "ACCEPT" : "REJECT")
              << "\n";

    std::cout << "\n[3] forging a signature on a different payload, public key only\n"
              << "  payload : \"" << forged_payload << "\"\n";
    ForgedSignature f = forge(as_bytes(forged_payload), pub, policy, ForgeOptions{true});
    EncodedMessage M = encode(as_bytes(forged_payload), spec, pub);
    print_provenance(std::cout, f, M, pub, a.compare_bits);

    std::cout << "\n[4] verdict on the forged signature\n";
    bool flawed_ok = false;
    try {
        flawed_ok = verify_flawed(as_bytes(forged_payload), Signature{f.sigma}, pub, policy);
    } catch (const MalformedSignatureError&) {
        flawed_ok = false;
    }
    const bool correct_ok =
        f.sigma < pub.n &&
        verify_correct(as_bytes(forged_payload), Signature{f.sigma}, pub, spec);
    std::cout << "flawed verifier: " << (flawed_ok ? "ACCEPT" : "REJECT") << "\n"
              << "correct verifier: " << (correct_ok ? "ACCEPT" : "REJECT") << "\n";
    return 0;
}

struct SweepArgs {
    unsigned bits = 512;
    std::optional<unsigned> b_from;
    std::optional<unsigned> b_to;
    unsigned trials = 100;
    std::string transform = "sha1-low";
    std::optional<std::uint64_t> seed;
};

int cmd_sweep(const SweepArgs& a) {
    const std::uint64_t seed = resolve_seed(a.seed);
    // Default range brackets the guarantee boundary b ~ bits/3 - 3.
    const unsigned edge = a.bits / 3;
    const unsigned b_from = a.b_from.value_or(edge >= 6 ? edge - 6 : 8);
    const unsigned b_to = a.b_to.value_or(edge + 2);

    RsaKeyPair key = generate_keypair(a.bits, seed);
    SweepReport report = run_sweep(key.public_key(), b_from, b_to, a.trials, seed,
                                   transform_from_name(a.transform));

    std::cout << "# sweep: modulus_bits=" << report.modulus_bits << " trials=" << a.trials
              << " seed=" << seed << " transform=" << a.transform << "\n"
              << "#    b  trials  accepted   odd  even  bound\n";
    for (const SweepRow& row : report.rows) {
        std::cout << std::setw(6) << row.compare_bits << std::setw(8) << row.trials
                  << std::setw(10) << row.accepted << std::setw(6) << row.odd_cases
                  << std::setw(6) << row.even_cases << "  "
                  << (row.bound_satisfied ? "yes" : "no") << "\n";
    }
    return 0;
}

struct OracleArgs {
    unsigned modulus_bits = 8;
    std::optional<std::uint64_t> target;
    std::optional<unsigned> validate_odd;
    std::optional<std::uint64_t> seed;
    bool serial = false;
};

int cmd_oracle(const OracleArgs& a) {
    if (a.target) {
        CubeRootSet set = a.serial ? brute_cuberoots_mod_pow2_serial(*a.target, a.modulus_bits)
                                   : brute_cuberoots_mod_pow2(*a.target, a.modulus_bits);
        std::cout << "cube roots of " << set.target << " mod 2^" << set.modulus_bits << ": "
                  << set.roots.size() << " found\n";
        for (std::uint64_t s : set.roots)
            std::cout << "  0x" << std::hex << s << std::dec << "\n";
    }
    if (a.validate_odd) {
        const std::uint64_t seed = resolve_seed(a.seed);
        OddConstructionReport rep = validate_odd_construction(*a.validate_odd, a.modulus_bits, seed);
        std::cout << "odd-construction validation: b=" << a.modulus_bits << " trials="
                  << rep.trials << " seed=" << seed << " -> " << rep.passes << "/"
                  << rep.trials << " roots confirmed by enumeration\n";
    }
    if (!a.target && !a.validate_odd)
        throw ConfigError("oracle: pass --target and/or --validate-odd");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lowbits: forge RSA (e=3) signatures against verifiers that compare only the "
        "b low-order bits of the encoded message"};
    app.require_subcommand(1);

    KeygenArgs keygen_args;
    std::uint64_t keygen_seed = 0;
    auto* keygen = app.add_subcommand("keygen", "generate a deterministic e=3 keypair");
    keygen->add_option("--bits", keygen_args.bits, "modulus bit length (even, >= 64)")
        ->capture_default_str();
    keygen->add_option("--seed", keygen_seed, "RNG seed (default: OS entropy)");
    keygen->add_option("--private-out", keygen_args.private_out, "private key path")
        ->capture_default_str();
    keygen->add_option("--public-out", keygen_args.public_out, "public key path")
        ->capture_default_str();

    SignArgs sign_args;
    auto* sign_cmd = app.add_subcommand("sign", "sign a payload into a container");
    sign_cmd->add_option("--key", sign_args.key_path, "private key file")->required();
    sign_cmd->add_option("--in", sign_args.payload_path, "payload file")->required();
    sign_cmd->add_option("--out", sign_args.out_path, "output container")->capture_default_str();
    sign_cmd->add_option("--transform", sign_args.transform, "sha1-low|sha1-block|identity")
        ->capture_default_str();
    sign_cmd->add_option("--compare-bits", sign_args.compare_bits,
                         "b recorded in the container")
        ->check(CLI::Range(1u, 65535u))
        ->capture_default_str();

    VerifyArgs verify_args;
    unsigned verify_bits = 0;
    std::string verify_transform;
    auto* verify_cmd = app.add_subcommand("verify", "verify a container");
    verify_cmd->add_option("--key", verify_args.key_path, "public key file")->required();
    verify_cmd->add_option("--in", verify_args.container_path, "container file")->required();
    verify_cmd->add_option("--mode", verify_args.mode, "flawed|correct")->capture_default_str();
    verify_cmd->add_option("--compare-bits", verify_bits, "override the container's b");
    verify_cmd->add_option("--transform", verify_transform, "override the container's transform");

    ForgeArgs forge_args;
    auto* forge_cmd =
        app.add_subcommand("forge", "forge a signature using only the public key");
    forge_cmd->add_option("--key", forge_args.key_path, "public key file")->required();
    forge_cmd->add_option("--in", forge_args.payload_path, "payload file")->required();
    forge_cmd->add_option("--out", forge_args.out_path, "output container")->capture_default_str();
    forge_cmd->add_option("--transform", forge_args.transform, "sha1-low|sha1-block|identity")
        ->capture_default_str();
    forge_cmd->add_option("--compare-bits", forge_args.compare_bits, "verifier's b")
        ->check(CLI::Range(8u, 65535u))
        ->capture_default_str();
    forge_cmd->add_flag("--explain", forge_args.explain, "print the construction used");
    forge_cmd->add_flag("--force-out-of-bound", forge_args.force_out_of_bound,
                        "attempt the forgery even when 3*(b+3) >= modulus bits");

    DemoArgs demo_args;
    std::uint64_t demo_seed = 0;
    auto* demo = app.add_subcommand(
        "demo", "end-to-end demonstration at the deployed parameters (1024-bit key, b=160)");
    demo->add_option("--bits", demo_args.bits, "modulus bit length")->capture_default_str();
    demo->add_option("--compare-bits", demo_args.compare_bits, "bits the flawed verifier checks")
        ->check(CLI::Range(8u, 65535u))
        ->capture_default_str();
    demo->add_option("--transform", demo_args.transform, "sha1-low|sha1-block|identity")
        ->capture_default_str();
    demo->add_option("--seed", demo_seed, "RNG seed (default: OS entropy)");

    SweepArgs sweep_args;
    std::uint64_t sweep_seed = 0;
    unsigned sweep_b_from = 0, sweep_b_to = 0;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "measure forgery acceptance for a range of b around the guarantee bound");
    sweep_cmd->add_option("--bits", sweep_args.bits, "modulus bit length")->capture_default_str();
    sweep_cmd->add_option("--b-from", sweep_b_from, "first b (default: bits/3 - 6)");
    sweep_cmd->add_option("--b-to", sweep_b_to, "last b (default: bits/3 + 2)");
    sweep_cmd->add_option("--trials", sweep_args.trials, "forgeries per b")->capture_default_str();
    sweep_cmd->add_option("--transform", sweep_args.transform, "sha1-low|sha1-block|identity")
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_seed, "RNG seed (default: OS entropy)");

    OracleArgs oracle_args;
    std::uint64_t oracle_target = 0, oracle_seed = 0;
    unsigned oracle_validate = 0;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "exhaustive cube-root ground truth modulo small powers of two");
    oracle_cmd->add_option("--modulus-bits", oracle_args.modulus_bits, "b in 2^b (2..24)")
        ->capture_default_str();
    oracle_cmd->add_option("--target", oracle_target, "list all cube roots of this value");
    oracle_cmd->add_option("--validate-odd", oracle_validate,
                           "cross-check N odd-construction roots against enumeration");
    oracle_cmd->add_option("--seed", oracle_seed, "RNG seed (default: OS entropy)");
    oracle_cmd->add_flag("--serial", oracle_args.serial, "use the serial reference kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (keygen->count("--seed")) keygen_args.seed = keygen_seed;
    if (verify_cmd->count("--compare-bits")) verify_args.compare_bits = verify_bits;
    if (verify_cmd->count("--transform")) verify_args.transform = verify_transform;
    if (demo->count("--seed")) demo_args.seed = demo_seed;
    if (sweep_cmd->count("--seed")) sweep_args.seed = sweep_seed;
    if (sweep_cmd->count("--b-from")) sweep_args.b_from = sweep_b_from;
    if (sweep_cmd->count("--b-to")) sweep_args.b_to = sweep_b_to;
    if (oracle_cmd->count("--seed")) oracle_args.seed = oracle_seed;
    if (oracle_cmd->count("--target")) oracle_args.target = oracle_target;
    if (oracle_cmd->count("--validate-odd")) oracle_args.validate_odd = oracle_validate;

    try {
        if (*keygen) return cmd_keygen(keygen_args);
        if (*sign_cmd) return cmd_sign(sign_args);
        if (*verify_cmd) return cmd_verify(verify_args);
        if (*forge_cmd) return cmd_forge(forge_args);
        if (*demo) return cmd_demo(demo_args);
        if (*sweep_cmd) return cmd_sweep(sweep_args);
        if (*oracle_cmd) return cmd_oracle(oracle_args);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedContainerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedSignatureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
