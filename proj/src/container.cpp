#include "lowbits/container.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>

#include "lowbits/errors.hpp"

namespace lowbits {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'L', 'B', 'F', '1'};
constexpr std::uint8_t kVersion = 1;

void put_u16be(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

class Reader {
  public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::span<const std::uint8_t> take(std::size_t n, const char* what) {
        if (bytes_.size() - pos_ < n)
            throw MalformedContainerError(std::string("container truncated reading ") + what);
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::uint16_t u16be(const char* what) {
        auto b = take(2, what);
        return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    }

    std::uint32_t u32be(const char* what) {
        auto b = take(4, what);
        return (static_cast<std::uint32_t>(b[0]) << 24) |
               (static_cast<std::uint32_t>(b[1]) << 16) |
               (static_cast<std::uint32_t>(b[2]) << 8) | b[3];
    }

    std::uint8_t u8(const char* what) { return take(1, what)[0]; }

    bool done() const { return pos_ == bytes_.size(); }

  private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_container(const SignedContainer& c) {
    if (c.compare_bits > 0xFFFF)
        throw ConfigError("container: compare_bits does not fit the 16-bit field");
    const std::vector<std::uint8_t> sig = to_bytes_be(c.signature);

    std::vector<std::uint8_t> out;
    out.reserve(16 + c.payload.size() + sig.size());
    for (std::uint8_t m : kMagic) out.push_back(m);
    out.push_back(kVersion);
    put_u16be(out, static_cast<std::uint16_t>(c.compare_bits));
    out.push_back(static_cast<std::uint8_t>(c.transform));
    put_u32be(out, static_cast<std::uint32_t>(c.payload.size()));
    out.insert(out.end(), c.payload.begin(), c.payload.end());
    put_u32be(out, static_cast<std::uint32_t>(sig.size()));
    out.insert(out.end(), sig.begin(), sig.end());
    return out;
}

SignedContainer parse_container(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    auto magic = in.take(4, "magic");
    if (!std::equal(magic.begin(), magic.end(), kMagic.begin()))
        throw MalformedContainerError("container: bad magic (expected \"LBF1\")");
    if (in.u8("version") != kVersion)
        throw MalformedContainerError("container: unsupported version");

    SignedContainer c;
    c.compare_bits = in.u16be("compare_bits");
    c.transform = transform_from_id(in.u8("transform id"));

    auto payload = in.take(in.u32be("payload length"), "payload");
    c.payload.assign(payload.begin(), payload.end());

    auto sig = in.take(in.u32be("signature length"), "signature");
    if (!sig.empty() && sig[0] == 0)
        throw MalformedContainerError("container: non-minimal signature encoding");
    c.signature = from_bytes_be(sig);

    if (!in.done()) throw MalformedContainerError("container: trailing bytes");
    return c;
}

void write_container_file(const std::filesystem::path& path, const SignedContainer& c) {
    const auto bytes = serialize_container(c);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write container file: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

SignedContainer load_container(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open container file: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return parse_container(bytes);
}

}  // namespace lowbits
