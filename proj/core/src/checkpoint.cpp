#include "catan/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "catan/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint serialization assumes a little-endian host");

namespace catanrl {

namespace {

constexpr char kMagic[8] = {'X', 'D', 'I', 'M', 'C', 'K', 'P', 'T'};
constexpr std::uint32_t kFormatVersion = 1;

template <typename T>
void write_pod(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw ConfigError("truncated checkpoint");
    return v;
}

} // namespace

void save_checkpoint(const NetworkParams& params, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot open checkpoint for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    write_pod(os, kFormatVersion);

    const NetworkConfig& c = params.config;
    write_pod(os, static_cast<std::uint8_t>(c.arch));
    write_pod(os, static_cast<std::int32_t>(c.layers));
    write_pod(os, static_cast<std::int32_t>(c.channels));
    write_pod(os, static_cast<std::int32_t>(c.scalars));
    write_pod(os, static_cast<std::int32_t>(c.baseline_channels));
    write_pod(os, c.leaky_slope);
    write_pod(os, static_cast<std::uint8_t>(c.compat117 ? 1 : 0));

    write_pod(os, static_cast<std::uint32_t>(params.tensors.size()));
    for (const Tensor& t : params.tensors) {
        write_pod(os, static_cast<std::uint32_t>(t.name.size()));
        os.write(t.name.data(), static_cast<std::streamsize>(t.name.size()));
        write_pod(os, static_cast<std::uint32_t>(t.dims.size()));
        for (int d : t.dims) write_pod(os, static_cast<std::uint32_t>(d));
        os.write(reinterpret_cast<const char*>(t.v.data()),
                 static_cast<std::streamsize>(t.v.size() * sizeof(float)));
    }
    if (!os) throw ConfigError("failed writing checkpoint: " + path);
}

NetworkParams load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open checkpoint: " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw ConfigError("not a checkpoint file: " + path);
    const auto version = read_pod<std::uint32_t>(is);
    if (version != kFormatVersion)
        throw ConfigError("unsupported checkpoint version " + std::to_string(version));

    NetworkParams p;
    p.config.arch = static_cast<Arch>(read_pod<std::uint8_t>(is));
    p.config.layers = read_pod<std::int32_t>(is);
    p.config.channels = read_pod<std::int32_t>(is);
    p.config.scalars = read_pod<std::int32_t>(is);
    p.config.baseline_channels = read_pod<std::int32_t>(is);
    p.config.leaky_slope = read_pod<double>(is);
    p.config.compat117 = read_pod<std::uint8_t>(is) != 0;

    const auto count = read_pod<std::uint32_t>(is);
    p.tensors.resize(count);
    for (Tensor& t : p.tensors) {
        const auto name_len = read_pod<std::uint32_t>(is);
        t.name.resize(name_len);
        is.read(t.name.data(), name_len);
        const auto rank = read_pod<std::uint32_t>(is);
        t.dims.resize(rank);
        long n = 1;
        for (auto& d : t.dims) {
            d = static_cast<int>(read_pod<std::uint32_t>(is));
            n *= d;
        }
        t.v.resize(n);
        is.read(reinterpret_cast<char*>(t.v.data()),
                static_cast<std::streamsize>(n * sizeof(float)));
        if (!is) throw ConfigError("truncated checkpoint: " + path);
    }
    return p;
}

} // namespace catanrl
