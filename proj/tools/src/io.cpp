#include "qfourier_cli/io.hpp"

#include <bit>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <random>
#include <string_view>

namespace qfourier::cli {

namespace {

constexpr std::string_view kMagic = "QSG1";
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 8;

static_assert(std::numeric_limits<double>::is_iec559);

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
    const auto bits = std::bit_cast<std::uint64_t>(d);
    for (int s = 0; s < 64; s += 8) out.push_back(static_cast<std::uint8_t>(bits >> s));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int b = 3; b >= 0; --b) v = (v << 8) | p[b];
    return v;
}

double get_f64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | p[b];
    return std::bit_cast<double>(v);
}

}  // namespace

std::vector<std::uint8_t> encode_qsig(const QsigFile& file) {
    const std::size_t n = file.group.order();
    if (file.values.size() != n * n) throw FormatError("payload length does not match group");
    if (file.group.rank() > 255) throw FormatError("group rank exceeds 255");
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + 4 * file.group.rank() + 32 * file.values.size());
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(file.group.rank()));
    out.push_back(file.side == Carrier::Primal ? 0 : 1);
    out.push_back(0);
    for (std::size_t m : file.group.moduli()) {
        if (m > std::numeric_limits<std::uint32_t>::max()) throw FormatError("modulus exceeds 32 bits");
        put_u32(out, static_cast<std::uint32_t>(m));
    }
    for (const Quaternion& q : file.values) {
        if (!is_finite(q)) throw FormatError("refusing to write a non-finite value");
        put_f64(out, q.w);
        put_f64(out, q.x);
        put_f64(out, q.y);
        put_f64(out, q.z);
    }
    return out;
}

QsigFile decode_qsig(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kHeaderSize || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
        throw FormatError("not a QSIG file (bad magic)");
    }
    if (bytes[4] != kVersion) throw FormatError("unsupported QSIG version " + std::to_string(bytes[4]));
    const std::size_t rank = bytes[5];
    const std::uint8_t side = bytes[6];
    if (rank == 0) throw FormatError("QSIG rank must be at least 1");
    if (side > 1) throw FormatError("QSIG side byte must be 0 or 1");
    if (bytes[7] != 0) throw FormatError("QSIG reserved byte must be zero");
    if (bytes.size() < kHeaderSize + 4 * rank) throw FormatError("truncated QSIG header");

    std::vector<std::size_t> moduli(rank);
    std::size_t order = 1;
    for (std::size_t t = 0; t < rank; ++t) {
        moduli[t] = get_u32(bytes.data() + kHeaderSize + 4 * t);
        if (moduli[t] == 0) throw FormatError("QSIG modulus must be positive");
        if (order > (std::size_t{1} << 24) / moduli[t]) throw FormatError("QSIG group too large");
        order *= moduli[t];
    }
    const std::size_t payload_at = kHeaderSize + 4 * rank;
    const std::size_t expected = payload_at + 32 * order * order;
    if (bytes.size() != expected) {
        throw FormatError("QSIG payload length " + std::to_string(bytes.size() - payload_at) + " bytes, expected " +
                          std::to_string(expected - payload_at));
    }

    QsigFile file{FiniteAbelianGroup{moduli}, side == 0 ? Carrier::Primal : Carrier::Dual, {}};
    file.values.resize(order * order);
    const std::uint8_t* p = bytes.data() + payload_at;
    for (Quaternion& q : file.values) {
        q = {get_f64(p), get_f64(p + 8), get_f64(p + 16), get_f64(p + 24)};
        if (!is_finite(q)) throw FormatError("QSIG payload contains a non-finite value");
        p += 32;
    }
    return file;
}

QsigFile read_qsig(const std::filesystem::path& path) { return decode_qsig(read_bytes(path)); }

void write_qsig(const std::filesystem::path& path, const QsigFile& file) {
    write_bytes_atomic(path, encode_qsig(file));
}

QsigFile to_file(const QSignal& f) {
    return {f.group(), Carrier::Primal, {f.values().begin(), f.values().end()}};
}

QsigFile to_file(const QSpectrum& F) {
    return {F.group(), Carrier::Dual, {F.values().begin(), F.values().end()}};
}

QSignal as_signal(const QsigFile& file) {
    if (file.side != Carrier::Primal) throw FormatError("expected a primal (signal) QSIG file, got a spectrum");
    return QSignal{file.group, file.values};
}

QSpectrum as_spectrum(const QsigFile& file) {
    if (file.side != Carrier::Dual) throw FormatError("expected a dual (spectrum) QSIG file, got a signal");
    return QSpectrum{file.group, file.values};
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& image) {
    if (image.rgb.size() != 3 * image.width * image.height) throw FormatError("pixel buffer size mismatch");
    const std::string header =
        "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.rgb.begin(), image.rgb.end());
    return out;
}

RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    // Header tokens are separated by whitespace; '#' starts a comment line.
    auto next_token = [&]() -> std::string {
        while (pos < bytes.size()) {
            if (std::isspace(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        std::string tok;
        while (pos < bytes.size() && !std::isspace(bytes[pos])) tok.push_back(static_cast<char>(bytes[pos++]));
        return tok;
    };
    auto parse_dim = [](const std::string& tok, const char* what) -> std::size_t {
        if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw FormatError(std::string{"bad PPM "} + what + " '" + tok + "'");
        }
        return std::stoul(tok);
    };

    if (next_token() != "P6") throw FormatError("not a binary PPM (expected magic P6)");
    RgbImage image;
    image.width = parse_dim(next_token(), "width");
    image.height = parse_dim(next_token(), "height");
    const std::string maxval = next_token();
    if (maxval != "255") throw FormatError("unsupported PPM maxval '" + maxval + "' (expected 255)");
    if (pos >= bytes.size() || !std::isspace(bytes[pos])) throw FormatError("truncated PPM header");
    ++pos;  // the single whitespace byte before the raster

    const std::size_t need = 3 * image.width * image.height;
    if (bytes.size() - pos != need) {
        throw FormatError("PPM raster has " + std::to_string(bytes.size() - pos) + " bytes, expected " +
                          std::to_string(need));
    }
    image.rgb.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
    return image;
}

RgbImage read_ppm(const std::filesystem::path& path) { return decode_ppm(read_bytes(path)); }

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
    write_bytes_atomic(path, encode_ppm(image));
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
    return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

void write_bytes_atomic(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::random_device rd;
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
        if (!out) throw FormatError("cannot open '" + tmp.string() + "' for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        out.close();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw FormatError("failed writing '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw FormatError("cannot replace '" + path.string() + "'");
    }
}

}  // namespace qfourier::cli
