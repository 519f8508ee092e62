#pragma once

// File formats used by the command-line tool.
//
// QSIG (little-endian throughout):
//   "QSG1" | version u8 = 1 | rank u8 | side u8 (0 primal, 1 dual) | reserved u8 = 0
//   | rank x u32 moduli | |G|^2 x 4 f64 (w, x, y, z), bin index(x1) * |G| + index(x2)
//
// PPM: binary "P6", maxval 255. Pixel (row r, column c) is bin (x1 = r, x2 = c).

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfourier/group.hpp"
#include "qfourier/signal.hpp"

namespace qfourier::cli {

/// Malformed input file or unsupported content; maps to exit status 2.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QsigFile {
    FiniteAbelianGroup group;
    Carrier side = Carrier::Primal;
    std::vector<Quaternion> values;
};

std::vector<std::uint8_t> encode_qsig(const QsigFile& file);
QsigFile decode_qsig(const std::vector<std::uint8_t>& bytes);

QsigFile read_qsig(const std::filesystem::path& path);
void write_qsig(const std::filesystem::path& path, const QsigFile& file);

QsigFile to_file(const QSignal& f);
QsigFile to_file(const QSpectrum& F);
/// Throw FormatError when the stored side differs.
QSignal as_signal(const QsigFile& file);
QSpectrum as_spectrum(const QsigFile& file);

struct RgbImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel
};

std::vector<std::uint8_t> encode_ppm(const RgbImage& image);
RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes);

RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const RgbImage& image);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over path, so a failed
/// write never leaves a partial file behind.
void write_bytes_atomic(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace qfourier::cli
