#pragma once

// Subcommands of the qfourier tool. Each returns the process exit status:
// 0 success, 1 verification failure, 2 usage or format error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qfourier/qft.hpp"
#include "qfourier_cli/verify.hpp"

namespace qfourier::cli {

enum ExitCode : int { kSuccess = 0, kVerifyFailed = 1, kUsage = 2 };

/// Bad flag value or argument combination; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TransformOptions {
    std::filesystem::path input;
    std::filesystem::path output;
    std::string kind = "rqft";
    std::string mode = "fast";
    /// mu1 then mu2, four components each; empty means the standard axes.
    std::vector<double> axes;
};

struct SmoothOptions {
    std::filesystem::path input;
    std::filesystem::path output;
    std::string family = "fejer";
    int level = 4;
};

struct BenchOptions {
    std::vector<std::size_t> sizes{8, 16, 32, 64, 128, 256};
    std::string kind = "rqft";
    int repeats = 3;
};

struct BenchRow {
    std::size_t n = 0;
    double fast_seconds = 0.0;
    std::optional<double> direct_seconds;
};

/// Largest N for which bench also times the definitional O(N^4) evaluator.
inline constexpr std::size_t kBenchDirectLimit = 48;

AxisPair parse_axes(const std::vector<double>& values);

int cmd_transform(const TransformOptions& o, std::ostream& out);
int cmd_inverse(const TransformOptions& o, std::ostream& out);
int cmd_smooth(const SmoothOptions& o, std::ostream& out, std::ostream& err);
/// json_path, when non-empty, receives the machine-readable report.
int cmd_verify(const VerifyOptions& o, const std::filesystem::path& json_path, std::ostream& out);
int cmd_img2q(const std::filesystem::path& ppm, const std::filesystem::path& qsig, std::ostream& out);
int cmd_q2img(const std::filesystem::path& qsig, const std::filesystem::path& ppm, std::ostream& out);
int cmd_spectrum(const std::filesystem::path& qsig, const std::filesystem::path& ppm, std::ostream& out);
int cmd_dump(const std::filesystem::path& qsig, std::ostream& out);

std::vector<BenchRow> run_bench(const BenchOptions& o);
int cmd_bench(const BenchOptions& o, std::ostream& out);

/// Parses argv-style arguments (args[0] is the program name) and dispatches.
/// Every error is reported on err and mapped to an exit status; nothing throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfourier::cli
