#include "qfourier_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "qfourier/kernels.hpp"
#include "qfourier/random.hpp"
#include "qfourier_cli/io.hpp"

namespace qfourier::cli {

namespace {

TransformSide parse_side(const std::string& kind) {
    if (kind == "rqft") return TransformSide::Right;
    if (kind == "sqft") return TransformSide::TwoSided;
    if (kind == "lqft") return TransformSide::Left;
    throw UsageError("unknown transform kind '" + kind + "' (expected rqft, sqft or lqft)");
}

bool parse_fast(const std::string& mode) {
    if (mode == "fast") return true;
    if (mode == "direct") return false;
    throw UsageError("unknown mode '" + mode + "' (expected fast or direct)");
}

std::uint8_t to_byte(double v) {
    // Clamp to [0, 1], then round half-up.
    const double c = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::floor(c * 255.0 + 0.5));
}

template <class Fn>
double best_seconds(int repeats, Fn&& fn) {
    fn();  // warm-up: first-touch allocation and cold caches are not timed
    double best = 0.0;
    for (int r = 0; r < std::max(repeats, 1); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        if (r == 0 || dt.count() < best) best = dt.count();
    }
    return best;
}

}  // namespace

AxisPair parse_axes(const std::vector<double>& values) {
    if (values.empty()) return AxisPair::standard();
    if (values.size() != 8) throw UsageError("--axes takes 8 numbers: mu1 (w x y z) then mu2 (w x y z)");
    try {
        return AxisPair{Quaternion{values[0], values[1], values[2], values[3]},
                        Quaternion{values[4], values[5], values[6], values[7]}};
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string{"invalid --axes: "} + e.what());
    }
}

int cmd_transform(const TransformOptions& o, std::ostream& out) {
    const TransformKind kind{parse_side(o.kind), parse_axes(o.axes)};
    const bool fast = parse_fast(o.mode);
    const QSignal f = as_signal(read_qsig(o.input));
    const QSpectrum F = forward_transform(f, kind, fast);
    write_qsig(o.output, to_file(F));
    out << o.kind << " (" << o.mode << ") over " << f.group().descriptor() << ": wrote " << o.output.string()
        << "\n";
    return kSuccess;
}

int cmd_inverse(const TransformOptions& o, std::ostream& out) {
    if (o.kind == "lqft") throw UsageError("inverse supports --kind rqft or sqft");
    const TransformKind kind{parse_side(o.kind), parse_axes(o.axes)};
    const bool fast = parse_fast(o.mode);
    const QSpectrum F = as_spectrum(read_qsig(o.input));
    const QSignal f = inverse_transform(F, kind, fast);
    write_qsig(o.output, to_file(f));
    out << "inverse " << o.kind << " (" << o.mode << ") over " << F.group().descriptor() << ": wrote "
        << o.output.string() << "\n";
    return kSuccess;
}

int cmd_smooth(const SmoothOptions& o, std::ostream& out, std::ostream& err) {
    if (o.level < 0) throw UsageError("--level must be non-negative");
    const QSignal f = as_signal(read_qsig(o.input));
    KernelFamily family;
    try {
        family = builtin_family(o.family, f.group());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto sweep = convergence_report(f, family, o.level, LpNorm::L2);
    err << o.family << " level sweep, |smooth(f, l) - f|_2:\n";
    for (std::size_t l = 0; l < sweep.size(); ++l) {
        err << "  l=" << l << "  " << std::setprecision(6) << std::scientific << sweep[l] << "\n";
    }
    write_qsig(o.output, to_file(smooth(f, family, o.level)));
    out << "smoothed with " << o.family << " level " << o.level << ": wrote " << o.output.string() << "\n";
    return kSuccess;
}

int cmd_verify(const VerifyOptions& o, const std::filesystem::path& json_path, std::ostream& out) {
    VerifyReport report;
    try {
        report = run_verify(o);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << format_text(report);
    if (!json_path.empty()) {
        const std::string text = to_json(report).dump(2) + "\n";
        write_bytes_atomic(json_path, {text.begin(), text.end()});
    }
    return report.all_passed() ? kSuccess : kVerifyFailed;
}

int cmd_img2q(const std::filesystem::path& ppm, const std::filesystem::path& qsig, std::ostream& out) {
    const RgbImage image = read_ppm(ppm);
    if (image.width != image.height) {
        throw FormatError("domain must be G×G: image is " + std::to_string(image.width) + "x" +
                          std::to_string(image.height));
    }
    if (image.width == 0) throw FormatError("image is empty");
    const FiniteAbelianGroup group = FiniteAbelianGroup::cyclic(image.width);
    QSignal f{group};
    for (std::size_t p = 0; p < f.size(); ++p) {
        f[p] = Quaternion{0.0, image.rgb[3 * p] / 255.0, image.rgb[3 * p + 1] / 255.0, image.rgb[3 * p + 2] / 255.0};
    }
    write_qsig(qsig, to_file(f));
    out << "wrote " << qsig.string() << " over " << group.descriptor() << "\n";
    return kSuccess;
}

int cmd_q2img(const std::filesystem::path& qsig, const std::filesystem::path& ppm, std::ostream& out) {
    const QSignal f = as_signal(read_qsig(qsig));
    RgbImage image{f.side(), f.side(), std::vector<std::uint8_t>(3 * f.size())};
    for (std::size_t p = 0; p < f.size(); ++p) {
        image.rgb[3 * p] = to_byte(f[p].x);
        image.rgb[3 * p + 1] = to_byte(f[p].y);
        image.rgb[3 * p + 2] = to_byte(f[p].z);
    }
    write_ppm(ppm, image);
    out << "wrote " << ppm.string() << " (" << image.width << "x" << image.height << ")\n";
    return kSuccess;
}

int cmd_spectrum(const std::filesystem::path& qsig, const std::filesystem::path& ppm, std::ostream& out) {
    const QSpectrum F = as_spectrum(read_qsig(qsig));
    const std::size_t n = F.side();
    double peak = 0.0;
    for (const auto& v : F.values()) peak = std::max(peak, norm(v));
    const double denom = std::log1p(peak);

    // Output pixel (r, c) shows frequency ((r - n/2) mod n, (c - n/2) mod n),
    // which puts the zero frequency at (n/2, n/2).
    RgbImage image{n, n, std::vector<std::uint8_t>(3 * n * n, 0)};
    const std::size_t shift = n - n / 2;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const double mag = norm(F((r + shift) % n, (c + shift) % n));
            const std::uint8_t level = denom > 0.0 ? to_byte(std::log1p(mag) / denom) : 0;
            std::fill_n(image.rgb.begin() + static_cast<std::ptrdiff_t>(3 * (r * n + c)), 3, level);
        }
    }
    write_ppm(ppm, image);
    out << "wrote " << ppm.string() << " (" << n << "x" << n << ", peak |F| " << peak << ")\n";
    return kSuccess;
}

int cmd_dump(const std::filesystem::path& qsig, std::ostream& out) {
    const QsigFile file = read_qsig(qsig);
    const std::size_t n = file.group.order();
    out << (file.side == Carrier::Primal ? "x1,x2" : "u,v") << ",w,x,y,z\n";
    out << std::setprecision(17);
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            const Quaternion& q = file.values[i1 * n + i2];
            out << i1 << ',' << i2 << ',' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << '\n';
        }
    }
    return kSuccess;
}

std::vector<BenchRow> run_bench(const BenchOptions& o) {
    const TransformSide side = parse_side(o.kind);
    if (o.repeats < 1) throw UsageError("--repeats must be at least 1");
    std::vector<BenchRow> rows;
    for (std::size_t n : o.sizes) {
        if (n == 0) throw UsageError("bench sizes must be positive");
        const FiniteAbelianGroup group = FiniteAbelianGroup::cyclic(n);
        Rng rng{n};
        const QSignal f = random_signal(group, rng);
        const TransformKind kind{side, AxisPair::standard()};
        BenchRow row{n, best_seconds(o.repeats, [&] { (void)forward_transform(f, kind, true); }), std::nullopt};
        if (n <= kBenchDirectLimit) {
            row.direct_seconds = best_seconds(o.repeats, [&] { (void)forward_transform(f, kind, false); });
        }
        rows.push_back(row);
    }
    return rows;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    const auto rows = run_bench(o);
    out << o.kind << " wall time per transform (best of " << o.repeats << ")\n";
    out << std::setw(8) << "N" << std::setw(10) << "bins" << std::setw(14) << "fast [s]" << std::setw(14)
        << "direct [s]" << std::setw(10) << "speedup" << "\n";
    bool fast_wins = true;
    for (const BenchRow& r : rows) {
        out << std::setw(8) << r.n << std::setw(10) << r.n * r.n << std::setw(14) << std::scientific
            << std::setprecision(3) << r.fast_seconds;
        if (r.direct_seconds) {
            const bool wins = r.fast_seconds < *r.direct_seconds;
            fast_wins = fast_wins && wins;
            out << std::setw(14) << *r.direct_seconds << std::setw(10) << std::fixed << std::setprecision(1)
                << *r.direct_seconds / std::max(r.fast_seconds, 1e-12) << (wins ? "" : "  FAST NOT FASTER");
        } else {
            out << std::setw(14) << "-" << std::setw(10) << "-";
        }
        out << std::defaultfloat << "\n";
    }
    return fast_wins ? kSuccess : kVerifyFailed;
}

}  // namespace qfourier::cli
