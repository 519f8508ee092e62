// Acceptance gate: one PASS/FAIL line per criterion.
//
//   qfourier_acceptance        run every criterion
//   qfourier_acceptance N      run criterion N only
//
// Exit status 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qfourier/qfourier.hpp"
#include "qfourier_cli/commands.hpp"
#include "qfourier_cli/io.hpp"

using namespace qfourier;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kSignalsPerGroup = 25;
const char* const kCorpusGroups[] = {"8", "5", "12", "3x4"};

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Running maximum of err / bound; passes while every ratio is <= 1.
class Gauge {
public:
    void observe(double err, double bound) {
        const double ratio = err / bound;
        if (!(ratio <= worst_ratio_)) {
            worst_ratio_ = ratio;
            worst_err_ = err;
            worst_bound_ = bound;
        }
        if (!(err <= bound)) pass_ = false;
    }
    bool pass() const { return pass_; }
    std::string summary(const std::string& label) const {
        std::ostringstream os;
        os << label << " worst " << std::scientific << std::setprecision(2) << worst_err_ << " vs bound "
           << worst_bound_;
        return os.str();
    }

private:
    bool pass_ = true;
    double worst_ratio_ = -1.0;
    double worst_err_ = 0.0;
    double worst_bound_ = 0.0;
};

double l2(const QSignal& f) { return lp_norm(f, LpNorm::L2); }
double l2(const QSpectrum& F) { return lp_norm(F, LpNorm::L2); }

struct Corpus {
    FiniteAbelianGroup group;
    std::vector<QSignal> f;
    std::vector<QSignal> g;
};

std::vector<Corpus> build_corpus() {
    std::vector<Corpus> out;
    Rng rng{kSeed};
    for (const char* spec : kCorpusGroups) {
        Corpus c{FiniteAbelianGroup::parse(spec), {}, {}};
        for (int t = 0; t < kSignalsPerGroup; ++t) {
            c.f.push_back(random_signal(c.group, rng));
            c.g.push_back(random_signal(c.group, rng));
        }
        out.push_back(std::move(c));
    }
    return out;
}

const std::vector<Corpus>& corpus() {
    static const std::vector<Corpus> c = build_corpus();
    return c;
}

std::vector<AxisPair> random_axis_set() {
    Rng rng{kSeed + 13};
    std::vector<AxisPair> axes;
    for (int k = 0; k < 5; ++k) axes.push_back(random_axes(rng));
    return axes;
}

QSignal first_even(const QSignal& f) {
    const auto neg = f.group().neg_table();
    return QSignal::generate(f.group(), [&](std::size_t a, std::size_t b) { return 0.5 * (f(a, b) + f(neg[a], b)); });
}

QSignal plane_valued(const QSignal& f, const AxisPair& axes) {
    QSignal out{f.group()};
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = axes.embed({f[i].w, f[i].x});
    return out;
}

// 1 --------------------------------------------------------------------------
Outcome rqft_inversion(const AxisPair& axes) {
    Gauge gauge;
    for (const Corpus& c : corpus()) {
        for (const QSignal& f : c.f) {
            gauge.observe(l2_distance(irqft_direct(rqft_direct(f, axes), axes), f), 1e-9 * l2(f));
            gauge.observe(l2_distance(irqft_fast(rqft_fast(f, axes), axes), f), 1e-9 * l2(f));
        }
    }
    return {gauge.pass(), gauge.summary("|irqft(rqft f) - f|_2")};
}

Outcome criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = rqft_inversion(AxisPair::standard());
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    o.pass = o.pass && dt.count() < 10.0;
    o.detail += "; runtime " + std::to_string(dt.count()) + " s (bound 10 s)";
    return o;
}

// 2 --------------------------------------------------------------------------
Outcome plancherel(const AxisPair& axes) {
    Gauge gauge;
    for (const Corpus& c : corpus()) {
        for (const QSignal& f : c.f) {
            const double n = l2(f);
            for (const QSpectrum& F : {rqft_direct(f, axes), rqft_fast(f, axes), lqft_direct(f, axes),
                                       lqft_fast(f, axes), sqft_direct(f, axes), sqft_fast(f, axes)}) {
                gauge.observe(std::abs(l2(F) - n), 1e-10 * n);
            }
        }
    }
    return {gauge.pass(), gauge.summary("| |F|_2 - |f|_2 | over rqft, lqft, sqft")};
}

// 3 --------------------------------------------------------------------------
Outcome quaternion_parseval(const AxisPair& axes) {
    Gauge gauge;
    for (const Corpus& c : corpus()) {
        for (std::size_t t = 0; t < c.f.size(); ++t) {
            const QSignal& f = c.f[t];
            const QSignal& g = c.g[t];
            const Quaternion d = inner_q(f, g) - inner_q(rqft_direct(f, axes), rqft_direct(g, axes));
            gauge.observe(std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)}),
                          1e-10 * l2(f) * l2(g));
        }
    }
    return {gauge.pass(), gauge.summary("largest component of (f,g) - (Ff,Fg)")};
}

// 4 --------------------------------------------------------------------------
Outcome sqft_relation(const AxisPair& axes) {
    Gauge via_w;
    Gauge restricted;
    for (const Corpus& c : corpus()) {
        for (const QSignal& f : c.f) {
            via_w.observe(l2_distance(sqft_direct(f, axes), rqft_direct(transform_W(f, axes), axes)), 1e-10 * l2(f));
            const QSignal p = plane_valued(f, axes);
            const QSignal e = first_even(f);
            restricted.observe(l2_distance(sqft_direct(p, axes), rqft_direct(p, axes)), 1e-12 * l2(p));
            restricted.observe(l2_distance(sqft_direct(e, axes), rqft_direct(e, axes)), 1e-12 * l2(e));
        }
    }
    return {via_w.pass() && restricted.pass(),
            via_w.summary("|sqft f - rqft(Wf)|_2") + "; " + restricted.summary("restricted |sqft - rqft|_2")};
}

// 5 --------------------------------------------------------------------------
Outcome sqft_inversion(const AxisPair& axes) {
    Gauge gauge;
    for (const Corpus& c : corpus()) {
        for (const QSignal& f : c.f) {
            gauge.observe(l2_distance(isqft_direct(sqft_direct(f, axes), axes), f), 1e-9 * l2(f));
            gauge.observe(l2_distance(isqft_fast(sqft_fast(f, axes), axes), f), 1e-9 * l2(f));
        }
    }
    return {gauge.pass(), gauge.summary("|isqft(sqft f) - f|_2")};
}

// 6 --------------------------------------------------------------------------
Outcome criterion_6() {
    Gauge used;
    double other_worst = 0.0;
    Rng rng{kSeed + 6};
    const auto axes_set = random_axis_set();
    for (const Corpus& c : corpus()) {
        for (std::size_t t = 0; t < c.f.size(); ++t) {
            const AxisPair& axes = t % 2 ? axes_set[t % axes_set.size()] : AxisPair::standard();
            const QSignal& f = c.f[t];
            const QSpectrum g = random_spectrum(c.group, rng);
            const double bound = 1e-9 * lp_norm(f, LpNorm::L1) * lp_norm(g, LpNorm::L1);
            const PairingSides s = multiplication_pairing(f, g, axes, KernelOrder::Mu1ThenMu2);
            used.observe(norm(s.lhs - s.rhs), bound);
            const PairingSides o = multiplication_pairing(f, g, axes, KernelOrder::Mu2ThenMu1);
            other_worst = std::max(other_worst, norm(o.lhs - o.rhs) / (bound * 1e9));
        }
    }
    std::ostringstream os;
    os << used.summary("mu1-then-mu2 |lhs - rhs|") << "; arbitration: mu2-then-mu1 order misses by up to "
       << std::scientific << std::setprecision(2) << other_worst << " x |f|_1 |g|_1, so mu1-then-mu2 is the one that holds";
    return {used.pass(), os.str()};
}

// 7 --------------------------------------------------------------------------
Outcome criterion_7() {
    Gauge gauge;
    const auto& z8 = corpus()[0];
    for (std::size_t t = 0; t < z8.f.size(); ++t) {
        const QSignal& f = z8.f[t];
        const double e2 = std::pow(l2(f), 2);
        for (const auto& name : builtin_family_names()) {
            const KernelFamily family = builtin_family(name, z8.group);
            for (int l = 0; l <= 4; ++l) {
                const EnergySides s = energy_identity(f, family, l);
                gauge.observe(std::abs(s.lhs - s.rhs), 1e-9 * e2);
            }
        }
    }
    return {gauge.pass(), gauge.summary("|lhs - rhs| over 3 families x levels 0..4")};
}

// 8 --------------------------------------------------------------------------
Outcome criterion_8() {
    const auto& z8 = corpus()[0];
    int full = 0;
    for (std::size_t u = 0; u < z8.group.order(); ++u) {
        full = std::max(full, static_cast<int>(z8.group.circular_distance(u)));
    }
    bool dirichlet_ok = true;
    bool monotone_ok = true;
    bool final_ok = true;
    double dirichlet_worst = 0.0;
    double final_worst[2] = {0.0, 0.0};
    const char* families[2] = {"fejer", "poisson_geometric"};
    for (const QSignal& f : z8.f) {
        const double nf = l2(f);
        const auto d = convergence_report(f, builtin_family("dirichlet", z8.group), full, LpNorm::L2);
        dirichlet_worst = std::max(dirichlet_worst, d.back());
        dirichlet_ok = dirichlet_ok && d.back() < 1e-10;
        for (int k = 0; k < 2; ++k) {
            const auto r = convergence_report(f, builtin_family(families[k], z8.group), 8, LpNorm::L2);
            for (std::size_t l = 1; l < r.size(); ++l) monotone_ok = monotone_ok && r[l] <= r[l - 1];
            final_worst[k] = std::max(final_worst[k], r.back() / nf);
            final_ok = final_ok && r.back() < 1e-3 * nf;
        }
    }
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << "dirichlet full level " << dirichlet_worst << " (bound 1e-10, "
       << (dirichlet_ok ? "ok" : "over") << "); monotone " << (monotone_ok ? "yes" : "NO")
       << "; level-8 residual / |f|_2: fejer " << final_worst[0] << ", poisson_geometric " << final_worst[1]
       << " (bound 1e-3, " << (final_ok ? "ok" : "over") << ")";
    return {dirichlet_ok && monotone_ok && final_ok, os.str()};
}

// 9 --------------------------------------------------------------------------
Outcome criterion_9() {
    Gauge always;
    Gauge restricted;
    double unrestricted = 0.0;
    for (const Corpus& c : corpus()) {
        for (std::size_t t = 0; t < c.f.size(); ++t) {
            const AxisPair axes = AxisPair::standard();
            auto compare = [&](const QSignal& f, const QSignal& g, Gauge& gauge, bool all_four) {
                const FrameComponents p = component_in_frame(inner_q(f, g), axes);
                const FrameComponents q = component_in_frame(inner_q(sqft_fast(f, axes), sqft_fast(g, axes)), axes);
                const double bound = 1e-10 * l2(f) * l2(g);
                gauge.observe(std::abs(p.a - q.a), bound);
                gauge.observe(std::abs(p.b - q.b), bound);
                if (all_four) {
                    gauge.observe(std::abs(p.c - q.c), bound);
                    gauge.observe(std::abs(p.d - q.d), bound);
                } else {
                    unrestricted = std::max({unrestricted, std::abs(p.c - q.c) / (l2(f) * l2(g)),
                                             std::abs(p.d - q.d) / (l2(f) * l2(g))});
                }
            };
            compare(c.f[t], c.g[t], always, false);
            compare(plane_valued(c.f[t], axes), plane_valued(c.g[t], axes), restricted, true);
            compare(first_even(c.f[t]), first_even(c.g[t]), restricted, true);
        }
    }
    std::ostringstream os;
    os << always.summary("p0/p1 vs q0/q1") << "; " << restricted.summary("restricted all four")
       << "; unrestricted p2/p3 gap (reported only) " << std::scientific << std::setprecision(2) << unrestricted;
    return {always.pass() && restricted.pass(), os.str()};
}

// 10 -------------------------------------------------------------------------
Outcome criterion_10() {
    Gauge gauge;
    Rng rng{kSeed + 10};
    for (const Corpus& c : corpus()) {
        for (const QSignal& f : c.f) {
            const QSpectrum g = random_spectrum(c.group, rng);
            const double lhs = inner_real(sqft_direct(f), g);
            const double rhs = inner_real(transform_W(f), irqft_direct(g));
            gauge.observe(std::abs(lhs - rhs), 1e-10 * l2(f) * l2(g));
        }
    }
    return {gauge.pass(), gauge.summary("|<sqft f, g> - <Wf, irqft g>|")};
}

// 11 -------------------------------------------------------------------------
Outcome criterion_11() {
    Gauge gauge;
    Rng rng{kSeed + 11};
    for (std::size_t n : {4u, 8u, 7u}) {
        const auto g = FiniteAbelianGroup::cyclic(n);
        for (int t = 0; t < 5; ++t) {
            std::vector<Quaternion> f(n);
            for (auto& v : f) v = Quaternion{rng.uniform(-1, 1), rng.uniform(-1, 1), 0, 0};
            const auto got = classical_dft_via_rqft(g, f);
            // Quadratic oracle: sum_x f(x) exp(-2 pi i u x / n).
            for (std::size_t u = 0; u < n; ++u) {
                std::complex<double> want;
                for (std::size_t x = 0; x < n; ++x) {
                    want += std::complex<double>{f[x].w, f[x].x} *
                            std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((u * x) % n) /
                                                static_cast<double>(n));
                }
                gauge.observe(norm(got[u] - Quaternion{want.real(), want.imag(), 0, 0}), 1e-10);
            }
        }
    }
    return {gauge.pass(), gauge.summary("per-frequency gap on Z_4, Z_8, Z_7")};
}

// 12 -------------------------------------------------------------------------
Outcome criterion_12() {
    Gauge gauge;
    Rng rng{kSeed + 12};
    for (const char* spec : {"32", "12"}) {
        const auto g = FiniteAbelianGroup::parse(spec);
        for (int t = 0; t < 3; ++t) {
            const QSignal f = random_signal(g, rng);
            const QSpectrum F = random_spectrum(g, rng);
            gauge.observe(l2_distance(rqft_fast(f), rqft_direct(f)), 1e-9 * l2(f));
            gauge.observe(l2_distance(sqft_fast(f), sqft_direct(f)), 1e-9 * l2(f));
            gauge.observe(l2_distance(lqft_fast(f), lqft_direct(f)), 1e-9 * l2(f));
            gauge.observe(l2_distance(irqft_fast(F), irqft_direct(F)), 1e-9 * l2(F));
            gauge.observe(l2_distance(isqft_fast(F), isqft_direct(F)), 1e-9 * l2(F));
        }
    }
    const auto rows = cli::run_bench({{8, 16, 32, 48, 256}, "rqft", 5});
    bool fast_wins = true;
    double z256 = 0.0;
    std::ostringstream os;
    for (const auto& r : rows) {
        if (r.direct_seconds) {
            fast_wins = fast_wins && r.fast_seconds < *r.direct_seconds;
            os << " N=" << r.n << " " << std::scientific << std::setprecision(2) << r.fast_seconds << "s/"
               << *r.direct_seconds << "s";
        }
        if (r.n == 256) z256 = r.fast_seconds;
    }
    std::ostringstream detail;
    detail << gauge.summary("fast vs direct on Z_32, Z_12") << "; fast/direct:" << os.str() << "; Z_256 fast "
           << std::fixed << std::setprecision(3) << z256 << " s (bound 2 s)";
    return {gauge.pass() && fast_wins && z256 < 2.0, detail.str()};
}

// 13 -------------------------------------------------------------------------
Outcome criterion_13() {
    bool pass = true;
    std::string detail;
    int k = 0;
    for (const AxisPair& axes : random_axis_set()) {
        ++k;
        const Outcome parts[] = {rqft_inversion(axes), plancherel(axes), quaternion_parseval(axes),
                                 sqft_relation(axes), sqft_inversion(axes)};
        int failed = 0;
        for (const Outcome& p : parts) failed += p.pass ? 0 : 1;
        pass = pass && failed == 0;
        detail += (k > 1 ? "; " : "") + std::string{"axes #"} + std::to_string(k) + " " +
                  (failed ? std::to_string(failed) + " of 5 failed" : "criteria 1-5 ok");
    }
    return {pass, detail};
}

// 14 -------------------------------------------------------------------------
Outcome criterion_14() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qfourier_acceptance_14";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };

    Rng rng{kSeed + 14};
    cli::RgbImage image{64, 64, std::vector<std::uint8_t>(3 * 64 * 64)};
    for (auto& b : image.rgb) b = static_cast<std::uint8_t>(rng.next() % 256);
    cli::write_ppm(p("in.ppm"), image);

    std::ostringstream out;
    std::ostringstream err;
    int status = 0;
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"qfourier", "img2q", p("in.ppm"), p("f.qsig")},
             {"qfourier", "transform", p("f.qsig"), p("F.qsig"), "--kind", "sqft"},
             {"qfourier", "inverse", p("F.qsig"), p("g.qsig"), "--kind", "sqft"},
             {"qfourier", "q2img", p("g.qsig"), p("out.ppm")}}) {
        status = std::max(status, cli::run(args, out, err));
    }
    const bool image_ok = status == 0 && cli::read_bytes(p("in.ppm")) == cli::read_bytes(p("out.ppm"));

    const auto original = cli::read_bytes(p("F.qsig"));
    cli::write_qsig(p("F2.qsig"), cli::read_qsig(p("F.qsig")));
    const bool qsig_ok = original == cli::read_bytes(p("F2.qsig"));
    fs::remove_all(dir);

    return {image_ok && qsig_ok, std::string{"64x64 PPM round trip "} + (image_ok ? "byte-identical" : "DIFFERS") +
                                     "; QSIG rewrite " + (qsig_ok ? "bit-exact" : "DIFFERS") +
                                     (err.str().empty() ? "" : "; stderr: " + err.str())};
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {"right-sided inversion", criterion_1},
        {"Plancherel for right, left and two-sided transforms", [] { return plancherel(AxisPair::standard()); }},
        {"quaternionic Parseval for the right-sided transform",
         [] { return quaternion_parseval(AxisPair::standard()); }},
        {"two-sided transform equals right-sided transform of W f", [] { return sqft_relation(AxisPair::standard()); }},
        {"two-sided inversion", [] { return sqft_inversion(AxisPair::standard()); }},
        {"modified multiplication formula", criterion_6},
        {"energy identity", criterion_7},
        {"approximate identity", criterion_8},
        {"two-sided component Parseval", criterion_9},
        {"adjoint relation", criterion_10},
        {"classical DFT embedding", criterion_11},
        {"fast path matches direct and is fast", criterion_12},
        {"general axes repeat criteria 1-5", criterion_13},
        {"CLI image round trip and QSIG bit-exactness", criterion_14},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    if (argc > 1) {
        for (int a = 1; a < argc; ++a) {
            const int k = std::atoi(argv[a]);
            if (k < 1 || k > static_cast<int>(criteria().size())) {
                std::cerr << "usage: qfourier_acceptance [criterion 1-" << criteria().size() << "]...\n";
                return 2;
            }
            selected.push_back(k);
        }
    } else {
        for (int k = 1; k <= static_cast<int>(criteria().size()); ++k) selected.push_back(k);
    }

    int failures = 0;
    for (int k : selected) {
        const Criterion& c = criteria()[static_cast<std::size_t>(k - 1)];
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string{"exception: "} + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] criterion %2d  %s: %s\n", o.pass ? "PASS" : "FAIL", k, c.title, o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
