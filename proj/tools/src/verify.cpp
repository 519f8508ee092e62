#include "qfourier_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qfourier/qfourier.hpp"

namespace qfourier::cli {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double rel(double err, double scale) { return err / std::max(scale, kTiny); }

double l2(const QSignal& f) { return lp_norm(f, LpNorm::L2); }
double l2(const QSpectrum& F) { return lp_norm(F, LpNorm::L2); }

/// Random value a + b mu in the plane spanned by 1 and mu.
Quaternion random_in_plane(Rng& rng, const Quaternion& mu) {
    return Quaternion{rng.uniform(-1, 1)} + rng.uniform(-1, 1) * mu;
}

QSignal random_plane_signal(const FiniteAbelianGroup& group, const AxisPair& axes, Rng& rng) {
    QSignal f{group};
    for (auto& v : f.values()) v = random_in_plane(rng, axes.mu1());
    return f;
}

QSignal random_real_signal(const FiniteAbelianGroup& group, Rng& rng) {
    QSignal f{group};
    for (auto& v : f.values()) v = Quaternion{rng.uniform(-1, 1)};
    return f;
}

/// f(x1, x2) = f(-x1, x2)
QSignal random_first_even_signal(const FiniteAbelianGroup& group, Rng& rng) {
    const QSignal f = random_signal(group, rng);
    const auto neg = group.neg_table();
    return QSignal::generate(group, [&](std::size_t i1, std::size_t i2) {
        return 0.5 * (f(i1, i2) + f(neg[i1], i2));
    });
}

/// Largest absolute difference between matching frame components m in ms.
double frame_gap(const Quaternion& p, const Quaternion& q, const AxisPair& axes, std::initializer_list<int> ms) {
    const FrameComponents a = component_in_frame(p, axes);
    const FrameComponents b = component_in_frame(q, axes);
    const double da[4] = {a.a, a.b, a.c, a.d};
    const double db[4] = {b.a, b.b, b.c, b.d};
    double gap = 0.0;
    for (int m : ms) gap = std::max(gap, std::abs(da[m] - db[m]));
    return gap;
}

struct Context {
    const FiniteAbelianGroup& group;
    const AxisPair& axes;
    Rng& rng;
    bool inject_fault;
    /// Secondary per-check statistic, folded with max across trials.
    double aux = 0.0;

    QSpectrum rqft(const QSignal& f) const {
        QSpectrum F = rqft_fast(f, axes);
        if (inject_fault) F[0] += Quaternion{1e-3 * l2(f)};
        return F;
    }
    QSignal irqft(const QSpectrum& F) const { return irqft_fast(F, axes); }
};

struct Check {
    const char* name;
    const char* description;
    double tolerance;
    bool report_only;
    std::function<double(Context&)> run;
    std::function<std::string(double aux)> note;
};

std::vector<Check> build_checks() {
    std::vector<Check> checks;
    auto add = [&](const char* name, const char* description, double tol, std::function<double(Context&)> run,
                   std::function<std::string(double)> note = {}) {
        checks.push_back({name, description, tol, false, std::move(run), std::move(note)});
    };

    // Signals.
    add("norm_component_identity", "|f|_2^2 equals the sum of component norms; sup-norm bound", 1e-12,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            double sum2 = 0.0;
            double sum_inf = 0.0;
            for (int m = 0; m < 4; ++m) {
                const QSignal fm = component(f, m);
                sum2 += std::pow(l2(fm), 2);
                sum_inf += lp_norm(fm, LpNorm::Linf);
            }
            const double n2 = std::pow(l2(f), 2);
            const double ninf = lp_norm(f, LpNorm::Linf);
            return std::max(rel(std::abs(n2 - sum2), n2), rel(std::max(0.0, ninf - 2.0 * sum_inf), ninf));
        });
    add("inner_product_sesquilinearity", "(p f, q g) = p (f, g) conj(q)", 1e-12, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const QSignal g = random_signal(c.group, c.rng);
        const Quaternion p = random_quaternion(c.rng);
        const Quaternion q = random_quaternion(c.rng);
        const Quaternion lhs = inner_q(left_multiply(p, f), left_multiply(q, g));
        const Quaternion rhs = p * inner_q(f, g) * conj(q);
        const double sym = std::abs(inner_real(f, g) - inner_real(g, f));
        return rel(std::max(norm(lhs - rhs), sym), norm(p) * norm(q) * l2(f) * l2(g));
    });
    add("translation_invariance", "translation preserves |f|_2 and is undone by the opposite shift", 1e-12,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            const std::size_t n = c.group.order();
            const GroupElement y1 = c.group.at(c.rng.next() % n);
            const GroupElement y2 = c.group.at(c.rng.next() % n);
            const QSignal t = translate(f, y1, y2);
            const QSignal back = translate(t, c.group.neg(y1), c.group.neg(y2));
            return rel(std::max(std::abs(l2(t) - l2(f)), l2_distance(back, f)), l2(f));
        });
    add("convolution_reflection", "(f~ * f)(x) = sum_y conj(f(y)) f(y + x)", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const QSignal g = convolve(reflect_conj(f), f);
        const std::size_t n = c.group.order();
        QSignal h{c.group};
        for (std::size_t x1 = 0; x1 < n; ++x1) {
            for (std::size_t x2 = 0; x2 < n; ++x2) {
                Quaternion acc;
                for (std::size_t y1 = 0; y1 < n; ++y1) {
                    for (std::size_t y2 = 0; y2 < n; ++y2) {
                        acc += conj(f(y1, y2)) * f(c.group.add_index(y1, x1), c.group.add_index(y2, x2));
                    }
                }
                h(x1, x2) = acc;
            }
        }
        return rel(l2_distance(g, h), std::pow(l2(f), 2));
    });
    add("convolution_left_linearity", "convolve(q f, g) = q convolve(f, g)", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const QSignal g = random_signal(c.group, c.rng);
        const Quaternion q = random_quaternion(c.rng);
        return rel(l2_distance(convolve(left_multiply(q, f), g), left_multiply(q, convolve(f, g))),
                   norm(q) * l2(f) * l2(g));
    });
    add("w_transform_properties",
        "W is an involution, preserves <f,g> and Sc(mu1 (f,g)), and is left-linear over the mu1 plane", 1e-10,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            const QSignal g = random_signal(c.group, c.rng);
            const QSignal wf = transform_W(f, c.axes);
            const QSignal wg = transform_W(g, c.axes);
            const Quaternion z = random_in_plane(c.rng, c.axes.mu1());
            const double scale = l2(f) * l2(g);
            double err = rel(l2_distance(transform_W(wf, c.axes), f), l2(f));
            err = std::max(err, rel(std::abs(l2(wf) - l2(f)), l2(f)));
            err = std::max(err, rel(std::abs(inner_real(wf, wg) - inner_real(f, g)), scale));
            err = std::max(err, rel(std::abs(scalar_part(c.axes.mu1() * inner_q(f, g)) -
                                             scalar_part(c.axes.mu1() * inner_q(wf, wg))),
                                    scale));
            err = std::max(err, rel(l2_distance(transform_W(left_multiply(z, f), c.axes), left_multiply(z, wf)),
                                    norm(z) * l2(f)));
            return err;
        });
    add("beta_isometry", "the auxiliary reflection preserves |g|_2", 1e-10, [](Context& c) {
        const QSpectrum g = random_spectrum(c.group, c.rng);
        return rel(std::abs(l2(transform_beta(g, c.axes)) - l2(g)), l2(g));
    });

    // Kernels.
    add("kernel_total_mass", "every kernel has unit total mass", 1e-10, [](Context& c) {
        double err = 0.0;
        for (const auto& name : builtin_family_names()) {
            const KernelFamily family = builtin_family(name, c.group);
            for (int l = 0; l <= 4; ++l) {
                const SpatialKernel k = spatial_kernel(family, l, c.group);
                double mass = 0.0;
                for (const auto& v : k.values.values()) mass += v.w;
                err = std::max(err, std::abs(mass - 1.0));
            }
        }
        return err;
    });
    add("kernel_envelope_monotone", "phi(l+1, u) >= phi(l, u) and phi(l, 0) = 1", 0.0, [](Context& c) {
        double err = 0.0;
        for (const auto& name : builtin_family_names()) {
            const KernelFamily family = builtin_family(name, c.group);
            for (int l = 0; l <= 8; ++l) {
                err = std::max(err, std::abs(family.phi1(l, 0) - 1.0));
                for (std::size_t u = 0; u < c.group.order(); ++u) {
                    err = std::max(err, family.phi1(l, u) - family.phi1(l + 1, u));
                }
            }
        }
        return err;
    });
    add("approximate_identity_full_passband", "dirichlet smoothing at full level reproduces f", 1e-10,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            int full = 0;
            for (std::size_t u = 0; u < c.group.order(); ++u) {
                full = std::max(full, static_cast<int>(c.group.circular_distance(u)));
            }
            const auto report = convergence_report(f, builtin_family("dirichlet", c.group), full, LpNorm::L2);
            return rel(report.back(), l2(f));
        });
    add("approximate_identity_monotone", "fejer and poisson_geometric residuals are non-increasing in the level",
        1e-12, [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            double err = 0.0;
            for (const char* name : {"fejer", "poisson_geometric"}) {
                for (LpNorm p : {LpNorm::L1, LpNorm::L2}) {
                    const auto r = convergence_report(f, builtin_family(name, c.group), 8, p);
                    for (std::size_t l = 1; l < r.size(); ++l) {
                        err = std::max(err, rel(r[l] - r[l - 1], lp_norm(f, p)));
                    }
                }
            }
            return err;
        });
    add("energy_identity", "Sc(((f~ * f) * P)(0,0)) equals the phi-weighted spectral energy", 1e-9,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            double err = 0.0;
            for (const auto& name : builtin_family_names()) {
                const KernelFamily family = builtin_family(name, c.group);
                for (int l = 0; l <= 4; ++l) {
                    const EnergySides e = energy_identity(f, family, l, c.axes);
                    err = std::max(err, rel(std::abs(e.lhs - e.rhs), std::pow(l2(f), 2)));
                }
            }
            return err;
        });

    // Right-sided transform.
    add("rqft_inversion", "irqft(rqft f) = f", 1e-9, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        return rel(l2_distance(c.irqft(c.rqft(f)), f), l2(f));
    });
    add("rqft_uniqueness", "equal spectra imply equal signals", 1e-9, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        // g shares f's spectrum by construction; the two must coincide pointwise.
        const QSignal g = c.irqft(c.rqft(f));
        const double spectral_gap = l2_distance(c.rqft(g), c.rqft(f));
        return std::max(rel(max_abs_distance(f, g), lp_norm(f, LpNorm::Linf)), rel(spectral_gap, l2(f)));
    });
    add("rqft_boundedness", "|rqft f|_inf <= |f|_1", 1e-12, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const double n1 = lp_norm(f, LpNorm::L1);
        return rel(std::max(0.0, lp_norm(c.rqft(f), LpNorm::Linf) - n1), n1);
    });
    add("rqft_plancherel", "|rqft f|_2 = |f|_2", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        return rel(std::abs(l2(c.rqft(f)) - l2(f)), l2(f));
    });
    add("rqft_inner_product", "(f, g) = (rqft f, rqft g) in all four components", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const QSignal g = random_signal(c.group, c.rng);
        const Quaternion d = inner_q(f, g) - inner_q(c.rqft(f), c.rqft(g));
        return rel(std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)}), l2(f) * l2(g));
    });
    add("rqft_unitarity", "rqft(irqft F) = F for arbitrary spectra", 1e-10, [](Context& c) {
        const QSpectrum F = random_spectrum(c.group, c.rng);
        return rel(l2_distance(c.rqft(c.irqft(F)), F), l2(F));
    });
    add("rqft_left_linearity", "rqft(q f) = q rqft(f)", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const Quaternion q = random_quaternion(c.rng);
        return rel(l2_distance(c.rqft(left_multiply(q, f)), left_multiply(q, c.rqft(f))), norm(q) * l2(f));
    });
    add(
        "multiplication_formula", "sum rqft(f) g = sum f H_r with H_r built from the reflected spectrum", 1e-9,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            const QSpectrum g = random_spectrum(c.group, c.rng);
            const double scale = lp_norm(f, LpNorm::L1) * lp_norm(g, LpNorm::L1);
            const PairingSides used = multiplication_pairing(f, g, c.axes, KernelOrder::Mu1ThenMu2);
            const PairingSides other = multiplication_pairing(f, g, c.axes, KernelOrder::Mu2ThenMu1);
            c.aux = std::max(c.aux, rel(norm(other.lhs - other.rhs), scale));
            return rel(norm(used.lhs - used.rhs), scale);
        },
        [](double aux) {
            std::ostringstream os;
            os << "kernel order mu1-then-mu2 is asserted; mu2-then-mu1 max error " << std::setprecision(3) << aux;
            return os.str();
        });

    // Left-sided transform.
    add("lqft_plancherel", "|lqft f|_2 = |f|_2", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        return rel(std::abs(l2(lqft_fast(f, c.axes)) - l2(f)), l2(f));
    });
    add("lqft_real_commutation", "lqft = rqft for real-valued signals", 1e-12, [](Context& c) {
        const QSignal f = random_real_signal(c.group, c.rng);
        return rel(l2_distance(lqft_direct(f, c.axes), rqft_direct(f, c.axes)), l2(f));
    });

    // Two-sided transform.
    add("sqft_plancherel", "|sqft f|_2 = |f|_2", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        return rel(std::abs(l2(sqft_fast(f, c.axes)) - l2(f)), l2(f));
    });
    add("sqft_via_w", "sqft f = rqft(W f)", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        return rel(l2_distance(sqft_direct(f, c.axes), c.rqft(transform_W(f, c.axes))), l2(f));
    });
    add("sqft_equals_rqft_restricted", "sqft = rqft for mu1-plane-valued and first-variable-even signals", 1e-12,
        [](Context& c) {
            const QSignal p = random_plane_signal(c.group, c.axes, c.rng);
            const QSignal e = random_first_even_signal(c.group, c.rng);
            return std::max(rel(l2_distance(sqft_direct(p, c.axes), rqft_direct(p, c.axes)), l2(p)),
                            rel(l2_distance(sqft_direct(e, c.axes), rqft_direct(e, c.axes)), l2(e)));
        });
    add("sqft_inversion", "isqft(sqft f) = f", 1e-9, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        return rel(l2_distance(isqft_direct(sqft_direct(f, c.axes), c.axes), f), l2(f));
    });
    add("isqft_w_relation", "W(isqft F) = irqft F for F = sqft f", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const QSpectrum F = sqft_direct(f, c.axes);
        return rel(l2_distance(transform_W(isqft_direct(F, c.axes), c.axes), irqft_direct(F, c.axes)), l2(f));
    });
    add("sqft_linearity", "sqft(z f) = z sqft f for z in the mu1 plane; sqft(f w) = sqft(f) w for w in the mu2 plane",
        1e-10, [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            const Quaternion z = random_in_plane(c.rng, c.axes.mu1());
            const Quaternion w = random_in_plane(c.rng, c.axes.mu2());
            const QSpectrum F = sqft_fast(f, c.axes);
            return std::max(
                rel(l2_distance(sqft_fast(left_multiply(z, f), c.axes), left_multiply(z, F)), norm(z) * l2(f)),
                rel(l2_distance(sqft_fast(right_multiply(f, w), c.axes), right_multiply(F, w)), norm(w) * l2(f)));
        });
    add("sqft_adjoint", "<sqft f, g> = <W f, irqft g>", 1e-10, [](Context& c) {
        const QSignal f = random_signal(c.group, c.rng);
        const QSpectrum g = random_spectrum(c.group, c.rng);
        const double lhs = inner_real(sqft_fast(f, c.axes), g);
        const double rhs = inner_real(transform_W(f, c.axes), c.irqft(g));
        return rel(std::abs(lhs - rhs), l2(f) * l2(g));
    });
    add("sqft_component_parseval", "scalar and mu1 components of (f, g) survive the two-sided transform", 1e-10,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            const QSignal g = random_signal(c.group, c.rng);
            const Quaternion p = inner_q(f, g);
            const Quaternion q = inner_q(sqft_fast(f, c.axes), sqft_fast(g, c.axes));
            return rel(frame_gap(p, q, c.axes, {0, 1}), l2(f) * l2(g));
        });
    add("sqft_component_parseval_restricted",
        "all four components survive for mu1-plane-valued or first-variable-even pairs", 1e-10, [](Context& c) {
            double err = 0.0;
            for (int kind = 0; kind < 2; ++kind) {
                const QSignal f = kind == 0 ? random_plane_signal(c.group, c.axes, c.rng)
                                            : random_first_even_signal(c.group, c.rng);
                const QSignal g = kind == 0 ? random_plane_signal(c.group, c.axes, c.rng)
                                            : random_first_even_signal(c.group, c.rng);
                const Quaternion p = inner_q(f, g);
                const Quaternion q = inner_q(sqft_fast(f, c.axes), sqft_fast(g, c.axes));
                err = std::max(err, rel(frame_gap(p, q, c.axes, {0, 1, 2, 3}), l2(f) * l2(g)));
            }
            return err;
        });
    checks.push_back({"sqft_component_parseval_unrestricted",
                      "mu2 and mu3 components for general pairs (reported, not asserted)", 0.0, true,
                      [](Context& c) {
                          const QSignal f = random_signal(c.group, c.rng);
                          const QSignal g = random_signal(c.group, c.rng);
                          const Quaternion p = inner_q(f, g);
                          const Quaternion q = inner_q(sqft_fast(f, c.axes), sqft_fast(g, c.axes));
                          return rel(frame_gap(p, q, c.axes, {2, 3}), l2(f) * l2(g));
                      },
                      {}});

    // Classical embedding and fast paths.
    add("classical_dft_embedding", "the lifted right-sided transform restricts to the classical DFT", 1e-10,
        [](Context& c) {
            const std::size_t n = c.group.order();
            std::vector<Quaternion> f(n);
            for (auto& v : f) v = random_in_plane(c.rng, c.axes.mu1());
            const auto got = classical_dft_via_rqft(c.group, f, c.axes);
            double err = 0.0;
            double scale = 0.0;
            for (std::size_t u = 0; u < n; ++u) {
                Quaternion want;
                for (std::size_t x = 0; x < n; ++x) {
                    const double theta = 2.0 * std::numbers::pi * c.group.phase_index(u, x);
                    want += f[x] * (Quaternion{std::cos(theta)} - std::sin(theta) * c.axes.mu1());
                }
                err = std::max(err, norm(got[u] - want));
                scale = std::max(scale, norm(want));
            }
            return rel(err, std::max(scale, 1.0));
        });
    add("fast_direct_agreement", "every FFT-factorized transform matches its definitional sum", 1e-9,
        [](Context& c) {
            const QSignal f = random_signal(c.group, c.rng);
            const QSpectrum F = random_spectrum(c.group, c.rng);
            double err = rel(l2_distance(c.rqft(f), rqft_direct(f, c.axes)), l2(f));
            err = std::max(err, rel(l2_distance(sqft_fast(f, c.axes), sqft_direct(f, c.axes)), l2(f)));
            err = std::max(err, rel(l2_distance(lqft_fast(f, c.axes), lqft_direct(f, c.axes)), l2(f)));
            err = std::max(err, rel(l2_distance(c.irqft(F), irqft_direct(F, c.axes)), l2(F)));
            err = std::max(err, rel(l2_distance(isqft_fast(F, c.axes), isqft_direct(F, c.axes)), l2(F)));
            return err;
        });
    return checks;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << std::scientific << v;
    return os.str();
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.trials < 0) throw std::invalid_argument("trials must be non-negative");
    const FiniteAbelianGroup group = FiniteAbelianGroup::parse(options.group);

    VerifyReport report;
    report.seed = options.seed;
    report.group = group.descriptor();
    report.trials = options.trials;

    std::vector<AxisPair> axes;
    Rng axis_rng{splitmix64(options.seed)};
    for (int t = 0; t < options.trials; ++t) {
        axes.push_back(t % 2 == 0 ? AxisPair::standard() : random_axes(axis_rng));
    }

    const std::vector<Check> checks = build_checks();
    for (std::size_t k = 0; k < checks.size(); ++k) {
        const Check& check = checks[k];
        CheckRecord rec;
        rec.name = check.name;
        rec.description = check.description;
        rec.group = report.group;
        rec.axes = "standard on even trials, random orthonormal on odd trials";
        rec.trials = options.trials;
        rec.report_only = check.report_only;
        rec.tolerance = check.report_only ? 0.0 : options.tolerance.value_or(check.tolerance);

        if (options.trials == 0) {
            rec.skipped = "trials = 0";
            report.checks.push_back(std::move(rec));
            continue;
        }

        // Each check draws from its own stream so the list can grow without
        // shifting the inputs of existing checks.
        Rng rng{splitmix64(options.seed ^ splitmix64(k + 1))};
        double aux = 0.0;
        for (int t = 0; t < options.trials; ++t) {
            Context ctx{group, axes[static_cast<std::size_t>(t)], rng, options.inject_fault, aux};
            const double err = check.run(ctx);
            aux = ctx.aux;
            // NaN never compares below a tolerance, so it is kept as a failure.
            if (std::isnan(err) || err > rec.max_error) rec.max_error = err;
        }
        rec.pass = check.report_only || (!std::isnan(rec.max_error) && rec.max_error <= rec.tolerance);
        if (check.note) rec.note = check.note(aux);
        report.checks.push_back(std::move(rec));
    }
    return report;
}

std::string format_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify  group=" << report.group << "  trials=" << report.trials << "  seed=" << report.seed << "\n";
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    for (const CheckRecord& r : report.checks) {
        std::string status;
        if (!r.skipped.empty()) {
            status = "SKIP";
            ++skipped;
        } else if (r.report_only) {
            status = "INFO";
        } else if (r.pass) {
            status = "PASS";
            ++passed;
        } else {
            status = "FAIL";
            ++failed;
        }
        os << std::left << std::setw(6) << status << std::setw(38) << r.name;
        if (!r.skipped.empty()) {
            os << "skipped: " << r.skipped;
        } else {
            os << "max_err=" << format_double(r.max_error);
            if (!r.report_only) os << "  tol=" << format_double(r.tolerance);
        }
        os << "\n";
        if (!r.note.empty()) os << "      " << r.note << "\n";
    }
    os << "result: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return os.str();
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& r : report.checks) {
        nlohmann::json j{{"name", r.name},
                         {"description", r.description},
                         {"group", r.group},
                         {"axes", r.axes},
                         {"trials", r.trials},
                         {"max_error", r.max_error},
                         {"tolerance", r.tolerance},
                         {"pass", r.pass},
                         {"report_only", r.report_only}};
        if (!r.skipped.empty()) j["skipped"] = r.skipped;
        if (!r.note.empty()) j["note"] = r.note;
        checks.push_back(std::move(j));
    }
    return {{"seed", report.seed},
            {"group", report.group},
            {"trials", report.trials},
            {"passed", report.all_passed()},
            {"checks", std::move(checks)}};
}

}  // namespace qfourier::cli
