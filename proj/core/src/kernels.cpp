#include "qfourier/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfourier/qft.hpp"

namespace qfourier {

const std::vector<std::string>& builtin_family_names() {
    static const std::vector<std::string> names{"dirichlet", "fejer", "poisson_geometric"};
    return names;
}

KernelFamily builtin_family(std::string_view name, const FiniteAbelianGroup& group) {
    // Distances are precomputed so the envelopes do not hold a group reference.
    std::vector<double> dist(group.order());
    for (std::size_t u = 0; u < dist.size(); ++u) dist[u] = static_cast<double>(group.circular_distance(u));

    SpectralEnvelope phi;
    if (name == "dirichlet") {
        phi = [dist](int l, std::size_t u) { return dist[u] <= l ? 1.0 : 0.0; };
    } else if (name == "fejer") {
        phi = [dist](int l, std::size_t u) { return std::max(0.0, 1.0 - dist[u] / (l + 1.0)); };
    } else if (name == "poisson_geometric") {
        phi = [dist](int l, std::size_t u) { return std::exp(-dist[u] / std::ldexp(1.0, l)); };
    } else {
        throw std::invalid_argument("unknown kernel family '" + std::string{name} +
                                    "' (expected dirichlet, fejer or poisson_geometric)");
    }
    return KernelFamily{std::string{name}, phi, phi};
}

namespace {

std::vector<double> axis_kernel(const SpectralEnvelope& phi, int level, const FiniteAbelianGroup& group,
                                const std::vector<std::complex<double>>& chars) {
    const std::size_t n = group.order();
    std::vector<double> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        // Envelopes are even in u, so the imaginary parts cancel; only the
        // real part of each character contributes.
        double acc = 0.0;
        for (std::size_t u = 0; u < n; ++u) acc += phi(level, u) * chars[u * n + x].real();
        out[x] = acc / static_cast<double>(n);
    }
    return out;
}

}  // namespace

SpatialKernel spatial_kernel(const KernelFamily& family, int level, const FiniteAbelianGroup& group) {
    if (level < 0) throw std::invalid_argument("kernel level must be non-negative");
    const auto chars = character_table(group);
    SpatialKernel k{level, axis_kernel(family.phi1, level, group, chars),
                    axis_kernel(family.phi2, level, group, chars), QSignal{group}};
    const std::size_t n = group.order();
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) k.values(x1, x2) = Quaternion{k.p1[x1] * k.p2[x2]};
    }
    return k;
}

QSignal smooth(const QSignal& f, const KernelFamily& family, int level) {
    // P is real and separable, so f * P = (f *_1 P_1) *_2 P_2 along each axis
    // in O(N^3); this equals convolve(f, P.values) up to rounding.
    const auto& group = f.group();
    const std::size_t n = f.side();
    const SpatialKernel k = spatial_kernel(family, level, group);
    const auto sub = group.sub_table();

    QSignal rows{group};
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Quaternion acc;
            for (std::size_t y1 = 0; y1 < n; ++y1) acc += f(y1, x2) * k.p1[sub[x1 * n + y1]];
            rows(x1, x2) = acc;
        }
    }
    QSignal out{group};
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Quaternion acc;
            for (std::size_t y2 = 0; y2 < n; ++y2) acc += rows(x1, y2) * k.p2[sub[x2 * n + y2]];
            out(x1, x2) = acc * f.weight();
        }
    }
    return out;
}

std::vector<double> convergence_report(const QSignal& f, const KernelFamily& family, int max_level, LpNorm p) {
    if (max_level < 0) throw std::invalid_argument("max level must be non-negative");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(max_level) + 1);
    for (int l = 0; l <= max_level; ++l) out.push_back(lp_norm(smooth(f, family, l) - f, p));
    return out;
}

EnergySides energy_identity(const QSignal& f, const KernelFamily& family, int level, const AxisPair& axes) {
    const auto& group = f.group();
    const std::size_t n = f.side();
    const auto neg = group.neg_table();

    const QSignal g = convolve(reflect_conj(f), f);
    const SpatialKernel k = spatial_kernel(family, level, group);
    Quaternion at_origin;
    for (std::size_t y1 = 0; y1 < n; ++y1) {
        for (std::size_t y2 = 0; y2 < n; ++y2) at_origin += g(y1, y2) * k.values(neg[y1], neg[y2]);
    }

    const QSpectrum F = rqft_fast(f, axes);
    double rhs = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            rhs += family.phi1(level, u) * family.phi2(level, v) * norm_sq(F(u, v));
        }
    }
    return {scalar_part(at_origin) * f.weight(), rhs * F.weight()};
}

}  // namespace qfourier
