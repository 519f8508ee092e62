#pragma once

// Approximate-identity kernels on G x G.
//
// A kernel family is a pair of real spectral envelopes phi1, phi2 indexed by a
// level l >= 0. Each envelope is 1 at the zero frequency, lies in [0, 1], and
// increases pointwise to 1 as l grows. The spatial kernel at level l is
//
//   P_t(x) = |G|^-1 sum_u phi_t(l, u) <u, x>,     P(x1, x2) = P_1(x1) P_2(x2),
//
// which has unit total mass. Convolving with P multiplies the right-sided
// spectrum by phi1(l,u) phi2(l,v), so f * P -> f as l grows.
//
// Built-in families (d = circular distance of u, summed over coordinates):
//   dirichlet          phi(l,u) = 1 if d <= l else 0
//   fejer              phi(l,u) = max(0, 1 - d / (l + 1))
//   poisson_geometric  phi(l,u) = exp(-d / 2^l)
//
// On the real line the last one, phi(w) = exp(-|w|) dilated by 2^-l, gives
// the Poisson kernel  P_l(x) = (1/pi) eps_l / (eps_l^2 + x^2)  with eps_l = 2^-l.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfourier/group.hpp"
#include "qfourier/quaternion.hpp"
#include "qfourier/signal.hpp"

namespace qfourier {

/// phi(level, frequency index) -> [0, 1]
using SpectralEnvelope = std::function<double(int, std::size_t)>;

struct KernelFamily {
    std::string name;
    SpectralEnvelope phi1;
    SpectralEnvelope phi2;
};

/// Names accepted by builtin_family.
const std::vector<std::string>& builtin_family_names();

/// Throws std::invalid_argument for an unknown name.
KernelFamily builtin_family(std::string_view name, const FiniteAbelianGroup& group);

struct SpatialKernel {
    int level = 0;
    std::vector<double> p1;  // P_1 over G
    std::vector<double> p2;  // P_2 over G
    QSignal values;          // P_1(x1) P_2(x2), real-valued
};

/// Throws std::invalid_argument for level < 0.
SpatialKernel spatial_kernel(const KernelFamily& family, int level, const FiniteAbelianGroup& group);

/// convolve(f, P^l), signal on the left; evaluated separably.
QSignal smooth(const QSignal& f, const KernelFamily& family, int level);

/// ||smooth(f, l) - f||_p for l = 0..max_level.
std::vector<double> convergence_report(const QSignal& f, const KernelFamily& family, int max_level, LpNorm p);

struct EnergySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// lhs = Sc(((f~ * f) * P^l)(0, 0)) with f~ = reflect_conj(f);
/// rhs = sum_w phi1(l,u) phi2(l,v) |rqft(f)(w)|^2 / |G|^2.
EnergySides energy_identity(const QSignal& f, const KernelFamily& family, int level,
                            const AxisPair& axes = AxisPair::standard());

}  // namespace qfourier
