#pragma once

// Seeded generators for random quaternions, signals and axis frames.
// Results depend only on the seed (std::mt19937_64 is fully specified, and
// the conversions to double below avoid implementation-defined distributions).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "qfourier/quaternion.hpp"
#include "qfourier/signal.hpp"

namespace qfourier {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

inline Quaternion random_quaternion(Rng& rng) {
    return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

template <Carrier C = Carrier::Primal>
QField<C> random_field(const FiniteAbelianGroup& group, Rng& rng) {
    QField<C> f{group};
    for (auto& v : f.values()) v = random_quaternion(rng);
    return f;
}

inline QSignal random_signal(const FiniteAbelianGroup& group, Rng& rng) {
    return random_field<Carrier::Primal>(group, rng);
}

inline QSpectrum random_spectrum(const FiniteAbelianGroup& group, Rng& rng) {
    return random_field<Carrier::Dual>(group, rng);
}

/// Uniformly oriented orthonormal pair: mu1 from a normalized Gaussian
/// triple, mu2 by Gram-Schmidt against a second triple.
inline AxisPair random_axes(Rng& rng) {
    while (true) {
        const Quaternion a{0.0, rng.normal(), rng.normal(), rng.normal()};
        const Quaternion b{0.0, rng.normal(), rng.normal(), rng.normal()};
        const double na = norm(a);
        if (na < 1e-3) continue;
        const Quaternion mu1 = a / na;
        const Quaternion r = b - dot(b, mu1) * mu1;
        const double nr = norm(r);
        if (nr < 1e-3) continue;
        return AxisPair{mu1, r / nr};
    }
}

}  // namespace qfourier
