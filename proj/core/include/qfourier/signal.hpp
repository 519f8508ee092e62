#pragma once

// Dense quaternion-valued functions on G x G (signals) and on the dual
// Ghat x Ghat (spectra).
//
// Bin (i1, i2) is stored at i1 * |G| + i2, where i1 and i2 are mixed-radix
// group indices. The carrier fixes the Haar weight used by norms and inner
// products: 1 per primal point, 1/|G|^2 per dual point.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qfourier/group.hpp"
#include "qfourier/quaternion.hpp"

namespace qfourier {

enum class Carrier { Primal, Dual };

template <Carrier C>
class QField {
public:
    static constexpr Carrier carrier = C;

    explicit QField(FiniteAbelianGroup group)
        : group_{std::move(group)}, values_(group_.order() * group_.order()) {}

    /// Throws std::invalid_argument on a length mismatch or a non-finite value.
    QField(FiniteAbelianGroup group, std::vector<Quaternion> values)
        : group_{std::move(group)}, values_{std::move(values)} {
        const std::size_t n = group_.order();
        if (values_.size() != n * n) {
            throw std::invalid_argument("field length must equal |G|^2");
        }
        for (const auto& q : values_) {
            if (!is_finite(q)) throw std::invalid_argument("field values must be finite");
        }
    }

    /// Builds a field from fn(i1, i2) evaluated at every bin.
    static QField generate(const FiniteAbelianGroup& group,
                           const std::function<Quaternion(std::size_t, std::size_t)>& fn) {
        QField out{group};
        const std::size_t n = group.order();
        for (std::size_t i1 = 0; i1 < n; ++i1) {
            for (std::size_t i2 = 0; i2 < n; ++i2) out(i1, i2) = fn(i1, i2);
        }
        return out;
    }

    const FiniteAbelianGroup& group() const { return group_; }
    /// |G|, the extent of each of the two axes.
    std::size_t side() const { return group_.order(); }
    std::size_t size() const { return values_.size(); }

    double weight() const {
        return C == Carrier::Primal ? haar_weight_primal(group_) : haar_weight_dual(group_);
    }

    Quaternion& operator()(std::size_t i1, std::size_t i2) { return values_[i1 * side() + i2]; }
    const Quaternion& operator()(std::size_t i1, std::size_t i2) const {
        return values_[i1 * side() + i2];
    }
    Quaternion& operator[](std::size_t bin) { return values_[bin]; }
    const Quaternion& operator[](std::size_t bin) const { return values_[bin]; }

    std::span<const Quaternion> values() const { return values_; }
    std::span<Quaternion> values() { return values_; }

    bool operator==(const QField&) const = default;

private:
    FiniteAbelianGroup group_;
    std::vector<Quaternion> values_;
};

using QSignal = QField<Carrier::Primal>;
using QSpectrum = QField<Carrier::Dual>;

/// Throws std::invalid_argument when the two fields live on different groups.
template <Carrier C>
void require_same_carrier(const QField<C>& f, const QField<C>& g) {
    if (!(f.group() == g.group())) throw std::invalid_argument("carrier mismatch: fields on different groups");
}

// ---------------------------------------------------------------------------
// Pointwise arithmetic

template <Carrier C>
QField<C> operator+(QField<C> f, const QField<C>& g) {
    require_same_carrier(f, g);
    for (std::size_t b = 0; b < f.size(); ++b) f[b] += g[b];
    return f;
}

template <Carrier C>
QField<C> operator-(QField<C> f, const QField<C>& g) {
    require_same_carrier(f, g);
    for (std::size_t b = 0; b < f.size(); ++b) f[b] -= g[b];
    return f;
}

/// (q f)(x) = q * f(x)
template <Carrier C>
QField<C> left_multiply(const Quaternion& q, QField<C> f) {
    for (auto& v : f.values()) v = q * v;
    return f;
}

/// (f q)(x) = f(x) * q
template <Carrier C>
QField<C> right_multiply(QField<C> f, const Quaternion& q) {
    for (auto& v : f.values()) v = v * q;
    return f;
}

/// Keeps only real component m (0 = scalar, 1..3 = i, j, k) in the standard frame.
template <Carrier C>
QField<C> component(QField<C> f, int m) {
    for (auto& v : f.values()) {
        switch (m) {
            case 0: v = {v.w, 0.0, 0.0, 0.0}; break;
            case 1: v = {0.0, v.x, 0.0, 0.0}; break;
            case 2: v = {0.0, 0.0, v.y, 0.0}; break;
            default: v = {0.0, 0.0, 0.0, v.z}; break;
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Norms and inner products

enum class LpNorm { L1, L2, Linf };

template <Carrier C>
double lp_norm(const QField<C>& f, LpNorm p) {
    double acc = 0.0;
    switch (p) {
        case LpNorm::L1:
            for (const auto& v : f.values()) acc += norm(v);
            return acc * f.weight();
        case LpNorm::L2:
            for (const auto& v : f.values()) acc += norm_sq(v);
            return std::sqrt(acc * f.weight());
        case LpNorm::Linf:
            for (const auto& v : f.values()) acc = std::max(acc, norm(v));
            return acc;
    }
    return acc;
}

/// p must be 1, 2 or infinity; anything else throws std::invalid_argument.
template <Carrier C>
double lp_norm(const QField<C>& f, double p) {
    if (p == 1.0) return lp_norm(f, LpNorm::L1);
    if (p == 2.0) return lp_norm(f, LpNorm::L2);
    if (std::isinf(p) && p > 0) return lp_norm(f, LpNorm::Linf);
    throw std::invalid_argument("unsupported Lp exponent (use 1, 2 or infinity)");
}

/// (f, g) = sum f(x) conj(g(x)) weight. Satisfies (p f, q g) = p (f, g) conj(q).
template <Carrier C>
Quaternion inner_q(const QField<C>& f, const QField<C>& g) {
    require_same_carrier(f, g);
    Quaternion acc;
    for (std::size_t b = 0; b < f.size(); ++b) acc += f[b] * conj(g[b]);
    return acc * f.weight();
}

/// <f, g> = Sc (f, g)
template <Carrier C>
double inner_real(const QField<C>& f, const QField<C>& g) {
    return scalar_part(inner_q(f, g));
}

template <Carrier C>
double l2_distance(const QField<C>& f, const QField<C>& g) {
    return lp_norm(f - g, LpNorm::L2);
}

template <Carrier C>
double max_abs_distance(const QField<C>& f, const QField<C>& g) {
    return lp_norm(f - g, LpNorm::Linf);
}

// ---------------------------------------------------------------------------
// Operators on signals

/// (L_y f)(x) = f(x + y). Left and right translation agree on abelian groups.
QSignal translate(const QSignal& f, const GroupElement& y1, const GroupElement& y2);

/// f~(x) = conj(f(-x))
QSignal reflect_conj(const QSignal& f);

/// (f * g)(x) = sum_y f(y) g(x - y).
///
/// The left factor always multiplies first. Quaternion products do not
/// commute, so convolve(f, g) != convolve(g, f) in general.
QSignal convolve(const QSignal& f, const QSignal& g);

/// Reflects the mu2 and mu3 frame components in the first variable:
///   a(x1,x2) + b(x1,x2) mu1 + c(-x1,x2) mu2 + d(-x1,x2) mu3.
/// An involution; left-linear over the mu1-plane.
QSignal transform_W(const QSignal& f, const AxisPair& axes = AxisPair::standard());

/// Frequency reflections of the frame components of a spectrum:
///   a(u,v) + b(u,-v) mu1 + c(-u,v) mu2 + d(-u,-v) mu3.
QSpectrum transform_beta(const QSpectrum& g, const AxisPair& axes = AxisPair::standard());

}  // namespace qfourier
