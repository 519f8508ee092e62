#pragma once

// Finite abelian groups G = Z_{n1} x ... x Z_{nk} and their duals.
//
// A finite abelian group is isomorphic to its dual: the frequency u acts on x
// through the phase 2*pi * sum_t (u_t x_t mod n_t) / n_t, so frequencies share
// the GroupElement representation.
//
// Elements are enumerated in mixed-radix row-major order (last coordinate
// fastest). That linear index is the canonical bin index used by signals and
// by the QSIG file format.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qfourier/quaternion.hpp"

namespace qfourier {

struct GroupElement {
    std::vector<std::uint32_t> coords;

    bool operator==(const GroupElement&) const = default;
};

using DualElement = GroupElement;

class FiniteAbelianGroup {
public:
    /// Throws std::invalid_argument if moduli is empty or any modulus is zero.
    explicit FiniteAbelianGroup(std::vector<std::size_t> moduli);

    static FiniteAbelianGroup cyclic(std::size_t n) { return FiniteAbelianGroup{{n}}; }

    /// Parses "8" or "3x4x5". Throws std::invalid_argument on malformed input.
    static FiniteAbelianGroup parse(std::string_view text);

    std::size_t rank() const { return moduli_.size(); }
    const std::vector<std::size_t>& moduli() const { return moduli_; }
    std::size_t order() const { return order_; }

    /// "3x4"
    std::string descriptor() const;

    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

    GroupElement zero() const;
    /// Validates coordinates against this group; throws std::invalid_argument.
    GroupElement element(std::vector<std::uint32_t> coords) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;

    std::size_t index(const GroupElement& a) const;
    GroupElement at(std::size_t index) const;
    std::vector<GroupElement> enumerate() const;

    // Index-level arithmetic, for inner loops.
    std::size_t add_index(std::size_t a, std::size_t b) const;
    std::size_t neg_index(std::size_t a) const;
    /// neg_table()[i] == neg_index(i)
    std::vector<std::size_t> neg_table() const;
    /// sub_table()[a * order + b] == index(a - b)
    std::vector<std::size_t> sub_table() const;

    /// Fraction s in [0, 1) with the pairing <u, x> = exp(2*pi*s*mu).
    double phase(const DualElement& u, const GroupElement& x) const;
    double phase_index(std::size_t u, std::size_t x) const;

    /// Sum over coordinates of min(u_t, n_t - u_t).
    std::size_t circular_distance(std::size_t index) const;

private:
    void check(const GroupElement& a) const;

    std::vector<std::size_t> moduli_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
};

/// cos(theta) + axis*sin(theta), theta = 2*pi*phase(freq, point). Throws
/// std::domain_error if axis is not unit pure imaginary.
Quaternion character_value(const FiniteAbelianGroup& group, const DualElement& freq,
                           const GroupElement& point, const Quaternion& axis);

/// table[u * order + x] = exp(+i * 2*pi*phase(u, x)) as a plane element.
std::vector<std::complex<double>> character_table(const FiniteAbelianGroup& group);

/// Counting measure on G x G.
inline double haar_weight_primal(const FiniteAbelianGroup&) { return 1.0; }

/// Normalized counting measure on the dual of G x G: 1 / |G|^2 per point.
inline double haar_weight_dual(const FiniteAbelianGroup& group) {
    const double n = static_cast<double>(group.order());
    return 1.0 / (n * n);
}

}  // namespace qfourier
