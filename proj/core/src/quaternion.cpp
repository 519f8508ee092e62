#include "qfourier/quaternion.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qfourier {

Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) {
        throw std::domain_error("zero quaternion has no inverse");
    }
    return conj(q) / n2;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

bool is_unit_pure(const Quaternion& q, double tol) {
    return std::abs(q.w) <= tol && std::abs(norm(q) - 1.0) <= tol;
}

AxisPair::AxisPair(const Quaternion& mu1, const Quaternion& mu2) : mu1_{mu1}, mu2_{mu2} {
    if (!is_unit_pure(mu1) || !is_unit_pure(mu2)) {
        throw std::invalid_argument("axis must be a unit pure-imaginary quaternion");
    }
    if (std::abs(scalar_part(mu1 * conj(mu2))) > kTolerance) {
        throw std::invalid_argument("axes must be perpendicular");
    }
    mu3_ = mu1 * mu2;
}

Quaternion AxisPair::compose(PlaneComplex c1, PlaneComplex c2) const {
    // c2*mu2 = (c + d mu1) mu2 = c mu2 + d mu3
    return c1.real() * kOne + c1.imag() * mu1_ + c2.real() * mu2_ + c2.imag() * mu3_;
}

FrameComponents component_in_frame(const Quaternion& q, const AxisPair& axes) {
    return {
        scalar_part(q),
        -scalar_part(q * axes.mu1()),
        -scalar_part(q * axes.mu2()),
        -scalar_part(q * axes.mu3()),
    };
}

std::pair<PlaneComplex, PlaneComplex> symplectic_split(const Quaternion& q, const AxisPair& axes) {
    const FrameComponents c = component_in_frame(q, axes);
    return {PlaneComplex{c.a, c.b}, PlaneComplex{c.c, c.d}};
}

bool in_plane(const Quaternion& q, const Quaternion& mu, double tol) {
    const Quaternion v = vector_part(q);
    const double along = dot(v, mu);
    const Quaternion rest = v - along * mu;
    return norm(rest) <= tol * std::max(1.0, norm(q));
}

}  // namespace qfourier
