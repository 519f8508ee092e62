#include "qfourier/group.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfourier {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::size_t> moduli) : moduli_{std::move(moduli)} {
    if (moduli_.empty()) {
        throw std::invalid_argument("group needs at least one cyclic factor");
    }
    strides_.assign(moduli_.size(), 1);
    order_ = 1;
    for (std::size_t t = moduli_.size(); t-- > 0;) {
        if (moduli_[t] == 0) {
            throw std::invalid_argument("group modulus must be positive");
        }
        strides_[t] = order_;
        order_ *= moduli_[t];
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view text) {
    std::vector<std::size_t> moduli;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = text.find_first_of("xX", pos);
        const std::string_view tok = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0) {
            throw std::invalid_argument("malformed group descriptor '" + std::string{text} +
                                        "' (expected e.g. 8 or 3x4)");
        }
        moduli.push_back(value);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return FiniteAbelianGroup{std::move(moduli)};
}

std::string FiniteAbelianGroup::descriptor() const {
    std::string out;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        if (t) out += 'x';
        out += std::to_string(moduli_[t]);
    }
    return out;
}

void FiniteAbelianGroup::check(const GroupElement& a) const {
    if (a.coords.size() != moduli_.size()) {
        throw std::invalid_argument("group mismatch: element rank differs from group rank");
    }
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        if (a.coords[t] >= moduli_[t]) {
            throw std::invalid_argument("group mismatch: coordinate out of range");
        }
    }
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement{std::vector<std::uint32_t>(moduli_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<std::uint32_t> coords) const {
    GroupElement e{std::move(coords)};
    check(e);
    return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement r = a;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        r.coords[t] = static_cast<std::uint32_t>((std::size_t{a.coords[t]} + b.coords[t]) % moduli_[t]);
    }
    return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    check(a);
    GroupElement r = a;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        r.coords[t] = static_cast<std::uint32_t>((moduli_[t] - a.coords[t]) % moduli_[t]);
    }
    return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

std::size_t FiniteAbelianGroup::index(const GroupElement& a) const {
    check(a);
    std::size_t idx = 0;
    for (std::size_t t = 0; t < moduli_.size(); ++t) idx += a.coords[t] * strides_[t];
    return idx;
}

GroupElement FiniteAbelianGroup::at(std::size_t index) const {
    if (index >= order_) throw std::out_of_range("group index out of range");
    GroupElement e = zero();
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        e.coords[t] = static_cast<std::uint32_t>((index / strides_[t]) % moduli_[t]);
    }
    return e;
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(at(i));
    return out;
}

std::size_t FiniteAbelianGroup::add_index(std::size_t a, std::size_t b) const {
    std::size_t r = 0;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        const std::size_t n = moduli_[t];
        const std::size_t da = (a / strides_[t]) % n;
        const std::size_t db = (b / strides_[t]) % n;
        r += ((da + db) % n) * strides_[t];
    }
    return r;
}

std::size_t FiniteAbelianGroup::neg_index(std::size_t a) const {
    std::size_t r = 0;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        const std::size_t n = moduli_[t];
        const std::size_t da = (a / strides_[t]) % n;
        r += ((n - da) % n) * strides_[t];
    }
    return r;
}

std::vector<std::size_t> FiniteAbelianGroup::neg_table() const {
    std::vector<std::size_t> out(order_);
    for (std::size_t i = 0; i < order_; ++i) out[i] = neg_index(i);
    return out;
}

std::vector<std::size_t> FiniteAbelianGroup::sub_table() const {
    const auto neg = neg_table();
    std::vector<std::size_t> out(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) out[a * order_ + b] = add_index(a, neg[b]);
    }
    return out;
}

double FiniteAbelianGroup::phase_index(std::size_t u, std::size_t x) const {
    // Reduce each product modulo n_t first so the phase error does not grow
    // with the group size.
    double s = 0.0;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        const std::size_t n = moduli_[t];
        const std::size_t du = (u / strides_[t]) % n;
        const std::size_t dx = (x / strides_[t]) % n;
        s += static_cast<double>((du * dx) % n) / static_cast<double>(n);
    }
    return s - std::floor(s);
}

double FiniteAbelianGroup::phase(const DualElement& u, const GroupElement& x) const {
    return phase_index(index(u), index(x));
}

std::size_t FiniteAbelianGroup::circular_distance(std::size_t index) const {
    std::size_t d = 0;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        const std::size_t n = moduli_[t];
        const std::size_t du = (index / strides_[t]) % n;
        d += std::min(du, n - du);
    }
    return d;
}

Quaternion character_value(const FiniteAbelianGroup& group, const DualElement& freq,
                           const GroupElement& point, const Quaternion& axis) {
    if (!is_unit_pure(axis)) {
        throw std::domain_error("character axis must be a unit pure-imaginary quaternion");
    }
    const double theta = 2.0 * std::numbers::pi * group.phase(freq, point);
    return std::cos(theta) * kOne + std::sin(theta) * axis;
}

std::vector<std::complex<double>> character_table(const FiniteAbelianGroup& group) {
    const std::size_t n = group.order();
    std::vector<std::complex<double>> table(n * n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t x = 0; x < n; ++x) {
            const double theta = 2.0 * std::numbers::pi * group.phase_index(u, x);
            table[u * n + x] = {std::cos(theta), std::sin(theta)};
        }
    }
    return table;
}

}  // namespace qfourier
