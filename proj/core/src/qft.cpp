#include "qfourier/qft.hpp"

#include <stdexcept>

namespace qfourier {

namespace {

// Quaternion character tables for one axis: table[u * N + x].
struct KernelTables {
    std::vector<Quaternion> fwd1, fwd2;  // conj(chi_mu1), conj(chi_mu2)
    std::vector<Quaternion> inv1, inv2;  // chi_mu1, chi_mu2

    KernelTables(const FiniteAbelianGroup& group, const AxisPair& axes) {
        const auto table = character_table(group);
        const std::size_t m = table.size();
        fwd1.resize(m);
        fwd2.resize(m);
        inv1.resize(m);
        inv2.resize(m);
        for (std::size_t t = 0; t < m; ++t) {
            const double c = table[t].real();
            const double s = table[t].imag();
            fwd1[t] = c * kOne - s * axes.mu1();
            fwd2[t] = c * kOne - s * axes.mu2();
            inv1[t] = c * kOne + s * axes.mu1();
            inv2[t] = c * kOne + s * axes.mu2();
        }
    }
};

// Two mu1-plane arrays holding f = z1 + z2 mu2 bin by bin.
struct SplitField {
    std::vector<cplx> z1, z2;
};

template <Carrier C>
SplitField split(const QField<C>& f, const AxisPair& axes) {
    SplitField s{std::vector<cplx>(f.size()), std::vector<cplx>(f.size())};
    for (std::size_t b = 0; b < f.size(); ++b) {
        const auto [c1, c2] = symplectic_split(f[b], axes);
        s.z1[b] = c1;
        s.z2[b] = c2;
    }
    return s;
}

template <Carrier C>
QField<C> merge(const FiniteAbelianGroup& group, const SplitField& s, const AxisPair& axes, double scale) {
    QField<C> out{group};
    for (std::size_t b = 0; b < out.size(); ++b) out[b] = axes.compose(s.z1[b], s.z2[b]) * scale;
    return out;
}

// Transforms every column (first variable) of an N x N row-major array.
void transform_columns(std::vector<cplx>& data, std::size_t n, const GroupFft& fft, int sign) {
    std::vector<cplx> col(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) col[r] = data[r * n + c];
        fft.execute(col, sign);
        for (std::size_t r = 0; r < n; ++r) data[r * n + c] = col[r];
    }
}

void transform_rows(std::vector<cplx>& data, std::size_t n, const GroupFft& fft, int sign) {
    for (std::size_t r = 0; r < n; ++r) fft.execute(std::span<cplx>{data}.subspan(r * n, n), sign);
}

// Given hat = sum_x X(x) exp(-iota theta(k, x)) along rows, produce
//   cos_sum(k) = sum_x X(x) cos theta = (hat(k) + hat(-k)) / 2
//   sin_sum(k) = sum_x X(x) sin theta = (hat(-k) - hat(k)) / (2 iota)
void cos_sin_sums(const std::vector<cplx>& hat, const std::vector<std::size_t>& neg, std::size_t n,
                  std::vector<cplx>& cos_sum, std::vector<cplx>& sin_sum) {
    const cplx minus_half_iota{0.0, -0.5};
    cos_sum.resize(hat.size());
    sin_sum.resize(hat.size());
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row = r * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx p = hat[row + k];
            const cplx m = hat[row + neg[k]];
            cos_sum[row + k] = 0.5 * (p + m);
            sin_sum[row + k] = minus_half_iota * (m - p);
        }
    }
}

}  // namespace

QSpectrum rqft_direct(const QSignal& f, const AxisPair& axes) {
    const auto& group = f.group();
    const std::size_t n = f.side();
    const KernelTables k{group, axes};
    QSpectrum out{group};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            Quaternion acc;
            for (std::size_t x1 = 0; x1 < n; ++x1) {
                const Quaternion& k1 = k.fwd1[u * n + x1];
                for (std::size_t x2 = 0; x2 < n; ++x2) acc += (f(x1, x2) * k1) * k.fwd2[v * n + x2];
            }
            out(u, v) = acc;
        }
    }
    return out;
}

QSignal irqft_direct(const QSpectrum& F, const AxisPair& axes) {
    const auto& group = F.group();
    const std::size_t n = F.side();
    const KernelTables k{group, axes};
    const double w = F.weight();
    QSignal out{group};
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Quaternion acc;
            for (std::size_t u = 0; u < n; ++u) {
                const Quaternion& k1 = k.inv1[u * n + x1];
                for (std::size_t v = 0; v < n; ++v) acc += (F(u, v) * k.inv2[v * n + x2]) * k1;
            }
            out(x1, x2) = acc * w;
        }
    }
    return out;
}

QSpectrum sqft_direct(const QSignal& f, const AxisPair& axes) {
    const auto& group = f.group();
    const std::size_t n = f.side();
    const KernelTables k{group, axes};
    QSpectrum out{group};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            Quaternion acc;
            for (std::size_t x1 = 0; x1 < n; ++x1) {
                const Quaternion& k1 = k.fwd1[u * n + x1];
                for (std::size_t x2 = 0; x2 < n; ++x2) acc += (k1 * f(x1, x2)) * k.fwd2[v * n + x2];
            }
            out(u, v) = acc;
        }
    }
    return out;
}

QSignal isqft_direct(const QSpectrum& F, const AxisPair& axes) {
    const auto& group = F.group();
    const std::size_t n = F.side();
    const KernelTables k{group, axes};
    const double w = F.weight();
    QSignal out{group};
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Quaternion acc;
            for (std::size_t u = 0; u < n; ++u) {
                const Quaternion& k1 = k.inv1[u * n + x1];
                for (std::size_t v = 0; v < n; ++v) acc += (k1 * F(u, v)) * k.inv2[v * n + x2];
            }
            out(x1, x2) = acc * w;
        }
    }
    return out;
}

QSpectrum lqft_direct(const QSignal& f, const AxisPair& axes) {
    const auto& group = f.group();
    const std::size_t n = f.side();
    const KernelTables k{group, axes};
    QSpectrum out{group};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            Quaternion acc;
            for (std::size_t x1 = 0; x1 < n; ++x1) {
                const Quaternion& k1 = k.fwd1[u * n + x1];
                for (std::size_t x2 = 0; x2 < n; ++x2) acc += (k1 * k.fwd2[v * n + x2]) * f(x1, x2);
            }
            out(u, v) = acc;
        }
    }
    return out;
}

QSpectrum rqft_fast(const QSignal& f, const AxisPair& axes) {
    const auto& group = f.group();
    const std::size_t n = f.side();
    const GroupFft fft{group};
    const auto neg = group.neg_table();

    // First variable: (z1 + z2 mu2) e^{-mu1 t} = z1 e^{-mu1 t} + z2 e^{+mu1 t} mu2,
    // so the mu2 coefficient array sees the opposite frequency sign.
    SplitField s = split(f, axes);
    transform_columns(s.z1, n, fft, -1);
    transform_columns(s.z2, n, fft, +1);

    // Second variable: (A + B mu2)(cos - mu2 sin) = (A cos + B sin) + (B cos - A sin) mu2.
    transform_rows(s.z1, n, fft, -1);
    transform_rows(s.z2, n, fft, -1);
    std::vector<cplx> cos_a, sin_a, cos_b, sin_b;
    cos_sin_sums(s.z1, neg, n, cos_a, sin_a);
    cos_sin_sums(s.z2, neg, n, cos_b, sin_b);
    for (std::size_t b = 0; b < f.size(); ++b) {
        s.z1[b] = cos_a[b] + sin_b[b];
        s.z2[b] = cos_b[b] - sin_a[b];
    }
    return merge<Carrier::Dual>(group, s, axes, 1.0);
}

QSignal irqft_fast(const QSpectrum& F, const AxisPair& axes) {
    const auto& group = F.group();
    const std::size_t n = F.side();
    const GroupFft fft{group};
    const auto neg = group.neg_table();

    // Second variable first: (C + D mu2)(cos + mu2 sin) = (C cos - D sin) + (C sin + D cos) mu2.
    SplitField s = split(F, axes);
    transform_rows(s.z1, n, fft, -1);
    transform_rows(s.z2, n, fft, -1);
    std::vector<cplx> cos_c, sin_c, cos_d, sin_d;
    cos_sin_sums(s.z1, neg, n, cos_c, sin_c);
    cos_sin_sums(s.z2, neg, n, cos_d, sin_d);
    for (std::size_t b = 0; b < F.size(); ++b) {
        s.z1[b] = cos_c[b] - sin_d[b];
        s.z2[b] = sin_c[b] + cos_d[b];
    }

    // Then the first variable: (P + Q mu2) e^{mu1 t} = P e^{mu1 t} + Q e^{-mu1 t} mu2.
    transform_columns(s.z1, n, fft, +1);
    transform_columns(s.z2, n, fft, -1);
    return merge<Carrier::Primal>(group, s, axes, F.weight());
}

QSpectrum sqft_fast(const QSignal& f, const AxisPair& axes) {
    return rqft_fast(transform_W(f, axes), axes);
}

QSignal isqft_fast(const QSpectrum& F, const AxisPair& axes) {
    return transform_W(irqft_fast(F, axes), axes);
}

QSpectrum lqft_fast(const QSignal& f, const AxisPair& axes) {
    // conj(lqft(f)(u,v)) = sum_x conj(f(x)) chi_mu2(v,x2) chi_mu1(u,x1), which is
    // N^2 times the right-sided inverse of conj(f) read as a spectrum (the
    // pairing <u,x> is symmetric in its two arguments).
    const auto& group = f.group();
    QSpectrum conj_f{group};
    for (std::size_t b = 0; b < f.size(); ++b) conj_f[b] = conj(f[b]);
    const QSignal back = irqft_fast(conj_f, axes);
    const double scale = 1.0 / conj_f.weight();
    QSpectrum out{group};
    for (std::size_t b = 0; b < f.size(); ++b) out[b] = conj(back[b]) * scale;
    return out;
}

QSpectrum forward_transform(const QSignal& f, const TransformKind& kind, bool fast) {
    switch (kind.side) {
        case TransformSide::Right: return fast ? rqft_fast(f, kind.axes) : rqft_direct(f, kind.axes);
        case TransformSide::Left: return fast ? lqft_fast(f, kind.axes) : lqft_direct(f, kind.axes);
        case TransformSide::TwoSided: return fast ? sqft_fast(f, kind.axes) : sqft_direct(f, kind.axes);
    }
    throw std::invalid_argument("unknown transform kind");
}

QSignal inverse_transform(const QSpectrum& F, const TransformKind& kind, bool fast) {
    switch (kind.side) {
        case TransformSide::Right: return fast ? irqft_fast(F, kind.axes) : irqft_direct(F, kind.axes);
        case TransformSide::TwoSided: return fast ? isqft_fast(F, kind.axes) : isqft_direct(F, kind.axes);
        case TransformSide::Left: break;
    }
    throw std::invalid_argument("inverse is available for the right-sided and two-sided transforms only");
}

PairingSides multiplication_pairing(const QSignal& f, const QSpectrum& g, const AxisPair& axes,
                                    KernelOrder order) {
    require_same_carrier(QSpectrum{f.group()}, g);
    const auto& group = f.group();
    const std::size_t n = f.side();
    const double wd = g.weight();

    const QSpectrum F = rqft_direct(f, axes);
    Quaternion lhs;
    for (std::size_t b = 0; b < F.size(); ++b) lhs += F[b] * g[b];
    lhs *= wd;

    const QSpectrum h = transform_beta(g, axes);
    const KernelTables k{group, axes};
    Quaternion rhs;
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Quaternion H;
            for (std::size_t u = 0; u < n; ++u) {
                const Quaternion& k1 = k.fwd1[u * n + x1];
                for (std::size_t v = 0; v < n; ++v) {
                    const Quaternion& k2 = k.fwd2[v * n + x2];
                    H += order == KernelOrder::Mu1ThenMu2 ? (h(u, v) * k1) * k2 : (h(u, v) * k2) * k1;
                }
            }
            rhs += f(x1, x2) * (H * wd) * f.weight();
        }
    }
    return {lhs, rhs};
}

std::vector<Quaternion> classical_dft_via_rqft(const FiniteAbelianGroup& group, const std::vector<Quaternion>& f,
                                               const AxisPair& axes) {
    const std::size_t n = group.order();
    if (f.size() != n) throw std::invalid_argument("signal length must equal |G|");
    for (const auto& q : f) {
        if (!in_plane(q, axes.mu1())) {
            throw std::domain_error("classical embedding needs values in the plane {1, mu1}");
        }
    }
    const QSignal lifted = QSignal::generate(group, [&](std::size_t x, std::size_t) { return f[x]; });
    const QSpectrum F = rqft_fast(lifted, axes);
    std::vector<Quaternion> out(n);
    for (std::size_t u = 0; u < n; ++u) out[u] = F(u, 0) / static_cast<double>(n);
    return out;
}

}  // namespace qfourier
