#include "qfourier/signal.hpp"

namespace qfourier {

QSignal translate(const QSignal& f, const GroupElement& y1, const GroupElement& y2) {
    const auto& g = f.group();
    const std::size_t n = f.side();
    const std::size_t s1 = g.index(y1);
    const std::size_t s2 = g.index(y2);
    QSignal out{g};
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        const std::size_t j1 = g.add_index(i1, s1);
        for (std::size_t i2 = 0; i2 < n; ++i2) out(i1, i2) = f(j1, g.add_index(i2, s2));
    }
    return out;
}

QSignal reflect_conj(const QSignal& f) {
    const auto neg = f.group().neg_table();
    const std::size_t n = f.side();
    QSignal out{f.group()};
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i2 = 0; i2 < n; ++i2) out(i1, i2) = conj(f(neg[i1], neg[i2]));
    }
    return out;
}

QSignal convolve(const QSignal& f, const QSignal& g) {
    require_same_carrier(f, g);
    const std::size_t n = f.side();
    const auto sub = f.group().sub_table();
    const double w = f.weight();
    QSignal out{f.group()};
    // Fixed summation order per output bin: y1 outer, y2 inner.
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Quaternion acc;
            for (std::size_t y1 = 0; y1 < n; ++y1) {
                const std::size_t d1 = sub[x1 * n + y1];
                for (std::size_t y2 = 0; y2 < n; ++y2) {
                    acc += f(y1, y2) * g(d1, sub[x2 * n + y2]);
                }
            }
            out(x1, x2) = acc * w;
        }
    }
    return out;
}

QSignal transform_W(const QSignal& f, const AxisPair& axes) {
    const auto neg = f.group().neg_table();
    const std::size_t n = f.side();
    QSignal out{f.group()};
    for (std::size_t i1 = 0; i1 < n; ++i1) {
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            const FrameComponents here = component_in_frame(f(i1, i2), axes);
            const FrameComponents mirrored = component_in_frame(f(neg[i1], i2), axes);
            out(i1, i2) = axes.from_frame({here.a, here.b, mirrored.c, mirrored.d});
        }
    }
    return out;
}

QSpectrum transform_beta(const QSpectrum& g, const AxisPair& axes) {
    const auto neg = g.group().neg_table();
    const std::size_t n = g.side();
    QSpectrum out{g.group()};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const double a = component_in_frame(g(u, v), axes).a;
            const double b = component_in_frame(g(u, neg[v]), axes).b;
            const double c = component_in_frame(g(neg[u], v), axes).c;
            const double d = component_in_frame(g(neg[u], neg[v]), axes).d;
            out(u, v) = axes.from_frame({a, b, c, d});
        }
    }
    return out;
}

}  // namespace qfourier
