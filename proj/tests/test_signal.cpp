#include <gtest/gtest.h>

#include "support/test_support.hpp"

using namespace qfourier;
using testing_support::rel_distance;

namespace {

const FiniteAbelianGroup kZ4 = FiniteAbelianGroup::cyclic(4);

QSignal point_mass(const FiniteAbelianGroup& g, std::size_t i1, std::size_t i2, const Quaternion& q) {
    QSignal f{g};
    f(i1, i2) = q;
    return f;
}

}  // namespace

TEST(Signal, ShapeAndValidation) {
    const auto g = FiniteAbelianGroup::parse("2x3");
    const QSignal f{g};
    EXPECT_EQ(f.size(), 36u);
    EXPECT_EQ(f.side(), 6u);
    EXPECT_THROW((QSignal{g, std::vector<Quaternion>(35)}), std::invalid_argument);
    std::vector<Quaternion> bad(36);
    bad[7].y = std::nan("");
    EXPECT_THROW((QSignal{g, bad}), std::invalid_argument);
    EXPECT_THROW((void)(QSignal{g} + QSignal{kZ4}), std::invalid_argument);
}

TEST(Signal, NormsUseCarrierWeights) {
    const auto z2 = FiniteAbelianGroup::cyclic(2);
    QSignal ones{z2};
    for (auto& v : ones.values()) v = kOne;
    EXPECT_DOUBLE_EQ(lp_norm(ones, LpNorm::L1), 4.0);
    EXPECT_DOUBLE_EQ(lp_norm(ones, LpNorm::L2), 2.0);
    EXPECT_DOUBLE_EQ(lp_norm(ones, LpNorm::Linf), 1.0);
    QSpectrum F{z2};
    for (auto& v : F.values()) v = kOne;
    EXPECT_DOUBLE_EQ(lp_norm(F, LpNorm::L2), 1.0);
    EXPECT_DOUBLE_EQ(lp_norm(F, 2.0), 1.0);
    EXPECT_THROW((void)lp_norm(F, 3.0), std::invalid_argument);
}

TEST(Signal, ComponentNormIdentity) {
    Rng rng{1};
    const auto g = FiniteAbelianGroup::cyclic(6);
    for (int t = 0; t < 10; ++t) {
        const QSignal f = random_signal(g, rng);
        double sum2 = 0.0;
        double sum_inf = 0.0;
        for (int m = 0; m < 4; ++m) {
            sum2 += std::pow(lp_norm(component(f, m), LpNorm::L2), 2);
            sum_inf += lp_norm(component(f, m), LpNorm::Linf);
        }
        const double n2 = std::pow(lp_norm(f, LpNorm::L2), 2);
        EXPECT_NEAR(n2, sum2, 1e-12 * n2);
        EXPECT_LE(lp_norm(f, LpNorm::Linf), 2.0 * sum_inf);
    }
    EXPECT_EQ(component(point_mass(kZ4, 1, 2, Quaternion{1, 2, 3, 4}), 2)(1, 2), (Quaternion{0, 0, 3, 0}));
}

TEST(Signal, InnerProducts) {
    Rng rng{2};
    const auto g = FiniteAbelianGroup::cyclic(5);
    for (int t = 0; t < 10; ++t) {
        const QSignal f = random_signal(g, rng);
        const QSignal h = random_signal(g, rng);
        const Quaternion p = random_quaternion(rng);
        const Quaternion q = random_quaternion(rng);
        const double nf2 = std::pow(lp_norm(f, LpNorm::L2), 2);
        EXPECT_QUAT_NEAR(inner_q(f, f), (Quaternion{nf2}), 1e-12 * nf2);
        EXPECT_QUAT_NEAR(inner_q(left_multiply(p, f), left_multiply(q, h)), p * inner_q(f, h) * conj(q), 1e-12 * nf2);
        EXPECT_NEAR(inner_real(f, h), inner_real(h, f), 1e-12);
    }
}

TEST(Signal, Translation) {
    Rng rng{3};
    const auto g = FiniteAbelianGroup::parse("2x3");
    const QSignal f = random_signal(g, rng);
    EXPECT_EQ(translate(f, g.zero(), g.zero()), f);
    const GroupElement y1 = g.element({1, 2});
    const GroupElement y2 = g.element({0, 1});
    const QSignal t = translate(f, y1, y2);
    EXPECT_EQ(t(0, 0), f(g.index(y1), g.index(y2)));
    EXPECT_LE(rel_distance(translate(t, g.neg(y1), g.neg(y2)), f), 1e-15);
    EXPECT_NEAR(lp_norm(t, LpNorm::L2), lp_norm(f, LpNorm::L2), 1e-12);
}

TEST(Signal, ReflectConj) {
    const QSignal f = point_mass(kZ4, 1, 0, kJ);
    EXPECT_EQ(reflect_conj(f), point_mass(kZ4, 3, 0, -kJ));
    QSignal even{kZ4};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            even(a, b) = Quaternion{static_cast<double>(kZ4.circular_distance(a) + 10 * kZ4.circular_distance(b))};
        }
    }
    EXPECT_EQ(reflect_conj(even), even);
    Rng rng{4};
    const QSignal r = random_signal(kZ4, rng);
    EXPECT_EQ(reflect_conj(reflect_conj(r)), r);
}

TEST(Signal, ConvolutionUnitAndOrder) {
    Rng rng{5};
    const auto g = FiniteAbelianGroup::parse("2x3");
    const QSignal f = random_signal(g, rng);
    EXPECT_LE(rel_distance(convolve(f, point_mass(g, 0, 0, kOne)), f), 1e-15);

    // (delta_a p) * (delta_b q) = delta_{a+b} (p q), with p first.
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const QSignal c = convolve(point_mass(g, 1, 4, p), point_mass(g, 5, 3, q));
    const QSignal want = point_mass(g, g.add_index(1, 5), g.add_index(4, 3), p * q);
    EXPECT_LE(l2_distance(c, want), 1e-15);
    EXPECT_GT(l2_distance(c, point_mass(g, g.add_index(1, 5), g.add_index(4, 3), q * p)), 1e-3);
}

TEST(Signal, ConvolutionReflectionIdentityAndLinearity) {
    Rng rng{6};
    const auto g = FiniteAbelianGroup::cyclic(4);
    const QSignal f = random_signal(g, rng);
    const QSignal h = random_signal(g, rng);
    const QSignal auto_corr = convolve(reflect_conj(f), f);
    for (std::size_t x1 = 0; x1 < 4; ++x1) {
        for (std::size_t x2 = 0; x2 < 4; ++x2) {
            Quaternion want;
            for (std::size_t y1 = 0; y1 < 4; ++y1) {
                for (std::size_t y2 = 0; y2 < 4; ++y2) {
                    want += conj(f(y1, y2)) * f(g.add_index(y1, x1), g.add_index(y2, x2));
                }
            }
            EXPECT_QUAT_NEAR(auto_corr(x1, x2), want, 1e-12);
        }
    }
    const Quaternion q = random_quaternion(rng);
    EXPECT_LE(rel_distance(convolve(left_multiply(q, f), h), left_multiply(q, convolve(f, h))), 1e-14);
}

TEST(Signal, TransformWExamples) {
    EXPECT_EQ(transform_W(point_mass(kZ4, 1, 0, kK)), point_mass(kZ4, 3, 0, kK));
    EXPECT_EQ(transform_W(point_mass(kZ4, 1, 2, kI)), point_mass(kZ4, 1, 2, kI));
    Rng rng{7};
    QSignal real{kZ4};
    for (auto& v : real.values()) v = Quaternion{rng.uniform(-1, 1)};
    EXPECT_EQ(transform_W(real), real);
}

TEST(Signal, TransformWProperties) {
    Rng rng{8};
    const auto g = FiniteAbelianGroup::cyclic(5);
    for (int t = 0; t < 6; ++t) {
        const AxisPair axes = t % 2 ? random_axes(rng) : AxisPair::standard();
        const QSignal f = random_signal(g, rng);
        const QSignal h = random_signal(g, rng);
        const QSignal wf = transform_W(f, axes);
        const QSignal wh = transform_W(h, axes);
        EXPECT_LE(rel_distance(transform_W(wf, axes), f), 1e-14);
        EXPECT_NEAR(inner_real(wf, wh), inner_real(f, h), 1e-12);
        EXPECT_NEAR(lp_norm(wf, LpNorm::L2), lp_norm(f, LpNorm::L2), 1e-12);
        EXPECT_NEAR(scalar_part(axes.mu1() * inner_q(f, h)), scalar_part(axes.mu1() * inner_q(wf, wh)), 1e-12);
        const Quaternion z = axes.embed({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        EXPECT_LE(rel_distance(transform_W(left_multiply(z, f), axes), left_multiply(z, wf)), 1e-14);
    }
}

TEST(Signal, TransformWIsFrameGeneric) {
    // In the tilted frame W reflects exactly the mu2 and mu3 coefficients.
    const AxisPair axes = testing_support::tilt_axes();
    const Quaternion q = axes.from_frame({1, 2, 3, 4});
    QSignal f{kZ4};
    f(1, 2) = q;
    const QSignal w = transform_W(f, axes);
    EXPECT_QUAT_NEAR(w(1, 2), axes.from_frame({1, 2, 0, 0}), 1e-14);
    EXPECT_QUAT_NEAR(w(3, 2), axes.from_frame({0, 0, 3, 4}), 1e-14);
}

TEST(Signal, TransformBeta) {
    QSpectrum g{kZ4};
    g(1, 1) = kI;
    QSpectrum want{kZ4};
    want(1, 3) = kI;
    EXPECT_EQ(transform_beta(g), want);

    // Each frame component moves to its own reflection of (1, 1).
    QSpectrum mixed{kZ4};
    mixed(1, 1) = Quaternion{1, 2, 3, 4};
    const QSpectrum b = transform_beta(mixed);
    EXPECT_EQ(b(1, 1), (Quaternion{1, 0, 0, 0}));
    EXPECT_EQ(b(1, 3), (Quaternion{0, 2, 0, 0}));
    EXPECT_EQ(b(3, 1), (Quaternion{0, 0, 3, 0}));
    EXPECT_EQ(b(3, 3), (Quaternion{0, 0, 0, 4}));

    Rng rng{9};
    const QSpectrum r = random_spectrum(kZ4, rng);
    EXPECT_NEAR(lp_norm(transform_beta(r), LpNorm::L2), lp_norm(r, LpNorm::L2), 1e-12);
}
