#pragma once

// Quaternion Fourier transforms on G x G.
//
// With chi_mu(u, x) = cos(2 pi <u,x>) + mu sin(2 pi <u,x>) and N = |G|:
//
//   right-sided   F(u,v) = sum_x f(x1,x2) conj(chi_mu1(u,x1)) conj(chi_mu2(v,x2))
//   left-sided    F(u,v) = sum_x conj(chi_mu1(u,x1)) conj(chi_mu2(v,x2)) f(x1,x2)
//   two-sided     F(u,v) = sum_x conj(chi_mu1(u,x1)) f(x1,x2) conj(chi_mu2(v,x2))
//
//   right inverse f(x)   = N^-2 sum_w F(u,v) chi_mu2(v,x2) chi_mu1(u,x1)
//   two-sided inv f(x)   = N^-2 sum_w chi_mu1(u,x1) F(u,v) chi_mu2(v,x2)
//
// The inverse of the right-sided transform applies the mu2 kernel before the
// mu1 kernel. That order is what makes the inversion exact; the other order
// does not invert for quaternion-valued spectra.
//
// Forward transforms are plain sums (counting measure); inverses carry 1/N^2,
// the normalized dual measure. With this pairing every forward transform is an
// isometry from L2(G x G) onto L2(Ghat x Ghat).
//
// *_direct functions evaluate the defining double sum, O(N^4), and serve as
// oracles. *_fast functions split f = z1 + z2 mu2 into two mu1-plane arrays
// and run complex FFTs along each axis, O(N^2 log N).

#include <utility>
#include <vector>

#include "qfourier/fft.hpp"
#include "qfourier/quaternion.hpp"
#include "qfourier/signal.hpp"

namespace qfourier {

enum class TransformSide { Right, Left, TwoSided };

struct TransformKind {
    TransformSide side = TransformSide::Right;
    AxisPair axes;
};

// Definitional evaluators.
QSpectrum rqft_direct(const QSignal& f, const AxisPair& axes = AxisPair::standard());
QSignal irqft_direct(const QSpectrum& F, const AxisPair& axes = AxisPair::standard());
QSpectrum sqft_direct(const QSignal& f, const AxisPair& axes = AxisPair::standard());
QSignal isqft_direct(const QSpectrum& F, const AxisPair& axes = AxisPair::standard());
QSpectrum lqft_direct(const QSignal& f, const AxisPair& axes = AxisPair::standard());

// FFT-factorized evaluators; agree with the direct ones to rounding.
QSpectrum rqft_fast(const QSignal& f, const AxisPair& axes = AxisPair::standard());
QSignal irqft_fast(const QSpectrum& F, const AxisPair& axes = AxisPair::standard());
/// rqft_fast(transform_W(f))
QSpectrum sqft_fast(const QSignal& f, const AxisPair& axes = AxisPair::standard());
/// transform_W(irqft_fast(F))
QSignal isqft_fast(const QSpectrum& F, const AxisPair& axes = AxisPair::standard());
QSpectrum lqft_fast(const QSignal& f, const AxisPair& axes = AxisPair::standard());

/// Dispatch on kind; fast selects the FFT path.
QSpectrum forward_transform(const QSignal& f, const TransformKind& kind, bool fast = true);
/// Right and two-sided kinds only; throws std::invalid_argument for Left.
QSignal inverse_transform(const QSpectrum& F, const TransformKind& kind, bool fast = true);

/// Order of the two kernel factors in the auxiliary function H_r of the
/// multiplication formula.
enum class KernelOrder {
    /// H_r(x) = sum_w h(w) conj(chi_mu1(u,x1)) conj(chi_mu2(v,x2)) / N^2
    Mu1ThenMu2,
    /// H_r(x) = irqft(h)(-x) = sum_w h(w) conj(chi_mu2(v,x2)) conj(chi_mu1(u,x1)) / N^2
    Mu2ThenMu1,
};

struct PairingSides {
    Quaternion lhs;
    Quaternion rhs;
};

/// Both sides of the modified multiplication formula with h = transform_beta(g):
///   lhs = sum_w rqft(f)(w) g(w) / N^2
///   rhs = sum_x f(x) H_r(x)
/// Mu1ThenMu2 makes the two sides agree for every quaternion-valued f, g.
PairingSides multiplication_pairing(const QSignal& f, const QSpectrum& g,
                                    const AxisPair& axes = AxisPair::standard(),
                                    KernelOrder order = KernelOrder::Mu1ThenMu2);

/// Classical DFT of a mu1-plane-valued signal on G, obtained by lifting it to
/// f_H(x, y) = f(x), taking the right-sided transform, slicing at the zero
/// second frequency and dividing by |G|. Throws std::domain_error if some
/// value leaves the plane.
std::vector<Quaternion> classical_dft_via_rqft(const FiniteAbelianGroup& group,
                                               const std::vector<Quaternion>& f,
                                               const AxisPair& axes = AxisPair::standard());

}  // namespace qfourier
