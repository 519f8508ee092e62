#pragma once

// Complex DFTs inside one commutative quaternion plane {1, mu}.
//
//   X[k] = sum_j x[j] * exp(sign * iota * 2*pi * j*k / n),   sign = -1 or +1
//
// iota stands for the plane's axis; std::complex<double> carries the
// coefficients. Transforms are unnormalized in both directions.
//
// Composite sizes use a recursive mixed-radix Cooley-Tukey factorization.
// Sizes with a prime factor above kBluesteinThreshold go through Bluestein's
// chirp-z reformulation on a power-of-two grid, so every length is O(n log n).

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "qfourier/group.hpp"

namespace qfourier {

using cplx = std::complex<double>;

class FftPlan {
public:
    static constexpr std::size_t kBluesteinThreshold = 64;

    /// Throws std::invalid_argument for n == 0.
    explicit FftPlan(std::size_t n);
    ~FftPlan();
    FftPlan(FftPlan&&) noexcept;
    FftPlan& operator=(FftPlan&&) noexcept;

    std::size_t size() const { return n_; }
    bool uses_bluestein() const { return bluestein_ != nullptr; }

    /// In-place transform of data.size() == size() points. sign must be +1 or -1.
    void execute(std::span<cplx> data, int sign) const;

private:
    struct Bluestein;

    void recurse(const cplx* in, std::size_t stride, cplx* out, std::size_t n, std::size_t level,
                 int sign) const;
    cplx twiddle(std::size_t exponent, std::size_t n, int sign) const;

    std::size_t n_ = 0;
    std::vector<std::size_t> factors_;
    std::vector<cplx> roots_;  // exp(-iota 2 pi t / n_)
    std::unique_ptr<Bluestein> bluestein_;
};

/// One-shot transform; builds a plan per call.
std::vector<cplx> dft_1d_complex(std::span<const cplx> values, int sign);

/// Separable DFT over a finite abelian group: one FftPlan per cyclic factor,
/// applied along each coordinate of the mixed-radix layout.
///
///   X[u] = sum_x data[x] * exp(sign * iota * 2*pi * <u, x>)
class GroupFft {
public:
    explicit GroupFft(const FiniteAbelianGroup& group);

    std::size_t size() const { return order_; }

    /// In-place over a contiguous line of |G| samples.
    void execute(std::span<cplx> line, int sign) const;

private:
    std::vector<std::size_t> moduli_;
    std::vector<std::size_t> strides_;
    std::vector<FftPlan> plans_;
    std::size_t order_ = 1;
};

}  // namespace qfourier
