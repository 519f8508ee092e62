#include "qfourier/fft.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfourier {

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

}  // namespace

struct FftPlan::Bluestein {
    std::size_t m;
    FftPlan inner;
    std::vector<cplx> chirp;          // exp(-iota pi j^2 / n)
    std::vector<cplx> kernel_hat_neg;  // transformed b for sign -1
    std::vector<cplx> kernel_hat_pos;  // transformed b for sign +1

    Bluestein(std::size_t n, std::size_t m_) : m{m_}, inner{m_}, chirp(n) {
        for (std::size_t j = 0; j < n; ++j) {
            // j^2 mod 2n keeps the chirp angle small and exact.
            const std::size_t e = (j * j) % (2 * n);
            const double ang = std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
            chirp[j] = {std::cos(ang), -std::sin(ang)};
        }
        kernel_hat_neg = make_kernel(n, /*conjugate=*/true);
        kernel_hat_pos = make_kernel(n, /*conjugate=*/false);
    }

    std::vector<cplx> make_kernel(std::size_t n, bool conjugate) const {
        std::vector<cplx> b(m);
        for (std::size_t j = 0; j < n; ++j) {
            const cplx c = conjugate ? std::conj(chirp[j]) : chirp[j];
            b[j] = c;
            if (j) b[m - j] = c;
        }
        inner.execute(b, -1);
        return b;
    }
};

FftPlan::FftPlan(std::size_t n) : n_{n} {
    if (n == 0) throw std::invalid_argument("FFT length must be positive");
    factors_ = prime_factors(n);
    if (!factors_.empty() && factors_.back() > kBluesteinThreshold) {
        factors_.clear();
        bluestein_ = std::make_unique<Bluestein>(n, next_pow2(2 * n - 1));
        return;
    }
    roots_.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
        roots_[t] = {std::cos(ang), -std::sin(ang)};
    }
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

cplx FftPlan::twiddle(std::size_t exponent, std::size_t n, int sign) const {
    const cplx w = roots_[(exponent % n) * (n_ / n)];
    return sign < 0 ? w : std::conj(w);
}

void FftPlan::recurse(const cplx* in, std::size_t stride, cplx* out, std::size_t n,
                      std::size_t level, int sign) const {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const std::size_t p = factors_[level];
    const std::size_t m = n / p;
    for (std::size_t r = 0; r < p; ++r) {
        recurse(in + r * stride, stride * p, out + r * m, m, level + 1, sign);
    }
    // out[r*m + k] now holds the length-m transform of the r-th decimated
    // subsequence; butterflies combine them into out[k + q*m].
    if (p == 2) {
        for (std::size_t k = 0; k < m; ++k) {
            const cplx a = out[k];
            const cplx b = out[m + k] * twiddle(k, n, sign);
            out[k] = a + b;
            out[k + m] = a - b;
        }
        return;
    }
    std::array<cplx, kBluesteinThreshold> tmp{};
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t r = 0; r < p; ++r) tmp[r] = out[r * m + k] * twiddle(r * k, n, sign);
        for (std::size_t q = 0; q < p; ++q) {
            cplx acc = tmp[0];
            for (std::size_t r = 1; r < p; ++r) acc += tmp[r] * twiddle(r * q * m, n, sign);
            out[k + q * m] = acc;
        }
    }
}

void FftPlan::execute(std::span<cplx> data, int sign) const {
    if (data.size() != n_) throw std::invalid_argument("FFT input length does not match plan");
    if (sign != 1 && sign != -1) throw std::invalid_argument("FFT sign must be +1 or -1");
    if (n_ == 1) return;

    if (bluestein_) {
        const auto& bs = *bluestein_;
        // sign -1: c_j = chirp_j, b_j = conj(chirp_j); sign +1: conjugated.
        std::vector<cplx> a(bs.m);
        for (std::size_t j = 0; j < n_; ++j) {
            a[j] = data[j] * (sign < 0 ? bs.chirp[j] : std::conj(bs.chirp[j]));
        }
        bs.inner.execute(a, -1);
        const auto& kernel = sign < 0 ? bs.kernel_hat_neg : bs.kernel_hat_pos;
        for (std::size_t t = 0; t < bs.m; ++t) a[t] *= kernel[t];
        bs.inner.execute(a, +1);
        const double scale = 1.0 / static_cast<double>(bs.m);
        for (std::size_t k = 0; k < n_; ++k) {
            data[k] = a[k] * scale * (sign < 0 ? bs.chirp[k] : std::conj(bs.chirp[k]));
        }
        return;
    }

    const std::vector<cplx> in(data.begin(), data.end());
    recurse(in.data(), 1, data.data(), n_, 0, sign);
}

std::vector<cplx> dft_1d_complex(std::span<const cplx> values, int sign) {
    std::vector<cplx> out(values.begin(), values.end());
    FftPlan{values.size()}.execute(out, sign);
    return out;
}

GroupFft::GroupFft(const FiniteAbelianGroup& group) : moduli_{group.moduli()}, order_{group.order()} {
    strides_.assign(moduli_.size(), 1);
    std::size_t s = 1;
    for (std::size_t t = moduli_.size(); t-- > 0;) {
        strides_[t] = s;
        s *= moduli_[t];
    }
    plans_.reserve(moduli_.size());
    for (std::size_t n : moduli_) plans_.emplace_back(n);
}

void GroupFft::execute(std::span<cplx> line, int sign) const {
    if (line.size() != order_) throw std::invalid_argument("group FFT input length does not match |G|");
    std::vector<cplx> buf;
    for (std::size_t t = 0; t < moduli_.size(); ++t) {
        const std::size_t n = moduli_[t];
        if (n == 1) continue;
        const std::size_t stride = strides_[t];
        const std::size_t block = stride * n;
        buf.resize(n);
        for (std::size_t outer = 0; outer < order_; outer += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t base = outer + inner;
                for (std::size_t j = 0; j < n; ++j) buf[j] = line[base + j * stride];
                plans_[t].execute(buf, sign);
                for (std::size_t j = 0; j < n; ++j) line[base + j * stride] = buf[j];
            }
        }
    }
}

}  // namespace qfourier
