// fft_internal.hpp - private FFT plumbing for correlation sums.
//
// One thread_local Eigen::FFT instance per thread so kissfft plans are
// reused across the many small transforms issued by the descent loop.

#pragma once

#include <unsupported/Eigen/FFT>

#include "beamrange/types.hpp"

namespace beamrange::detail {

inline Eigen::FFT<double>& fft_engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

/// Smallest power of two >= 2n-1; linear correlation needs >= 2n-1 samples.
inline int correlation_fft_size(int n) {
    int target = 2 * n - 1;
    int m = 1;
    while (m < target) m <<= 1;
    return m;
}

/// Forward transform of x zero-padded to fft_len.
inline CVector fft_padded(const CVector& x, int fft_len) {
    CVector padded = CVector::Zero(fft_len);
    padded.head(x.size()) = x;
    CVector out(fft_len);
    fft_engine().fwd(out, padded);
    return out;
}

inline CVector ifft(const CVector& x) {
    CVector out(x.size());
    fft_engine().inv(out, x);
    return out;
}

/// Maps the circular correlation buffer c (ifft of X .* conj(Y)) onto linear
/// lags: lag k >= 1 lives at c[M-k], lag k <= 0 at c[-k].
inline CVector circular_to_lags(const CVector& c, int n) {
    CVector lags(2 * n - 1);
    const int m = static_cast<int>(c.size());
    for (int k = -(n - 1); k <= n - 1; ++k) {
        lags(k + n - 1) = k > 0 ? c(m - k) : c(-k);
    }
    return lags;
}

}  // namespace beamrange::detail
