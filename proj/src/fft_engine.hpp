#ifndef CISSA_SRC_FFT_ENGINE_HPP
#define CISSA_SRC_FFT_ENGINE_HPP

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

namespace cissa::detail {

inline Eigen::Index next_pow2(Eigen::Index n) {
    Eigen::Index p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

/// One transform engine per thread; plans are cached inside per size.
inline Eigen::FFT<double>& fft_engine() {
    thread_local Eigen::FFT<double> engine;
    return engine;
}

inline Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    fft_engine().fwd(out, v);
    return out;
}

inline Eigen::VectorXcd fft_inverse(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    fft_engine().inv(out, v);
    return out;
}

} // namespace cissa::detail

#endif
