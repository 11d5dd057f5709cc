#include "cissa/decompose.hpp"

#include <complex>
#include <string>

#include "cissa/errors.hpp"
#include "fft_engine.hpp"
#include "parallel.hpp"

namespace cissa {

namespace {

// Below this many extended samples the direct route tends to win.
constexpr Eigen::Index kFftCutover = 1024;

bool resolve_fft(ProjectionPath path, Eigen::Index extended_length) {
    switch (path) {
    case ProjectionPath::Fft:
        return true;
    case ProjectionPath::Direct:
        return false;
    case ProjectionPath::Auto:
        return extended_length >= kFftCutover;
    }
    return true;
}

double pair_weight(const FrequencyEigenpair& pair, Eigen::Index L) {
    return is_unpaired_index(pair.k, L) ? 1.0 : 2.0;
}

/// Antidiagonal sums of P_k X for the extended series, where X is the
/// L x N trajectory matrix. Both routes use the identity
///   antidiag(P_k X) = w * (conv(re, X're) + conv(im, X'im)),
/// which the FFT route evaluates as complex convolutions.
struct ProjectionContext {
    const Eigen::VectorXd& xe;
    Eigen::Index L;
    Eigen::Index N;
    bool use_fft;
    Eigen::Index padded = 0;
    Eigen::VectorXcd xe_spectrum;

    ProjectionContext(const Eigen::VectorXd& extended, Eigen::Index window, bool fft)
        : xe(extended), L(window), N(extended.size() - window + 1), use_fft(fft) {
        if (use_fft) {
            padded = detail::next_pow2(L + xe.size() - 1);
            Eigen::VectorXcd buf = Eigen::VectorXcd::Zero(padded);
            buf.head(xe.size()).real() = xe;
            xe_spectrum = detail::fft_forward(buf);
        }
    }

    Eigen::VectorXd diagonal_sums(const FrequencyEigenpair& pair) const {
        return use_fft ? sums_fft(pair) : sums_direct(pair);
    }

private:
    Eigen::VectorXd sums_direct(const FrequencyEigenpair& pair) const {
        const double w = pair_weight(pair, L);
        Eigen::VectorXd a(N), b(N);
        for (Eigen::Index j = 0; j < N; ++j) {
            a[j] = pair.re.dot(xe.segment(j, L));
            b[j] = pair.im.dot(xe.segment(j, L));
        }
        const Eigen::Index Te = L + N - 1;
        Eigen::VectorXd d(Te);
        for (Eigen::Index t = 0; t < Te; ++t) {
            const Eigen::Index i0 = std::max<Eigen::Index>(0, t - N + 1);
            const Eigen::Index i1 = std::min<Eigen::Index>(L - 1, t);
            const Eigen::Index len = i1 - i0 + 1;
            d[t] = w * (pair.re.segment(i0, len)
                            .dot(a.segment(t - i1, len).reverse()) +
                        pair.im.segment(i0, len)
                            .dot(b.segment(t - i1, len).reverse()));
        }
        return d;
    }

    Eigen::VectorXd sums_fft(const FrequencyEigenpair& pair) const {
        using Cplx = std::complex<double>;
        const double w = pair_weight(pair, L);
        const Eigen::Index Te = xe.size();

        // s = u^H-windowed sliding products: s_j = sum_i u_i xe_{i+j},
        // obtained as the middle of conv(reverse(u), xe).
        Eigen::VectorXcd kernel = Eigen::VectorXcd::Zero(padded);
        for (Eigen::Index i = 0; i < L; ++i) {
            kernel[i] = Cplx(pair.re[L - 1 - i], pair.im[L - 1 - i]);
        }
        Eigen::VectorXcd conv = detail::fft_inverse(
            (detail::fft_forward(kernel).array() * xe_spectrum.array()).matrix());

        Eigen::VectorXcd s = Eigen::VectorXcd::Zero(padded);
        s.head(N) = conv.segment(L - 1, N);

        // antidiag sums = w * Re[conv(conj(u), s)].
        Eigen::VectorXcd conj_kernel = Eigen::VectorXcd::Zero(padded);
        for (Eigen::Index i = 0; i < L; ++i) {
            conj_kernel[i] = Cplx(pair.re[i], -pair.im[i]);
        }
        Eigen::VectorXcd out = detail::fft_inverse(
            (detail::fft_forward(conj_kernel).array() *
             detail::fft_forward(s).array())
                .matrix());
        return w * out.head(Te).real();
    }
};

/// In-place antidiagonal averaging weights: 1/t over the prefix, 1/L over
/// the full-window band, 1/(Te-t+1) over the suffix (t is 1-based).
void divide_antidiagonal_sums(Eigen::VectorXd& d, Eigen::Index L, Eigen::Index N) {
    const Eigen::Index Te = L + N - 1;
    for (Eigen::Index t = 1; t <= Te; ++t) {
        double count;
        if (t < L) {
            count = static_cast<double>(t);
        } else if (t <= N) {
            count = static_cast<double>(L);
        } else {
            count = static_cast<double>(Te - t + 1);
        }
        d[t - 1] /= count;
    }
}

} // namespace

Eigen::VectorXd hankelize(const Eigen::MatrixXd& A) {
    const Eigen::Index L = A.rows();
    const Eigen::Index N = A.cols();
    if (L < 1 || N < 1 || L > N) {
        throw ParameterError("hankelize needs an L x N matrix with 1 <= L <= N");
    }
    const Eigen::Index Te = L + N - 1;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(Te);
    for (Eigen::Index j = 0; j < N; ++j) {
        for (Eigen::Index i = 0; i < L; ++i) {
            d[i + j] += A(i, j);
        }
    }
    divide_antidiagonal_sums(d, L, N);
    return d;
}

Eigen::VectorXd component_series(const ExtendedSeries& xe, const FrequencyEigenpair& pair,
                                 ProjectionPath path) {
    const Eigen::Index L = pair.window();
    const Eigen::Index Te = xe.extended_length();
    if (L < 2 || Te - L + 1 < L) {
        throw ParameterError("window length " + std::to_string(L) +
                             " inconsistent with extended series of length " +
                             std::to_string(Te));
    }
    ProjectionContext ctx(xe.values, L, resolve_fft(path, Te));
    Eigen::VectorXd d = ctx.diagonal_sums(pair);
    divide_antidiagonal_sums(d, L, Te - L + 1);
    return d;
}

Decomposition cissa(const Eigen::VectorXd& x, Eigen::Index L, const ExtensionMode& mode,
                    ProjectionPath path) {
    const Eigen::Index T = x.size();
    if (T < 12) {
        throw ParameterError("series too short: need at least 12 samples, got " +
                             std::to_string(T));
    }
    if (L <= 1 || 2 * L >= T) {
        throw ParameterError("window length must satisfy 1 < L < T/2 (got L=" +
                             std::to_string(L) + ", T=" + std::to_string(T) + ")");
    }

    const ExtendedSeries xe = extend(x, L, mode);
    const Eigen::Index Te = xe.extended_length();
    const Eigen::Index N = Te - L + 1;

    // Second moments and the psd come from the observed samples; the
    // extension only stabilizes the component reconstruction at the ends.
    PsdVector spectrum = psd(circulant_row(autocovariances(x, L)));

    const Eigen::Index F = frequency_group_count(L);
    ProjectionContext ctx(xe.values, L, resolve_fft(path, Te));

    Eigen::MatrixXd Z(T, F);
    detail::parallel_for(F, [&](Eigen::Index idx) {
        const FrequencyEigenpair pair = eigenpair(static_cast<int>(idx + 1), L);
        Eigen::VectorXd d = ctx.diagonal_sums(pair);
        divide_antidiagonal_sums(d, L, N);
        Z.col(idx) = d.segment(xe.offset, T);
    });

    return {std::move(Z), std::move(spectrum), L, mode};
}

} // namespace cissa
