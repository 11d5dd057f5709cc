#include "cissa/spectral.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "cissa/errors.hpp"

namespace cissa {

namespace {

void check_window(Eigen::Index L, Eigen::Index T) {
    if (L <= 1 || 2 * L >= T) {
        throw ParameterError("window length must satisfy 1 < L < T/2 (got L=" +
                             std::to_string(L) + ", T=" + std::to_string(T) + ")");
    }
}

} // namespace

AutocovarianceVector autocovariances(const Eigen::VectorXd& x, Eigen::Index L) {
    const Eigen::Index T = x.size();
    check_window(L, T);
    if (!x.allFinite()) {
        throw InputError("series contains non-finite values");
    }

    Eigen::VectorXd gamma(L);
    for (Eigen::Index m = 0; m < L; ++m) {
        const Eigen::Index n = T - m;
        gamma[m] = x.head(n).dot(x.tail(n)) / static_cast<double>(n);
    }
    return {std::move(gamma), T};
}

CirculantRow circulant_row(const AutocovarianceVector& acov) {
    const Eigen::Index L = acov.window();
    if (L <= 1) {
        throw ParameterError("autocovariance vector needs at least two lags");
    }

    const auto& gamma = acov.gamma;
    Eigen::VectorXd c(L);
    c[0] = gamma[0];
    const double Ld = static_cast<double>(L);
    // Both ratios spelled out so c[m] and c[L-m] share the exact same
    // products and come out bit-identical.
    for (Eigen::Index m = 1; m < L; ++m) {
        c[m] = (static_cast<double>(L - m) / Ld) * gamma[m] +
               (static_cast<double>(m) / Ld) * gamma[L - m];
    }
    return {std::move(c)};
}

PsdVector psd(const CirculantRow& row) {
    const Eigen::Index L = row.window();
    if (L <= 1) {
        throw ParameterError("circulant row needs at least two entries");
    }

    // Complex transform of the (real, symmetric) row: the sine terms cancel
    // by symmetry, so the imaginary output measures how well they did.
    std::vector<std::complex<double>> in(L), out(L);
    for (Eigen::Index m = 0; m < L; ++m) {
        in[m] = {row.c[m], 0.0};
    }
    Eigen::FFT<double> fft;
    fft.fwd(out, in);

    Eigen::VectorXd lambda(L);
    double max_abs = 0.0;
    double max_imag = 0.0;
    for (Eigen::Index k = 0; k < L; ++k) {
        lambda[k] = out[k].real();
        max_abs = std::max(max_abs, std::abs(lambda[k]));
        max_imag = std::max(max_imag, std::abs(out[k].imag()));
    }
    if (max_imag > 1e-8 * max_abs) {
        throw NumericError("imaginary residue " + std::to_string(max_imag) +
                           " in the spectral transform exceeds tolerance; "
                           "circulant row symmetry is broken");
    }
    return {std::move(lambda)};
}

FrequencyEigenpair eigenpair(int k, Eigen::Index L) {
    if (L <= 1) {
        throw ParameterError("window length must exceed 1");
    }
    const Eigen::Index F = frequency_group_count(L);
    if (k < 1 || k > F) {
        throw ParameterError("frequency index k=" + std::to_string(k) +
                             " out of range 1.." + std::to_string(F));
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(L));
    Eigen::VectorXd re(L), im(L);

    if (k == 1) {
        re.setConstant(scale);
        im.setZero();
        return {k, std::move(re), std::move(im)};
    }
    if (L % 2 == 0 && k == L / 2 + 1) {
        for (Eigen::Index j = 0; j < L; ++j) {
            re[j] = (j % 2 == 0) ? scale : -scale;
        }
        im.setZero();
        return {k, std::move(re), std::move(im)};
    }

    // Reduce the phase index modulo L before touching floating point, so
    // large j*k products do not erode the trig arguments.
    const double step = 2.0 * M_PI / static_cast<double>(L);
    for (Eigen::Index j = 0; j < L; ++j) {
        const Eigen::Index phase = (j * static_cast<Eigen::Index>(k - 1)) % L;
        const double theta = step * static_cast<double>(phase);
        re[j] = scale * std::cos(theta);
        im[j] = -scale * std::sin(theta);
    }
    return {k, std::move(re), std::move(im)};
}

} // namespace cissa
