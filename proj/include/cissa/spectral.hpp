#ifndef CISSA_SPECTRAL_HPP
#define CISSA_SPECTRAL_HPP

#include <Eigen/Core>

namespace cissa {

/// Lag-domain second moments of a series: gamma[m] for m = 0..L-1.
/// No demeaning is applied; the zero-frequency component absorbs the mean.
struct AutocovarianceVector {
    Eigen::VectorXd gamma;
    Eigen::Index source_length = 0; // length of the series the lags came from

    Eigen::Index window() const { return gamma.size(); }
};

/// First row of the circulant second-moment matrix. Symmetric by
/// construction: c[m] == c[L-m] for m = 1..L-1.
struct CirculantRow {
    Eigen::VectorXd c;

    Eigen::Index window() const { return c.size(); }
};

/// Eigenvalues of the circulant matrix, i.e. the power spectral density
/// estimate at the normalized frequencies w_k = (k-1)/L, k = 1..L.
/// Values may be slightly negative (the lag-window estimate is not
/// guaranteed nonnegative); they are reported as-is, never clipped.
struct PsdVector {
    Eigen::VectorXd lambda;

    Eigen::Index window() const { return lambda.size(); }
    double value(int k) const { return lambda[k - 1]; }
    double frequency(int k) const {
        return static_cast<double>(k - 1) / static_cast<double>(window());
    }
};

/// Real and imaginary parts of the unit-norm circulant eigenvector at
/// frequency index k (1-based), pre-scaled by L^{-1/2}. The imaginary part
/// is identically zero for k = 1 and, when L is even, for k = L/2 + 1.
struct FrequencyEigenpair {
    int k = 1;
    Eigen::VectorXd re;
    Eigen::VectorXd im;

    Eigen::Index window() const { return re.size(); }
};

/// Number of nonredundant frequency groups for window length L:
/// k = 1 (zero frequency), the conjugate pairs, and the Nyquist index
/// when L is even.
inline Eigen::Index frequency_group_count(Eigen::Index L) { return L / 2 + 1; }

/// Normalized frequency of the 1-based index k on the grid of window L.
inline double grid_frequency(int k, Eigen::Index L) {
    return static_cast<double>(k - 1) / static_cast<double>(L);
}

/// True when index k (1-based) maps to a one-dimensional eigenspace,
/// i.e. k = 1 or the Nyquist index of an even window.
inline bool is_unpaired_index(int k, Eigen::Index L) {
    return k == 1 || (L % 2 == 0 && k == L / 2 + 1);
}

/// The conjugate index L+2-k sharing frequency w_k, or 0 when k stands
/// alone (k = 1, and the Nyquist index of an even window).
inline int conjugate_partner(int k, Eigen::Index L) {
    return is_unpaired_index(k, L) ? 0 : static_cast<int>(L) + 2 - k;
}

/// gamma[m] = (1/(T-m)) * sum_{t=1..T-m} x_t * x_{t+m}, m = 0..L-1.
/// Requires 1 < L < T/2 and finite input.
AutocovarianceVector autocovariances(const Eigen::VectorXd& x, Eigen::Index L);

/// c[0] = gamma[0]; c[m] = ((L-m)/L)*gamma[m] + (m/L)*gamma[L-m].
CirculantRow circulant_row(const AutocovarianceVector& acov);

/// Eigenvalues of the circulant matrix with first row c, evaluated with a
/// discrete Fourier kernel. The imaginary residue must stay below
/// 1e-8 * max|lambda|; anything larger signals broken symmetry upstream.
PsdVector psd(const CirculantRow& row);

/// Closed-form eigenvector parts at index k, 1 <= k <= floor(L/2)+1:
/// re[j] = L^{-1/2} cos(2*pi*(j-1)*(k-1)/L),
/// im[j] = -L^{-1/2} sin(2*pi*(j-1)*(k-1)/L).
FrequencyEigenpair eigenpair(int k, Eigen::Index L);

} // namespace cissa

#endif
