#ifndef CISSA_DECOMPOSE_HPP
#define CISSA_DECOMPOSE_HPP

#include <Eigen/Core>

#include "cissa/extension.hpp"
#include "cissa/spectral.hpp"

namespace cissa {

/// How per-frequency components are projected out of the series.
/// Fft runs in O(T log T) per component, Direct in O(L*N); both produce
/// the same values and the direct route doubles as a secondary oracle.
enum class ProjectionPath {
    Auto,
    Fft,
    Direct,
};

/// Full frequency decomposition of a series: column k-1 of Z is the
/// elementary reconstructed component at w_k = (k-1)/L. The columns sum
/// to the original series exactly (up to floating-point roundoff).
struct Decomposition {
    Eigen::MatrixXd Z;  // T x F
    PsdVector psd;      // length L
    Eigen::Index L = 0;
    ExtensionMode mode;

    Eigen::Index T() const { return Z.rows(); }
    Eigen::Index F() const { return Z.cols(); }
};

/// Decomposes x into F = floor(L/2)+1 components by frequency.
/// The psd is estimated from the observed samples; each component is
/// reconstructed on the series extended per `mode` and trimmed back to
/// the original sample range, which stabilizes the endpoints.
Decomposition cissa(const Eigen::VectorXd& x, Eigen::Index L,
                    const ExtensionMode& mode = ExtensionMode{},
                    ProjectionPath path = ProjectionPath::Auto);

/// Component series at one frequency over the full extended range:
/// the diagonal averaging of P_k X, where X is the L x N trajectory matrix
/// of the extended series and P_k the projector onto the eigenvector pair
/// (doubled for interior k). Computed without materializing X.
Eigen::VectorXd component_series(const ExtendedSeries& xe, const FrequencyEigenpair& pair,
                                 ProjectionPath path = ProjectionPath::Auto);

/// Diagonal averaging of an L x N matrix (L <= N) into a series of length
/// L+N-1: antidiagonal means with 1/t, 1/L, 1/(T-t+1) weighting over the
/// prefix, middle, and suffix bands.
Eigen::VectorXd hankelize(const Eigen::MatrixXd& A);

} // namespace cissa

#endif
