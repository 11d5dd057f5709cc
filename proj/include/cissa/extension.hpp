#ifndef CISSA_EXTENSION_HPP
#define CISSA_EXTENSION_HPP

#include <optional>

#include <Eigen/Core>

namespace cissa {

enum class ExtensionKind {
    Ar,     // autoregressive forecast/backcast on first differences (default)
    Mirror, // reflect the series around both extremes
    None,   // use the raw series
};

struct ExtensionMode {
    ExtensionKind kind = ExtensionKind::Ar;
    std::optional<int> ar_order_override; // default order is floor(T/3)

    static ExtensionMode ar(std::optional<int> order = std::nullopt) {
        return {ExtensionKind::Ar, order};
    }
    static ExtensionMode mirror() { return {ExtensionKind::Mirror, std::nullopt}; }
    static ExtensionMode none() { return {ExtensionKind::None, std::nullopt}; }
};

/// A series with Lext samples attached at each end. The original samples
/// are bit-identical inside `values`, starting at `offset`.
struct ExtendedSeries {
    Eigen::VectorXd values;
    Eigen::Index offset = 0;          // samples prepended
    Eigen::Index original_length = 0;

    Eigen::Index extended_length() const { return values.size(); }
};

/// AR(p) fitted to a demeaned series; the mean is re-added when forecasting.
struct ArModel {
    Eigen::VectorXd coeffs; // a_1..a_p, prediction form y_t = sum a_j y_{t-j}
    double mean = 0.0;

    int order() const { return static_cast<int>(coeffs.size()); }
};

/// Extends x by L samples per side (AR or Mirror) or not at all (None).
/// AR mode fits an AR(p) to the first differences, forecasts L steps past
/// each end, and integrates back to levels; Mirror reflects the first and
/// last L samples.
ExtendedSeries extend(const Eigen::VectorXd& x, Eigen::Index L, const ExtensionMode& mode);

/// Burg recursion on the demeaned series. Zero-variance input yields
/// all-zero coefficients (forecasts then equal the mean).
ArModel fit_ar(const Eigen::VectorXd& d, int p);

/// Standard AR recursion seeded with the last p observations of d,
/// mean re-added. Backcasting is this function applied to the reversed
/// series; autocovariance symmetry justifies reusing the coefficients.
Eigen::VectorXd forecast_ar(const Eigen::VectorXd& d, const ArModel& model, Eigen::Index horizon);

} // namespace cissa

#endif
