#include "cissa/extension.hpp"

#include <cmath>
#include <string>

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

ArModel fit_ar(const Eigen::VectorXd& d, int p) {
    const Eigen::Index n = d.size();
    if (p < 1) {
        throw ParameterError("AR order must be positive");
    }
    if (n <= p + 1) {
        throw ParameterError("series of length " + std::to_string(n) +
                             " is too short for AR order " + std::to_string(p) +
                             "; use ar_order_override to lower it");
    }

    const double mean = d.mean();
    const Eigen::VectorXd y = d.array() - mean;

    // Burg lattice recursion: at stage m the forward error f[t] pairs with
    // the backward error b[t-1], t = m..n-1. Reflection coefficients stay
    // in [-1, 1], so the resulting model is stable.
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd f = y;
    Eigen::VectorXd b = y;
    Eigen::VectorXd prev(p);

    const double energy_floor = 1e-28 * 2.0 * y.squaredNorm();

    for (int m = 1; m <= p; ++m) {
        double num = 0.0;
        double den = 0.0;
        for (Eigen::Index t = m; t < n; ++t) {
            num += f[t] * b[t - 1];
            den += f[t] * f[t] + b[t - 1] * b[t - 1];
        }
        if (!(den > energy_floor)) {
            break; // residuals at noise level (or zero-variance input)
        }
        const double k = 2.0 * num / den;

        prev.head(m - 1) = coeffs.head(m - 1);
        for (int j = 0; j < m - 1; ++j) {
            coeffs[j] = prev[j] - k * prev[m - 2 - j];
        }
        coeffs[m - 1] = k;

        if (m == p) {
            break;
        }
        // Descending so b[t-1] is still the stage-(m-1) value when read.
        for (Eigen::Index t = n - 1; t >= m; --t) {
            const double ft = f[t];
            const double bt = b[t - 1];
            f[t] = ft - k * bt;
            b[t] = bt - k * ft;
        }
    }
    return {std::move(coeffs), mean};
}

Eigen::VectorXd forecast_ar(const Eigen::VectorXd& d, const ArModel& model, Eigen::Index horizon) {
    const int p = model.order();
    if (horizon < 0) {
        throw ParameterError("forecast horizon must be nonnegative");
    }
    if (d.size() < p) {
        throw ParameterError("need at least p=" + std::to_string(p) +
                             " observations to seed the AR recursion");
    }

    Eigen::VectorXd out(horizon);
    if (p == 0) {
        out.setConstant(model.mean);
        return out;
    }

    // state[0] is the most recent demeaned value.
    Eigen::VectorXd state(p);
    for (int j = 0; j < p; ++j) {
        state[j] = d[d.size() - 1 - j] - model.mean;
    }
    for (Eigen::Index s = 0; s < horizon; ++s) {
        const double next = model.coeffs.dot(state);
        out[s] = next + model.mean;
        for (int j = p - 1; j > 0; --j) {
            state[j] = state[j - 1];
        }
        state[0] = next;
    }
    return out;
}

namespace {

Eigen::VectorXd ar_extension(const Eigen::VectorXd& x, Eigen::Index L,
                             const ExtensionMode& mode) {
    const Eigen::Index T = x.size();
    const Eigen::VectorXd d = x.tail(T - 1) - x.head(T - 1); // first differences
    const int p = mode.ar_order_override ? *mode.ar_order_override
                                         : static_cast<int>(T / 3);
    const ArModel model = fit_ar(d, p);

    Eigen::VectorXd xe(T + 2 * L);
    xe.segment(L, T) = x;

    const Eigen::VectorXd fwd = forecast_ar(d, model, L);
    if (!fwd.allFinite()) {
        throw NumericError("AR extension failed at the right boundary");
    }
    double level = x[T - 1];
    for (Eigen::Index i = 0; i < L; ++i) {
        level += fwd[i];
        xe[L + T + i] = level;
    }

    const Eigen::VectorXd back = forecast_ar(d.reverse(), model, L);
    if (!back.allFinite()) {
        throw NumericError("AR extension failed at the left boundary");
    }
    level = x[0];
    for (Eigen::Index i = 0; i < L; ++i) {
        level -= back[i];
        xe[L - 1 - i] = level;
    }
    return xe;
}

} // namespace

ExtendedSeries extend(const Eigen::VectorXd& x, Eigen::Index L, const ExtensionMode& mode) {
    const Eigen::Index T = x.size();
    check_window(L, T);
    if (!x.allFinite()) {
        throw InputError("series contains non-finite values");
    }

    switch (mode.kind) {
    case ExtensionKind::None:
        return {x, 0, T};
    case ExtensionKind::Mirror: {
        Eigen::VectorXd xe(T + 2 * L);
        xe.head(L) = x.head(L).reverse();
        xe.segment(L, T) = x;
        xe.tail(L) = x.tail(L).reverse();
        return {std::move(xe), L, T};
    }
    case ExtensionKind::Ar:
        return {ar_extension(x, L, mode), L, T};
    }
    throw ParameterError("unknown extension mode");
}

} // namespace cissa
