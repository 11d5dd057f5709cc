#include "cissa/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cissa/errors.hpp"

namespace cissa {

ShareVector shares(const PsdVector& psd) {
    const Eigen::Index L = psd.window();
    if (L <= 1) {
        throw ParameterError("psd vector needs at least two entries");
    }
    const double total = psd.lambda.sum();
    if (!(total > 0.0)) {
        throw NumericError("degenerate spectrum: total eigenvalue mass is " +
                           std::to_string(total));
    }

    const Eigen::Index F = frequency_group_count(L);
    Eigen::VectorXd s(F);
    for (Eigen::Index idx = 0; idx < F; ++idx) {
        const int k = static_cast<int>(idx + 1);
        const double weight = is_unpaired_index(k, L) ? 1.0 : 2.0;
        s[idx] = weight * psd.lambda[idx] / total;
    }
    return {std::move(s)};
}

EconomicBands economic_bands(Eigen::Index L, int per_year) {
    if (per_year < 1) {
        throw ParameterError("observations per year must be a positive integer");
    }
    const Eigen::Index s = per_year;
    if (L % s != 0) {
        throw ParameterError("window length L=" + std::to_string(L) +
                             " must be a multiple of the observations per year (" +
                             std::to_string(per_year) + ")");
    }
    if (L < 2 * s) {
        throw ParameterError("window length L=" + std::to_string(L) +
                             " must be at least twice the observations per year");
    }

    // All band tests in exact integer arithmetic: w_k = (k-1)/L against
    // 1/(8s) and 1/(1.5s) = 2/(3s).
    EconomicBands bands;
    const Eigen::Index F = frequency_group_count(L);
    for (Eigen::Index idx = 0; idx < F; ++idx) {
        const Eigen::Index km1 = idx; // k - 1
        if (8 * s * km1 < L) {
            bands.trend.push_back(static_cast<int>(idx + 1));
        } else if (3 * s * km1 <= 2 * L) {
            bands.cycle.push_back(static_cast<int>(idx + 1));
        }
    }
    for (Eigen::Index j = 1; j <= s / 2; ++j) {
        bands.seasonal.push_back(static_cast<int>(j * (L / s) + 1));
    }
    return bands;
}

std::vector<int> select_by_cumulative_share(const ShareVector& sv, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw ParameterError("cumulative share target must lie in (0,1)");
    }
    const Eigen::Index F = sv.size();
    std::vector<int> order(F);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sv.s[a - 1] > sv.s[b - 1]; // ties keep ascending k
    });

    std::vector<int> selected;
    double cum = 0.0;
    for (int k : order) {
        selected.push_back(k);
        cum += sv.s[k - 1];
        if (cum >= x) {
            return selected;
        }
    }
    // The positive shares alone sum to at least 1, so we only get here
    // through pathological rounding; everything selected is still valid.
    return selected;
}

std::vector<int> select_by_psd_percentile(const PsdVector& psd, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw ParameterError("psd percentile must lie in (0,1)");
    }
    const Eigen::Index F = frequency_group_count(psd.window());
    std::vector<double> values(F);
    for (Eigen::Index idx = 0; idx < F; ++idx) {
        values[idx] = psd.lambda[idx];
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());

    // Nearest-rank threshold. The epsilon keeps ceil() honest when q*F is
    // an exact integer that floating point nudges upward.
    auto rank = static_cast<Eigen::Index>(
        std::ceil(q * static_cast<double>(F) - 1e-9));
    rank = std::clamp<Eigen::Index>(rank, 1, F);
    const double threshold = sorted[rank - 1];

    std::vector<int> selected;
    for (Eigen::Index idx = 0; idx < F; ++idx) {
        if (values[idx] > threshold) {
            selected.push_back(static_cast<int>(idx + 1));
        }
    }
    if (selected.empty()) {
        throw ParameterError("percentile threshold is at or above the largest "
                             "psd value; no components selected");
    }
    return selected;
}

namespace {

void validate_manual_groups(const std::vector<std::vector<int>>& groups, Eigen::Index F) {
    if (groups.empty()) {
        throw ParameterError("manual grouping needs at least one index set");
    }
    std::vector<bool> seen(F, false);
    for (const auto& g : groups) {
        if (g.empty()) {
            throw ParameterError("manual grouping contains an empty index set");
        }
        for (int k : g) {
            if (k < 1 || k > F) {
                throw ParameterError("component index " + std::to_string(k) +
                                     " out of range 1.." + std::to_string(F));
            }
            if (seen[k - 1]) {
                throw ParameterError("component index " + std::to_string(k) +
                                     " appears in more than one group");
            }
            seen[k - 1] = true;
        }
    }
}

GroupingResult assemble(const Decomposition& dec, const ShareVector& sv,
                        std::vector<std::vector<int>> kg, std::vector<std::string> names) {
    const Eigen::Index G = static_cast<Eigen::Index>(kg.size());
    GroupingResult result;
    result.rc = Eigen::MatrixXd::Zero(dec.T(), G);
    result.sh = Eigen::VectorXd::Zero(G);
    for (Eigen::Index g = 0; g < G; ++g) {
        for (int k : kg[g]) {
            result.rc.col(g) += dec.Z.col(k - 1);
            result.sh[g] += sv.s[k - 1];
        }
    }
    result.kg = std::move(kg);
    result.names = std::move(names);
    return result;
}

} // namespace

GroupingResult group(const Decomposition& dec, const GroupingSpec& spec) {
    const Eigen::Index F = dec.F();
    if (dec.psd.window() != dec.L || F != frequency_group_count(dec.L)) {
        throw ParameterError("decomposition is inconsistent: Z has " +
                             std::to_string(F) + " columns, psd has " +
                             std::to_string(dec.psd.window()) + " entries, L=" +
                             std::to_string(dec.L));
    }
    const ShareVector sv = shares(dec.psd);

    if (const auto* economic = std::get_if<GroupingSpec::Economic>(&spec.variant)) {
        EconomicBands bands = economic_bands(dec.L, economic->per_year);
        return assemble(dec, sv,
                        {std::move(bands.trend), std::move(bands.cycle),
                         std::move(bands.seasonal)},
                        {"trend", "cycle", "seasonal"});
    }
    if (const auto* manual = std::get_if<GroupingSpec::Manual>(&spec.variant)) {
        validate_manual_groups(manual->groups, F);
        std::vector<std::string> names;
        for (std::size_t g = 0; g < manual->groups.size(); ++g) {
            names.push_back("g" + std::to_string(g + 1));
        }
        return assemble(dec, sv, manual->groups, std::move(names));
    }
    if (const auto* share = std::get_if<GroupingSpec::CumulativeShare>(&spec.variant)) {
        std::vector<int> selected = select_by_cumulative_share(sv, share->x);
        return assemble(dec, sv, {std::move(selected)}, {"selected"});
    }
    const auto& percentile = std::get<GroupingSpec::PsdPercentile>(spec.variant);
    std::vector<int> selected = select_by_psd_percentile(dec.psd, percentile.q);
    return assemble(dec, sv, {std::move(selected)}, {"selected"});
}

GroupingResult reconstruct_manual(const Decomposition& dec,
                                  const std::vector<std::vector<int>>& sets) {
    return group(dec, GroupingSpec::manual(sets));
}

} // namespace cissa
