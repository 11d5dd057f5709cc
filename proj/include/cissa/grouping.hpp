#ifndef CISSA_GROUPING_HPP
#define CISSA_GROUPING_HPP

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "cissa/decompose.hpp"
#include "cissa/spectral.hpp"

namespace cissa {

/// Share of total eigenvalue mass per frequency group (length F, sums
/// to 1): s[0] = lambda_1/sum, interior entries get both halves of the
/// conjugate pair, the Nyquist entry (even L) is unpaired.
struct ShareVector {
    Eigen::VectorXd s;

    Eigen::Index size() const { return s.size(); }
};

/// Trend / business-cycle / seasonal index sets for a series with
/// `per_year` observations per year. All indexes are 1-based.
struct EconomicBands {
    std::vector<int> trend;
    std::vector<int> cycle;
    std::vector<int> seasonal;
};

struct GroupingSpec {
    struct Economic {
        int per_year = 0;
    };
    struct Manual {
        std::vector<std::vector<int>> groups; // disjoint 1-based index sets
    };
    struct CumulativeShare {
        double x = 0.0; // target cumulative share, in (0,1)
    };
    struct PsdPercentile {
        double q = 0.0; // percentile, in (0,1)
    };

    std::variant<Economic, Manual, CumulativeShare, PsdPercentile> variant;

    static GroupingSpec economic(int per_year) { return {Economic{per_year}}; }
    static GroupingSpec manual(std::vector<std::vector<int>> groups) {
        return {Manual{std::move(groups)}};
    }
    static GroupingSpec cumulative_share(double x) { return {CumulativeShare{x}}; }
    static GroupingSpec psd_percentile(double q) { return {PsdPercentile{q}}; }
};

/// Reconstructed group series, their psd shares, and the index sets that
/// produced them. Column g of rc is the sum of the Z columns in kg[g],
/// in kg order; sh[g] is the matching sum of frequency shares.
struct GroupingResult {
    Eigen::MatrixXd rc;                // T x G
    Eigen::VectorXd sh;                // G, fractions
    std::vector<std::vector<int>> kg;  // 1-based indexes per group
    std::vector<std::string> names;    // group labels, used in file output
};

/// sh_1 = lambda_1/sum, sh_k = 2*lambda_k/sum for interior k, and the raw
/// Nyquist eigenvalue over the sum when L is even. The sum runs over all
/// L eigenvalues. Fails with a numeric error when the total is <= 0.
ShareVector shares(const PsdVector& psd);

/// trend  = { k : w_k < 1/(8s) },
/// cycle  = { k : 1/(8s) <= w_k <= 1/(1.5s) }, endpoints included,
/// seasonal = { j*L/s + 1 : j = 1..floor(s/2) }.
/// Requires L divisible by s and L >= 2s. Band tests use exact integer
/// arithmetic.
EconomicBands economic_bands(Eigen::Index L, int per_year);

/// Clusters the decomposition's components per `spec`. Economic yields
/// three groups (trend, cycle, seasonal); Manual echoes the given sets;
/// CumulativeShare and PsdPercentile yield a single group.
GroupingResult group(const Decomposition& dec, const GroupingSpec& spec);

/// group() with a Manual spec.
GroupingResult reconstruct_manual(const Decomposition& dec,
                                  const std::vector<std::vector<int>>& sets);

/// Smallest prefix of groups, sorted by share descending (ties broken by
/// ascending k), whose cumulative share reaches x. Returned in sort order.
std::vector<int> select_by_cumulative_share(const ShareVector& sv, double x);

/// Indexes whose group-level eigenvalue is strictly greater than the
/// ceil(q*F)-th smallest of the F group-level values. Returned ascending.
std::vector<int> select_by_psd_percentile(const PsdVector& psd, double q);

} // namespace cissa

#endif
