#include <doctest.h>

#include <cmath>

#include "cissa/grouping.hpp"
#include "cissa/spectral.hpp"
#include "support.hpp"

using namespace cissa;

// Seeded sweeps over the spectral identities that every valid input must
// satisfy, regardless of window length parity or data scale.
TEST_SUITE("properties") {

TEST_CASE("spectral invariants over 100 seeded inputs") {
    for (unsigned seed = 0; seed < 100; ++seed) {
        const Eigen::Index T = 60 + (seed * 13) % 200;
        const Eigen::Index L = 6 + seed % 20;
        const double scale = std::pow(10.0, static_cast<int>(seed % 5) - 2);
        const Eigen::VectorXd x = testsup::gaussian_series(seed, T, 0.0, scale);

        const auto acov = autocovariances(x, L);
        const auto row = circulant_row(acov);
        CAPTURE(seed);

        // lag zero is an average of squares
        CHECK(acov.gamma[0] >= 0.0);

        // row symmetry, exact as computed
        for (Eigen::Index m = 1; m < L; ++m) {
            CHECK(row.c[m] == row.c[L - m]);
        }

        const auto lambda = psd(row);
        const double max_abs = lambda.lambda.cwiseAbs().maxCoeff();

        // pairing symmetry
        for (Eigen::Index k = 2; k <= (L + 1) / 2; ++k) {
            CHECK(std::abs(lambda.lambda[k - 1] - lambda.lambda[L + 2 - k - 1]) <=
                  1e-10 * max_abs);
        }

        // trace identity: sum of eigenvalues equals L * c0
        CHECK(std::abs(lambda.lambda.sum() - static_cast<double>(L) * row.c[0]) <=
              1e-9 * static_cast<double>(L) * std::abs(row.c[0]));

        // share normalization
        const auto sv = shares(lambda);
        CHECK(std::abs(sv.s.sum() - 1.0) < 1e-12);
    }
}

TEST_CASE("unit eigenvector norms across the grid") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        const Eigen::Index L = 5 + (seed * 7) % 60;
        for (int k = 1; k <= frequency_group_count(L); ++k) {
            const auto pair = eigenpair(k, L);
            CHECK(std::abs(pair.re.squaredNorm() + pair.im.squaredNorm() - 1.0) <
                  1e-12);
        }
    }
}

} // TEST_SUITE
