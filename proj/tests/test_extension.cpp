#include <doctest.h>

#include <cmath>

#include "cissa/errors.hpp"
#include "cissa/extension.hpp"
#include "support.hpp"

using namespace cissa;

TEST_SUITE("extension") {

TEST_CASE("no extension is the identity") {
    const Eigen::VectorXd x = testsup::gaussian_series(3, 40);
    const auto ext = extend(x, 8, ExtensionMode::none());
    CHECK(ext.offset == 0);
    CHECK(ext.original_length == 40);
    CHECK(ext.values.size() == 40);
    CHECK((ext.values - x).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("mirroring reflects both ends") {
    Eigen::VectorXd x(11);
    x << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11;
    const Eigen::Index L = 3;
    const auto ext = extend(x, L, ExtensionMode::mirror());
    CHECK(ext.values.size() == 11 + 2 * L);
    CHECK(ext.offset == L);
    // left block is the reversed head, right block the reversed tail
    CHECK(ext.values[0] == 3.0);
    CHECK(ext.values[1] == 2.0);
    CHECK(ext.values[2] == 1.0);
    CHECK(ext.values[3] == 1.0); // endpoint duplicates
    CHECK(ext.values[ext.values.size() - 3] == 11.0);
    CHECK(ext.values[ext.values.size() - 2] == 10.0);
    CHECK(ext.values[ext.values.size() - 1] == 9.0);

    // mirror identities: values[offset-j] == values[offset+j-1], both edges
    for (Eigen::Index j = 1; j <= L; ++j) {
        CHECK(ext.values[L - j] == ext.values[L + j - 1]);
        const Eigen::Index right = L + 10; // index of the last original sample
        CHECK(ext.values[right + j] == ext.values[right - j + 1]);
    }
}

TEST_CASE("original samples are bit-identical inside the extension") {
    const Eigen::VectorXd x = testsup::gaussian_series(9, 64);
    for (auto mode : {ExtensionMode::ar(), ExtensionMode::mirror(), ExtensionMode::none()}) {
        const auto ext = extend(x, 12, mode);
        for (Eigen::Index t = 0; t < x.size(); ++t) {
            CHECK(ext.values[ext.offset + t] == x[t]);
        }
    }
}

TEST_CASE("AR extension continues a linear ramp") {
    Eigen::VectorXd x(30);
    for (Eigen::Index t = 0; t < 30; ++t) {
        x[t] = static_cast<double>(t + 1);
    }
    const auto ext = extend(x, 5, ExtensionMode::ar(3));
    CHECK(ext.values.size() == 40);
    for (Eigen::Index i = 0; i < 5; ++i) {
        CHECK(ext.values[35 + i] == doctest::Approx(31.0 + i).epsilon(1e-6));
        CHECK(ext.values[i] == doctest::Approx(-4.0 + i).epsilon(1e-6));
    }
}

TEST_CASE("AR order defaults to floor(T/3) and can be overridden") {
    const Eigen::VectorXd x = testsup::gaussian_series(17, 100);
    CHECK_NOTHROW((void)extend(x, 10, ExtensionMode::ar()));
    CHECK_NOTHROW((void)extend(x, 10, ExtensionMode::ar(2)));
    // order too large for the differenced length
    CHECK_THROWS_AS((void)extend(x, 10, ExtensionMode::ar(98)), ParameterError);
}

TEST_CASE("fit_ar zero-variance branch") {
    Eigen::VectorXd d = Eigen::VectorXd::Constant(50, 3.25);
    const auto model = fit_ar(d, 4);
    CHECK(model.mean == doctest::Approx(3.25).epsilon(1e-15));
    CHECK(model.coeffs.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fit_ar recovers an AR(1) coefficient") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> noise(0.0, 1.0);
    const Eigen::Index n = 5000;
    Eigen::VectorXd d(n);
    d[0] = noise(rng);
    for (Eigen::Index t = 1; t < n; ++t) {
        d[t] = 0.8 * d[t - 1] + noise(rng);
    }
    const auto model = fit_ar(d, 1);
    CHECK(model.coeffs[0] > 0.75);
    CHECK(model.coeffs[0] < 0.85);
}

TEST_CASE("fit_ar on white noise stays near zero") {
    const Eigen::VectorXd d = testsup::gaussian_series(404, 5000);
    const auto model = fit_ar(d, 4);
    CHECK(model.coeffs.cwiseAbs().maxCoeff() < 0.1);
}

TEST_CASE("fit_ar validates order against length") {
    const Eigen::VectorXd d = testsup::gaussian_series(1, 10);
    CHECK_THROWS_AS((void)fit_ar(d, 0), ParameterError);
    CHECK_THROWS_AS((void)fit_ar(d, 9), ParameterError);
    CHECK_NOTHROW((void)fit_ar(d, 8));
}

TEST_CASE("forecast_ar trivial recursions") {
    {
        ArModel flat{Eigen::VectorXd::Zero(2), 1.5};
        const Eigen::VectorXd d = testsup::gaussian_series(2, 20);
        const auto f = forecast_ar(d, flat, 3);
        CHECK(f.size() == 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(f[i] == 1.5);
        }
    }
    {
        ArModel half{(Eigen::VectorXd(1) << 0.5).finished(), 0.0};
        Eigen::VectorXd d(3);
        d << 0.2, -0.1, 1.0;
        const auto f = forecast_ar(d, half, 3);
        CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(f[1] == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(f[2] == doctest::Approx(0.125).epsilon(1e-15));
    }
}

TEST_CASE("backcast of a palindromic series equals its forecast") {
    // palindrome: reversing changes nothing, so the backcast recursion must
    // reproduce the forecast bit for bit
    Eigen::VectorXd d(9);
    d << 0.3, 1.2, -0.7, 2.0, 5.5, 2.0, -0.7, 1.2, 0.3;
    const auto model = fit_ar(d, 3);
    const Eigen::VectorXd fwd = forecast_ar(d, model, 6);
    const Eigen::VectorXd back = forecast_ar(d.reverse(), model, 6);
    for (Eigen::Index i = 0; i < 6; ++i) {
        CHECK(fwd[i] == back[i]);
    }
}

TEST_CASE("extension rejects invalid windows") {
    const Eigen::VectorXd x = testsup::gaussian_series(6, 30);
    CHECK_THROWS_AS((void)extend(x, 1, ExtensionMode::mirror()), ParameterError);
    CHECK_THROWS_AS((void)extend(x, 15, ExtensionMode::mirror()), ParameterError);
}

} // TEST_SUITE
