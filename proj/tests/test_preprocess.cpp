#include "corrseg/preprocess.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace corrseg;
using corrseg::testing::random_trajectory;

namespace {

Trajectory sampled(std::size_t length, double (*f)(double)) {
    std::vector<double> values(length);
    for (std::size_t t = 0; t < length; ++t) {
        values[t] = f(static_cast<double>(t));
    }
    return Trajectory(length, 1, std::move(values));
}

}  // namespace

TEST_SUITE("preprocess") {

TEST_CASE("config validation") {
    CHECK_THROWS_AS(SavGolConfig(4, 2), std::invalid_argument);   // even window
    CHECK_THROWS_AS(SavGolConfig(1, 0), std::invalid_argument);   // window < 3
    CHECK_THROWS_AS(SavGolConfig(5, 5), std::invalid_argument);   // polyorder >= window
    CHECK_NOTHROW(SavGolConfig(301, 2));
}

TEST_CASE("coefficients sum to one and reproduce constants") {
    for (auto [window, polyorder] : {std::pair<std::size_t, std::size_t>{5, 2},
                                     {31, 2},
                                     {301, 2},
                                     {21, 4}}) {
        const std::vector<double> coeffs = savgol_coefficients(window, polyorder);
        REQUIRE(coeffs.size() == window);
        double sum = 0.0;
        for (double c : coeffs) {
            sum += c;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    const Trajectory constant(50, 2, std::vector<double>(100, 3.25));
    const Trajectory smoothed = savgol_smooth(constant, SavGolConfig(11, 3));
    for (std::size_t t = 0; t < constant.size(); ++t) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(std::fabs(smoothed(t, j) - 3.25) < 1e-10);
        }
    }
}

TEST_CASE("degree-2 polynomial passes through window 31 / polyorder 2") {
    const Trajectory poly =
        sampled(200, [](double t) { return 3.0 * t * t - t + 2.0; });
    const Trajectory smoothed = savgol_smooth(poly, SavGolConfig(31, 2));
    // Interior points only; mirror padding bends polynomials at the edges.
    for (std::size_t t = 15; t + 15 < poly.size(); ++t) {
        CHECK(std::fabs(smoothed(t, 0) - poly(t, 0)) < 1e-8);
    }
}

TEST_CASE("smoothing reduces white noise on a sine") {
    const std::size_t length = 2000;
    std::vector<double> clean(length);
    std::vector<double> noisy(length);
    std::mt19937_64 engine(23);
    double noise_var = 0.0;
    for (std::size_t t = 0; t < length; ++t) {
        clean[t] = std::sin(0.02 * static_cast<double>(t));
        // Crude but sufficient zero-mean noise: average of 12 uniforms.
        double g = 0.0;
        for (int r = 0; r < 12; ++r) {
            g += static_cast<double>(engine() >> 11) * 0x1.0p-53;
        }
        const double noise = 0.1 * (g - 6.0);
        noisy[t] = clean[t] + noise;
        noise_var += noise * noise;
    }
    noise_var /= static_cast<double>(length);

    const Trajectory smoothed =
        savgol_smooth(Trajectory(length, 1, noisy), SavGolConfig(101, 2));
    double residual_var = 0.0;
    for (std::size_t t = 0; t < length; ++t) {
        const double r = smoothed(t, 0) - clean[t];
        residual_var += r * r;
    }
    residual_var /= static_cast<double>(length);
    CHECK(residual_var < noise_var);
}

TEST_CASE("smoothing is linear") {
    std::mt19937_64 engine(29);
    for (int rep = 0; rep < 20; ++rep) {
        const Trajectory u = random_trajectory(engine, 60, 2, 4.0);
        const Trajectory v = random_trajectory(engine, 60, 2, 4.0);
        const double a = 2.0 * (static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0);
        const double b = 2.0 * (static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0);

        std::vector<double> combo(60 * 2);
        for (std::size_t i = 0; i < combo.size(); ++i) {
            combo[i] = a * u.values()[i] + b * v.values()[i];
        }
        const SavGolConfig cfg(15, 3);
        const Trajectory lhs = savgol_smooth(Trajectory(60, 2, combo), cfg);
        const Trajectory su = savgol_smooth(u, cfg);
        const Trajectory sv = savgol_smooth(v, cfg);
        for (std::size_t i = 0; i < combo.size(); ++i) {
            const double rhs = a * su.values()[i] + b * sv.values()[i];
            CHECK(lhs.values()[i] == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("window must fit the trajectory") {
    const Trajectory short_traj(4, 1, {0.0, 1.0, 2.0, 3.0});
    CHECK_THROWS_AS(savgol_smooth(short_traj, SavGolConfig(5, 2)), std::invalid_argument);
    CHECK_NOTHROW(savgol_smooth(short_traj, SavGolConfig(3, 1)));
}

TEST_CASE("resample: straight line stays collinear and equally spaced") {
    const Trajectory line(2, 2, {0.0, 0.0, 4.0, 2.0});
    const Trajectory out = resample(line, 5);
    REQUIRE(out.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(out(i, 0) == doctest::Approx(static_cast<double>(i)));
        CHECK(out(i, 1) == doctest::Approx(static_cast<double>(i) * 0.5));
    }
}

TEST_CASE("resample: identity and endpoint cases") {
    std::mt19937_64 engine(31);
    const Trajectory traj = random_trajectory(engine, 37, 3, 2.0);
    CHECK(resample(traj, traj.size()).values() == traj.values());

    const Trajectory three(3, 1, {0.0, 2.0, 4.0});
    CHECK(resample(three, 2).values() == std::vector<double>{0.0, 4.0});
    CHECK_THROWS_AS(resample(three, 1), std::invalid_argument);
}

TEST_CASE("resample preserves endpoints and index order") {
    std::mt19937_64 engine(37);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t total = 2 + engine() % 50;
        const std::size_t n_out = 2 + engine() % 80;
        const Trajectory traj = random_trajectory(engine, total, 1, 5.0);
        const Trajectory out = resample(traj, n_out);
        CHECK(out(0, 0) == traj(0, 0));
        CHECK(out(n_out - 1, 0) == traj(total - 1, 0));
    }

    // Interpolating a non-decreasing signal never reorders samples.
    std::vector<double> ramp(30);
    for (std::size_t t = 0; t < ramp.size(); ++t) {
        ramp[t] = static_cast<double>(t * t);
    }
    const Trajectory out = resample(Trajectory(30, 1, ramp), 77);
    for (std::size_t i = 1; i < out.size(); ++i) {
        CHECK(out(i - 1, 0) <= out(i, 0));
    }
}

}  // TEST_SUITE
