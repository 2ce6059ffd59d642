// Copyright 2026 The nohide Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>

#include "nohide/rng.hpp"
#include "nohide/tomo.hpp"
#include "test_util.hpp"

namespace nohide {
namespace {

using namespace tomo;
using testing::random_density;

// Euclidean projection onto the probability simplex by bisection on the
// water level theta: mu_i = max(lambda_i - theta, 0), sum mu = 1.
std::vector<double> simplex_by_bisection(const std::vector<double>& lambda) {
    double lo = *std::min_element(lambda.begin(), lambda.end()) - 1;
    double hi = *std::max_element(lambda.begin(), lambda.end());
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi), s = 0;
        for (double l : lambda) s += std::max(l - mid, 0.0);
        (s > 1 ? lo : hi) = mid;
    }
    std::vector<double> mu;
    for (double l : lambda) mu.push_back(std::max(l - 0.5 * (lo + hi), 0.0));
    return mu;
}

DensityMatrix ket(std::vector<Complex> amps) { return DensityMatrix::pure(StateVector(amps)); }

TEST(Tomo, BasisOrderingAndLabels) {
    auto b = measurement_bases(2);
    ASSERT_EQ(b.size(), 9u);
    EXPECT_EQ(b.front(), "XX");
    EXPECT_EQ(b[1], "XY");
    EXPECT_EQ(b.back(), "ZZ");
    EXPECT_EQ(pauli_labels(1), (std::vector<std::string>{"X", "Y", "Z"}));
    EXPECT_EQ(pauli_labels(2).size(), 15u);
}

TEST(Tomo, RotationsMapEigenstatesToZero) {
    const double h = 1 / std::numbers::sqrt2;
    const Complex i{0, 1};
    auto p = basis_probabilities(ket({h, h}), "X");
    EXPECT_NEAR(p[0], 1, 1e-15);
    p = basis_probabilities(ket({h, i * h}), "Y");
    EXPECT_NEAR(p[0], 1, 1e-15);
    p = basis_probabilities(ket({h, -i * h}), "Y");
    EXPECT_NEAR(p[1], 1, 1e-15);
    p = basis_probabilities(ket({0, 1}), "Z");
    EXPECT_NEAR(p[1], 1, 1e-15);
    // Qubit 0 is the first character of the outcome string.
    auto s = measure_shots(ket({0, 0, 1, 0}), "ZZ", 10, 1);
    EXPECT_EQ(s.counts.at("10"), 10u);
}

TEST(Tomo, ExactExpectationsOfPsi) {
    // cos(pi/8)|0> + sin(pi/8)|1>: <X> = <Z> = 1/sqrt2, <Y> = 0.
    auto psi = ket({std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8)});
    EXPECT_NEAR(exact_expectation(psi, "X"), 1 / std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(exact_expectation(psi, "Y"), 0, 1e-15);
    EXPECT_NEAR(exact_expectation(psi, "Z"), 1 / std::numbers::sqrt2, 1e-15);
}

TEST(Tomo, ReconstructInvertsPauliDecomposition) {
    std::mt19937_64 rng(51);
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto rho = random_density(rng, n);
            auto raw = reconstruct(exact_expectations(rho), n);
            EXPECT_LT(max_abs_diff(raw.matrix, rho.matrix()), 1e-12);
            EXPECT_GT(raw.min_eigenvalue, 0);
        }
    }
    EXPECT_THROW(reconstruct({{"X", 0}, {"Y", 0}}, 1), std::invalid_argument);
    EXPECT_THROW(reconstruct({}, 3), std::invalid_argument);
}

TEST(Tomo, ShotsAreDeterministicAndComplete) {
    auto rho = ket({0.6, 0.8});
    auto a = measure_shots(rho, "X", 1000, 9);
    auto b = measure_shots(rho, "X", 1000, 9);
    EXPECT_EQ(a, b);
    std::uint64_t total = 0;
    for (const auto& [k, v] : a.counts) total += v;
    EXPECT_EQ(total, 1000u);
    EXPECT_NE(measure_shots(rho, "X", 1000, 10), a);
    EXPECT_THROW(measure_shots(rho, "X", 0, 1), std::invalid_argument);
    EXPECT_THROW(measure_shots(rho, "Q", 10, 1), std::invalid_argument);
}

TEST(Tomo, ExpectationWithIdentityPositions) {
    ShotCounts c{"XZ", {{"00", 50}, {"01", 30}, {"10", 15}, {"11", 5}}, 100};
    EXPECT_NEAR(expectation(c), (50 - 30 - 15 + 5) / 100.0, 1e-15);
    EXPECT_NEAR(expectation(c, "XI"), (80 - 20) / 100.0, 1e-15);
    EXPECT_NEAR(expectation(c, "IZ"), (65 - 35) / 100.0, 1e-15);
    EXPECT_THROW(expectation(c, "YI"), std::invalid_argument);
}

TEST(Tomo, SamplingIsUnbiased) {
    std::mt19937_64 rng(52);
    for (int n : {1, 2}) {
        auto rho = random_density(rng, n);
        auto exact = exact_expectations(rho);
        auto bases = measurement_bases(n);
        std::map<std::string, double> mean;
        const int seeds = 1000;
        for (int s = 0; s < seeds; ++s) {
            std::vector<ShotCounts> counts;
            for (std::size_t k = 0; k < bases.size(); ++k) {
                counts.push_back(measure_shots(rho, bases[k], 1024, derive_seed(s, k)));
            }
            for (const auto& [label, v] : estimate_expectations(counts, n)) mean[label] += v / seeds;
        }
        const double bound = 4 * std::sqrt(1.0 / (1000 * 1024));
        for (const auto& [label, v] : exact) {
            EXPECT_LT(std::abs(mean[label] - v), bound) << label;
        }
    }
}

TEST(Tomo, SpectrumProjectionMatchesBisectionOracle) {
    std::mt19937_64 rng(53);
    std::normal_distribution<double> g(0, 0.4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t d = 2 + trial % 3;
        std::vector<double> lambda(d);
        double s = 0;
        for (auto& l : lambda) s += (l = g(rng));
        for (auto& l : lambda) l += (1 - s) / d;  // unit sum, some negative
        std::sort(lambda.rbegin(), lambda.rend());
        auto mu = project_spectrum(lambda);
        auto oracle = simplex_by_bisection(lambda);
        for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(mu[i], oracle[i], 1e-12);
        EXPECT_EQ(project_spectrum(mu), mu);  // idempotent
    }
    EXPECT_EQ(project_spectrum({0.7, 0.3}), (std::vector<double>{0.7, 0.3}));
    // Only the deficit of 0.1 is redistributed: 1.1, -0.1 -> 1, 0.
    auto mu = project_spectrum({1.1, -0.1});
    EXPECT_NEAR(mu[0], 1, 1e-15);
    EXPECT_EQ(mu[1], 0);
}

// A raw reconstruction whose Bloch vector pokes out of the ball.
TomogramRaw outside_ball(double x, double y, double z) {
    return reconstruct({{"X", x}, {"Y", y}, {"Z", z}}, 1);
}

TEST(Tomo, ProjectionIsNearestPhysicalQubitByGridSearch) {
    // Frobenius distance between qubit operators (I + r.sigma)/2 is |r - r'| / sqrt2.
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int trial = 0; trial < 20; ++trial) {
        const double rx = u(rng), ry = u(rng), rz = u(rng);
        auto raw = outside_ball(rx, ry, rz);
        auto proj = project_physical(raw);
        double best = INFINITY;
        const int steps = 40;
        for (int i = 0; i <= steps; ++i)
            for (int j = 0; j <= steps; ++j)
                for (int k = 0; k <= steps; ++k) {
                    double x = -1 + 2.0 * i / steps, y = -1 + 2.0 * j / steps,
                           z = -1 + 2.0 * k / steps;
                    if (x * x + y * y + z * z > 1) continue;
                    best = std::min(best, std::hypot(x - rx, y - ry, z - rz) / std::numbers::sqrt2);
                }
        double d = (proj.matrix() - raw.matrix).frobenius_norm();
        EXPECT_LE(d, best + 1e-12);
        EXPECT_GT(d, best - 0.05);  // grid spacing 0.05
    }
}

TEST(Tomo, ProjectionIsIdempotentAndNonExpansive) {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int trial = 0; trial < 50; ++trial) {
        auto raw = outside_ball(u(rng), u(rng), u(rng));
        auto proj = project_physical(raw);
        EXPECT_TRUE(proj.matrix().is_psd(1e-12));
        auto again = project_physical({proj.matrix(), 0});
        EXPECT_LT(max_abs_diff(again.matrix(), proj.matrix()), 1e-12);
        auto sigma = random_density(rng, 1);
        EXPECT_LE((proj.matrix() - sigma.matrix()).frobenius_norm(),
                  (raw.matrix - sigma.matrix()).frobenius_norm() + 1e-12);
    }
}

TEST(Tomo, PipelineExactModeIsExact) {
    std::mt19937_64 rng(56);
    auto rho = random_density(rng, 3);
    const int keep[] = {2, 0};
    auto r = tomo_pipeline(rho, keep, kExact, 0);
    EXPECT_LT(max_abs_diff(r.physical.matrix(), partial_trace(rho, keep).matrix()), 1e-12);
    EXPECT_NEAR(r.fidelity, 1, 1e-7);
    EXPECT_NEAR(r.trace_distance, 0, 1e-12);
    EXPECT_TRUE(r.counts.empty());
}

TEST(Tomo, PipelineSampledModeRecordsCounts) {
    auto rho = DensityMatrix::maximally_mixed(2);
    const int keep[] = {0, 1};
    auto r = tomo_pipeline(rho, keep, 256, 3);
    EXPECT_EQ(r.counts.size(), 9u);
    auto again = tomo_pipeline(rho, keep, 256, 3);
    EXPECT_EQ(again.counts, r.counts);
    EXPECT_EQ(again.raw.matrix, r.raw.matrix);
    // Basis k uses derive_seed(seed, k).
    EXPECT_EQ(r.counts[4], measure_shots(rho, "YY", 256, derive_seed(3, 4)));
}

TEST(Tomo, PureStatesOftenReconstructNonPhysical) {
    auto psi = ket({std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8)});
    const int keep[] = {0};
    int negative = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        negative += tomo_pipeline(psi, keep, 1024, s).raw.min_eigenvalue < 0;
    }
    EXPECT_GT(negative, 0);
}

}  // namespace
}  // namespace nohide
