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

#include <array>
#include <numbers>

#include "nohide/qmath.hpp"
#include "test_util.hpp"

namespace nohide {
namespace {

using testing::haar_state;
using testing::random_density;
using testing::random_hermitian;

// Bloch vector r with rho = (I + r.sigma) / 2.
std::array<double, 3> bloch(const DensityMatrix& rho) {
    const auto& m = rho.matrix();
    return {2 * m(0, 1).real(), -2 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

TEST(Matrix, KronFollowsQubitZeroMostSignificant) {
    // |1> (x) |0> is basis index 2.
    ComplexMatrix one(2, 1, {0, 1}), zero(2, 1, {1, 0});
    ComplexMatrix k = kron(one, zero);
    EXPECT_EQ(k(2, 0), Complex(1, 0));
    EXPECT_EQ(tensor(StateVector::basis(1, 1), StateVector::basis(1, 0))[2], Complex(1, 0));
}

TEST(Matrix, PauliAlgebra) {
    using namespace pauli;
    const Complex i{0, 1};
    EXPECT_LT(max_abs_diff(X() * Y(), i * Z()), 1e-15);
    EXPECT_LT(max_abs_diff(Y() * Z(), i * X()), 1e-15);
    EXPECT_LT(max_abs_diff(from_string("XZ"), kron(X(), Z())), 1e-15);
    EXPECT_THROW(from_string("XQ"), std::invalid_argument);
}

TEST(Matrix, ShapeChecks) {
    ComplexMatrix a(2, 3), b(3, 2);
    EXPECT_THROW(a + b, std::invalid_argument);
    EXPECT_NO_THROW(a * b);
    EXPECT_THROW(a * a, std::invalid_argument);
}

TEST(Eigen, PauliSpectra) {
    for (auto m : {pauli::X(), pauli::Y(), pauli::Z()}) {
        auto e = hermitian_eig(m);
        EXPECT_NEAR(e.values[0], 1, 1e-14);
        EXPECT_NEAR(e.values[1], -1, 1e-14);
    }
}

TEST(Eigen, ReconstructsRandomHermitian) {
    std::mt19937_64 rng(11);
    for (std::size_t dim : {2u, 4u, 8u}) {
        for (int trial = 0; trial < 100; ++trial) {
            ComplexMatrix a = random_hermitian(rng, dim);
            auto e = hermitian_eig(a);
            std::vector<Complex> d(e.values.begin(), e.values.end());
            ComplexMatrix back = e.vectors * ComplexMatrix::diagonal(d) * e.vectors.adjoint();
            ASSERT_LT(max_abs_diff(a, back), 1e-9) << "dim " << dim;
            ASSERT_TRUE(e.vectors.is_unitary(1e-10));
            ASSERT_TRUE(std::is_sorted(e.values.rbegin(), e.values.rend()));
            double tr = 0;
            for (double v : e.values) tr += v;
            ASSERT_NEAR(tr, a.trace().real(), 1e-10);
        }
    }
}

TEST(Eigen, RejectsNonHermitianNamingAsymmetry) {
    ComplexMatrix m{{1, 0.5}, {0, 1}};
    try {
        hermitian_eig(m);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos);
    }
}

TEST(Eigen, SqrtSquaresBackAndClamps) {
    std::mt19937_64 rng(12);
    auto rho = random_density(rng, 2).matrix();
    auto r = psd_sqrt(rho);
    EXPECT_LT(max_abs_diff(r * r, rho), 1e-12);

    ComplexMatrix tiny = ComplexMatrix::diagonal(std::vector<Complex>{1, -5e-10});
    EXPECT_NO_THROW(psd_sqrt(tiny));
    ComplexMatrix negative = ComplexMatrix::diagonal(std::vector<Complex>{1, -1e-6});
    EXPECT_THROW(psd_sqrt(negative), std::domain_error);
}

TEST(States, ValidationThresholds) {
    EXPECT_THROW(StateVector({1, 1}), std::invalid_argument);
    EXPECT_THROW(StateVector({1, 0, 0}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(ComplexMatrix{{1, 0}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0, 0.5}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(ComplexMatrix{{1.5, 0}, {0, -0.5}}), std::invalid_argument);
    EXPECT_NO_THROW(DensityMatrix(ComplexMatrix{{1 + 5e-11, 0}, {0, 0}}));
}

TEST(Metrics, PureStatesClosedForm) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = haar_state(rng, 2), b = haar_state(rng, 2);
        double overlap = std::abs(inner(a, b));
        auto ra = DensityMatrix::pure(a), rb = DensityMatrix::pure(b);
        EXPECT_NEAR(fidelity(ra, rb), overlap, 1e-7);
        EXPECT_NEAR(trace_distance(ra, rb), std::sqrt(1 - overlap * overlap), 1e-10);
    }
}

TEST(Metrics, QubitTraceDistanceIsHalfBlochDistance) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_density(rng, 1), b = random_density(rng, 1);
        auto ra = bloch(a), rb = bloch(b);
        double d = std::hypot(ra[0] - rb[0], ra[1] - rb[1], ra[2] - rb[2]);
        EXPECT_NEAR(trace_distance(a, b), d / 2, 1e-12);
        // Qubit fidelity: F^2 = tr(ab) + 2 sqrt(det a det b).
        auto det = [](const DensityMatrix& r) {
            return (r.matrix()(0, 0) * r.matrix()(1, 1) - r.matrix()(0, 1) * r.matrix()(1, 0)).real();
        };
        double f2 = (a.matrix() * b.matrix()).trace().real() + 2 * std::sqrt(det(a) * det(b));
        EXPECT_NEAR(fidelity(a, b), std::sqrt(f2), 1e-10);
    }
}

TEST(Metrics, FuchsVanDeGraafAndSymmetry) {
    std::mt19937_64 rng(15);
    for (int n : {1, 2, 3}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto a = random_density(rng, n), b = random_density(rng, n);
            double f = fidelity(a, b), t = trace_distance(a, b);
            EXPECT_LE(1 - f, t + 1e-10);
            EXPECT_LE(t, std::sqrt(1 - f * f) + 1e-10);
            EXPECT_NEAR(f, fidelity(b, a), 1e-9);
            EXPECT_NEAR(fidelity(a, a), 1, 1e-9);
            EXPECT_NEAR(trace_distance(a, a), 0, 1e-12);
        }
    }
}

TEST(Metrics, MixedVersusMaximallyMixed) {
    // Diagonal states: fidelity is the classical Bhattacharyya overlap.
    DensityMatrix a(ComplexMatrix::diagonal(std::vector<Complex>{0.9, 0.1}));
    auto mixed = DensityMatrix::maximally_mixed(1);
    EXPECT_NEAR(fidelity(a, mixed), std::sqrt(0.45) + std::sqrt(0.05), 1e-12);
    EXPECT_NEAR(trace_distance(a, mixed), 0.4, 1e-12);
}

TEST(PartialTrace, ProductStatesAndOrder) {
    std::mt19937_64 rng(16);
    auto a = random_density(rng, 1), b = random_density(rng, 1), c = random_density(rng, 1);
    auto abc = tensor(tensor(a, b), c);
    const int keep_b[] = {1};
    EXPECT_LT(max_abs_diff(partial_trace(abc, keep_b).matrix(), b.matrix()), 1e-12);
    const int keep_ca[] = {2, 0};
    EXPECT_LT(max_abs_diff(partial_trace(abc, keep_ca).matrix(), tensor(c, a).matrix()), 1e-12);
    const int all[] = {0, 1, 2};
    EXPECT_LT(max_abs_diff(partial_trace(abc, all).matrix(), abc.matrix()), 1e-15);
}

TEST(PartialTrace, UnitTraceOnRandomStates) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto rho = random_density(rng, 3);
        for (std::vector<int> keep : {std::vector<int>{0}, {1, 2}, {2}, {2, 1, 0}}) {
            EXPECT_NEAR(partial_trace(rho, keep).matrix().trace().real(), 1, 1e-10);
        }
    }
}

TEST(PartialTrace, BellPairIsMaximallyMixed) {
    const double h = 1 / std::numbers::sqrt2;
    auto bell = DensityMatrix::pure(StateVector({h, 0, 0, h}));
    const int keep[] = {0};
    EXPECT_LT(max_abs_diff(partial_trace(bell, keep).matrix(),
                           DensityMatrix::maximally_mixed(1).matrix()),
              1e-15);
}

TEST(PartialTrace, RejectsBadIndices) {
    auto rho = DensityMatrix::maximally_mixed(2);
    const int out_of_range[] = {2};
    const int repeated[] = {0, 0};
    EXPECT_THROW(partial_trace(rho, out_of_range), std::out_of_range);
    EXPECT_THROW(partial_trace(rho, repeated), std::invalid_argument);
}

}  // namespace
}  // namespace nohide
