// Copyright 2026 The belldisc Authors
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

#include "belldisc/qmath.h"

#include <cmath>
#include <random>

#include "belldisc/error.h"
#include "gtest/gtest.h"

using namespace belldisc;

namespace {

// Independent Kronecker oracle: (a (x) b)[i*rb + k][j*cb + l] = a[i][j] b[k][l].
ComplexMatrix kron_by_index(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Complex(g(rng), g(rng));
    return m;
}

// Random full-rank mixed state from a Ginibre matrix.
DensityMatrix random_state(int n, std::mt19937_64 &rng) {
    ComplexMatrix g = random_matrix(1 << n, 1 << n, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(rho);
}

}  // namespace

TEST(qmath, tensor_matches_index_formula) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        ComplexMatrix a = random_matrix(2, 3, rng);
        ComplexMatrix b = random_matrix(4, 2, rng);
        EXPECT_LT((tensor(a, b) - kron_by_index(a, b)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(qmath, tensor_uses_msb_first_ordering) {
    StateVector s = StateVector::from_ket("1").tensor(StateVector::from_ket("0"));
    EXPECT_EQ(s.dim(), 4u);
    EXPECT_NEAR(std::abs(s[2]), 1.0, 1e-12);
    EXPECT_EQ(StateVector::from_ket("011")[3], Complex(1.0));
}

TEST(qmath, pauli_algebra) {
    const ComplexMatrix I = ComplexMatrix::Identity(2, 2);
    for (char p : {'X', 'Y', 'Z'}) {
        ComplexMatrix s = pauli_matrix(p);
        EXPECT_LT((s * s - I).norm(), 1e-12) << p;
        EXPECT_LT((s - s.adjoint()).norm(), 1e-12) << p;
        EXPECT_NEAR(std::abs(s.trace()), 0.0, 1e-12) << p;
    }
    ComplexMatrix xy = pauli_matrix('X') * pauli_matrix('Y');
    EXPECT_LT((xy - Complex(0, 1) * pauli_matrix('Z')).norm(), 1e-12);
    EXPECT_THROW(pauli_matrix('Q'), Error);
}

TEST(qmath, pauli_operator_trace_orthogonality) {
    std::vector<std::string> labels;
    for (char a : std::string("IXYZ"))
        for (char b : std::string("IXYZ"))
            labels.push_back({a, b});
    for (const auto &p : labels) {
        for (const auto &q : labels) {
            Complex t = (pauli_operator(PauliLabel(p)).adjoint() * pauli_operator(PauliLabel(q))).trace();
            EXPECT_NEAR(std::abs(t - Complex(p == q ? 4.0 : 0.0)), 0.0, 1e-12) << p << " " << q;
        }
    }
    EXPECT_LT((pauli_operator(PauliLabel("XZ")) - kron_by_index(pauli_matrix('X'), pauli_matrix('Z'))).norm(),
              1e-12);
    EXPECT_THROW(PauliLabel("XA"), Error);
}

TEST(qmath, state_vector_validation) {
    ComplexVector v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(StateVector{v}, Error);
    StateVector n = StateVector::normalized(v);
    EXPECT_NEAR(std::abs(n[0]), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_THROW(StateVector::normalized(ComplexVector::Zero(2)), Error);
    EXPECT_THROW(StateVector::from_ket("01a"), Error);
    ComplexVector three(3);
    three << 1.0, 0.0, 0.0;
    EXPECT_THROW(StateVector{three}, Error);
}

TEST(qmath, density_matrix_validation) {
    ComplexMatrix m(2, 2);
    m << 0.5, 0.1, 0.2, 0.5;
    try {
        DensityMatrix d(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
    EXPECT_NO_THROW(DensityMatrix(m, 0.2));
    try {
        DensityMatrix d(ComplexMatrix::Identity(3, 3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadDimensions);
    }
    try {
        DensityMatrix d(ComplexMatrix::Zero(2, 4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
    }
    ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
    nan(0, 0) = std::nan("");
    EXPECT_THROW(DensityMatrix{nan}, Error);
}

TEST(qmath, fidelity_examples) {
    auto zero = DensityMatrix::pure(StateVector::from_ket("0"));
    auto one = DensityMatrix::pure(StateVector::from_ket("1"));
    auto mixed = DensityMatrix::maximally_mixed(1);
    EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(zero, one), 0.0, 1e-12);
    EXPECT_NEAR(fidelity(zero, mixed), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(fidelity(mixed, mixed), 1.0, 1e-9);
    // Commuting diagonal states: F = sum sqrt(p_i q_i).
    ComplexMatrix p = ComplexMatrix::Zero(2, 2), q = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 0.7;
    p(1, 1) = 0.3;
    q(0, 0) = 0.2;
    q(1, 1) = 0.8;
    EXPECT_NEAR(fidelity(DensityMatrix(p), DensityMatrix(q)), std::sqrt(0.14) + std::sqrt(0.24), 1e-9);
}

TEST(qmath, fidelity_is_symmetric_and_bounded) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix a = random_state(2, rng);
        DensityMatrix b = random_state(2, rng);
        double f = fidelity(a, b);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0 + 1e-9);
        EXPECT_NEAR(f, fidelity(b, a), 1e-7);
        EXPECT_NEAR(fidelity(a, a), 1.0, 1e-7);
    }
}

TEST(qmath, fidelity_rejects_strongly_negative_reference) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.2;
    m(1, 1) = -0.2;
    try {
        fidelity(DensityMatrix(m), DensityMatrix::maximally_mixed(1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::StronglyNonPositive);
    }
    EXPECT_THROW(fidelity(DensityMatrix::maximally_mixed(1), DensityMatrix::maximally_mixed(2)), Error);
}

TEST(qmath, purity_values) {
    EXPECT_NEAR(purity(DensityMatrix::pure(StateVector::from_ket("01"))), 1.0, 1e-12);
    EXPECT_NEAR(purity(DensityMatrix::maximally_mixed(3)), 1.0 / 8.0, 1e-12);
    std::mt19937_64 rng(3);
    DensityMatrix r = random_state(2, rng);
    double oracle = 0.0;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
            oracle += std::norm(r(i, j));
    EXPECT_NEAR(purity(r), oracle, 1e-12);
}

TEST(qmath, deviation_matches_brute_force) {
    std::mt19937_64 rng(5);
    DensityMatrix a = random_state(3, rng);
    DensityMatrix b = random_state(3, rng);
    double sum = 0.0, mx = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            double d = std::hypot((a(i, j) - b(i, j)).real(), (a(i, j) - b(i, j)).imag());
            sum += d;
            mx = std::max(mx, d);
        }
    }
    DeviationReport r = deviation(a, b);
    EXPECT_EQ(r.dimension, 8u);
    EXPECT_NEAR(r.average_abs_deviation, sum / 64.0, 1e-12);
    EXPECT_NEAR(r.max_abs_deviation, mx, 1e-12);
    EXPECT_THROW(deviation(a, DensityMatrix::maximally_mixed(2)), Error);
}

TEST(qmath, make_physical_clips_negative_eigenvalue) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.2;
    m(1, 1) = -0.2;
    PhysicalProjection p = make_physical(m);
    EXPECT_TRUE(p.clipped);
    EXPECT_NEAR(p.clipped_weight, 0.2, 1e-12);
    EXPECT_NEAR(std::abs(p.state(0, 0) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(p.state(1, 1)), 0.0, 1e-12);
}

TEST(qmath, make_physical_is_idempotent_on_states) {
    std::mt19937_64 rng(9);
    DensityMatrix r = random_state(2, rng);
    PhysicalProjection p = make_physical(r.matrix());
    EXPECT_FALSE(p.clipped);
    EXPECT_LT((p.state.matrix() - r.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    PhysicalProjection again = make_physical(p.state.matrix());
    EXPECT_LT((again.state.matrix() - p.state.matrix()).cwiseAbs().maxCoeff(), 1e-12);

    ComplexMatrix skew = ComplexMatrix::Identity(2, 2) / 2.0;
    skew(0, 1) = 0.3;
    try {
        make_physical(skew);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::GrosslyNonHermitian);
    }
}

TEST(qmath, make_physical_output_is_positive_unit_trace) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix g = random_matrix(4, 4, rng);
        ComplexMatrix h = (g + g.adjoint()) / 2.0;
        h /= h.trace().real();
        PhysicalProjection p = make_physical(h);
        EXPECT_NEAR(p.state.trace().real(), 1.0, 1e-9);
        EXPECT_GE(p.state.eigenvalues().minCoeff(), -1e-12);
    }
}

TEST(qmath, global_phase_distance) {
    ComplexMatrix u = pauli_matrix('Y');
    EXPECT_NEAR(distance_up_to_global_phase(u, std::polar(1.0, 0.7) * u), 0.0, 1e-12);
    EXPECT_GT(distance_up_to_global_phase(u, pauli_matrix('X')), 0.5);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_FALSE(is_unitary(2.0 * u));
}

TEST(qmath, pure_reference_matches_general_uhlmann) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 10; ++trial) {
        ComplexVector v(8);
        for (int i = 0; i < 8; ++i)
            v(i) = Complex(g(rng), g(rng));
        StateVector psi = StateVector::normalized(v);
        ComplexMatrix h = random_matrix(8, 8, rng);
        h = ((h + h.adjoint()) / 2.0).eval();
        h /= h.trace().real();
        DensityMatrix rho2 = make_physical(h).state;

        // General formula evaluated directly: sqrt(rho1) = rho1 for a projector.
        ComplexMatrix p = psi.amplitudes() * psi.amplitudes().adjoint();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p * rho2.matrix() * p);
        double general = 0.0;
        for (int i = 0; i < 8; ++i)
            if (es.eigenvalues()(i) > 1e-12)  // rounding noise on the null space
                general += std::sqrt(es.eigenvalues()(i));
        DensityMatrix rho1 = DensityMatrix::pure(psi);
        EXPECT_NEAR(fidelity(rho1, rho2), general, 1e-9);
        // With the mixed state as reference the library takes its general branch.
        EXPECT_NEAR(fidelity(rho2, rho1), general, 1e-7);
    }
}
