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

/**
 * @file
 * Dense complex linear algebra and state metrics for few-qubit registers.
 *
 * Basis ordering: for an n-qubit register the basis index of the ket
 * |q0 q1 ... q{n-1}> has q0 as its most significant bit, so the leftmost
 * symbol of a ket string or Pauli label always refers to qubit 0.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace belldisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
/// Algebraic identities (unitarity, Hermiticity of constructed states).
inline constexpr double kAlgebraic = 1e-9;
/// Physicality checks (trace, positivity).
inline constexpr double kPhysical = 1e-6;
/// Agreement with published numbers.
inline constexpr double kRegression = 5e-4;
}  // namespace tol

bool is_power_of_two(std::size_t value);

/// Number of qubits for a 2^n dimensional space; throws BadDimensions otherwise.
int qubit_count_for_dim(std::size_t dim);

bool all_finite(const ComplexMatrix &m);

/// max_{i,j} |m_ij - conj(m_ji)|.
double max_asymmetry(const ComplexMatrix &m);

/// Normalized pure state of a 2^n dimensional register.
class StateVector {
   public:
    /// Throws InvalidArgument unless the norm is 1 within tol::kAlgebraic.
    explicit StateVector(ComplexVector amplitudes);

    /// Rescales to unit norm; throws on a zero vector.
    static StateVector normalized(ComplexVector amplitudes);
    static StateVector zero(int n_qubits);
    static StateVector basis(int n_qubits, std::uint64_t index);
    /// "010" -> |010>; characters other than '0'/'1' are rejected.
    static StateVector from_ket(std::string_view bits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    Complex operator[](std::size_t index) const {
        return amplitudes_(static_cast<Eigen::Index>(index));
    }

    /// |this> (x) |other>, this occupying the leading qubits.
    StateVector tensor(const StateVector &other) const;

    /// |<this|other>|^2.
    double overlap_probability(const StateVector &other) const;

   private:
    ComplexVector amplitudes_;
    int n_qubits_;
};

/// A string over {I, X, Y, Z} with one symbol per qubit line.
class PauliLabel {
   public:
    explicit PauliLabel(std::string_view symbols);

    std::size_t n_qubits() const noexcept {
        return symbols_.size();
    }
    char operator[](std::size_t qubit) const {
        return symbols_[qubit];
    }
    const std::string &str() const noexcept {
        return symbols_;
    }
    bool has_identity() const noexcept;
    bool is_identity() const noexcept;

    auto operator<=>(const PauliLabel &) const = default;

   private:
    std::string symbols_;
};

/**
 * Hermitian matrix over a 2^n dimensional register.
 *
 * Construction only checks shape, finiteness and Hermiticity (at the given
 * tolerance); trace and positivity are not enforced so that raw tomographic
 * reconstructions can be represented and later passed through make_physical.
 * The matrix is stored exactly as given, never silently symmetrized.
 */
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix matrix, double hermitian_tolerance = tol::kAlgebraic);

    static DensityMatrix pure(const StateVector &state);
    static DensityMatrix maximally_mixed(int n_qubits);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }
    int n_qubits() const {
        return qubit_count_for_dim(dim());
    }
    double hermitian_tolerance() const noexcept {
        return hermitian_tolerance_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    Complex trace() const {
        return matrix_.trace();
    }
    /// Eigenvalues of the Hermitian part, ascending.
    Eigen::VectorXd eigenvalues() const;

   private:
    ComplexMatrix matrix_;
    double hermitian_tolerance_;
};

struct DeviationReport {
    double average_abs_deviation = 0.0;
    double max_abs_deviation = 0.0;
    std::size_t dimension = 0;
};

struct PhysicalProjection {
    DensityMatrix state;
    /// True when at least one eigenvalue below -1e-12 was clipped.
    bool clipped = false;
    /// Total magnitude of the clipped (negative) eigenvalues before renormalization.
    double clipped_weight = 0.0;
};

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Single-qubit Pauli for one of 'I', 'X', 'Y', 'Z'.
ComplexMatrix pauli_matrix(char symbol);

/// 2^n x 2^n operator sigma_{label[0]} (x) ... (x) sigma_{label[n-1]}.
ComplexMatrix pauli_operator(const PauliLabel &label);

/**
 * Uhlmann fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)).
 *
 * rho1 is the reference and must be positive semidefinite up to -1e-6.
 * When rho1 is pure the result is computed as sqrt(<psi|rho2|psi>), which
 * is exact and also well defined for a non-positive rho2 (raw tomography).
 */
double fidelity(const DensityMatrix &rho1, const DensityMatrix &rho2);

/// Tr(rho^2).
double purity(const DensityMatrix &rho);

/// Mean and maximum complex modulus of the entrywise difference.
DeviationReport deviation(const DensityMatrix &ideal, const DensityMatrix &experimental);

/// Symmetrize, clip negative eigenvalues to zero and renormalize the trace.
PhysicalProjection make_physical(const ComplexMatrix &raw);

bool is_unitary(const ComplexMatrix &u, double tolerance = tol::kAlgebraic);

/**
 * Max entrywise distance between a and b after removing global phase.
 * Both matrices are rotated so that the entry at the position of a's
 * largest-modulus element is real and positive.
 */
double distance_up_to_global_phase(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace belldisc
