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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace nohide {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Qubit ordering convention used everywhere in this library: in a register
/// of n qubits, qubit 0 is the most significant bit of the basis index.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> data() { return data_; }
    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;

    /// Largest |m(i,j) - conj(m(j,i))|.
    double max_asymmetry() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;
    bool is_psd(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    bool operator==(const ComplexMatrix& other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Largest entrywise |a - b|. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
/// Tensor product of single-qubit Paulis named by a string over "IXYZ".
ComplexMatrix from_string(std::string_view label);
}  // namespace pauli

struct EigenDecomposition {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
/// Throws std::invalid_argument naming the asymmetry if `m` is not Hermitian
/// within `hermitian_tol`.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double hermitian_tol = 1e-9);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything more negative is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

class StateVector {
   public:
    StateVector() = default;
    /// Validates that the amplitude count is a power of two and the norm is 1 within 1e-10.
    explicit StateVector(std::vector<Complex> amplitudes);

    static StateVector basis(int num_qubits, std::size_t index);
    static StateVector zeros(int num_qubits) { return basis(num_qubits, 0); }

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm() const;

    /// Used by simulators that have already established unit norm.
    static StateVector unchecked(std::vector<Complex> amplitudes);

   private:
    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

StateVector tensor(const StateVector& a, const StateVector& b);
Complex inner(const StateVector& a, const StateVector& b);

/// |<a|b>| == 1 within tol, i.e. equal up to a global phase.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol);

class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Validates Hermitian (1e-10), unit trace (1e-10) and eigenvalues >= -1e-9.
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(int num_qubits);
    static DensityMatrix unchecked(ComplexMatrix m);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double purity() const;

   private:
    int num_qubits_ = 0;
    ComplexMatrix matrix_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Uhlmann fidelity tr sqrt(sqrt(a) b sqrt(a)) (not squared).
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep`, in the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// log2 of a power-of-two dimension; throws otherwise.
int qubits_for_dim(std::size_t dim);

}  // namespace nohide
