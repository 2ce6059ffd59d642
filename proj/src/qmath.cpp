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

#include "nohide/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nohide {

namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kClampThreshold = 1e-9;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream ss;
        ss << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
           << b.cols();
        throw std::invalid_argument(ss.str());
    }
}

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c) {
                s += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0, 0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows x cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
    ComplexMatrix m(ket.size(), bra.size());
    for (std::size_t r = 0; r < ket.size(); ++r) {
        for (std::size_t c = 0; c < bra.size(); ++c) {
            m(r, c) = ket[r] * std::conj(bra[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto& z : m.data_) {
        z = std::conj(z);
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto& z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_asymmetry() const {
    if (!is_square()) {
        return INFINITY;
    }
    double worst = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return max_asymmetry() <= tol; }

bool ComplexMatrix::is_unitary(double tol) const {
    if (!is_square()) {
        return false;
    }
    return max_abs_diff(adjoint() * *this, identity(rows_)) <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    auto eig = hermitian_eig(*this, tol);
    return eig.values.empty() || eig.values.back() >= -tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "matrix add");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "matrix subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix multiply: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0, 0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector multiply: dimension mismatch");
    }
    std::vector<Complex> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

namespace pauli {

ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0, 1}, {1, 0}}; }
ComplexMatrix Y() { return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}}; }
ComplexMatrix Z() { return {{1, 0}, {0, -1}}; }

ComplexMatrix from_string(std::string_view label) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (char ch : label) {
        switch (ch) {
            case 'I': out = kron(out, I()); break;
            case 'X': out = kron(out, X()); break;
            case 'Y': out = kron(out, Y()); break;
            case 'Z': out = kron(out, Z()); break;
            default:
                throw std::invalid_argument("invalid Pauli character '" + std::string(1, ch) + "'");
        }
    }
    return out;
}

}  // namespace pauli

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
    if (!m.is_square()) {
        throw std::invalid_argument("hermitian_eig: matrix is not square");
    }
    const double asym = m.max_asymmetry();
    if (asym > hermitian_tol) {
        std::ostringstream ss;
        ss << "hermitian_eig: matrix is not Hermitian (max asymmetry " << asym << ")";
        throw std::invalid_argument(ss.str());
    }
    const std::size_t n = m.rows();
    // Work on the exactly Hermitian part.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kJacobiTolerance * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // Phase-align apq to a real value, then do a real Jacobi rotation.
                const Complex phase = std::conj(apq) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // G restricted to (p,q): [[c, s], [-s*phase, c*phase]].
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * phase;
                const Complex gqq = c * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    auto eig = hermitian_eig(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lambda = eig.values[k];
        if (lambda < -kClampThreshold) {
            std::ostringstream ss;
            ss << "psd_sqrt: eigenvalue " << lambda << " is below the clamp threshold -1e-9";
            throw std::domain_error(ss.str());
        }
        const double root = std::sqrt(std::max(lambda, 0.0));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = eig.vectors(r, k) * root;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

int qubits_for_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : num_qubits_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
    const double nrm = norm();
    if (std::abs(nrm - 1.0) > 1e-10) {
        std::ostringstream ss;
        ss << "StateVector: norm " << nrm << " differs from 1";
        throw std::invalid_argument(ss.str());
    }
}

StateVector StateVector::unchecked(std::vector<Complex> amplitudes) {
    StateVector s;
    s.num_qubits_ = qubits_for_dim(amplitudes.size());
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    amps[index] = 1.0;
    return unchecked(std::move(amps));
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& z : amplitudes_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (auto x : a.amplitudes()) {
        for (auto y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return StateVector::unchecked(std::move(out));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    const Complex overlap = inner(a, b);
    if (std::abs(overlap) < 1e-300) {
        return false;
    }
    const Complex phase = overlap / std::abs(overlap);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a[i] * phase - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) {
    if (!m.is_square()) {
        throw std::invalid_argument("DensityMatrix: matrix is not square");
    }
    num_qubits_ = qubits_for_dim(m.rows());
    const double asym = m.max_asymmetry();
    if (asym > 1e-10) {
        std::ostringstream ss;
        ss << "DensityMatrix: not Hermitian (max asymmetry " << asym << ")";
        throw std::invalid_argument(ss.str());
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
        std::ostringstream ss;
        ss << "DensityMatrix: trace " << tr.real() << " differs from 1";
        throw std::invalid_argument(ss.str());
    }
    auto eig = hermitian_eig(m);
    if (eig.values.back() < -kClampThreshold) {
        std::ostringstream ss;
        ss << "DensityMatrix: negative eigenvalue " << eig.values.back();
        throw std::invalid_argument(ss.str());
    }
    matrix_ = std::move(m);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
    DensityMatrix d;
    d.num_qubits_ = qubits_for_dim(m.rows());
    d.matrix_ = std::move(m);
    return d;
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    return unchecked(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    return unchecked((1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix::unchecked(kron(a.matrix(), b.matrix()));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    auto eig = hermitian_eig(a.matrix() - b.matrix());
    double s = 0;
    for (double lambda : eig.values) {
        s += std::abs(lambda);
    }
    return std::clamp(0.5 * s, 0.0, 1.0);
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    const ComplexMatrix root = psd_sqrt(a.matrix());
    ComplexMatrix inner_product = root * b.matrix() * root;
    // Symmetrize away roundoff before the second decomposition.
    inner_product = 0.5 * (inner_product + inner_product.adjoint());
    auto eig = hermitian_eig(inner_product);
    double f = 0;
    for (double lambda : eig.values) {
        f += std::sqrt(std::max(lambda, 0.0));
    }
    return std::clamp(f, 0.0, 1.0);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.num_qubits();
    std::vector<bool> kept(n, false);
    for (int q : keep) {
        if (q < 0 || q >= n) {
            throw std::out_of_range("partial_trace: qubit " + std::to_string(q) + " out of range");
        }
        if (kept[q]) {
            throw std::invalid_argument("partial_trace: duplicate qubit " + std::to_string(q));
        }
        kept[q] = true;
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }
    const int k = static_cast<int>(keep.size());
    const std::size_t out_dim = std::size_t{1} << k;
    const std::size_t env_dim = std::size_t{1} << traced.size();

    // Full index from (kept bits, traced bits), each read MSB-first in list order.
    auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i) {
            if ((kept_bits >> (k - 1 - i)) & 1U) {
                idx |= std::size_t{1} << (n - 1 - keep[i]);
            }
        }
        const int t = static_cast<int>(traced.size());
        for (int i = 0; i < t; ++i) {
            if ((traced_bits >> (t - 1 - i)) & 1U) {
                idx |= std::size_t{1} << (n - 1 - traced[i]);
            }
        }
        return idx;
    };

    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex acc = 0;
            for (std::size_t e = 0; e < env_dim; ++e) {
                acc += rho.matrix()(compose(r, e), compose(c, e));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix::unchecked(std::move(out));
}

}  // namespace nohide
