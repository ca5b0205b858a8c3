// Copyright 2026 The loopmesh Authors
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

#include "loopmesh/numerics.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "loopmesh/errors.h"

namespace loopmesh {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix to_eigen(const ComplexMatrix &m) {
    EigenMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

template <typename Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived> &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

void require_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::invalid_dimension, "matrix dimensions must be at least 1x1");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    require_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_dims(rows, cols);
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::invalid_dimension, "entry count does not match rows x cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    require_dims(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::invalid_dimension, "ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t n) {
    return ComplexMatrix(n, n);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols_ != other.rows_) {
        throw Error(ErrorKind::invalid_dimension, "matrix product dimension mismatch");
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex(0)) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &x : data_) {
        x *= scalar;
    }
    return *this;
}

void ComplexMatrix::apply_two_mode(std::size_t r, const ComplexMatrix &block) {
    if (block.rows_ != 2 || block.cols_ != 2 || r + 1 >= rows_) {
        throw Error(ErrorKind::invalid_dimension, "two-mode block out of range");
    }
    Complex *top = &data_[r * cols_];
    Complex *bot = &data_[(r + 1) * cols_];
    for (std::size_t c = 0; c < cols_; c++) {
        Complex a = top[c];
        Complex b = bot[c];
        top[c] = block(0, 0) * a + block(0, 1) * b;
        bot[c] = block(1, 0) * a + block(1, 1) * b;
    }
}

void ComplexMatrix::scale_row(std::size_t r, Complex factor) {
    for (auto &x : row(r)) {
        x *= factor;
    }
}

bool ComplexMatrix::all_finite() const noexcept {
    for (const auto &x : data_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            return false;
        }
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 RandomSource::engine() const {
    // Counter-mode derivation: the stream key is hashed once more so that
    // adjacent (seed, index) pairs land far apart in the seed space.
    std::uint64_t key = splitmix64(base_seed) ^ splitmix64(stream_index ^ 0xD1B54A32D192ED03ULL);
    std::seed_seq seq{
        static_cast<std::uint32_t>(key),
        static_cast<std::uint32_t>(key >> 32),
        static_cast<std::uint32_t>(splitmix64(key)),
        static_cast<std::uint32_t>(splitmix64(key) >> 32),
    };
    return std::mt19937_64(seq);
}

ComplexMatrix haar_unitary(std::size_t n, std::mt19937_64 &engine) {
    if (n == 0) {
        throw Error(ErrorKind::invalid_dimension, "Haar unitary requires n >= 1");
    }
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z(n, n);
    // Fill in row-major order so the draw sequence does not depend on Eigen's storage.
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            double re = gauss(engine);
            double im = gauss(engine);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd &packed = qr.matrixQR();
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); k++) {
        Complex d = packed(k, k);
        double mag = std::abs(d);
        Complex phase = mag > 0 ? d / mag : Complex(1.0);
        q.col(k) *= phase;
    }
    return from_eigen(q);
}

ComplexMatrix haar_unitary(std::size_t n, const RandomSource &rng) {
    auto engine = rng.engine();
    return haar_unitary(n, engine);
}

SvdResult svd(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::invalid_input, "singular values requested for a non-square matrix");
    }
    if (!m.all_finite()) {
        throw Error(ErrorKind::invalid_input, "matrix has non-finite entries");
    }
    Eigen::JacobiSVD<EigenMatrix> solver(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto &sigma = solver.singularValues();
    std::vector<double> values(sigma.data(), sigma.data() + sigma.size());
    return SvdResult{
        std::move(values),
        from_eigen(solver.matrixU()),
        from_eigen(solver.matrixV().adjoint()),
    };
}

std::vector<double> svd_values(const ComplexMatrix &m) {
    return svd(m).values;
}

double frobenius_norm(const ComplexMatrix &m) {
    double total = 0;
    for (const auto &x : m.entries()) {
        total += std::norm(x);
    }
    return std::sqrt(total);
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::invalid_dimension, "frobenius distance requires equal dimensions");
    }
    double total = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        total += std::norm(ea[k] - eb[k]);
    }
    return std::sqrt(total);
}

double unitarity_defect(const ComplexMatrix &u) {
    if (!u.is_square()) {
        return INFINITY;
    }
    return frobenius_distance(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

Complex unit_phase(double angle) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double a = std::fmod(angle, two_pi);
    if (a < 0) {
        a += two_pi;
    }
    if (a == 0 || a == two_pi) {
        return {1.0, 0.0};
    }
    if (a == std::numbers::pi / 2) {
        return {0.0, 1.0};
    }
    if (a == std::numbers::pi) {
        return {-1.0, 0.0};
    }
    if (a == 3 * std::numbers::pi / 2) {
        return {0.0, -1.0};
    }
    return std::polar(1.0, a);
}

}  // namespace loopmesh
