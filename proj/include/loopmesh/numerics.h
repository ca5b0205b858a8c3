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

#ifndef LOOPMESH_NUMERICS_H
#define LOOPMESH_NUMERICS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace loopmesh {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major. Always at least 1x1.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept {
        return data_;
    }
    std::span<Complex> row(std::size_t r) {
        return std::span<Complex>(data_).subspan(r * cols_, cols_);
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix &operator*=(Complex scalar);

    /// Left-multiplies rows (r, r+1) by the 2x2 block. O(cols).
    void apply_two_mode(std::size_t r, const ComplexMatrix &block);
    /// Scales row r in place.
    void scale_row(std::size_t r, Complex factor);

    bool all_finite() const noexcept;
    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Seed pair for one reproducible random stream.
///
/// Stream `i` is an mt19937_64 initialized from a splitmix64 mix of (base_seed, i),
/// so trials never share mutable generator state. Draws are stable within one build;
/// the Gaussian sampler is the standard library's, so bit-equality across toolchains
/// is not promised.
struct RandomSource {
    std::uint64_t base_seed = 0;
    std::uint64_t stream_index = 0;

    std::mt19937_64 engine() const;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Haar-distributed n x n unitary (Gaussian fill, QR, R-diagonal phase fix).
ComplexMatrix haar_unitary(std::size_t n, const RandomSource &rng);
ComplexMatrix haar_unitary(std::size_t n, std::mt19937_64 &engine);

struct SvdResult {
    std::vector<double> values;  // descending
    ComplexMatrix left;          // V
    ComplexMatrix right;         // W, so that M = V * diag(values) * W
};

SvdResult svd(const ComplexMatrix &m);
std::vector<double> svd_values(const ComplexMatrix &m);

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &m);

/// ||U^dag U - I||_F.
double unitarity_defect(const ComplexMatrix &u);

/// e^{i angle}, exact for angles that are exact multiples of pi/2 after reduction.
Complex unit_phase(double angle);

}  // namespace loopmesh

#endif
