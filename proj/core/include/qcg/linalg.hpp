// Copyright 2026 The qcgeom Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qcg/tolerances.hpp"

namespace qcg {

using Complex = std::complex<double>;

/**
 * @brief Dense square complex matrix stored row-major.
 *
 * Used for basis elements, density matrices and Choi matrices alike. All
 * arithmetic returns new values; a matrix is never mutated through a const
 * reference.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix of size dim x dim. dim must be at least 1.
    explicit ComplexMatrix(std::size_t dim);
    /// Takes ownership of row-major entries; entries.size() must be dim*dim.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    /// Row-list literal, mainly for tests: {{1, 0}, {0, -1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    static ComplexMatrix diagonal(std::span<const double> values);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool empty() const noexcept { return dim_ == 0; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }
    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix &m, std::span<const Complex> x);

/// Kronecker product; entry (i*db+k, j*db+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix conj_transpose(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);

Complex trace(const ComplexMatrix &a);
/// tr(a^dag b), the Hilbert-Schmidt inner product.
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix &a);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTolerances.equality);
/// Worst |a(i,j) - conj(a(j,i))| together with its position.
struct HermiticityDefect {
    double magnitude = 0.0;
    std::size_t row = 0;
    std::size_t col = 0;
};
HermiticityDefect hermiticity_defect(const ComplexMatrix &a);

bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTolerances.equality);

/// Max-entry magnitude of ab - ba. Throws DomainError on dimension mismatch.
double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b);

/**
 * Finds theta in (-pi, pi] with ab = e^{i theta} ba, within
 * tol * max(|ab|_max, |ba|_max). The phase is read off the largest-magnitude
 * entry of ab. Returns nullopt when no global phase relates the two products.
 * Throws DomainError for a zero input or a dimension mismatch.
 */
std::optional<double> phase_commute(const ComplexMatrix &a, const ComplexMatrix &b,
                                    double tol = kDefaultTolerances.equality);

/// Eigenvalues sorted descending, with optional unitary eigenvector columns.
struct Spectrum {
    std::vector<double> values;
    std::optional<ComplexMatrix> vectors;
    int sweeps = 0;
};

/**
 * Hermitian eigendecomposition by cyclic complex Jacobi rotations.
 *
 * Iterates full sweeps until every off-diagonal magnitude is at most
 * `tol.jacobi`. Degenerate eigenvalues (within `tol.spectral`) are ordered by
 * the index of the first nonzero component of their eigenvector, and each
 * eigenvector is phased so that component is real and positive.
 *
 * Throws DomainError naming the worst entry if `h` is not hermitian within
 * `tol.equality`, and Error if the sweep limit is reached.
 */
Spectrum hermitian_eigensystem(const ComplexMatrix &h, bool withVectors = true,
                               const Tolerances &tol = kDefaultTolerances);

/// Eigenvalues only; shorthand for hermitian_eigensystem(h, false).values.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h,
                                          const Tolerances &tol = kDefaultTolerances);

/// Largest dimension for which charpoly_coeffs uses the trace recursion.
inline constexpr std::size_t kFaddeevLeVerrierMaxDim = 8;

/**
 * Elementary symmetric functions S_0..S_n of the eigenvalues of `k`, so that
 * det(tI - k) = sum_j (-1)^j t^{n-j} S_j. Faddeev-LeVerrier for
 * n <= kFaddeevLeVerrierMaxDim, otherwise built from the eigensolver output.
 */
std::vector<double> charpoly_coeffs(const ComplexMatrix &k,
                                    const Tolerances &tol = kDefaultTolerances);

/// result(i,j) = m(perm[i], perm[j]). Throws DomainError if perm is not a bijection.
ComplexMatrix permute_conjugate(const ComplexMatrix &m, std::span<const std::size_t> perm);

/// Submatrix on rows x rows. Throws DomainError for repeated or out-of-range indices.
ComplexMatrix extract_block(const ComplexMatrix &m, std::span<const std::size_t> rows);

/// Sorted-multiset comparison: max |a_i - b_i| after sorting both descending.
/// Returns +inf when the sizes differ.
double spectrum_distance(std::vector<double> a, std::vector<double> b);

} // namespace qcg
