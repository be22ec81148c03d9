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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcg/basis.hpp"
#include "qcg/linalg.hpp"
#include "qcg/tolerances.hpp"

namespace qcg {

/**
 * @brief Coefficients of a state in the normalised basis expansion
 * rho = (1/N)(I + sum_alpha scale_alpha a_alpha M_alpha), with a_0 = 1.
 *
 * Construction enforces a_0 = 1 and the conjugate-pair relation
 * scale_alpha a_alpha gamma = conj(scale_beta a_beta) for every discovered pair.
 */
class PolarizationVector {
  public:
    PolarizationVector(BasisPtr basis, std::vector<Complex> a,
                       const Tolerances &tol = kDefaultTolerances);

    [[nodiscard]] const BasisPtr &basis() const noexcept { return basis_; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return a_; }
    [[nodiscard]] Complex operator[](std::size_t alpha) const { return a_.at(alpha); }
    /// sqrt(sum_{alpha >= 1} |a_alpha|^2); equals 1 exactly for pure states.
    [[nodiscard]] double norm() const;

  private:
    BasisPtr basis_;
    std::vector<Complex> a_;
};

/**
 * @brief Per-axis compression factors v (v_0 = 1) of a generalized
 * depolarizing channel relative to a fixed basis.
 *
 * Paired indices must satisfy v_alpha = conj(v_beta); self-paired indices are
 * therefore real. Construction throws DomainError on any violation beyond
 * the equality tolerance.
 */
class CompressionVector {
  public:
    CompressionVector(BasisPtr basis, std::vector<Complex> v,
                      const Tolerances &tol = kDefaultTolerances);

    static CompressionVector from_real(BasisPtr basis, std::span<const double> v);
    /// v = (1, 1, ..., 1): the identity channel.
    static CompressionVector identity(BasisPtr basis);
    /// v = (1, 0, ..., 0): the completely depolarizing channel.
    static CompressionVector completely_depolarizing(BasisPtr basis);

    [[nodiscard]] const BasisPtr &basis() const noexcept { return basis_; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return v_; }
    [[nodiscard]] Complex operator[](std::size_t alpha) const { return v_.at(alpha); }
    [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
    [[nodiscard]] bool is_real(double tol = kDefaultTolerances.equality) const;
    [[nodiscard]] double max_magnitude() const;

  private:
    BasisPtr basis_;
    std::vector<Complex> v_;
};

/// Translation coefficients t (t_0 = 0) added to the polarization vector.
class TranslationVector {
  public:
    TranslationVector(BasisPtr basis, std::vector<Complex> t,
                      const Tolerances &tol = kDefaultTolerances);
    static TranslationVector zero(BasisPtr basis);

    [[nodiscard]] const BasisPtr &basis() const noexcept { return basis_; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return t_; }
    [[nodiscard]] Complex operator[](std::size_t alpha) const { return t_.at(alpha); }
    [[nodiscard]] bool is_zero() const;

  private:
    BasisPtr basis_;
    std::vector<Complex> t_;
};

/// Choi-Jamiolkowski matrix sum_{jk} Phi(|j><k|) (x) |j><k| of dimension N^2.
struct ChoiMatrix {
    ComplexMatrix j;
    std::string source;

    [[nodiscard]] std::size_t system_dim() const;
};

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix &)>;

/// Definitional Choi matrix of an arbitrary linear map on N x N matrices.
ChoiMatrix choi_from_map(std::size_t n, const LinearMap &map, std::string source = "map");

ComplexMatrix density_from_polarization(const PolarizationVector &a);

/// Throws DomainError if rho is not hermitian or tr(rho) != 1.
PolarizationVector polarization_from_density(const ComplexMatrix &rho, BasisPtr basis,
                                             const Tolerances &tol = kDefaultTolerances);

/// True when rho is hermitian with smallest eigenvalue >= -tol.
bool is_positive_semidefinite(const ComplexMatrix &rho, double tol = kDefaultTolerances.spectral);

/// Phi_v(x) = sum_alpha v_alpha tr(M_alpha^dag x)/tr(M_alpha^dag M_alpha) M_alpha.
ComplexMatrix apply_depolarizing(const CompressionVector &v, const ComplexMatrix &rho);

/// J(Phi_v) = sum_alpha v_alpha (M_alpha (x) M_alpha^*) / tr(M_alpha^dag M_alpha).
ChoiMatrix choi_of_depolarizing(const CompressionVector &v);

/// Choi matrix of rho -> m^dag rho m, from the definitional sum.
ChoiMatrix choi_of_conjugation(const ComplexMatrix &m);

/// Projection of a Choi matrix back onto the depolarizing family of a basis.
struct ExtractedCompression {
    BasisPtr basis;
    std::vector<Complex> values;
    /// max-entry distance between j and the depolarizing Choi rebuilt from values.
    double residual = 0.0;

    /// Validated compression vector; throws if values violate v_0 = 1 or the pair rule.
    [[nodiscard]] CompressionVector vector(const Tolerances &tol = kDefaultTolerances) const;
};

ExtractedCompression extract_compression_vector(const ChoiMatrix &j, const BasisPtr &basis);

/// J(Phi_{v,t}) = sum_alpha M_alpha (x) (v_alpha M_alpha^*/|M_alpha|^2 + t_alpha scale_alpha I/N).
ChoiMatrix choi_of_translation_channel(const CompressionVector &v, const TranslationVector &t);

/// Output polarization is v_alpha a_alpha + t_alpha; extended linearly via tr(x).
ComplexMatrix apply_translation_channel(const CompressionVector &v, const TranslationVector &t,
                                        const ComplexMatrix &rho);

} // namespace qcg
