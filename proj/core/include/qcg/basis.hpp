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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcg/linalg.hpp"
#include "qcg/tolerances.hpp"

namespace qcg {

enum class BasisKind { Pauli, GellMann, HeisenbergWeyl, Custom };

std::string_view to_string(BasisKind kind);
/// Accepts "pauli", "gellmann"/"gell-mann", "heisenberg-weyl"/"hw", "custom".
BasisKind basis_kind_from_string(std::string_view name);

/// One conjugate pairing M_alpha = gamma * M_beta^dag, stored with alpha <= beta.
struct ConjugatePair {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    Complex gamma{1.0, 0.0};
};

/**
 * Which basis elements are (scaled) adjoints of each other.
 *
 * `partnerOf[alpha]` and `gammaOf[alpha]` give, for every index, the beta and
 * gamma with M_alpha = gamma * M_beta^dag. Indices with no such partner are
 * listed in `unpaired` and make the structure partial (legal for custom bases).
 * `realAxes` and `complexPlanes` count compression-space directions with the
 * identity (alpha = 0) excluded.
 */
struct PairStructure {
    std::vector<ConjugatePair> pairs;
    std::vector<std::optional<std::size_t>> partnerOf;
    std::vector<Complex> gammaOf;
    std::vector<std::size_t> selfPaired;
    std::vector<std::size_t> unpaired;
    std::size_t realAxes = 0;
    std::size_t complexPlanes = 0;

    [[nodiscard]] bool partial() const noexcept { return !unpaired.empty(); }
};

/// A real coordinate direction of compression space.
struct CompressionAxis {
    std::size_t alpha = 0;
    /// Set for complex planes: the conjugate partner whose coefficient mirrors alpha's.
    std::optional<std::size_t> partner;
    [[nodiscard]] bool complex() const noexcept { return partner.has_value(); }
};

/**
 * @brief Ordered list of N^2 trace-orthogonal operators with M_0 = I.
 *
 * Elements are kept in their textbook normalisation; `norm(alpha)` is
 * tr(M_alpha^dag M_alpha). Instances are immutable and shared through
 * BasisPtr, and cache their pair structure.
 */
class OperatorBasis {
  public:
    OperatorBasis(BasisKind kind, std::size_t n, std::vector<ComplexMatrix> elements,
                  std::size_t qubits = 0, const Tolerances &tol = kDefaultTolerances);

    [[nodiscard]] BasisKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    /// Number of qubits d for Pauli bases, 0 otherwise.
    [[nodiscard]] std::size_t qubits() const noexcept { return qubits_; }

    [[nodiscard]] const std::vector<ComplexMatrix> &elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] const ComplexMatrix &element(std::size_t alpha) const {
        return elements_.at(alpha);
    }
    [[nodiscard]] const std::vector<double> &norms() const noexcept { return norms_; }
    [[nodiscard]] double norm(std::size_t alpha) const { return norms_.at(alpha); }

    /// sqrt(N(N-1)/tr(M^dag M)), the polarization scale of element alpha.
    [[nodiscard]] double polarization_scale(std::size_t alpha) const;

    [[nodiscard]] const PairStructure &pairs() const noexcept { return pairs_; }
    [[nodiscard]] bool hermitian() const noexcept { return hermitian_; }
    [[nodiscard]] bool unitary() const noexcept { return unitary_; }

    /// Human-readable element label ("X(x)Z", "X_{01}", "M_{12}", ...).
    [[nodiscard]] std::string label(std::size_t alpha) const;
    /// Short description like "pauli(d=2)".
    [[nodiscard]] std::string describe() const;

  private:
    BasisKind kind_;
    std::size_t n_;
    std::size_t qubits_;
    std::vector<ComplexMatrix> elements_;
    std::vector<double> norms_;
    PairStructure pairs_;
    bool hermitian_ = false;
    bool unitary_ = false;
};

using BasisPtr = std::shared_ptr<const OperatorBasis>;

/// Default cap on N = 2^d for Pauli bases.
inline constexpr std::size_t kPauliMaxDim = 8;

/// Tensor products of I, X, Y, Z; alpha's least significant base-4 digit
/// selects the leftmost factor.
BasisPtr pauli_basis(std::size_t d, std::size_t maxDim = kPauliMaxDim);
/// (I, Z_1..Z_{N-1}, X_01, Y_01, ..., X_{N-2,N-1}, Y_{N-2,N-1}).
BasisPtr gellmann_basis(std::size_t n);
/// M_{jN+k} = X^j Z^k with X = sum |j><j+1| and Z = diag(omega^j).
BasisPtr hw_basis(std::size_t n);
/// Validates the elements and throws DomainError if any condition fails.
BasisPtr custom_basis(std::vector<ComplexMatrix> elements,
                      const Tolerances &tol = kDefaultTolerances);
/// Builds a named basis from a kind plus its size parameter (d for Pauli, n otherwise).
BasisPtr make_basis(BasisKind kind, std::size_t size);

/// Index of X_{jk} (j < k) in the Gell-Mann ordering; Y_{jk} is this plus one.
std::size_t gellmann_x_index(std::size_t n, std::size_t j, std::size_t k);
std::size_t gellmann_y_index(std::size_t n, std::size_t j, std::size_t k);

/// Result of one basis condition check.
struct BasisCheck {
    std::string name;
    bool passed = true;
    double worst = 0.0;
    /// Indices at which the worst violation occurs.
    std::size_t alpha = 0;
    std::size_t beta = 0;
};

struct BasisValidation {
    std::vector<BasisCheck> checks;
    [[nodiscard]] bool ok() const noexcept;
    [[nodiscard]] const BasisCheck &check(std::string_view name) const;
};

/**
 * Checks the identity element, trace-freeness, trace-orthogonality, and
 * linear independence (Gram matrix of Hilbert-Schmidt products diagonal with
 * positive entries, and N^2 elements). Never throws for malformed content;
 * failures are carried in the report.
 */
BasisValidation validate_elements(std::span<const ComplexMatrix> elements,
                                  const Tolerances &tol = kDefaultTolerances);
BasisValidation validate_basis(const OperatorBasis &basis,
                               const Tolerances &tol = kDefaultTolerances);

/// Finds, for every alpha, the unique beta and gamma with M_alpha = gamma M_beta^dag.
PairStructure conjugate_pair_structure(std::span<const ComplexMatrix> elements,
                                       const Tolerances &tol = kDefaultTolerances);
PairStructure conjugate_pair_structure(const OperatorBasis &basis,
                                       const Tolerances &tol = kDefaultTolerances);

/// Real coordinates of compression space (v_0 suppressed): one axis per
/// self-paired or unpaired index, one complex plane per conjugate pair.
std::vector<CompressionAxis> compression_axes(const PairStructure &pairs);

/// u(alpha, beta) = tr(L_beta^dag M_alpha) / sqrt(|L_beta|^2 |M_alpha|^2).
ComplexMatrix change_of_basis_matrix(const OperatorBasis &m, const OperatorBasis &l);

} // namespace qcg
