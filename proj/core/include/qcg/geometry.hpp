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
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "qcg/basis.hpp"
#include "qcg/channel.hpp"
#include "qcg/linalg.hpp"
#include "qcg/tolerances.hpp"

namespace qcg {

// ---------------------------------------------------------------------------
// Pauli sign bookkeeping
// ---------------------------------------------------------------------------

/// floor(alpha/2) n + floor((alpha+1)/2) m (mod 2): the sign exponent of
/// sigma^alpha (x) sigma^alpha* on the Bell state Psi_nm.
int f_exponent(int alpha, int n, int m);

/// alpha beta (alpha - beta)/2 (mod 2): sigma^beta sigma^alpha sigma^beta = (-1)^g sigma^alpha.
int g_exponent(int alpha, int beta);

// ---------------------------------------------------------------------------
// Analytic Choi spectra
// ---------------------------------------------------------------------------

struct PauliEigenvalue {
    /// Bit j-1 holds n_j (resp. m_j).
    std::size_t n = 0;
    std::size_t m = 0;
    double value = 0.0;
};

/// lambda_nm = sum_alpha (v_alpha/N) (-1)^{sum_j f(alpha_j, n_j, m_j)} for all N^2 (n, m).
/// Throws DomainError for a non-Pauli basis or a non-real v.
std::vector<PauliEigenvalue> pauli_lambdas(const CompressionVector &v,
                                           const Tolerances &tol = kDefaultTolerances);

struct HwEigenvalue {
    std::size_t l = 0;
    std::size_t m = 0;
    double value = 0.0;
};

/// lambda_lm = sum_jk v_jk omega^{mj - kl} / N. Throws DomainError for a
/// non-Heisenberg-Weyl basis or if the sum is not real within tol.spectral.
std::vector<HwEigenvalue> hw_lambdas(const CompressionVector &v,
                                     const Tolerances &tol = kDefaultTolerances);

/// theta(alpha, beta) with M_alpha M_beta = e^{i theta} M_beta M_alpha.
class PhaseTable {
  public:
    PhaseTable() = default;
    explicit PhaseTable(std::size_t count) : count_(count), theta_(count * count, 0.0) {}

    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    double &operator()(std::size_t a, std::size_t b) { return theta_[a * count_ + b]; }
    double operator()(std::size_t a, std::size_t b) const { return theta_[a * count_ + b]; }

  private:
    std::size_t count_ = 0;
    std::vector<double> theta_;
};

/// lambda_alpha = sum_beta v_beta e^{-i theta(alpha, beta)} / tr(M_beta^dag M_beta),
/// the eigenvalue on (M_alpha (x) I)|Psi>. Requires a unitary basis and a
/// phase table of matching size; throws DomainError otherwise or if any
/// imaginary part exceeds tol.spectral.
std::vector<double> unitary_basis_lambdas(const CompressionVector &v, const PhaseTable &phases,
                                          const Tolerances &tol = kDefaultTolerances);

// ---------------------------------------------------------------------------
// Simplex geometry
// ---------------------------------------------------------------------------

struct SimplexReport {
    bool isSimplex = false;
    /// Reported witness. Pairs of non-diagonal elements are preferred.
    std::optional<std::pair<std::size_t, std::size_t>> failingPair;
    std::vector<std::pair<std::size_t, std::size_t>> failingPairs;
    /// Largest |[M_a (x) M_a^*, M_b (x) M_b^*]| entry over all pairs.
    double maxCommutator = 0.0;
    /// Present only for simplex, unitary bases.
    std::optional<PhaseTable> phaseTable;
};

/// The CP region is a simplex iff every pair of tensor squares M (x) M^* commutes.
SimplexReport simplex_condition(const OperatorBasis &basis,
                                const Tolerances &tol = kDefaultTolerances);

enum class Conjugation {
    /// rho -> M^dag rho M
    AdjointLeft,
    /// rho -> M rho M^dag
    AdjointRight,
};

struct ExtremalVertex {
    CompressionVector v;
    std::size_t basisIndex = 0;
    Conjugation conjugation = Conjugation::AdjointLeft;
    /// Descending Choi spectrum, expected (N, 0, ..., 0).
    std::vector<double> choiSpectrum;
};

struct ExtremalSet {
    BasisPtr basis;
    std::vector<ExtremalVertex> vertices;
};

/**
 * Vertices of the simplex of compression vectors. Pauli bases use the
 * (-1)^{sum g} sign rule, Heisenberg-Weyl bases v_lm = omega^{lk - mj}, and any
 * other unitary phase-commuting basis v_beta = e^{i theta(alpha, beta)}.
 * Every vertex is checked to have a rank-one Choi matrix with eigenvalue N,
 * and to match the Choi matrix of its conjugation channel.
 * Throws DomainError for non-simplex or non-unitary bases.
 */
ExtremalSet extremal_vertices(const BasisPtr &basis, const Tolerances &tol = kDefaultTolerances);

// ---------------------------------------------------------------------------
// Gell-Mann block analysis
// ---------------------------------------------------------------------------

struct GellMannPairEigenvalue {
    std::size_t j = 0;
    std::size_t k = 0;
    /// +1 for |J+_jk>, -1 for |J-_jk>.
    int sign = 1;
    double value = 0.0;
};

/// The N^2 - N eigenvalues on (|j,k> +- |k,j>)/sqrt2, linear in v.
std::vector<GellMannPairEigenvalue> gellmann_pm_lambdas(const CompressionVector &v,
                                                        const Tolerances &tol = kDefaultTolerances);

/// |J+-_jk> as a vector in the N^2-dimensional Choi space.
std::vector<Complex> gellmann_pm_vector(std::size_t n, std::size_t j, std::size_t k, int sign);

struct KBlock {
    /// N x N block on span{|j,j>}.
    ComplexMatrix k;
    /// Choi-space indices j*N + j of the block.
    std::vector<std::size_t> rows;
    /// Eigenvalue sums S_0..S_N of k.
    std::vector<double> sums;
    /// Permutation that brings J to (2x2 blocks) (+) K form under permute_conjugate.
    std::vector<std::size_t> permutation;
};

/// Extracts K after verifying that J has no entries linking {|j,j>} to the
/// rest (DomainError otherwise), and computes its eigenvalue sums.
KBlock gellmann_k_block(const CompressionVector &v, const Tolerances &tol = kDefaultTolerances);

/// True iff every S_i >= -tolerance.
bool sign_criterion(const std::vector<double> &sums, double tolerance = kDefaultTolerances.sign);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

enum class Verdict { Cp, NotCp };
enum class CpMethod { AnalyticPauli, AnalyticHw, AnalyticUnitary, GellMannHybrid, Numeric };

std::string_view to_string(Verdict verdict);
std::string_view to_string(CpMethod method);

struct CpReport {
    Verdict verdict = Verdict::NotCp;
    CpMethod method = CpMethod::Numeric;
    double minEigenvalue = 0.0;
    /// Descending.
    std::vector<double> eigenvalues;
    double tolerance = 0.0;
    /// Gell-Mann hybrid only: the K-block eigenvalue-sum verdict.
    std::optional<bool> signCriterion;
    /// Set when cross-validation ran: max deviation from the eigensolver spectrum.
    std::optional<double> crossCheckDeviation;

    [[nodiscard]] bool cp() const noexcept { return verdict == Verdict::Cp; }
};

struct CertifyOptions {
    double tolerance = kDefaultTolerances.spectral;
    /// Also run the eigensolver on the full Choi matrix and record the deviation.
    bool crossValidate = false;
    Tolerances tol = kDefaultTolerances;
};

/**
 * @brief Complete-positivity certifier bound to one basis.
 *
 * Dispatches on the basis: Pauli and Heisenberg-Weyl bases use their closed
 * forms, Gell-Mann bases the pair eigenvalues plus the K-block sign criterion,
 * other unitary phase-commuting bases the phase-table formula, and anything
 * else the full eigensolver. The simplex analysis of custom bases is done
 * once at construction.
 */
class CpCertifier {
  public:
    explicit CpCertifier(BasisPtr basis, CertifyOptions options = {});

    [[nodiscard]] CpReport certify(const CompressionVector &v) const;
    [[nodiscard]] CpMethod method() const noexcept { return method_; }
    [[nodiscard]] const BasisPtr &basis() const noexcept { return basis_; }

  private:
    BasisPtr basis_;
    CertifyOptions options_;
    CpMethod method_ = CpMethod::Numeric;
    std::optional<PhaseTable> phases_;
};

CpReport certify_cp(const CompressionVector &v, const CertifyOptions &options = {});

/// Always numeric: eigensolver on the translation-channel Choi matrix.
CpReport certify_cp_translation(const CompressionVector &v, const TranslationVector &t,
                                const CertifyOptions &options = {});

// ---------------------------------------------------------------------------
// Monte Carlo sampling of the CP region
// ---------------------------------------------------------------------------

/// SplitMix64 stream; sample i of a run keyed by seed s uses stream(s, i).
class SplitMix64 {
  public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

    /// Uniform on [lo, hi) from the top 53 bits.
    double uniform(double lo, double hi);

  private:
    std::uint64_t state_;
};

/// Draws a compression vector uniformly from the box lo <= coordinate <= hi
/// (real axes; real and imaginary parts on complex planes, partner mirrored).
CompressionVector random_compression_vector(const BasisPtr &basis, SplitMix64 &rng,
                                            double lo = -1.0, double hi = 1.0);

struct SamplePoint {
    std::uint64_t index = 0;
    /// Real coordinates in compression_axes order (complex planes contribute re, im).
    std::vector<double> coordinates;
    bool cp = false;
};

struct SampleOptions {
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
    unsigned workers = 1;
    bool keepPoints = false;
    double lo = -1.0;
    double hi = 1.0;
    CertifyOptions certify;
};

struct SampleResult {
    double fraction = 0.0;
    double standardError = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t cpCount = 0;
    std::vector<SamplePoint> points;
};

/// Real coordinates of v in compression_axes order.
std::vector<double> compression_coordinates(const CompressionVector &v);

SampleResult sample_region(const BasisPtr &basis, const std::optional<TranslationVector> &t,
                           const SampleOptions &options);

} // namespace qcg
