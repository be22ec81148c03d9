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
#include "qcg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "qcg/error.hpp"

namespace qcg {

int f_exponent(int alpha, int n, int m) {
    if (alpha < 0 || alpha > 3 || n < 0 || n > 1 || m < 0 || m > 1) {
        throw DomainError("f_exponent: arguments out of range");
    }
    return ((alpha / 2) * n + ((alpha + 1) / 2) * m) % 2;
}

int g_exponent(int alpha, int beta) {
    if (alpha < 0 || alpha > 3 || beta < 0 || beta > 3) {
        throw DomainError("g_exponent: arguments out of range");
    }
    const int half = alpha * beta * (alpha - beta) / 2;
    return ((half % 2) + 2) % 2;
}

namespace {

void require_kind(const CompressionVector &v, BasisKind kind, const char *who) {
    if (v.basis()->kind() != kind) {
        std::ostringstream os;
        os << who << ": expected a " << to_string(kind) << " basis, got "
           << v.basis()->describe();
        throw DomainError(os.str());
    }
}

void require_real(const CompressionVector &v, double tol, const char *who) {
    if (!v.is_real(tol)) {
        throw DomainError(std::string(who) + ": compression vector must be real for this basis");
    }
}

std::vector<Complex> roots_of_unity(std::size_t n) {
    std::vector<Complex> w(n);
    for (std::size_t e = 0; e < n; ++e) {
        w[e] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                   static_cast<double>(n));
    }
    return w;
}

bool is_diagonal(const ComplexMatrix &m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j && m(i, j) != Complex{}) {
                return false;
            }
        }
    }
    return true;
}

// Row-compressed nonzeros of a tensor square; these are very sparse for the
// named bases, which keeps the all-pairs commutator scan cheap.
struct SparseRows {
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::size_t, Complex>>> rows;
};

SparseRows sparse_tensor_square(const ComplexMatrix &m) {
    const ComplexMatrix full = kron(m, conjugate(m));
    SparseRows out;
    out.dim = full.dim();
    out.rows.resize(full.dim());
    for (std::size_t i = 0; i < full.dim(); ++i) {
        for (std::size_t j = 0; j < full.dim(); ++j) {
            if (full(i, j) != Complex{}) {
                out.rows[i].emplace_back(j, full(i, j));
            }
        }
    }
    return out;
}

// max |(ab - ba)_{ij}| using a dense scratch row.
double sparse_commutator_norm(const SparseRows &a, const SparseRows &b,
                              std::vector<Complex> &scratch, std::vector<std::size_t> &touched) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim; ++i) {
        touched.clear();
        for (const auto &[k, aik] : a.rows[i]) {
            for (const auto &[j, bkj] : b.rows[k]) {
                if (scratch[j] == Complex{}) {
                    touched.push_back(j);
                }
                scratch[j] += aik * bkj;
            }
        }
        for (const auto &[k, bik] : b.rows[i]) {
            for (const auto &[j, akj] : a.rows[k]) {
                if (scratch[j] == Complex{}) {
                    touched.push_back(j);
                }
                scratch[j] -= bik * akj;
            }
        }
        for (std::size_t j : touched) {
            worst = std::max(worst, std::abs(scratch[j]));
            scratch[j] = Complex{};
        }
    }
    return worst;
}

} // namespace

std::vector<PauliEigenvalue> pauli_lambdas(const CompressionVector &v, const Tolerances &tol) {
    require_kind(v, BasisKind::Pauli, "pauli_lambdas");
    require_real(v, tol.equality, "pauli_lambdas");
    const OperatorBasis &basis = *v.basis();
    const std::size_t d = basis.qubits();
    const std::size_t n = basis.n();
    const double scale = 1.0 / static_cast<double>(n);

    std::vector<PauliEigenvalue> out;
    out.reserve(n * n);
    for (std::size_t nbits = 0; nbits < n; ++nbits) {
        for (std::size_t mbits = 0; mbits < n; ++mbits) {
            double lambda = 0.0;
            for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
                int exponent = 0;
                std::size_t rest = alpha;
                for (std::size_t j = 0; j < d; ++j) {
                    exponent += f_exponent(static_cast<int>(rest % 4),
                                           static_cast<int>((nbits >> j) & 1U),
                                           static_cast<int>((mbits >> j) & 1U));
                    rest /= 4;
                }
                const double sign = (exponent % 2 == 0) ? 1.0 : -1.0;
                lambda += sign * v[alpha].real() * scale;
            }
            out.push_back({nbits, mbits, lambda});
        }
    }
    return out;
}

std::vector<HwEigenvalue> hw_lambdas(const CompressionVector &v, const Tolerances &tol) {
    require_kind(v, BasisKind::HeisenbergWeyl, "hw_lambdas");
    const std::size_t n = v.basis()->n();
    const auto w = roots_of_unity(n);
    const double scale = 1.0 / static_cast<double>(n);

    std::vector<HwEigenvalue> out;
    out.reserve(n * n);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t m = 0; m < n; ++m) {
            Complex lambda{};
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const std::size_t exponent = (m * j + n * n - (k * l) % n) % n;
                    lambda += v[j * n + k] * w[exponent];
                }
            }
            lambda *= scale;
            if (std::abs(lambda.imag()) > tol.spectral) {
                throw DomainError("hw_lambdas: complex eigenvalue; v violates v_jk = conj(v_-j,-k)");
            }
            out.push_back({l, m, lambda.real()});
        }
    }
    return out;
}

std::vector<double> unitary_basis_lambdas(const CompressionVector &v, const PhaseTable &phases,
                                          const Tolerances &tol) {
    const OperatorBasis &basis = *v.basis();
    if (!basis.unitary()) {
        throw DomainError("unitary_basis_lambdas: basis elements are not all unitary");
    }
    if (phases.size() != basis.size()) {
        throw DomainError("unitary_basis_lambdas: phase table does not match the basis; "
                          "the basis is not pairwise phase-commuting");
    }
    std::vector<double> out(basis.size());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        Complex lambda{};
        for (std::size_t beta = 0; beta < basis.size(); ++beta) {
            lambda += v[beta] * std::polar(1.0, -phases(alpha, beta)) / basis.norm(beta);
        }
        if (std::abs(lambda.imag()) > tol.spectral) {
            throw DomainError("unitary_basis_lambdas: complex eigenvalue encountered");
        }
        out[alpha] = lambda.real();
    }
    return out;
}

SimplexReport simplex_condition(const OperatorBasis &basis, const Tolerances &tol) {
    const std::size_t count = basis.size();
    std::vector<SparseRows> squares;
    squares.reserve(count);
    std::vector<bool> diagonal(count);
    for (std::size_t a = 0; a < count; ++a) {
        squares.push_back(sparse_tensor_square(basis.element(a)));
        diagonal[a] = is_diagonal(basis.element(a));
    }

    SimplexReport report;
    std::vector<Complex> scratch(basis.n() * basis.n());
    std::vector<std::size_t> touched;
    std::optional<std::pair<std::size_t, std::size_t>> firstAny;
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            const double c = sparse_commutator_norm(squares[a], squares[b], scratch, touched);
            report.maxCommutator = std::max(report.maxCommutator, c);
            if (c <= tol.equality) {
                continue;
            }
            report.failingPairs.emplace_back(a, b);
            if (!firstAny) {
                firstAny = std::pair{a, b};
            }
            if (!report.failingPair && !diagonal[a] && !diagonal[b]) {
                report.failingPair = std::pair{a, b};
            }
        }
    }
    if (!report.failingPair) {
        report.failingPair = firstAny;
    }
    report.isSimplex = report.failingPairs.empty();

    if (report.isSimplex && basis.unitary()) {
        PhaseTable table(count);
        bool complete = true;
        for (std::size_t a = 0; a < count && complete; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
                const auto theta = phase_commute(basis.element(a), basis.element(b), tol.equality);
                if (!theta) {
                    complete = false;
                    break;
                }
                table(a, b) = *theta;
            }
        }
        if (complete) {
            report.phaseTable = std::move(table);
        }
    }
    return report;
}

namespace {

std::vector<Complex> pauli_vertex(const OperatorBasis &basis, std::size_t beta) {
    std::vector<Complex> v(basis.size());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        int exponent = 0;
        std::size_t ra = alpha;
        std::size_t rb = beta;
        for (std::size_t j = 0; j < basis.qubits(); ++j) {
            exponent += g_exponent(static_cast<int>(ra % 4), static_cast<int>(rb % 4));
            ra /= 4;
            rb /= 4;
        }
        v[alpha] = (exponent % 2 == 0) ? 1.0 : -1.0;
    }
    return v;
}

std::vector<Complex> hw_vertex(const OperatorBasis &basis, std::size_t j, std::size_t k) {
    const std::size_t n = basis.n();
    const auto w = roots_of_unity(n);
    std::vector<Complex> v(basis.size());
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t m = 0; m < n; ++m) {
            const std::size_t exponent = ((l * k) % n + n - (m * j) % n) % n;
            v[l * n + m] = w[exponent];
        }
    }
    return v;
}

} // namespace

ExtremalSet extremal_vertices(const BasisPtr &basis, const Tolerances &tol) {
    if (!basis->unitary()) {
        throw DomainError("extremal_vertices: basis " + basis->describe() +
                          " is not unitary; extremal channels are only known for unitary bases");
    }
    const SimplexReport report = simplex_condition(*basis, tol);
    if (!report.isSimplex || !report.phaseTable) {
        throw DomainError("extremal_vertices: the CP region of " + basis->describe() +
                          " is not a simplex");
    }
    const std::size_t n = basis->n();
    const double nn = static_cast<double>(n);

    ExtremalSet out;
    out.basis = basis;
    out.vertices.reserve(basis->size());
    for (std::size_t alpha = 0; alpha < basis->size(); ++alpha) {
        std::vector<Complex> values;
        Conjugation conjugation = Conjugation::AdjointLeft;
        switch (basis->kind()) {
        case BasisKind::Pauli:
            values = pauli_vertex(*basis, alpha);
            break;
        case BasisKind::HeisenbergWeyl:
            values = hw_vertex(*basis, alpha / n, alpha % n);
            break;
        default:
            conjugation = Conjugation::AdjointRight;
            values.resize(basis->size());
            for (std::size_t beta = 0; beta < basis->size(); ++beta) {
                values[beta] = std::polar(1.0, (*report.phaseTable)(alpha, beta));
            }
            break;
        }
        CompressionVector v(basis, std::move(values), tol);
        const ChoiMatrix choi = choi_of_depolarizing(v);
        const ComplexMatrix &m = basis->element(alpha);
        const ChoiMatrix reference = choi_of_conjugation(
            conjugation == Conjugation::AdjointLeft ? m : conj_transpose(m));
        if (max_abs_diff(choi.j, reference.j) > tol.equality * nn) {
            throw Error("extremal_vertices: vertex " + std::to_string(alpha) +
                        " does not reproduce its conjugation channel");
        }
        auto spectrum = hermitian_eigenvalues(choi.j, tol);
        bool rankOne = std::abs(spectrum.front() - nn) <= tol.spectral;
        for (std::size_t i = 1; i < spectrum.size(); ++i) {
            rankOne = rankOne && std::abs(spectrum[i]) <= tol.spectral;
        }
        if (!rankOne) {
            throw Error("extremal_vertices: vertex " + std::to_string(alpha) +
                        " is not a rank-one Choi matrix");
        }
        out.vertices.push_back({std::move(v), alpha, conjugation, std::move(spectrum)});
    }

    for (std::size_t a = 0; a < out.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
            double gap = 0.0;
            for (std::size_t i = 0; i < basis->size(); ++i) {
                gap = std::max(gap, std::abs(out.vertices[a].v[i] - out.vertices[b].v[i]));
            }
            if (gap <= tol.equality) {
                throw Error("extremal_vertices: vertices " + std::to_string(a) + " and " +
                            std::to_string(b) + " coincide");
            }
        }
    }
    return out;
}

std::vector<GellMannPairEigenvalue> gellmann_pm_lambdas(const CompressionVector &v,
                                                        const Tolerances &tol) {
    require_kind(v, BasisKind::GellMann, "gellmann_pm_lambdas");
    require_real(v, tol.equality, "gellmann_pm_lambdas");
    const std::size_t n = v.basis()->n();
    std::vector<GellMannPairEigenvalue> out;
    out.reserve(n * (n - 1));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            // Z_l (x) Z_l^* acts on |J+-_jk> as 0 (l<k), -2/(l+1) (l=k), 2/(l(l+1)) (l>k).
            double base = v[0].real() / static_cast<double>(n);
            for (std::size_t l = k; l < n; ++l) {
                const double ld = static_cast<double>(l);
                const double c = (l == k) ? -2.0 / (ld + 1.0) : 2.0 / (ld * (ld + 1.0));
                base += c * v[l].real() / 2.0;
            }
            const double x = v[gellmann_x_index(n, j, k)].real() / 2.0;
            const double y = v[gellmann_y_index(n, j, k)].real() / 2.0;
            out.push_back({j, k, +1, base + x - y});
            out.push_back({j, k, -1, base - x + y});
        }
    }
    return out;
}

std::vector<Complex> gellmann_pm_vector(std::size_t n, std::size_t j, std::size_t k, int sign) {
    if (!(j < k && k < n)) {
        throw DomainError("gellmann_pm_vector: need j < k < n");
    }
    std::vector<Complex> x(n * n);
    const double r = 1.0 / std::numbers::sqrt2;
    x[j * n + k] = r;
    x[k * n + j] = sign > 0 ? r : -r;
    return x;
}

KBlock gellmann_k_block(const CompressionVector &v, const Tolerances &tol) {
    const std::size_t n = v.basis()->n();
    const ComplexMatrix j = choi_of_depolarizing(v).j;

    KBlock out;
    std::vector<bool> inBlock(n * n, false);
    for (std::size_t r = 0; r < n; ++r) {
        out.rows.push_back(r * n + r);
        inBlock[r * n + r] = true;
    }
    double leak = 0.0;
    for (std::size_t r : out.rows) {
        for (std::size_t c = 0; c < n * n; ++c) {
            if (!inBlock[c]) {
                leak = std::max({leak, std::abs(j(r, c)), std::abs(j(c, r))});
            }
        }
    }
    if (leak > tol.equality) {
        std::ostringstream os;
        os << "gellmann_k_block: Choi matrix couples the diagonal block to the rest (" << leak
           << "); basis " << v.basis()->describe() << " does not have the Gell-Mann block pattern";
        throw DomainError(os.str());
    }
    out.k = extract_block(j, out.rows);
    out.sums = charpoly_coeffs(out.k, tol);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            out.permutation.push_back(a * n + b);
            out.permutation.push_back(b * n + a);
        }
    }
    out.permutation.insert(out.permutation.end(), out.rows.begin(), out.rows.end());
    return out;
}

bool sign_criterion(const std::vector<double> &sums, double tolerance) {
    return std::all_of(sums.begin(), sums.end(), [tolerance](double s) { return s >= -tolerance; });
}

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Cp ? "cp" : "not-cp";
}

std::string_view to_string(CpMethod method) {
    switch (method) {
    case CpMethod::AnalyticPauli:
        return "analytic-pauli";
    case CpMethod::AnalyticHw:
        return "analytic-hw";
    case CpMethod::AnalyticUnitary:
        return "analytic-unitary";
    case CpMethod::GellMannHybrid:
        return "gellmann-hybrid";
    case CpMethod::Numeric:
        return "numeric";
    }
    return "numeric";
}

CpCertifier::CpCertifier(BasisPtr basis, CertifyOptions options)
    : basis_(std::move(basis)), options_(options) {
    switch (basis_->kind()) {
    case BasisKind::Pauli:
        method_ = CpMethod::AnalyticPauli;
        break;
    case BasisKind::HeisenbergWeyl:
        method_ = CpMethod::AnalyticHw;
        break;
    case BasisKind::GellMann:
        method_ = CpMethod::GellMannHybrid;
        break;
    case BasisKind::Custom:
        if (basis_->unitary()) {
            SimplexReport report = simplex_condition(*basis_, options_.tol);
            if (report.isSimplex && report.phaseTable) {
                phases_ = std::move(report.phaseTable);
                method_ = CpMethod::AnalyticUnitary;
                break;
            }
        }
        method_ = CpMethod::Numeric;
        break;
    }
}

CpReport CpCertifier::certify(const CompressionVector &v) const {
    if (v.basis() != basis_ && (v.basis()->kind() != basis_->kind() ||
                                v.basis()->elements() != basis_->elements())) {
        throw DomainError("CpCertifier: compression vector belongs to a different basis");
    }
    CpReport report;
    report.method = method_;
    report.tolerance = options_.tolerance;
    const Tolerances &tol = options_.tol;

    std::optional<ChoiMatrix> choi;
    switch (method_) {
    case CpMethod::AnalyticPauli:
        for (const auto &e : pauli_lambdas(v, tol)) {
            report.eigenvalues.push_back(e.value);
        }
        break;
    case CpMethod::AnalyticHw:
        for (const auto &e : hw_lambdas(v, tol)) {
            report.eigenvalues.push_back(e.value);
        }
        break;
    case CpMethod::AnalyticUnitary:
        report.eigenvalues = unitary_basis_lambdas(v, *phases_, tol);
        break;
    case CpMethod::GellMannHybrid: {
        double pairMin = 0.0;
        bool first = true;
        for (const auto &e : gellmann_pm_lambdas(v, tol)) {
            report.eigenvalues.push_back(e.value);
            pairMin = first ? e.value : std::min(pairMin, e.value);
            first = false;
        }
        const KBlock block = gellmann_k_block(v, tol);
        const auto kValues = hermitian_eigenvalues(block.k, tol);
        report.eigenvalues.insert(report.eigenvalues.end(), kValues.begin(), kValues.end());
        const bool bySums = sign_criterion(block.sums, tol.sign);
        report.signCriterion = bySums;
        // The eigenvalue sums decide; the eigensolver arbitrates only when
        // they disagree, which happens within ~tolerance of the boundary.
        const bool byEigen = kValues.back() >= -options_.tolerance;
        const bool blockCp = (bySums == byEigen) ? bySums : byEigen;
        report.verdict = ((first || pairMin >= -options_.tolerance) && blockCp) ? Verdict::Cp
                                                                              : Verdict::NotCp;
        break;
    }
    case CpMethod::Numeric:
        choi = choi_of_depolarizing(v);
        report.eigenvalues = hermitian_eigenvalues(choi->j, tol);
        break;
    }

    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), std::greater<>());
    report.minEigenvalue = report.eigenvalues.back();
    if (method_ != CpMethod::GellMannHybrid) {
        report.verdict =
            report.minEigenvalue >= -options_.tolerance ? Verdict::Cp : Verdict::NotCp;
    }
    if (options_.crossValidate) {
        if (!choi) {
            choi = choi_of_depolarizing(v);
        }
        report.crossCheckDeviation =
            spectrum_distance(report.eigenvalues, hermitian_eigenvalues(choi->j, tol));
    }
    return report;
}

CpReport certify_cp(const CompressionVector &v, const CertifyOptions &options) {
    return CpCertifier(v.basis(), options).certify(v);
}

CpReport certify_cp_translation(const CompressionVector &v, const TranslationVector &t,
                                const CertifyOptions &options) {
    CpReport report;
    report.method = CpMethod::Numeric;
    report.tolerance = options.tolerance;
    report.eigenvalues = hermitian_eigenvalues(choi_of_translation_channel(v, t).j, options.tol);
    report.minEigenvalue = report.eigenvalues.back();
    report.verdict = report.minEigenvalue >= -options.tolerance ? Verdict::Cp : Verdict::NotCp;
    if (options.crossValidate) {
        report.crossCheckDeviation = 0.0;
    }
    return report;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

} // namespace

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^ index));
}

SplitMix64::result_type SplitMix64::operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double SplitMix64::uniform(double lo, double hi) {
    const double unit = static_cast<double>((*this)() >> 11U) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

CompressionVector random_compression_vector(const BasisPtr &basis, SplitMix64 &rng, double lo,
                                            double hi) {
    std::vector<Complex> v(basis->size());
    v[0] = 1.0;
    for (const auto &axis : compression_axes(basis->pairs())) {
        if (axis.complex()) {
            const double re = rng.uniform(lo, hi);
            const double im = rng.uniform(lo, hi);
            v[axis.alpha] = {re, im};
            v[*axis.partner] = {re, -im};
        } else {
            v[axis.alpha] = rng.uniform(lo, hi);
        }
    }
    return {basis, std::move(v)};
}

std::vector<double> compression_coordinates(const CompressionVector &v) {
    std::vector<double> out;
    for (const auto &axis : compression_axes(v.basis()->pairs())) {
        out.push_back(v[axis.alpha].real());
        if (axis.complex()) {
            out.push_back(v[axis.alpha].imag());
        }
    }
    return out;
}

SampleResult sample_region(const BasisPtr &basis, const std::optional<TranslationVector> &t,
                           const SampleOptions &options) {
    if (options.samples == 0) {
        throw DomainError("sample_region: need at least one sample");
    }
    if (!(options.lo <= options.hi)) {
        throw DomainError("sample_region: empty sampling box");
    }
    if (t && (t->basis()->kind() != basis->kind() || t->basis()->n() != basis->n())) {
        throw DomainError("sample_region: translation vector uses a different basis");
    }
    const CpCertifier certifier(basis, options.certify);

    unsigned workers = options.workers == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                            : options.workers;
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, options.samples));

    SampleResult result;
    result.samples = options.samples;
    result.seed = options.seed;
    if (options.keepPoints) {
        result.points.resize(options.samples);
    }

    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned worker) {
        try {
            const std::uint64_t begin = options.samples * worker / workers;
            const std::uint64_t end = options.samples * (worker + 1) / workers;
            for (std::uint64_t i = begin; i < end; ++i) {
                SplitMix64 rng = SplitMix64::stream(options.seed, i);
                const CompressionVector v =
                    random_compression_vector(basis, rng, options.lo, options.hi);
                const bool cp = t ? certify_cp_translation(v, *t, options.certify).cp()
                                  : certifier.certify(v).cp();
                counts[worker] += cp ? 1 : 0;
                if (options.keepPoints) {
                    result.points[i] = {i, compression_coordinates(v), cp};
                }
            }
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
        for (auto &thread : threads) {
            thread.join();
        }
    }
    for (const auto &error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }

    for (std::uint64_t c : counts) {
        result.cpCount += c;
    }
    const double total = static_cast<double>(options.samples);
    result.fraction = static_cast<double>(result.cpCount) / total;
    result.standardError = std::sqrt(result.fraction * (1.0 - result.fraction) / total);
    return result;
}

} // namespace qcg
