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
#include "qcg/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcg/error.hpp"

namespace qcg {

namespace {

void require_basis(const BasisPtr &basis, const char *who) {
    if (!basis) {
        throw DomainError(std::string(who) + ": null basis");
    }
}

void require_length(const BasisPtr &basis, std::size_t length, const char *who) {
    if (length != basis->size()) {
        std::ostringstream os;
        os << who << ": expected " << basis->size() << " components for " << basis->describe()
           << ", got " << length;
        throw DomainError(os.str());
    }
}

bool same_basis(const BasisPtr &a, const BasisPtr &b) {
    if (a == b) {
        return true;
    }
    return a->kind() == b->kind() && a->n() == b->n() && a->elements() == b->elements();
}

// Coefficients x_alpha with M_alpha = gamma M_beta^dag must satisfy
// x_alpha gamma = conj(x_beta) for the expanded operator to be hermitian.
void check_operator_pairs(const OperatorBasis &basis, std::span<const Complex> x,
                          double tol, const char *who) {
    const auto &pairs = basis.pairs();
    for (std::size_t a = 1; a < x.size(); ++a) {
        const auto partner = pairs.partnerOf[a];
        if (!partner) {
            continue;
        }
        const std::size_t b = *partner;
        const Complex lhs = basis.polarization_scale(a) * x[a] * pairs.gammaOf[a];
        const Complex rhs = std::conj(basis.polarization_scale(b) * x[b]);
        if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(lhs))) {
            std::ostringstream os;
            os << who << ": conjugate-pair constraint violated between components " << a
               << " and " << b;
            throw DomainError(os.str());
        }
    }
}

ComplexMatrix expand(const OperatorBasis &basis, std::span<const Complex> coefficients) {
    ComplexMatrix out(basis.n());
    for (std::size_t a = 0; a < coefficients.size(); ++a) {
        if (coefficients[a] == Complex{}) {
            continue;
        }
        out += basis.element(a) * coefficients[a];
    }
    return out;
}

} // namespace

PolarizationVector::PolarizationVector(BasisPtr basis, std::vector<Complex> a,
                                       const Tolerances &tol)
    : basis_(std::move(basis)), a_(std::move(a)) {
    require_basis(basis_, "PolarizationVector");
    require_length(basis_, a_.size(), "PolarizationVector");
    if (std::abs(a_[0] - 1.0) > tol.equality) {
        throw DomainError("PolarizationVector: a_0 must equal 1");
    }
    a_[0] = 1.0;
    check_operator_pairs(*basis_, a_, tol.equality, "PolarizationVector");
}

double PolarizationVector::norm() const {
    double s = 0.0;
    for (std::size_t a = 1; a < a_.size(); ++a) {
        s += std::norm(a_[a]);
    }
    return std::sqrt(s);
}

CompressionVector::CompressionVector(BasisPtr basis, std::vector<Complex> v,
                                     const Tolerances &tol)
    : basis_(std::move(basis)), v_(std::move(v)) {
    require_basis(basis_, "CompressionVector");
    require_length(basis_, v_.size(), "CompressionVector");
    if (std::abs(v_[0] - 1.0) > tol.equality) {
        throw DomainError("CompressionVector: v_0 must equal 1 (trace preservation)");
    }
    v_[0] = 1.0;
    const auto &pairs = basis_->pairs();
    for (std::size_t a = 1; a < v_.size(); ++a) {
        const auto partner = pairs.partnerOf[a];
        if (partner && std::abs(v_[a] - std::conj(v_[*partner])) > tol.equality) {
            std::ostringstream os;
            os << "CompressionVector: v_" << a << " must equal conj(v_" << *partner << ")";
            throw DomainError(os.str());
        }
    }
}

CompressionVector CompressionVector::from_real(BasisPtr basis, std::span<const double> v) {
    return {std::move(basis), std::vector<Complex>(v.begin(), v.end())};
}

CompressionVector CompressionVector::identity(BasisPtr basis) {
    require_basis(basis, "CompressionVector::identity");
    const std::size_t count = basis->size();
    return {std::move(basis), std::vector<Complex>(count, Complex{1.0, 0.0})};
}

CompressionVector CompressionVector::completely_depolarizing(BasisPtr basis) {
    require_basis(basis, "CompressionVector::completely_depolarizing");
    std::vector<Complex> v(basis->size());
    v[0] = 1.0;
    return {std::move(basis), std::move(v)};
}

bool CompressionVector::is_real(double tol) const {
    return std::all_of(v_.begin(), v_.end(), [tol](const Complex &x) {
        return std::abs(x.imag()) <= tol;
    });
}

double CompressionVector::max_magnitude() const {
    double m = 0.0;
    for (const auto &x : v_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

TranslationVector::TranslationVector(BasisPtr basis, std::vector<Complex> t,
                                     const Tolerances &tol)
    : basis_(std::move(basis)), t_(std::move(t)) {
    require_basis(basis_, "TranslationVector");
    require_length(basis_, t_.size(), "TranslationVector");
    if (std::abs(t_[0]) > tol.equality) {
        throw DomainError("TranslationVector: t_0 must equal 0 (trace preservation)");
    }
    t_[0] = 0.0;
    check_operator_pairs(*basis_, t_, tol.equality, "TranslationVector");
}

TranslationVector TranslationVector::zero(BasisPtr basis) {
    require_basis(basis, "TranslationVector::zero");
    const std::size_t count = basis->size();
    return {std::move(basis), std::vector<Complex>(count)};
}

bool TranslationVector::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const Complex &x) { return x == Complex{}; });
}

std::size_t ChoiMatrix::system_dim() const {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(j.dim()))));
    return n;
}

ChoiMatrix choi_from_map(std::size_t n, const LinearMap &map, std::string source) {
    ComplexMatrix j(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            ComplexMatrix unit(n);
            unit(r, c) = 1.0;
            ComplexMatrix image = map(unit);
            j += kron(image, unit);
        }
    }
    return {std::move(j), std::move(source)};
}

ComplexMatrix density_from_polarization(const PolarizationVector &a) {
    const OperatorBasis &basis = *a.basis();
    const double n = static_cast<double>(basis.n());
    std::vector<Complex> coefficients(basis.size());
    coefficients[0] = 1.0 / n;
    for (std::size_t alpha = 1; alpha < basis.size(); ++alpha) {
        coefficients[alpha] = basis.polarization_scale(alpha) * a[alpha] / n;
    }
    return expand(basis, coefficients);
}

PolarizationVector polarization_from_density(const ComplexMatrix &rho, BasisPtr basis,
                                             const Tolerances &tol) {
    require_basis(basis, "polarization_from_density");
    if (rho.dim() != basis->n()) {
        throw DomainError("polarization_from_density: state dimension differs from basis");
    }
    if (!is_hermitian(rho, tol.equality)) {
        throw DomainError("polarization_from_density: state is not hermitian");
    }
    if (std::abs(trace(rho) - 1.0) > tol.equality) {
        throw DomainError("polarization_from_density: state must have unit trace");
    }
    const double n = static_cast<double>(basis->n());
    std::vector<Complex> a(basis->size());
    a[0] = 1.0;
    for (std::size_t alpha = 1; alpha < basis->size(); ++alpha) {
        const Complex coefficient = hs_inner(basis->element(alpha), rho) / basis->norm(alpha);
        a[alpha] = n * coefficient / basis->polarization_scale(alpha);
    }
    return {std::move(basis), std::move(a), tol};
}

bool is_positive_semidefinite(const ComplexMatrix &rho, double tol) {
    if (!is_hermitian(rho)) {
        return false;
    }
    const auto values = hermitian_eigenvalues(rho);
    return values.back() >= -tol;
}

ComplexMatrix apply_depolarizing(const CompressionVector &v, const ComplexMatrix &rho) {
    const OperatorBasis &basis = *v.basis();
    if (rho.dim() != basis.n()) {
        throw DomainError("apply_depolarizing: input dimension differs from the channel basis");
    }
    std::vector<Complex> coefficients(basis.size());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        coefficients[alpha] =
            v[alpha] * hs_inner(basis.element(alpha), rho) / basis.norm(alpha);
    }
    return expand(basis, coefficients);
}

ChoiMatrix choi_of_depolarizing(const CompressionVector &v) {
    const OperatorBasis &basis = *v.basis();
    ComplexMatrix j(basis.n() * basis.n());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        if (v[alpha] == Complex{}) {
            continue;
        }
        const ComplexMatrix &m = basis.element(alpha);
        j += kron(m, conjugate(m)) * (v[alpha] / basis.norm(alpha));
    }
    return {std::move(j), "depolarizing/" + basis.describe()};
}

ChoiMatrix choi_of_conjugation(const ComplexMatrix &m) {
    const ComplexMatrix adj = conj_transpose(m);
    return choi_from_map(
        m.dim(), [&](const ComplexMatrix &x) { return adj * x * m; }, "conjugation");
}

CompressionVector ExtractedCompression::vector(const Tolerances &tol) const {
    return {basis, values, tol};
}

ExtractedCompression extract_compression_vector(const ChoiMatrix &j, const BasisPtr &basis) {
    require_basis(basis, "extract_compression_vector");
    if (j.j.dim() != basis->n() * basis->n()) {
        throw DomainError("extract_compression_vector: Choi dimension must be N^2");
    }
    ExtractedCompression out;
    out.basis = basis;
    out.values.resize(basis->size());
    ComplexMatrix rebuilt(j.j.dim());
    for (std::size_t beta = 0; beta < basis->size(); ++beta) {
        const ComplexMatrix &m = basis->element(beta);
        const ComplexMatrix term = kron(m, conjugate(m));
        out.values[beta] = hs_inner(term, j.j) / basis->norm(beta);
        rebuilt += term * (out.values[beta] / basis->norm(beta));
    }
    out.residual = max_abs_diff(rebuilt, j.j);
    return out;
}

ChoiMatrix choi_of_translation_channel(const CompressionVector &v, const TranslationVector &t) {
    if (!same_basis(v.basis(), t.basis())) {
        throw DomainError("choi_of_translation_channel: v and t use different bases");
    }
    const OperatorBasis &basis = *v.basis();
    const std::size_t n = basis.n();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    ComplexMatrix j(n * n);
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        const ComplexMatrix &m = basis.element(alpha);
        ComplexMatrix right = conjugate(m) * (v[alpha] / basis.norm(alpha));
        if (alpha != 0 && t[alpha] != Complex{}) {
            right += id * (t[alpha] * basis.polarization_scale(alpha) / static_cast<double>(n));
        }
        j += kron(m, right);
    }
    return {std::move(j), "translation/" + basis.describe()};
}

ComplexMatrix apply_translation_channel(const CompressionVector &v, const TranslationVector &t,
                                        const ComplexMatrix &rho) {
    if (!same_basis(v.basis(), t.basis())) {
        throw DomainError("apply_translation_channel: v and t use different bases");
    }
    const OperatorBasis &basis = *v.basis();
    if (rho.dim() != basis.n()) {
        throw DomainError("apply_translation_channel: input dimension differs from the basis");
    }
    const Complex tr = trace(rho);
    const double n = static_cast<double>(basis.n());
    std::vector<Complex> coefficients(basis.size());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        coefficients[alpha] = v[alpha] * hs_inner(basis.element(alpha), rho) / basis.norm(alpha);
        if (alpha != 0) {
            coefficients[alpha] += tr * t[alpha] * basis.polarization_scale(alpha) / n;
        }
    }
    return expand(basis, coefficients);
}

} // namespace qcg
