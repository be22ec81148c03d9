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
#include "qcg/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcg/error.hpp"

namespace qcg {

std::string_view to_string(BasisKind kind) {
    switch (kind) {
    case BasisKind::Pauli:
        return "pauli";
    case BasisKind::GellMann:
        return "gellmann";
    case BasisKind::HeisenbergWeyl:
        return "heisenberg-weyl";
    case BasisKind::Custom:
        return "custom";
    }
    return "custom";
}

BasisKind basis_kind_from_string(std::string_view name) {
    if (name == "pauli") {
        return BasisKind::Pauli;
    }
    if (name == "gellmann" || name == "gell-mann") {
        return BasisKind::GellMann;
    }
    if (name == "heisenberg-weyl" || name == "hw") {
        return BasisKind::HeisenbergWeyl;
    }
    if (name == "custom") {
        return BasisKind::Custom;
    }
    throw FormatError("unknown basis kind '" + std::string(name) + "'");
}

OperatorBasis::OperatorBasis(BasisKind kind, std::size_t n, std::vector<ComplexMatrix> elements,
                             std::size_t qubits, const Tolerances &tol)
    : kind_(kind), n_(n), qubits_(qubits), elements_(std::move(elements)) {
    if (elements_.size() != n_ * n_) {
        throw DomainError("OperatorBasis: expected " + std::to_string(n_ * n_) +
                          " elements, got " + std::to_string(elements_.size()));
    }
    norms_.reserve(elements_.size());
    hermitian_ = true;
    unitary_ = true;
    for (const auto &m : elements_) {
        if (m.dim() != n_) {
            throw DomainError("OperatorBasis: element dimension differs from N");
        }
        norms_.push_back(hs_inner(m, m).real());
        hermitian_ = hermitian_ && is_hermitian(m, tol.equality);
        unitary_ = unitary_ && is_unitary(m, tol.equality);
    }
    pairs_ = conjugate_pair_structure(elements_, tol);
}

double OperatorBasis::polarization_scale(std::size_t alpha) const {
    const double nn = static_cast<double>(n_);
    return std::sqrt(nn * (nn - 1.0) / norm(alpha));
}

std::string OperatorBasis::label(std::size_t alpha) const {
    if (alpha >= size()) {
        throw DomainError("OperatorBasis::label: index out of range");
    }
    std::ostringstream os;
    switch (kind_) {
    case BasisKind::Pauli: {
        static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
        std::size_t rest = alpha;
        for (std::size_t j = 0; j < qubits_; ++j) {
            os << kNames[rest % 4];
            rest /= 4;
        }
        break;
    }
    case BasisKind::GellMann: {
        if (alpha == 0) {
            os << "I";
        } else if (alpha < n_) {
            os << "Z_" << alpha;
        } else {
            for (std::size_t j = 0; j + 1 < n_; ++j) {
                for (std::size_t k = j + 1; k < n_; ++k) {
                    if (gellmann_x_index(n_, j, k) == alpha) {
                        os << "X_{" << j << k << "}";
                    } else if (gellmann_y_index(n_, j, k) == alpha) {
                        os << "Y_{" << j << k << "}";
                    }
                }
            }
        }
        break;
    }
    case BasisKind::HeisenbergWeyl:
        os << "M_{" << alpha / n_ << "," << alpha % n_ << "}";
        break;
    case BasisKind::Custom:
        os << "M_" << alpha;
        break;
    }
    return os.str();
}

std::string OperatorBasis::describe() const {
    std::ostringstream os;
    os << to_string(kind_);
    if (kind_ == BasisKind::Pauli) {
        os << "(d=" << qubits_ << ")";
    } else {
        os << "(n=" << n_ << ")";
    }
    return os.str();
}

namespace {

ComplexMatrix pauli_matrix(std::size_t which) {
    const Complex i{0.0, 1.0};
    switch (which) {
    case 0:
        return {{1.0, 0.0}, {0.0, 1.0}};
    case 1:
        return {{0.0, 1.0}, {1.0, 0.0}};
    case 2:
        return {{0.0, -i}, {i, 0.0}};
    default:
        return {{1.0, 0.0}, {0.0, -1.0}};
    }
}

ComplexMatrix matrix_power(const ComplexMatrix &m, std::size_t power) {
    ComplexMatrix out = ComplexMatrix::identity(m.dim());
    for (std::size_t p = 0; p < power; ++p) {
        out = out * m;
    }
    return out;
}

} // namespace

BasisPtr pauli_basis(std::size_t d, std::size_t maxDim) {
    if (d == 0) {
        throw DomainError("pauli_basis: number of qubits must be at least 1");
    }
    if (d >= 8 * sizeof(std::size_t) / 2 || (std::size_t{1} << d) > maxDim) {
        throw DomainError("pauli_basis: N = 2^" + std::to_string(d) + " exceeds the cap of " +
                          std::to_string(maxDim));
    }
    const std::size_t n = std::size_t{1} << d;
    std::vector<ComplexMatrix> elements;
    elements.reserve(n * n);
    for (std::size_t alpha = 0; alpha < n * n; ++alpha) {
        std::size_t rest = alpha;
        ComplexMatrix m = pauli_matrix(rest % 4);
        rest /= 4;
        for (std::size_t j = 1; j < d; ++j) {
            m = kron(m, pauli_matrix(rest % 4));
            rest /= 4;
        }
        elements.push_back(std::move(m));
    }
    return std::make_shared<const OperatorBasis>(BasisKind::Pauli, n, std::move(elements), d);
}

std::size_t gellmann_x_index(std::size_t n, std::size_t j, std::size_t k) {
    if (!(j < k && k < n)) {
        throw DomainError("gellmann_x_index: need j < k < n");
    }
    return n * (1 + 2 * j) + 2 * k - (j + 1) * (j + 2);
}

std::size_t gellmann_y_index(std::size_t n, std::size_t j, std::size_t k) {
    return gellmann_x_index(n, j, k) + 1;
}

BasisPtr gellmann_basis(std::size_t n) {
    if (n < 2) {
        throw DomainError("gellmann_basis: n must be at least 2");
    }
    const Complex i{0.0, 1.0};
    std::vector<ComplexMatrix> elements(n * n);
    elements[0] = ComplexMatrix::identity(n);
    for (std::size_t l = 1; l < n; ++l) {
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        ComplexMatrix z(n);
        for (std::size_t r = 0; r < l; ++r) {
            z(r, r) = scale;
        }
        z(l, l) = -scale * static_cast<double>(l);
        elements[l] = std::move(z);
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            ComplexMatrix x(n);
            x(j, k) = 1.0;
            x(k, j) = 1.0;
            ComplexMatrix y(n);
            y(j, k) = -i;
            y(k, j) = i;
            elements[gellmann_x_index(n, j, k)] = std::move(x);
            elements[gellmann_y_index(n, j, k)] = std::move(y);
        }
    }
    return std::make_shared<const OperatorBasis>(BasisKind::GellMann, n, std::move(elements));
}

BasisPtr hw_basis(std::size_t n) {
    if (n < 2) {
        throw DomainError("hw_basis: n must be at least 2");
    }
    ComplexMatrix shift(n);
    ComplexMatrix clock(n);
    for (std::size_t j = 0; j < n; ++j) {
        shift(j, (j + 1) % n) = 1.0;
        clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                          static_cast<double>(n));
    }
    std::vector<ComplexMatrix> elements;
    elements.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const ComplexMatrix xj = matrix_power(shift, j);
        for (std::size_t k = 0; k < n; ++k) {
            elements.push_back(xj * matrix_power(clock, k));
        }
    }
    return std::make_shared<const OperatorBasis>(BasisKind::HeisenbergWeyl, n,
                                                 std::move(elements));
}

BasisPtr custom_basis(std::vector<ComplexMatrix> elements, const Tolerances &tol) {
    const BasisValidation report = validate_elements(elements, tol);
    if (!report.ok()) {
        std::ostringstream os;
        os << "custom_basis: invalid basis;";
        for (const auto &c : report.checks) {
            if (!c.passed) {
                os << " " << c.name << " (worst " << c.worst << " at " << c.alpha << ","
                   << c.beta << ")";
            }
        }
        throw DomainError(os.str());
    }
    const std::size_t n = elements.front().dim();
    return std::make_shared<const OperatorBasis>(BasisKind::Custom, n, std::move(elements), 0,
                                                 tol);
}

BasisPtr make_basis(BasisKind kind, std::size_t size) {
    switch (kind) {
    case BasisKind::Pauli:
        return pauli_basis(size);
    case BasisKind::GellMann:
        return gellmann_basis(size);
    case BasisKind::HeisenbergWeyl:
        return hw_basis(size);
    case BasisKind::Custom:
        break;
    }
    throw DomainError("make_basis: custom bases need explicit elements");
}

bool BasisValidation::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const BasisCheck &c) { return c.passed; });
}

const BasisCheck &BasisValidation::check(std::string_view name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw DomainError("BasisValidation: no check named '" + std::string(name) + "'");
}

BasisValidation validate_elements(std::span<const ComplexMatrix> elements, const Tolerances &tol) {
    BasisValidation report;
    BasisCheck shape{"shape"};
    BasisCheck identity{"identity"};
    BasisCheck traceFree{"trace-free"};
    BasisCheck orthogonal{"orthogonal"};
    BasisCheck independent{"independent"};

    if (elements.empty()) {
        shape.passed = false;
        report.checks = {shape, identity, traceFree, orthogonal, independent};
        for (auto &c : report.checks) {
            c.passed = false;
        }
        return report;
    }
    const std::size_t n = elements.front().dim();
    for (std::size_t a = 0; a < elements.size(); ++a) {
        if (elements[a].dim() != n) {
            shape.passed = false;
            shape.alpha = a;
        }
    }
    if (elements.size() != n * n) {
        shape.passed = false;
        shape.worst = static_cast<double>(elements.size());
    }
    if (!shape.passed) {
        identity.passed = traceFree.passed = orthogonal.passed = independent.passed = false;
        report.checks = {shape, identity, traceFree, orthogonal, independent};
        return report;
    }

    identity.worst = max_abs_diff(elements[0], ComplexMatrix::identity(n));
    identity.passed = identity.worst <= tol.equality;

    for (std::size_t a = 1; a < elements.size(); ++a) {
        const double t = std::abs(trace(elements[a]));
        if (t > traceFree.worst) {
            traceFree.worst = t;
            traceFree.alpha = a;
        }
    }
    traceFree.passed = traceFree.worst <= tol.equality;

    std::vector<double> norms(elements.size());
    for (std::size_t a = 0; a < elements.size(); ++a) {
        norms[a] = hs_inner(elements[a], elements[a]).real();
    }
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = a + 1; b < elements.size(); ++b) {
            const double scale = std::max(1.0, std::sqrt(norms[a] * norms[b]));
            const double g = std::abs(hs_inner(elements[a], elements[b])) / scale;
            if (g > orthogonal.worst) {
                orthogonal.worst = g;
                orthogonal.alpha = a;
                orthogonal.beta = b;
            }
        }
    }
    orthogonal.passed = orthogonal.worst <= tol.equality;

    // Gram matrix is diagonal iff orthogonal; nonsingular iff every norm is positive.
    double smallest = norms[0];
    for (std::size_t a = 0; a < norms.size(); ++a) {
        if (norms[a] < smallest) {
            smallest = norms[a];
            independent.alpha = a;
        }
    }
    independent.worst = smallest;
    independent.passed = orthogonal.passed && smallest > tol.equality;

    report.checks = {shape, identity, traceFree, orthogonal, independent};
    return report;
}

BasisValidation validate_basis(const OperatorBasis &basis, const Tolerances &tol) {
    return validate_elements(basis.elements(), tol);
}

PairStructure conjugate_pair_structure(std::span<const ComplexMatrix> elements,
                                       const Tolerances &tol) {
    const std::size_t count = elements.size();
    PairStructure out;
    out.partnerOf.assign(count, std::nullopt);
    out.gammaOf.assign(count, Complex{1.0, 0.0});

    std::vector<ComplexMatrix> adjoints;
    adjoints.reserve(count);
    std::vector<double> norms;
    norms.reserve(count);
    for (const auto &m : elements) {
        adjoints.push_back(conj_transpose(m));
        norms.push_back(hs_inner(m, m).real());
    }

    for (std::size_t a = 0; a < count; ++a) {
        const double scale = std::max(1.0, max_abs(elements[a]));
        for (std::size_t b = 0; b < count; ++b) {
            if (norms[b] <= tol.equality) {
                continue;
            }
            // M_a = gamma M_b^dag  =>  tr(M_b M_a) = gamma tr(M_b M_b^dag).
            const Complex gamma = hs_inner(adjoints[b], elements[a]) / norms[b];
            if (std::abs(gamma) <= tol.equality) {
                continue;
            }
            if (max_abs_diff(elements[a], adjoints[b] * gamma) <= tol.equality * scale) {
                out.partnerOf[a] = b;
                out.gammaOf[a] = gamma;
                break;
            }
        }
    }

    for (std::size_t a = 0; a < count; ++a) {
        const auto partner = out.partnerOf[a];
        if (!partner) {
            out.unpaired.push_back(a);
            continue;
        }
        if (*partner == a) {
            out.selfPaired.push_back(a);
            out.pairs.push_back({a, a, out.gammaOf[a]});
            if (a != 0) {
                ++out.realAxes;
            }
        } else if (a < *partner) {
            out.pairs.push_back({a, *partner, out.gammaOf[a]});
            if (a != 0) {
                ++out.complexPlanes;
            }
        }
    }
    return out;
}

PairStructure conjugate_pair_structure(const OperatorBasis &basis, const Tolerances &tol) {
    return conjugate_pair_structure(basis.elements(), tol);
}

std::vector<CompressionAxis> compression_axes(const PairStructure &pairs) {
    std::vector<CompressionAxis> axes;
    for (std::size_t a = 1; a < pairs.partnerOf.size(); ++a) {
        const auto partner = pairs.partnerOf[a];
        if (!partner || *partner == a) {
            axes.push_back({a, std::nullopt});
        } else if (a < *partner) {
            axes.push_back({a, partner});
        }
    }
    return axes;
}

ComplexMatrix change_of_basis_matrix(const OperatorBasis &m, const OperatorBasis &l) {
    if (m.n() != l.n()) {
        throw DomainError("change_of_basis_matrix: bases act on different dimensions");
    }
    const std::size_t count = m.size();
    ComplexMatrix u(count);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            u(a, b) = hs_inner(l.element(b), m.element(a)) / std::sqrt(l.norm(b) * m.norm(a));
        }
    }
    return u;
}

} // namespace qcg
