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
#include "qcg/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qcg/error.hpp"

namespace qcg {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw DomainError(os.str());
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw DomainError("ComplexMatrix: dimension must be at least 1");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) {
        throw DomainError("ComplexMatrix: dimension must be at least 1");
    }
    if (data_.size() != dim * dim) {
        throw DomainError("ComplexMatrix: expected " + std::to_string(dim * dim) +
                          " entries, got " + std::to_string(data_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DomainError("ComplexMatrix: rows must form a square matrix");
        }
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs, rhs, "operator*");
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

std::vector<Complex> apply(const ComplexMatrix &m, std::span<const Complex> x) {
    if (x.size() != m.dim()) {
        throw DomainError("apply: vector length does not match matrix dimension");
    }
    std::vector<Complex> y(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.dim(); ++j) {
            acc += m(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix &a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out(i, j) = std::conj(a(j, i));
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (auto &x : out.entries()) {
        x = std::conj(x);
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out(i, j) = a(j, i);
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += a(i, i);
    }
    return acc;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "hs_inner");
    Complex acc{};
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        acc += std::conj(ea[i]) * eb[i];
    }
    return acc;
}

double max_abs(const ComplexMatrix &a) {
    double m = 0.0;
    for (const auto &x : a.entries()) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

HermiticityDefect hermiticity_defect(const ComplexMatrix &a) {
    HermiticityDefect worst;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            const double d = std::abs(a(i, j) - std::conj(a(j, i)));
            if (d > worst.magnitude) {
                worst = {d, i, j};
            }
        }
    }
    return worst;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    return hermiticity_defect(a).magnitude <= tol;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    return max_abs_diff(conj_transpose(a) * a, ComplexMatrix::identity(a.dim())) <= tol;
}

double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "commutator_norm");
    return max_abs_diff(a * b, b * a);
}

std::optional<double> phase_commute(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    require_same_dim(a, b, "phase_commute");
    if (max_abs(a) == 0.0 || max_abs(b) == 0.0) {
        throw DomainError("phase_commute: zero matrix input");
    }
    const ComplexMatrix ab = a * b;
    const ComplexMatrix ba = b * a;
    const double scale = std::max(max_abs(ab), max_abs(ba));
    if (scale <= tol) {
        // Both products vanish, so every phase works; report the trivial one.
        return 0.0;
    }
    const auto eab = ab.entries();
    const auto pivot = static_cast<std::size_t>(
        std::distance(eab.begin(), std::max_element(eab.begin(), eab.end(),
                                                    [](const Complex &x, const Complex &y) {
                                                        return std::abs(x) < std::abs(y);
                                                    })));
    const Complex denom = ba.entries()[pivot];
    if (std::abs(denom) <= tol * scale) {
        return std::nullopt;
    }
    double theta = std::arg(eab[pivot] / denom);
    const Complex phase = std::polar(1.0, theta);
    if (max_abs_diff(ab, ba * phase) > tol * scale) {
        return std::nullopt;
    }
    if (theta <= -std::numbers::pi + tol) {
        theta += 2.0 * std::numbers::pi;
    }
    return theta;
}

namespace {

double max_off_diagonal(const ComplexMatrix &a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                m = std::max(m, std::abs(a(i, j)));
            }
        }
    }
    return m;
}

double frobenius(const ComplexMatrix &a) {
    double s = 0.0;
    for (const auto &x : a.entries()) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q); accumulates into v when given.
void rotate(ComplexMatrix &a, ComplexMatrix *v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    double t = 0.0;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = vkp * upp + vkq * uqp;
            (*v)(k, q) = vkp * upq + vkq * uqq;
        }
    }
}

std::size_t first_nonzero(const ComplexMatrix &v, std::size_t col, double tol) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v(i, col)) > tol) {
            return i;
        }
    }
    return v.dim();
}

} // namespace

Spectrum hermitian_eigensystem(const ComplexMatrix &h, bool withVectors, const Tolerances &tol) {
    const auto defect = hermiticity_defect(h);
    if (defect.magnitude > tol.equality) {
        std::ostringstream os;
        os << "hermitian_eigensystem: matrix is not hermitian; worst entry (" << defect.row
           << ", " << defect.col << ") differs from its conjugate mirror by " << defect.magnitude;
        throw DomainError(os.str());
    }
    const std::size_t n = h.dim();
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        }
    }
    std::optional<ComplexMatrix> v;
    if (withVectors) {
        v = ComplexMatrix::identity(n);
    }

    const double threshold = std::max(tol.jacobi, 4.0 * DBL_EPSILON * frobenius(a));
    int sweeps = 0;
    while (max_off_diagonal(a) > threshold) {
        if (sweeps == tol.maxSweeps) {
            throw Error("hermitian_eigensystem: Jacobi iteration did not converge in " +
                        std::to_string(tol.maxSweeps) + " sweeps");
        }
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v ? &*v : nullptr, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });
    if (v) {
        // Degenerate clusters: order by the first nonzero eigenvector component.
        std::size_t start = 0;
        while (start < n) {
            std::size_t end = start + 1;
            while (end < n && a(order[end - 1], order[end - 1]).real() -
                                      a(order[end], order[end]).real() <=
                                  tol.spectral) {
                ++end;
            }
            std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                             order.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](std::size_t x, std::size_t y) {
                                 return first_nonzero(*v, x, tol.equality) <
                                        first_nonzero(*v, y, tol.equality);
                             });
            start = end;
        }
    }

    Spectrum out;
    out.sweeps = sweeps;
    out.values.reserve(n);
    for (std::size_t idx : order) {
        out.values.push_back(a(idx, idx).real());
    }
    if (v) {
        ComplexMatrix sorted(n);
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t src = order[c];
            const std::size_t lead = first_nonzero(*v, src, tol.equality);
            Complex phase = 1.0;
            if (lead < n) {
                const Complex x = (*v)(lead, src);
                phase = std::conj(x) / std::abs(x);
            }
            for (std::size_t r = 0; r < n; ++r) {
                sorted(r, c) = (*v)(r, src) * phase;
            }
        }
        out.vectors = std::move(sorted);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h, const Tolerances &tol) {
    return hermitian_eigensystem(h, false, tol).values;
}

std::vector<double> charpoly_coeffs(const ComplexMatrix &k, const Tolerances &tol) {
    const std::size_t n = k.dim();
    std::vector<double> s(n + 1, 0.0);
    s[0] = 1.0;
    if (n > kFaddeevLeVerrierMaxDim) {
        // e_j via repeated multiplication by (1 + lambda x).
        for (double lambda : hermitian_eigenvalues(k, tol)) {
            for (std::size_t j = n; j >= 1; --j) {
                s[j] += lambda * s[j - 1];
            }
        }
        return s;
    }
    const auto defect = hermiticity_defect(k);
    if (defect.magnitude > tol.equality) {
        throw DomainError("charpoly_coeffs: matrix is not hermitian");
    }
    // Faddeev-LeVerrier: c[n] = 1, M_k = A M_{k-1} + c[n-k+1] I, c[n-k] = -tr(A M_k)/k.
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    ComplexMatrix m(n);
    const ComplexMatrix id = ComplexMatrix::identity(n);
    for (std::size_t step = 1; step <= n; ++step) {
        m = k * m + id * c[n - step + 1];
        c[n - step] = -trace(k * m) / static_cast<double>(step);
    }
    for (std::size_t j = 0; j <= n; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s[j] = sign * c[n - j].real();
    }
    return s;
}

ComplexMatrix permute_conjugate(const ComplexMatrix &m, std::span<const std::size_t> perm) {
    const std::size_t n = m.dim();
    if (perm.size() != n) {
        throw DomainError("permute_conjugate: permutation length differs from matrix dimension");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) {
            throw DomainError("permute_conjugate: not a permutation of 0..dim-1");
        }
        seen[p] = true;
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = m(perm[i], perm[j]);
        }
    }
    return out;
}

ComplexMatrix extract_block(const ComplexMatrix &m, std::span<const std::size_t> rows) {
    if (rows.empty()) {
        throw DomainError("extract_block: empty index list");
    }
    std::vector<bool> seen(m.dim(), false);
    for (std::size_t r : rows) {
        if (r >= m.dim()) {
            throw DomainError("extract_block: index " + std::to_string(r) + " out of range");
        }
        if (seen[r]) {
            throw DomainError("extract_block: repeated index " + std::to_string(r));
        }
        seen[r] = true;
    }
    ComplexMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            out(i, j) = m(rows[i], rows[j]);
        }
    }
    return out;
}

double spectrum_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace qcg
