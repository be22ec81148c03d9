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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qcg/basis.hpp"
#include "qcg/channel.hpp"
#include "qcg/geometry.hpp"
#include "qcg/linalg.hpp"

namespace qcg::testing {

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = {g(rng), g(rng)};
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    const ComplexMatrix m = random_matrix(n, rng);
    return (m + conj_transpose(m)) * Complex{0.5, 0.0};
}

/// Hermitian matrix with a prescribed spectrum, rotated by a random unitary.
inline ComplexMatrix hermitian_with_spectrum(const std::vector<double> &values,
                                             std::mt19937_64 &rng) {
    const std::size_t n = values.size();
    // Gram-Schmidt on a random complex matrix gives a unitary.
    ComplexMatrix q = random_matrix(n, rng);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            Complex dot{};
            for (std::size_t r = 0; r < n; ++r) {
                dot += std::conj(q(r, p)) * q(r, c);
            }
            for (std::size_t r = 0; r < n; ++r) {
                q(r, c) -= dot * q(r, p);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            norm += std::norm(q(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) {
            q(r, c) /= norm;
        }
    }
    return q * ComplexMatrix::diagonal(std::span<const double>(values)) * conj_transpose(q);
}

inline std::vector<Complex> random_ket(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> psi(n);
    double norm = 0.0;
    for (auto &z : psi) {
        z = {g(rng), g(rng)};
        norm += std::norm(z);
    }
    for (auto &z : psi) {
        z /= std::sqrt(norm);
    }
    return psi;
}

inline ComplexMatrix projector(const std::vector<Complex> &psi) {
    ComplexMatrix p(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            p(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return p;
}

inline ComplexMatrix random_density(std::size_t n, std::mt19937_64 &rng) {
    const ComplexMatrix m = random_matrix(n, rng);
    ComplexMatrix rho = m * conj_transpose(m);
    return rho * Complex{1.0 / trace(rho).real(), 0.0};
}

/// Random compression vector in the [-1, 1] box respecting the pair constraints.
inline CompressionVector random_v(const BasisPtr &basis, std::mt19937_64 &rng) {
    SplitMix64 gen(rng());
    return random_compression_vector(basis, gen);
}

/// Random translation vector in the box, respecting the scaled pair constraint
/// c_a t_a gamma = conj(c_b t_b) with t_0 = 0.
inline TranslationVector random_t(const BasisPtr &basis, std::mt19937_64 &rng,
                                  double scale = 0.3) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const PairStructure &pairs = basis->pairs();
    std::vector<Complex> t(basis->size());
    std::vector<bool> done(basis->size(), false);
    done[0] = true;
    for (std::size_t a = 1; a < basis->size(); ++a) {
        if (done[a]) {
            continue;
        }
        done[a] = true;
        const auto partner = pairs.partnerOf[a];
        if (!partner) {
            t[a] = u(rng);
            continue;
        }
        const Complex gamma = pairs.gammaOf[a];
        if (*partner == a) {
            t[a] = u(rng) * std::polar(1.0, -std::arg(gamma) / 2.0);
            continue;
        }
        const std::size_t b = *partner;
        t[a] = {u(rng), u(rng)};
        t[b] = std::conj(basis->polarization_scale(a) * t[a] * gamma) / basis->polarization_scale(b);
        done[b] = true;
    }
    return {basis, std::move(t)};
}

inline std::vector<double> sorted_desc(std::vector<double> x) {
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
}

/// Elementary symmetric polynomials of `roots` by expanding prod (t - r).
inline std::vector<double> symmetric_functions(const std::vector<double> &roots) {
    // coeffs[k] multiplies t^{n-k}; e_k = (-1)^k coeffs[k].
    std::vector<double> coeffs{1.0};
    for (double r : roots) {
        std::vector<double> next(coeffs.size() + 1, 0.0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k] += coeffs[k];
            next[k + 1] -= r * coeffs[k];
        }
        coeffs = std::move(next);
    }
    for (std::size_t k = 1; k < coeffs.size(); k += 2) {
        coeffs[k] = -coeffs[k];
    }
    return coeffs;
}

} // namespace qcg::testing
