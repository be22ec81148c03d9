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
#include <gtest/gtest.h>

#include "qcg/basis.hpp"
#include "qcg/error.hpp"
#include "support.hpp"

namespace qcg {
namespace {

const Complex I1{0.0, 1.0};
const ComplexMatrix X{{0, 1}, {1, 0}};
const ComplexMatrix Y{{0, -I1}, {I1, 0}};
const ComplexMatrix Z{{1, 0}, {0, -1}};

void expect_valid(const OperatorBasis &b, double tol) {
    const BasisValidation report = validate_basis(b);
    EXPECT_TRUE(report.ok()) << b.describe();
    for (const auto &c : report.checks) {
        if (c.name != "independent") {
            EXPECT_LE(c.worst, tol) << b.describe() << " " << c.name;
        }
    }
}

TEST(PauliBasis, SingleQubitOrder) {
    const BasisPtr b = pauli_basis(1);
    ASSERT_EQ(b->size(), 4U);
    EXPECT_EQ(b->element(0), ComplexMatrix::identity(2));
    EXPECT_EQ(b->element(1), X);
    EXPECT_EQ(b->element(2), Y);
    EXPECT_EQ(b->element(3), Z);
    EXPECT_EQ(b->kind(), BasisKind::Pauli);
}

TEST(PauliBasis, DigitOrder) {
    const BasisPtr b = pauli_basis(2);
    EXPECT_EQ(b->element(5), kron(X, X));
    EXPECT_EQ(b->element(0), ComplexMatrix::identity(4));
    // alpha = 1 + 4*3: alpha_1 = X is the leftmost factor.
    EXPECT_EQ(b->element(13), kron(X, Z));
    EXPECT_EQ(b->element(7), kron(Z, X));
}

TEST(PauliBasis, ElementsAreHermitianUnitaryInvolutions) {
    for (std::size_t d : {1U, 2U, 3U}) {
        const BasisPtr b = pauli_basis(d);
        EXPECT_TRUE(b->hermitian());
        EXPECT_TRUE(b->unitary());
        for (std::size_t a = 0; a < b->size(); ++a) {
            EXPECT_EQ(b->norm(a), static_cast<double>(b->n()));
            EXPECT_EQ(b->element(a) * b->element(a), ComplexMatrix::identity(b->n()));
        }
        expect_valid(*b, 1e-12);
    }
    EXPECT_THROW((void)pauli_basis(0), DomainError);
    EXPECT_THROW((void)pauli_basis(4), DomainError);
}

TEST(GellMannBasis, ReducesToPauliForQubit) {
    const BasisPtr g = gellmann_basis(2);
    EXPECT_EQ(g->element(0), ComplexMatrix::identity(2));
    EXPECT_EQ(g->element(1), Z);
    EXPECT_EQ(g->element(2), X);
    EXPECT_EQ(g->element(3), Y);
}

TEST(GellMannBasis, DiagonalGenerators) {
    const BasisPtr g = gellmann_basis(3);
    const std::vector<double> z1{1, -1, 0};
    EXPECT_LE(max_abs_diff(g->element(1), ComplexMatrix::diagonal(std::span<const double>(z1))),
              1e-15);
    const double r = 1.0 / std::sqrt(3.0);
    const std::vector<double> z2{r, r, -2 * r};
    EXPECT_LE(max_abs_diff(g->element(2), ComplexMatrix::diagonal(std::span<const double>(z2))),
              1e-15);
}

TEST(GellMannBasis, IndexMap) {
    EXPECT_EQ(gellmann_x_index(3, 0, 1), 3U);
    EXPECT_EQ(gellmann_y_index(3, 0, 1), 4U);
    for (std::size_t n : {3U, 4U, 5U}) {
        const BasisPtr g = gellmann_basis(n);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::size_t x = gellmann_x_index(n, j, k);
                EXPECT_EQ(x, n * (1 + 2 * j) + 2 * k - (j + 1) * (j + 2));
                EXPECT_EQ(g->element(x)(j, k), Complex{1});
                EXPECT_EQ(g->element(x)(k, j), Complex{1});
                EXPECT_EQ(g->element(x + 1)(j, k), -I1);
                EXPECT_EQ(g->element(x + 1)(k, j), I1);
            }
        }
        for (std::size_t a = 1; a < g->size(); ++a) {
            EXPECT_NEAR(g->norm(a), 2.0, 1e-14);
        }
        EXPECT_EQ(g->norm(0), static_cast<double>(n));
        EXPECT_TRUE(g->hermitian());
        expect_valid(*g, 1e-12);
    }
    EXPECT_THROW((void)gellmann_basis(1), DomainError);
}

TEST(HwBasis, QubitElements) {
    const BasisPtr h = hw_basis(2);
    EXPECT_EQ(h->element(0), ComplexMatrix::identity(2));
    EXPECT_LE(max_abs_diff(h->element(1), Z), 1e-15);
    EXPECT_EQ(h->element(2), X);
    EXPECT_LE(max_abs_diff(h->element(3), X * Z), 1e-15);
    EXPECT_LE(max_abs_diff(h->element(3), -I1 * Y), 1e-15);
}

TEST(HwBasis, QutritProductEntry) {
    const BasisPtr h = hw_basis(3);
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    EXPECT_LE(std::abs(h->element(4)(0, 1) - w), 1e-15);
    // X = sum |j><j+1| is the lowering shift.
    EXPECT_EQ(h->element(3)(0, 1), Complex{1});
    EXPECT_EQ(h->element(3)(2, 0), Complex{1});
}

TEST(HwBasis, UnitaryAndPhaseCommuting) {
    for (std::size_t n : {2U, 3U, 4U, 5U}) {
        const BasisPtr h = hw_basis(n);
        EXPECT_TRUE(h->unitary());
        expect_valid(*h, 1e-12);
        for (std::size_t a = 0; a < h->size(); ++a) {
            EXPECT_EQ(h->norm(a), static_cast<double>(n));
            for (std::size_t b = 0; b < h->size(); ++b) {
                EXPECT_TRUE(phase_commute(h->element(a), h->element(b))) << a << "," << b;
            }
        }
    }
    EXPECT_THROW((void)hw_basis(1), DomainError);
}

TEST(GellMannBasis, SomePairDoesNotPhaseCommute) {
    for (std::size_t n : {3U, 4U}) {
        const BasisPtr g = gellmann_basis(n);
        bool found = false;
        for (std::size_t a = 0; a < g->size() && !found; ++a) {
            for (std::size_t b = 0; b < g->size() && !found; ++b) {
                found = !phase_commute(g->element(a), g->element(b));
            }
        }
        EXPECT_TRUE(found);
    }
}

TEST(ValidateBasis, DuplicatedIdentityFails) {
    auto elements = pauli_basis(1)->elements();
    elements[1] = ComplexMatrix::identity(2);
    const BasisValidation report = validate_elements(elements);
    EXPECT_FALSE(report.ok());
    EXPECT_FALSE(report.check("orthogonal").passed);
    EXPECT_FALSE(report.check("trace-free").passed);
    EXPECT_TRUE(report.check("identity").passed);
    EXPECT_THROW((void)custom_basis(elements), DomainError);
}

TEST(ValidateBasis, WrongCountAndShape) {
    auto elements = pauli_basis(1)->elements();
    elements.pop_back();
    EXPECT_FALSE(validate_elements(elements).ok());
    elements.push_back(ComplexMatrix::identity(3));
    EXPECT_FALSE(validate_elements(elements).check("shape").passed);
}

TEST(PairStructure, HermitianBasisIsSelfPaired) {
    const BasisPtr p = pauli_basis(1);
    const PairStructure &s = p->pairs();
    EXPECT_EQ(s.selfPaired.size(), 4U);
    EXPECT_EQ(s.realAxes, 3U);
    EXPECT_EQ(s.complexPlanes, 0U);
    for (std::size_t a = 0; a < 4; ++a) {
        EXPECT_EQ(s.partnerOf[a], a);
        EXPECT_LE(std::abs(s.gammaOf[a] - Complex{1}), 1e-12);
    }
}

TEST(PairStructure, HwQutritHasFourComplexPlanes) {
    const PairStructure &s = hw_basis(3)->pairs();
    EXPECT_EQ(s.selfPaired, (std::vector<std::size_t>{0}));
    EXPECT_EQ(s.complexPlanes, 4U);
    EXPECT_EQ(s.realAxes, 0U);
}

TEST(PairStructure, HwQubitIsAllReal) {
    const PairStructure &s = hw_basis(2)->pairs();
    EXPECT_EQ(s.selfPaired.size(), 4U);
    EXPECT_EQ(s.realAxes, 3U);
    EXPECT_EQ(s.complexPlanes, 0U);
}

TEST(PairStructure, EvenHwCounts) {
    // Three real axes from (j,k) in {0, N/2}^2 minus the identity.
    const PairStructure &s = hw_basis(4)->pairs();
    EXPECT_EQ(s.realAxes, 3U);
    EXPECT_EQ(s.complexPlanes, (16U - 4U) / 2U);
}

TEST(PairStructure, InvolutionAndCounting) {
    for (const BasisPtr &b : {pauli_basis(2), gellmann_basis(3), hw_basis(3), hw_basis(4),
                              hw_basis(5)}) {
        const PairStructure &s = b->pairs();
        EXPECT_FALSE(s.partial());
        for (std::size_t a = 0; a < b->size(); ++a) {
            ASSERT_TRUE(s.partnerOf[a]);
            EXPECT_EQ(*s.partnerOf[*s.partnerOf[a]], a);
            EXPECT_NEAR(std::abs(s.gammaOf[a]), 1.0, 1e-12);
            const ComplexMatrix rebuilt =
                s.gammaOf[a] * conj_transpose(b->element(*s.partnerOf[a]));
            EXPECT_LE(max_abs_diff(rebuilt, b->element(a)), 1e-12);
        }
        EXPECT_EQ(s.realAxes + 2 * s.complexPlanes, b->size() - 1) << b->describe();
    }
}

TEST(PairStructure, CustomBasisMayBePartial) {
    // Mixing Z and Z^2 keeps orthogonality but breaks the adjoint pairing.
    auto elements = hw_basis(3)->elements();
    const ComplexMatrix m = elements[1] + elements[2] * Complex{2.0};
    const ComplexMatrix n = elements[1] * Complex{2.0} - elements[2];
    elements[1] = m;
    elements[2] = n;
    const BasisPtr b = custom_basis(elements);
    EXPECT_TRUE(b->pairs().partial());
    EXPECT_EQ(b->kind(), BasisKind::Custom);
}

TEST(ChangeOfBasis, SameBasisIsIdentity) {
    for (const BasisPtr &b : {pauli_basis(1), gellmann_basis(3), hw_basis(3)}) {
        EXPECT_LE(max_abs_diff(change_of_basis_matrix(*b, *b), ComplexMatrix::identity(b->size())),
                  1e-12);
    }
}

TEST(ChangeOfBasis, PauliToHwQubitYRow) {
    const ComplexMatrix u = change_of_basis_matrix(*pauli_basis(1), *hw_basis(2));
    for (std::size_t b = 0; b < 4; ++b) {
        const Complex expected = (b == 3) ? I1 : Complex{};
        EXPECT_LE(std::abs(u(2, b) - expected), 1e-15) << b;
    }
}

TEST(ChangeOfBasis, UnitaryAndRealForHermitianBases) {
    const ComplexMatrix u = change_of_basis_matrix(*pauli_basis(2), *gellmann_basis(4));
    EXPECT_LE(max_abs_diff(conj_transpose(u) * u, ComplexMatrix::identity(16)), 1e-10);
    double imag = 0.0;
    for (const Complex &z : u.entries()) {
        imag = std::max(imag, std::abs(z.imag()));
    }
    EXPECT_LE(imag, 1e-15);
    const ComplexMatrix w = change_of_basis_matrix(*hw_basis(3), *gellmann_basis(3));
    EXPECT_TRUE(is_unitary(w, 1e-10));
    EXPECT_THROW((void)change_of_basis_matrix(*pauli_basis(1), *hw_basis(3)), DomainError);
}

TEST(BasisKind, NamesRoundTrip) {
    for (BasisKind k : {BasisKind::Pauli, BasisKind::GellMann, BasisKind::HeisenbergWeyl,
                        BasisKind::Custom}) {
        EXPECT_EQ(basis_kind_from_string(to_string(k)), k);
    }
    EXPECT_EQ(basis_kind_from_string("hw"), BasisKind::HeisenbergWeyl);
    EXPECT_THROW((void)basis_kind_from_string("bogus"), FormatError);
}

TEST(Labels, ReadableNames) {
    EXPECT_EQ(gellmann_basis(3)->label(3), "X_{01}");
    EXPECT_EQ(gellmann_basis(3)->label(5), "X_{02}");
    EXPECT_EQ(pauli_basis(1)->label(3), "Z");
}

} // namespace
} // namespace qcg
