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
#include <benchmark/benchmark.h>

#include <random>

#include "qcg/channel.hpp"
#include "qcg/geometry.hpp"
#include "qcg/linalg.hpp"

namespace {

using namespace qcg;

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = {g(rng), g(rng)};
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

void BM_Eigenvalues(benchmark::State &state) {
    std::mt19937_64 rng(7);
    const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(h));
    }
}
BENCHMARK(BM_Eigenvalues)->Arg(4)->Arg(9)->Arg(16)->Arg(36)->Arg(64);

void run_certify(benchmark::State &state, const BasisPtr &basis) {
    const CpCertifier certifier(basis);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    std::vector<Complex> v(basis->size());
    v[0] = 1.0;
    for (std::size_t a = 1; a < v.size(); ++a) {
        const auto partner = basis->pairs().partnerOf[a];
        if (partner && *partner < a) {
            v[a] = std::conj(v[*partner]);
        } else if (partner && *partner > a) {
            v[a] = {u(rng), u(rng)};
        } else {
            v[a] = u(rng);
        }
    }
    const CompressionVector cv(basis, v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certifier.certify(cv));
    }
}

void BM_CertifyPauli(benchmark::State &state) {
    run_certify(state, pauli_basis(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CertifyPauli)->Arg(1)->Arg(2)->Arg(3);

void BM_CertifyHeisenbergWeyl(benchmark::State &state) {
    run_certify(state, hw_basis(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CertifyHeisenbergWeyl)->Arg(3)->Arg(5)->Arg(8);

void BM_CertifyGellMann(benchmark::State &state) {
    run_certify(state, gellmann_basis(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CertifyGellMann)->Arg(3)->Arg(4)->Arg(6);

void BM_SampleTetrahedron(benchmark::State &state) {
    SampleOptions options;
    options.samples = static_cast<std::size_t>(state.range(0));
    options.seed = 3;
    options.workers = 1;
    const BasisPtr basis = pauli_basis(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_region(basis, std::nullopt, options));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleTetrahedron)->Arg(10000)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
