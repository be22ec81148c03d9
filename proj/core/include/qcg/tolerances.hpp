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

namespace qcg {

/// Numerical tolerances shared across the library.
///
/// `equality` is used for structural checks (hermiticity, orthogonality,
/// pair constraints, block patterns); `spectral` for comparisons between
/// eigenvalue lists; `jacobi` is the off-diagonal stopping threshold of the
/// eigensolver; `sign` bounds how negative an eigenvalue sum may be before
/// the sign criterion rejects it.
struct Tolerances {
    double equality = 1e-10;
    double spectral = 1e-9;
    double jacobi = 1e-12;
    double sign = 1e-9;
    int maxSweeps = 100;
};

inline constexpr Tolerances kDefaultTolerances{};

} // namespace qcg
