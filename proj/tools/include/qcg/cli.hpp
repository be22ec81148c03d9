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

#include <iosfwd>
#include <string>
#include <vector>

#include "qcg/basis.hpp"
#include "qcg/tolerances.hpp"

namespace qcg::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/**
 * Runs one command. `args` excludes the program name. Output goes to the
 * --out file when given, otherwise to `out`; diagnostics go to `err`.
 * A not-cp verdict is a normal result and still returns kExitOk.
 */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/**
 * Plot-ready geometry of a simplex CP region: vertex coordinates (v_0
 * suppressed), all vertex-pair edges and, for N = 2, the facet planes.
 * Throws DomainError for non-simplex bases.
 */
std::string figure_data(const BasisPtr &basis, const Tolerances &tol = kDefaultTolerances);

} // namespace qcg::cli
