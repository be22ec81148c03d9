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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcg/basis.hpp"
#include "qcg/channel.hpp"
#include "qcg/geometry.hpp"
#include "qcg/tolerances.hpp"

namespace qcg {

/// Shortest text that parses back to the same double.
std::string format_double(double x);

/**
 * Parses "1,0.5,-1" or "1,0.3+0.2j,0.3-0.2j" style lists. Tokens are real
 * numbers or re+imj / re-imj / imj complex numbers ('i' is accepted for 'j').
 * Throws FormatError on malformed or non-finite tokens.
 */
std::vector<Complex> parse_complex_list(std::string_view text);

/// {"n", "kind", "elements"} with each element a row-major list of [re, im];
/// Pauli bases also carry "d".
std::string basis_to_json(const OperatorBasis &basis);

/**
 * Accepts the full format or the short {"kind", "n"} / {"kind", "d"} selector.
 * Named kinds with explicit elements must match the canonical construction;
 * custom kinds are validated. Throws FormatError for malformed text and
 * DomainError for elements that do not form a valid basis.
 */
BasisPtr basis_from_json(std::string_view text, const Tolerances &tol = kDefaultTolerances);

/// Raw elements of a basis document without validation, for reporting on
/// candidate bases. Short selectors expand to the named construction.
std::vector<ComplexMatrix> basis_elements_from_json(std::string_view text);

struct ChannelInput {
    CompressionVector v;
    std::optional<TranslationVector> t;
};

/// {"basis", "v", "t"?}; the basis is written as the short selector for named kinds.
std::string channel_to_json(const CompressionVector &v,
                            const std::optional<TranslationVector> &t = std::nullopt);

ChannelInput channel_from_json(std::string_view text, const Tolerances &tol = kDefaultTolerances);

/// {"verdict", "method", "minEigenvalue", "eigenvalues", "tolerance"} plus
/// "signCriterion" / "crossCheckDeviation" when present.
std::string report_to_json(const CpReport &report);
CpReport report_from_json(std::string_view text);

/// {"dim", "source", "matrix"} with the matrix as a row-major list of [re, im].
std::string choi_to_json(const ChoiMatrix &choi);
ChoiMatrix choi_from_json(std::string_view text);

/// "index,<coordinates>,cp" where real axes are "v<alpha>" and complex
/// planes "v<alpha>_re,v<alpha>_im".
std::string sample_csv_header(const OperatorBasis &basis);
std::string sample_csv(const OperatorBasis &basis, const SampleResult &result);

/// {"fraction", "stderr", "samples", "seed"}.
std::string sample_summary_json(const SampleResult &result);
SampleResult sample_summary_from_json(std::string_view text);

} // namespace qcg
