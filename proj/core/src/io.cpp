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
#include "qcg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qcg/error.hpp"

namespace qcg {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j, const char *what) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw FormatError(std::string(what) + ": expected [re, im], got " + j.dump());
}

std::vector<Complex> complex_list_from_json(const json &j, const char *what) {
    if (!j.is_array()) {
        throw FormatError(std::string(what) + ": expected a list");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto &z : j) {
        out.push_back(complex_from_json(z, what));
    }
    return out;
}

json matrix_to_json(const ComplexMatrix &m) {
    json out = json::array();
    for (const Complex &z : m.entries()) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

ComplexMatrix matrix_from_json(const json &j, std::size_t dim, const char *what) {
    auto entries = complex_list_from_json(j, what);
    if (entries.size() != dim * dim) {
        std::ostringstream os;
        os << what << ": expected " << dim * dim << " entries, got " << entries.size();
        throw FormatError(os.str());
    }
    return {dim, std::move(entries)};
}

json parse(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw FormatError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

template <class T> T field(const json &j, const char *key, const char *what) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string(what) + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw FormatError(std::string(what) + ": field '" + key + "' has the wrong type");
    }
}

std::size_t pauli_qubits_for(std::size_t n) {
    std::size_t d = 0;
    while ((std::size_t{1} << d) < n) {
        ++d;
    }
    if ((std::size_t{1} << d) != n || d == 0) {
        throw FormatError("basis: pauli bases need n = 2^d, got n = " + std::to_string(n));
    }
    return d;
}

BasisPtr basis_from_value(const json &j, const Tolerances &tol) {
    constexpr const char *what = "basis";
    const auto kindName = field<std::string>(j, "kind", what);
    const BasisKind kind = basis_kind_from_string(kindName);
    const bool hasElements = j.contains("elements");

    if (kind == BasisKind::Custom) {
        if (!hasElements) {
            throw FormatError("basis: custom bases need 'elements'");
        }
        const json &elems = j.at("elements");
        if (!elems.is_array() || elems.empty()) {
            throw FormatError("basis: 'elements' must be a non-empty list");
        }
        std::size_t n = 0;
        if (j.contains("n")) {
            n = field<std::size_t>(j, "n", what);
        } else {
            n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(elems.size()))));
        }
        if (n == 0 || elems.size() != n * n) {
            throw FormatError("basis: expected n^2 = " + std::to_string(n * n) + " elements, got " +
                              std::to_string(elems.size()));
        }
        std::vector<ComplexMatrix> elements;
        elements.reserve(elems.size());
        for (const auto &e : elems) {
            elements.push_back(matrix_from_json(e, n, "basis element"));
        }
        return custom_basis(std::move(elements), tol);
    }

    std::size_t size = 0;
    if (kind == BasisKind::Pauli && j.contains("d")) {
        size = field<std::size_t>(j, "d", what);
        if (j.contains("n") && field<std::size_t>(j, "n", what) != (std::size_t{1} << size)) {
            throw FormatError("basis: 'n' and 'd' disagree");
        }
    } else {
        const auto n = field<std::size_t>(j, "n", what);
        size = kind == BasisKind::Pauli ? pauli_qubits_for(n) : n;
    }
    BasisPtr basis = make_basis(kind, size);

    if (hasElements) {
        const json &elems = j.at("elements");
        if (!elems.is_array() || elems.size() != basis->size()) {
            throw FormatError("basis: element count does not match " + basis->describe());
        }
        for (std::size_t a = 0; a < basis->size(); ++a) {
            const ComplexMatrix m = matrix_from_json(elems[a], basis->n(), "basis element");
            if (max_abs_diff(m, basis->element(a)) > tol.equality) {
                throw FormatError("basis: element " + std::to_string(a) + " differs from the " +
                                  basis->describe() + " construction");
            }
        }
    }
    return basis;
}

json basis_selector(const OperatorBasis &basis) {
    if (basis.kind() == BasisKind::Custom) {
        return json::parse(basis_to_json(basis));
    }
    json out = {{"kind", std::string(to_string(basis.kind()))}, {"n", basis.n()}};
    if (basis.kind() == BasisKind::Pauli) {
        out["d"] = basis.qubits();
    }
    return out;
}

CpMethod method_from_string(const std::string &name) {
    for (CpMethod m : {CpMethod::AnalyticPauli, CpMethod::AnalyticHw, CpMethod::AnalyticUnitary,
                       CpMethod::GellMannHybrid, CpMethod::Numeric}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw FormatError("report: unknown method '" + name + "'");
}

bool parse_number(std::string_view s, double &out) {
    if (s.empty()) {
        return false;
    }
    const std::string copy(s);
    char *end = nullptr;
    out = std::strtod(copy.c_str(), &end);
    return end == copy.c_str() + copy.size() && std::isfinite(out);
}

// Imaginary part text without the trailing unit: "", "+", "-" mean +-1.
bool parse_imaginary(std::string_view s, double &out) {
    if (s.empty() || s == "+") {
        out = 1.0;
        return true;
    }
    if (s == "-") {
        out = -1.0;
        return true;
    }
    return parse_number(s, out);
}

Complex parse_complex_token(std::string_view token) {
    const auto bad = [&] { return FormatError("invalid number '" + std::string(token) + "'"); };
    if (token.empty()) {
        throw bad();
    }
    const char last = token.back();
    if (last != 'j' && last != 'i') {
        double re = 0.0;
        if (!parse_number(token, re)) {
            throw bad();
        }
        return {re, 0.0};
    }
    const std::string_view body = token.substr(0, token.size() - 1);
    // Split at the last sign that is not the leading one and not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    double re = 0.0;
    double im = 0.0;
    if (split == std::string_view::npos) {
        if (!parse_imaginary(body, im)) {
            throw bad();
        }
        return {0.0, im};
    }
    if (!parse_number(body.substr(0, split), re) || !parse_imaginary(body.substr(split), im)) {
        throw bad();
    }
    return {re, im};
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    if (trim(text).empty()) {
        throw FormatError("empty number list");
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        out.push_back(parse_complex_token(token));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::string basis_to_json(const OperatorBasis &basis) {
    json out;
    out["kind"] = std::string(to_string(basis.kind()));
    out["n"] = basis.n();
    if (basis.kind() == BasisKind::Pauli) {
        out["d"] = basis.qubits();
    }
    json elements = json::array();
    for (const auto &m : basis.elements()) {
        elements.push_back(matrix_to_json(m));
    }
    out["elements"] = std::move(elements);
    return out.dump();
}

BasisPtr basis_from_json(std::string_view text, const Tolerances &tol) {
    return basis_from_value(parse(text, "basis"), tol);
}

std::vector<ComplexMatrix> basis_elements_from_json(std::string_view text) {
    const json j = parse(text, "basis");
    const BasisKind kind = basis_kind_from_string(field<std::string>(j, "kind", "basis"));
    if (kind != BasisKind::Custom && !j.contains("elements")) {
        return basis_from_value(j, kDefaultTolerances)->elements();
    }
    if (!j.contains("elements") || !j.at("elements").is_array() || j.at("elements").empty()) {
        throw FormatError("basis: 'elements' must be a non-empty list");
    }
    const json &elems = j.at("elements");
    const std::size_t entries = elems[0].is_array() ? elems[0].size() : 0;
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(entries))));
    if (n == 0 || n * n != entries) {
        throw FormatError("basis: element 0 is not a square matrix");
    }
    std::vector<ComplexMatrix> out;
    out.reserve(elems.size());
    for (const auto &e : elems) {
        out.push_back(matrix_from_json(e, n, "basis element"));
    }
    return out;
}

std::string channel_to_json(const CompressionVector &v, const std::optional<TranslationVector> &t) {
    json out;
    out["basis"] = basis_selector(*v.basis());
    json values = json::array();
    for (const Complex &z : v.values()) {
        values.push_back(complex_to_json(z));
    }
    out["v"] = std::move(values);
    if (t) {
        json tv = json::array();
        for (const Complex &z : t->values()) {
            tv.push_back(complex_to_json(z));
        }
        out["t"] = std::move(tv);
    }
    return out.dump();
}

ChannelInput channel_from_json(std::string_view text, const Tolerances &tol) {
    const json j = parse(text, "channel");
    if (!j.is_object() || !j.contains("basis") || !j.contains("v")) {
        throw FormatError("channel: need 'basis' and 'v'");
    }
    BasisPtr basis = basis_from_value(j.at("basis"), tol);
    auto values = complex_list_from_json(j.at("v"), "channel v");
    if (values.size() != basis->size()) {
        throw FormatError("channel: v has " + std::to_string(values.size()) +
                          " entries, expected " + std::to_string(basis->size()) +
                          " (including v_0 = 1)");
    }
    ChannelInput out{CompressionVector(basis, std::move(values), tol), std::nullopt};
    if (j.contains("t") && !j.at("t").is_null()) {
        auto t = complex_list_from_json(j.at("t"), "channel t");
        if (t.size() != basis->size()) {
            throw FormatError("channel: t has " + std::to_string(t.size()) + " entries, expected " +
                              std::to_string(basis->size()));
        }
        out.t.emplace(basis, std::move(t), tol);
    }
    return out;
}

std::string report_to_json(const CpReport &report) {
    json out;
    out["verdict"] = std::string(to_string(report.verdict));
    out["method"] = std::string(to_string(report.method));
    out["minEigenvalue"] = report.minEigenvalue;
    out["eigenvalues"] = report.eigenvalues;
    out["tolerance"] = report.tolerance;
    if (report.signCriterion) {
        out["signCriterion"] = *report.signCriterion;
    }
    if (report.crossCheckDeviation) {
        out["crossCheckDeviation"] = *report.crossCheckDeviation;
    }
    return out.dump();
}

CpReport report_from_json(std::string_view text) {
    constexpr const char *what = "report";
    const json j = parse(text, what);
    CpReport out;
    const auto verdict = field<std::string>(j, "verdict", what);
    if (verdict != "cp" && verdict != "not-cp") {
        throw FormatError("report: unknown verdict '" + verdict + "'");
    }
    out.verdict = verdict == "cp" ? Verdict::Cp : Verdict::NotCp;
    out.method = method_from_string(field<std::string>(j, "method", what));
    out.minEigenvalue = field<double>(j, "minEigenvalue", what);
    out.eigenvalues = field<std::vector<double>>(j, "eigenvalues", what);
    out.tolerance = field<double>(j, "tolerance", what);
    if (j.contains("signCriterion")) {
        out.signCriterion = field<bool>(j, "signCriterion", what);
    }
    if (j.contains("crossCheckDeviation")) {
        out.crossCheckDeviation = field<double>(j, "crossCheckDeviation", what);
    }
    return out;
}

std::string choi_to_json(const ChoiMatrix &choi) {
    json out;
    out["dim"] = choi.j.dim();
    out["source"] = choi.source;
    out["matrix"] = matrix_to_json(choi.j);
    return out.dump();
}

ChoiMatrix choi_from_json(std::string_view text) {
    constexpr const char *what = "choi";
    const json j = parse(text, what);
    const auto dim = field<std::size_t>(j, "dim", what);
    if (dim == 0 || !j.contains("matrix")) {
        throw FormatError("choi: need a positive 'dim' and a 'matrix'");
    }
    ChoiMatrix out{matrix_from_json(j.at("matrix"), dim, "choi matrix"), "json"};
    if (j.contains("source")) {
        out.source = field<std::string>(j, "source", what);
    }
    return out;
}

std::string sample_csv_header(const OperatorBasis &basis) {
    std::string out = "index";
    for (const auto &axis : compression_axes(basis.pairs())) {
        const std::string name = "v" + std::to_string(axis.alpha);
        if (axis.complex()) {
            out += "," + name + "_re," + name + "_im";
        } else {
            out += "," + name;
        }
    }
    return out + ",cp";
}

std::string sample_csv(const OperatorBasis &basis, const SampleResult &result) {
    std::string out = sample_csv_header(basis) + "\n";
    for (const auto &p : result.points) {
        out += std::to_string(p.index);
        for (double c : p.coordinates) {
            out += ",";
            out += format_double(c);
        }
        out += p.cp ? ",1\n" : ",0\n";
    }
    return out;
}

std::string sample_summary_json(const SampleResult &result) {
    json out;
    out["fraction"] = result.fraction;
    out["stderr"] = result.standardError;
    out["samples"] = result.samples;
    out["seed"] = result.seed;
    return out.dump();
}

SampleResult sample_summary_from_json(std::string_view text) {
    constexpr const char *what = "sample summary";
    const json j = parse(text, what);
    SampleResult out;
    out.fraction = field<double>(j, "fraction", what);
    out.standardError = field<double>(j, "stderr", what);
    out.samples = field<std::uint64_t>(j, "samples", what);
    out.seed = field<std::uint64_t>(j, "seed", what);
    out.cpCount = static_cast<std::uint64_t>(
        std::llround(out.fraction * static_cast<double>(out.samples)));
    return out;
}

} // namespace qcg
