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
#include "qcg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "qcg/channel.hpp"
#include "qcg/error.hpp"
#include "qcg/geometry.hpp"
#include "qcg/io.hpp"

namespace qcg::cli {

using nlohmann::json;

namespace {

struct Config {
    std::string basis;
    std::optional<std::size_t> d;
    std::optional<std::size_t> n;
    std::string channel;
    std::string v;
    std::string t;
    std::string out;
    std::string csv;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    unsigned workers = 1;
    double lo = -1.0;
    double hi = 1.0;
    bool crossValidate = false;
    bool emitSpectrum = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_file(const std::string &path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

double default_tolerance() {
    const char *env = std::getenv("QCG_TOL");
    if (env == nullptr || *env == '\0') {
        return kDefaultTolerances.spectral;
    }
    char *end = nullptr;
    const double value = std::strtod(env, &end);
    if (*end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
        throw FormatError(std::string("QCG_TOL must be a positive number, got '") + env + "'");
    }
    return value;
}

CertifyOptions certify_options(const Config &cfg) {
    CertifyOptions options;
    options.tolerance = cfg.tol ? *cfg.tol : default_tolerance();
    options.crossValidate = cfg.crossValidate;
    return options;
}

BasisPtr resolve_basis(const Config &cfg) {
    if (cfg.basis.empty()) {
        throw FormatError("--basis is required");
    }
    if (is_file(cfg.basis)) {
        return basis_from_json(read_file(cfg.basis));
    }
    const BasisKind kind = basis_kind_from_string(cfg.basis);
    switch (kind) {
    case BasisKind::Pauli:
        if (cfg.d) {
            return pauli_basis(*cfg.d);
        }
        if (cfg.n) {
            return basis_from_json(json{{"kind", "pauli"}, {"n", *cfg.n}}.dump());
        }
        throw FormatError("pauli bases need --d (or --n = 2^d)");
    case BasisKind::GellMann:
    case BasisKind::HeisenbergWeyl:
        if (!cfg.n) {
            throw FormatError(std::string(to_string(kind)) + " bases need --n");
        }
        return make_basis(kind, *cfg.n);
    case BasisKind::Custom:
        break;
    }
    throw FormatError("custom bases are given as a path to a basis JSON file");
}

std::vector<Complex> resolve_values(const BasisPtr &basis, const std::string &text,
                                    const char *key) {
    std::vector<Complex> values;
    if (is_file(text)) {
        json j;
        try {
            j = json::parse(read_file(text));
        } catch (const json::exception &e) {
            throw FormatError("'" + text + "': invalid JSON: " + e.what());
        }
        if (j.is_object() && j.contains(key)) {
            j = j.at(key);
        }
        if (!j.is_array()) {
            throw FormatError("'" + text + "': expected a list of numbers or [re, im] pairs");
        }
        for (const auto &z : j) {
            if (z.is_number()) {
                values.emplace_back(z.get<double>(), 0.0);
            } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
                values.emplace_back(z[0].get<double>(), z[1].get<double>());
            } else {
                throw FormatError("'" + text + "': bad entry " + z.dump());
            }
        }
    } else {
        values = parse_complex_list(text);
    }
    if (values.size() != basis->size()) {
        std::ostringstream os;
        os << "--" << key << " has " << values.size() << " entries; " << basis->describe()
           << " needs " << basis->size() << " (N^2, including the leading component)";
        throw FormatError(os.str());
    }
    return values;
}

ChannelInput resolve_channel(const Config &cfg) {
    if (!cfg.channel.empty()) {
        if (!cfg.v.empty() || !cfg.basis.empty()) {
            throw FormatError("--channel cannot be combined with --basis or --v");
        }
        ChannelInput input = channel_from_json(read_file(cfg.channel));
        if (!cfg.t.empty()) {
            input.t.emplace(input.v.basis(), resolve_values(input.v.basis(), cfg.t, "t"));
        }
        return input;
    }
    if (cfg.v.empty()) {
        throw FormatError("give either --channel or --basis with --v");
    }
    BasisPtr basis = resolve_basis(cfg);
    ChannelInput input{CompressionVector(basis, resolve_values(basis, cfg.v, "v")), std::nullopt};
    if (!cfg.t.empty()) {
        input.t.emplace(basis, resolve_values(basis, cfg.t, "t"));
    }
    return input;
}

void emit(const Config &cfg, const std::string &text, std::ostream &out) {
    if (cfg.out.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw FormatError("cannot write '" + cfg.out + "'");
    }
    file << text << '\n';
    if (!file) {
        throw FormatError("failed writing '" + cfg.out + "'");
    }
}

std::vector<std::string> axis_names(const OperatorBasis &basis) {
    std::vector<std::string> names;
    for (const auto &axis : compression_axes(basis.pairs())) {
        const std::string label = basis.label(axis.alpha);
        if (axis.complex()) {
            names.push_back("Re " + label);
            names.push_back("Im " + label);
        } else {
            names.push_back(label);
        }
    }
    return names;
}

json complex_array(std::span<const Complex> values) {
    json out = json::array();
    for (const Complex &z : values) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

json cmd_basis_gen(const Config &cfg) { return json::parse(basis_to_json(*resolve_basis(cfg))); }

int cmd_basis_validate(const Config &cfg, std::ostream &out) {
    std::vector<ComplexMatrix> elements;
    if (is_file(cfg.basis)) {
        elements = basis_elements_from_json(read_file(cfg.basis));
    } else {
        elements = resolve_basis(cfg)->elements();
    }
    const BasisValidation validation = validate_elements(elements);
    json report;
    report["ok"] = validation.ok();
    report["n"] = elements.empty() ? 0 : elements.front().dim();
    report["size"] = elements.size();
    json checks = json::array();
    for (const auto &c : validation.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"worst", c.worst},
                          {"alpha", c.alpha},
                          {"beta", c.beta}});
    }
    report["checks"] = std::move(checks);
    if (validation.ok()) {
        const BasisPtr basis = custom_basis(elements);
        const PairStructure &pairs = basis->pairs();
        report["hermitian"] = basis->hermitian();
        report["unitary"] = basis->unitary();
        report["pairs"] = {{"realAxes", pairs.realAxes},
                           {"complexPlanes", pairs.complexPlanes},
                           {"unpaired", pairs.unpaired}};
    }
    emit(cfg, report.dump(2), out);
    return validation.ok() ? kExitOk : kExitDomain;
}

json cmd_choi(const Config &cfg) {
    const ChannelInput input = resolve_channel(cfg);
    const ChoiMatrix choi = input.t ? choi_of_translation_channel(input.v, *input.t)
                                    : choi_of_depolarizing(input.v);
    json report = json::parse(choi_to_json(choi));
    const Complex tr = trace(choi.j);
    report["trace"] = {tr.real(), tr.imag()};
    if (cfg.emitSpectrum) {
        report["eigenvalues"] = hermitian_eigenvalues(choi.j);
    }
    return report;
}

json cmd_certify(const Config &cfg) {
    const ChannelInput input = resolve_channel(cfg);
    if (input.t && !input.t->is_zero()) {
        throw DomainError("the channel has a translation vector; use certify-t");
    }
    const CertifyOptions options = certify_options(cfg);
    const CpReport report = CpCertifier(input.v.basis(), options).certify(input.v);
    json out = json::parse(report_to_json(report));
    out["basis"] = input.v.basis()->describe();
    if (cfg.emitSpectrum) {
        out["choiSpectrum"] = hermitian_eigenvalues(choi_of_depolarizing(input.v).j);
    }
    return out;
}

json cmd_certify_t(const Config &cfg) {
    const ChannelInput input = resolve_channel(cfg);
    if (!input.t) {
        throw FormatError("certify-t needs a translation vector (--t or 't' in the channel file)");
    }
    const CpReport report = certify_cp_translation(input.v, *input.t, certify_options(cfg));
    json out = json::parse(report_to_json(report));
    out["basis"] = input.v.basis()->describe();
    return out;
}

json cmd_extremals(const Config &cfg) {
    const BasisPtr basis = resolve_basis(cfg);
    const ExtremalSet set = extremal_vertices(basis);
    json vertices = json::array();
    for (const auto &vertex : set.vertices) {
        vertices.push_back(
            {{"index", vertex.basisIndex},
             {"label", basis->label(vertex.basisIndex)},
             {"channel", vertex.conjugation == Conjugation::AdjointLeft ? "M^dag rho M"
                                                                        : "M rho M^dag"},
             {"coordinates", compression_coordinates(vertex.v)},
             {"v", complex_array(vertex.v.values())},
             {"choiSpectrum", vertex.choiSpectrum}});
    }
    return {{"basis", basis->describe()}, {"axes", axis_names(*basis)}, {"vertices", vertices}};
}

json cmd_simplex_check(const Config &cfg) {
    const BasisPtr basis = resolve_basis(cfg);
    const SimplexReport report = simplex_condition(*basis);
    json out = {{"basis", basis->describe()},
                {"isSimplex", report.isSimplex},
                {"maxCommutator", report.maxCommutator}};
    if (report.failingPair) {
        const auto [a, b] = *report.failingPair;
        out["failingPair"] = {
            {"alpha", a}, {"beta", b}, {"labels", {basis->label(a), basis->label(b)}}};
    } else {
        out["failingPair"] = nullptr;
    }
    json pairs = json::array();
    for (const auto &[a, b] : report.failingPairs) {
        pairs.push_back({a, b});
    }
    out["failingPairs"] = std::move(pairs);
    if (report.phaseTable) {
        json table = json::array();
        for (std::size_t a = 0; a < report.phaseTable->size(); ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < report.phaseTable->size(); ++b) {
                row.push_back((*report.phaseTable)(a, b));
            }
            table.push_back(std::move(row));
        }
        out["phaseTable"] = std::move(table);
    }
    return out;
}

json cmd_sample(const Config &cfg) {
    std::optional<TranslationVector> t;
    BasisPtr basis;
    if (!cfg.channel.empty()) {
        if (!cfg.basis.empty()) {
            throw FormatError("--channel cannot be combined with --basis");
        }
        const ChannelInput input = channel_from_json(read_file(cfg.channel));
        basis = input.v.basis();
        t = input.t;
    } else {
        basis = resolve_basis(cfg);
    }
    if (!cfg.t.empty()) {
        t.emplace(basis, resolve_values(basis, cfg.t, "t"));
    }
    SampleOptions options;
    options.samples = cfg.samples;
    options.seed = cfg.seed;
    options.workers = cfg.workers;
    options.keepPoints = !cfg.csv.empty();
    options.lo = cfg.lo;
    options.hi = cfg.hi;
    options.certify = certify_options(cfg);
    const SampleResult result = sample_region(basis, t, options);
    if (!cfg.csv.empty()) {
        std::ofstream file(cfg.csv, std::ios::binary);
        if (!file) {
            throw FormatError("cannot write '" + cfg.csv + "'");
        }
        file << sample_csv(*basis, result);
    }
    return json::parse(sample_summary_json(result));
}

} // namespace

std::string figure_data(const BasisPtr &basis, const Tolerances &tol) {
    const SimplexReport report = simplex_condition(*basis, tol);
    if (!report.isSimplex || !report.phaseTable) {
        std::ostringstream os;
        os << "the CP region of " << basis->describe() << " is not a simplex";
        if (report.failingPair) {
            os << " (" << basis->label(report.failingPair->first) << " and "
               << basis->label(report.failingPair->second) << " fail the commutation test)";
        }
        os << "; use `sample` to map it numerically";
        throw DomainError(os.str());
    }
    const ExtremalSet set = extremal_vertices(basis, tol);

    json vertices = json::array();
    for (const auto &vertex : set.vertices) {
        vertices.push_back(compression_coordinates(vertex.v));
    }
    json edges = json::array();
    for (std::size_t a = 0; a < set.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < set.vertices.size(); ++b) {
            edges.push_back({a, b});
        }
    }
    json out = {{"basis", basis->describe()},
                {"axes", axis_names(*basis)},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)}};

    if (basis->n() == 2) {
        // lambda_alpha = c + g.x in the real coordinates; the facet is
        // lambda_alpha = 0 and the CP side is lambda_alpha >= 0.
        const PhaseTable &phases = *report.phaseTable;
        const auto axes = compression_axes(basis->pairs());
        json facets = json::array();
        for (std::size_t alpha = 0; alpha < basis->size(); ++alpha) {
            const auto coeff = [&](std::size_t beta) {
                return std::polar(1.0, -phases(alpha, beta)) / basis->norm(beta);
            };
            std::vector<double> grad;
            for (const auto &axis : axes) {
                if (axis.complex()) {
                    grad.push_back((coeff(axis.alpha) + coeff(*axis.partner)).real());
                    grad.push_back(
                        (Complex{0, 1} * (coeff(axis.alpha) - coeff(*axis.partner))).real());
                } else {
                    grad.push_back(coeff(axis.alpha).real());
                }
            }
            double length = 0.0;
            for (double g : grad) {
                length += g * g;
            }
            length = std::sqrt(length);
            std::vector<double> normal;
            for (double g : grad) {
                normal.push_back(-g / length);
            }
            facets.push_back({{"index", alpha},
                              {"normal", normal},
                              {"offset", coeff(0).real() / length}});
        }
        out["facets"] = std::move(facets);
    }
    return out.dump(2);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Generalized depolarizing channels: bases, Choi matrices and CP certification",
                 "qcg"};
    app.require_subcommand(1);

    const auto add_basis = [&cfg](CLI::App *cmd) {
        cmd->add_option("--basis", cfg.basis,
                        "pauli | gellmann | hw | heisenberg-weyl, or a basis JSON file");
        cmd->add_option("--d", cfg.d, "number of qubits (pauli)")->check(CLI::PositiveNumber);
        cmd->add_option("--n", cfg.n, "dimension N")->check(CLI::PositiveNumber);
    };
    const auto add_channel = [&cfg, &add_basis](CLI::App *cmd) {
        add_basis(cmd);
        cmd->add_option("--v", cfg.v, "compression vector: \"1,a,b+cj,...\" (N^2 entries) or JSON file");
        cmd->add_option("--t", cfg.t, "translation vector, same syntax as --v");
        cmd->add_option("--channel", cfg.channel, "channel JSON file");
    };
    const auto add_common = [&cfg](CLI::App *cmd) {
        cmd->add_option("--out", cfg.out, "output file (default stdout)");
        cmd->add_option("--tol", cfg.tol, "verdict tolerance (default 1e-9 or $QCG_TOL)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App *basisCmd = app.add_subcommand("basis", "generate or validate operator bases");
    basisCmd->require_subcommand(1);
    CLI::App *gen = basisCmd->add_subcommand("gen", "emit a named basis as JSON");
    CLI::App *validate = basisCmd->add_subcommand("validate", "check the basis conditions");
    CLI::App *choi = app.add_subcommand("choi", "Choi matrix of a channel");
    CLI::App *certify = app.add_subcommand("certify", "certify complete positivity");
    CLI::App *certifyT =
        app.add_subcommand("certify-t", "certify a compress-and-translate channel");
    CLI::App *extremals = app.add_subcommand("extremals", "vertices of a simplex CP region");
    CLI::App *simplex = app.add_subcommand("simplex-check", "test the simplex condition");
    CLI::App *sample = app.add_subcommand("sample", "Monte Carlo estimate of the CP fraction");
    CLI::App *figure = app.add_subcommand("figure-data", "plot-ready simplex geometry");

    for (CLI::App *cmd : {gen, validate, extremals, simplex, figure}) {
        add_basis(cmd);
        add_common(cmd);
    }
    for (CLI::App *cmd : {choi, certify, certifyT}) {
        add_channel(cmd);
        add_common(cmd);
    }
    choi->add_flag("--emit-spectrum", cfg.emitSpectrum, "also report the Choi eigenvalues");
    certify->add_flag("--emit-spectrum", cfg.emitSpectrum,
                      "also report the numeric Choi spectrum");
    certify->add_flag("--cross-validate", cfg.crossValidate,
                      "compare against the eigensolver");
    certifyT->add_flag("--cross-validate", cfg.crossValidate,
                       "compare against the eigensolver");
    add_basis(sample);
    add_common(sample);
    sample->add_option("--t", cfg.t, "translation vector applied to every sample");
    sample->add_option("--channel", cfg.channel, "channel JSON file providing basis and t");
    sample->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--seed", cfg.seed, "random seed");
    sample->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    sample->add_option("--lo", cfg.lo, "lower edge of the sampling box");
    sample->add_option("--hi", cfg.hi, "upper edge of the sampling box");
    sample->add_option("--csv", cfg.csv, "write sampled points as CSV");
    sample->add_flag("--cross-validate", cfg.crossValidate, "compare against the eigensolver");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (validate->parsed()) {
            return cmd_basis_validate(cfg, out);
        }
        json result;
        if (gen->parsed()) {
            result = cmd_basis_gen(cfg);
        } else if (choi->parsed()) {
            result = cmd_choi(cfg);
        } else if (certify->parsed()) {
            result = cmd_certify(cfg);
        } else if (certifyT->parsed()) {
            result = cmd_certify_t(cfg);
        } else if (extremals->parsed()) {
            result = cmd_extremals(cfg);
        } else if (simplex->parsed()) {
            result = cmd_simplex_check(cfg);
        } else if (sample->parsed()) {
            result = cmd_sample(cfg);
        } else if (figure->parsed()) {
            emit(cfg, figure_data(resolve_basis(cfg)), out);
            return kExitOk;
        }
        emit(cfg, result.dump(2), out);
        return kExitOk;
    } catch (const FormatError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

} // namespace qcg::cli
