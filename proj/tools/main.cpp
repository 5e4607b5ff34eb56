// Copyright 2026 The stinekit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stinekit/diagnostics.hpp"
#include "stinekit/dilation.hpp"
#include "stinekit/io.hpp"
#include "stinekit/linalg.hpp"

namespace {

using namespace stinekit;

constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;

/// A verification check exceeded its tolerance; maps to exit code 3.
class ToleranceFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    std::size_t steps = 100;  // number of intervals; the grid has steps+1 points
};

GridSpec parse_grid(const std::string &text) {
    GridSpec spec;
    std::istringstream in(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw ValidationError("grid spec must be start:stop:steps");
    }
    try {
        spec.start = std::stod(parts[0]);
        spec.stop = std::stod(parts[1]);
        spec.steps = static_cast<std::size_t>(std::stoull(parts[2]));
    } catch (const std::exception &) {
        throw ValidationError("grid spec must be start:stop:steps with numeric fields");
    }
    if (spec.steps < 1 || !(spec.stop > spec.start) || spec.start < 0.0) {
        throw ValidationError("grid spec requires steps >= 1 and stop > start >= 0");
    }
    return spec;
}

double default_tolerance() {
    if (const char *env = std::getenv("STINEKIT_TOL")) {
        try {
            const double tol = std::stod(env);
            if (tol > 0.0) {
                return tol;
            }
        } catch (const std::exception &) {
        }
        throw ValidationError("STINEKIT_TOL must be a positive number");
    }
    return kDefaultTol;
}

void emit_json(const Json &j, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << dump_canonical(j);
    } else {
        write_json_file(out_path, j);
    }
}

Channel load_channel_representation(const Json &doc, const std::string &expected_type) {
    const std::string type = doc.contains("type") ? doc.at("type").get<std::string>() : "";
    if (type != expected_type) {
        throw ValidationError("input document type '" + type + "' does not match --from " +
                              expected_type);
    }
    if (expected_type == "choi") {
        const std::size_t n = doc.at("in_dim").get<std::size_t>();
        const std::size_t m = doc.at("out_dim").get<std::size_t>();
        return channel_from_choi(matrix_from_json(doc.at("matrix")), n, m);
    }
    if (expected_type == "kraus") {
        return channel_from_kraus(kraus_from_json(doc));
    }
    if (expected_type == "stinespring") {
        return channel_from_stinespring(stinespring_from_json(doc));
    }
    throw ValidationError("unknown representation: " + expected_type);
}

int run_convert(const std::string &in_path, const std::string &from, const std::string &to,
                const std::string &out_path, double tol, std::uint64_t seed) {
    const Json doc = read_json_file(in_path);
    const Channel source = load_channel_representation(doc, from);
    const std::size_t n = source.in_dim();
    const std::size_t m = source.out_dim();

    Json result;
    std::string warning;
    if (to == "choi") {
        result = choi_to_json(choi_of(source), n, m);
    } else if (to == "kraus") {
        KrausSet kraus;
        try {
            kraus = kraus_from_choi(choi_of(source), n, m, tol);
        } catch (const std::invalid_argument &err) {
            throw ValidationError(err.what());
        }
        result = kraus_to_json(kraus);
    } else if (to == "stinespring") {
        KrausSet kraus = (from == "kraus") ? kraus_from_json(doc)
                                           : kraus_from_choi(choi_of(source), n, m, tol);
        const StinespringDilation dilation = stinespring_from_kraus(kraus, seed, tol);
        if (!dilation.unitary_form) {
            warning = "input not trace-preserving: returned the plain isometry form";
        }
        result = stinespring_to_json(dilation);
    } else {
        throw ValidationError("unknown representation: " + to);
    }

    // Roundtrip verification against the input channel.
    const Channel reconstructed = load_channel_representation(result, to);
    const double distance = choi_distance(source, reconstructed);
    Json metadata;
    metadata["choi_distance_to_input"] = distance;
    if (!warning.empty()) {
        metadata["warning"] = warning;
    }
    result["metadata"] = std::move(metadata);
    emit_json(result, out_path);
    if (distance > std::max(tol, 1e-9 * choi_of(source).frobenius_norm())) {
        throw ToleranceFailure("conversion roundtrip Choi distance " + std::to_string(distance) +
                               " exceeds tolerance");
    }
    return 0;
}

int run_evolve(const std::string &in_path, const GridSpec &grid, const std::string &out_path,
               double tol) {
    const LindbladData data = lindblad_from_json(read_json_file(in_path));
    Generator gen;
    try {
        gen = generator(data, tol);
    } catch (const std::invalid_argument &err) {
        throw ValidationError(err.what());
    }
    const CurveTrace trace = trace_from_generator(gen, uniform_grid(grid.start, grid.stop, grid.steps));
    if (out_path.empty()) {
        write_trace_csv(std::cout, trace);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw ValidationError("cannot open output file: " + out_path);
        }
        write_trace_csv(out, trace);
    }
    return 0;
}

int run_dilate(const std::string &in_path, const std::string &out_path, double tol) {
    const LindbladData data = lindblad_from_json(read_json_file(in_path));
    StinespringCurve curve;
    try {
        curve = build_curve_from_lindblad(data, tol);
    } catch (const std::invalid_argument &err) {
        throw ValidationError(err.what());
    }

    const Matrix d1 = derivative_at_zero(curve, 1);
    const Matrix d2 = derivative_at_zero(curve, 2);
    const Matrix ad_h0 = adjoint_action_superop(data.h0);
    Matrix expected_d2 = -(ad_h0 * ad_h0);
    for (const Matrix &v : data.jumps) {
        expected_d2 -= dissipator_superop(v);
    }
    const double d1_residual =
        (d1 - complex(0.0, -1.0) * ad_h0).frobenius_norm();
    const double d2_residual = (d2 - expected_d2).frobenius_norm();

    Json result = curve_to_json(curve);
    Json verification;
    verification["d1_residual"] = d1_residual;
    verification["d2_residual"] = d2_residual;
    result["verification"] = std::move(verification);
    emit_json(result, out_path);
    if (d1_residual > tol || d2_residual > tol) {
        throw ToleranceFailure("dilation derivative residuals exceed tolerance");
    }
    return 0;
}

int run_derivatives(const std::string &in_path, int order, const std::string &out_path, double tol) {
    const StinespringCurve curve = curve_from_json(read_json_file(in_path), tol);
    if (order < 1) {
        throw ValidationError("--order must be at least 1");
    }
    const Matrix d = derivative_at_zero(curve, order);
    Json j;
    j["type"] = "superoperator_derivative";
    j["order"] = order;
    j["system_dim"] = curve.sys_dim;
    j["matrix"] = matrix_to_json(d);
    emit_json(j, out_path);
    return 0;
}

int run_diagnose(const std::string &curve_path, const std::string &lindblad_path,
                 const GridSpec &grid, const std::string &out_path, double tol,
                 double recurrence_epsilon) {
    if (curve_path.empty() == lindblad_path.empty()) {
        throw ValidationError("diagnose needs exactly one of --curve or --lindblad");
    }

    CurveTrace trace;
    Matrix d1;
    Matrix d2;
    auto grid_points = uniform_grid(grid.start, grid.stop, grid.steps);
    if (!curve_path.empty()) {
        const StinespringCurve curve = curve_from_json(read_json_file(curve_path), tol);
        trace = trace_from_curve(curve, std::move(grid_points));
        d1 = derivative_at_zero(curve, 1);
        d2 = derivative_at_zero(curve, 2);
    } else {
        const LindbladData data = lindblad_from_json(read_json_file(lindblad_path));
        const Generator gen = generator(data, tol);
        trace = trace_from_generator(gen, std::move(grid_points));
        d1 = gen.superop;
        d2 = gen.superop * gen.superop;
    }

    Json report;
    report["type"] = "diagnostics_report";
    report["source"] = trace.source == TraceSource::kSemigroup ? "semigroup" : "stinespring-curve";
    Json grid_json;
    grid_json["start"] = grid.start;
    grid_json["stop"] = grid.stop;
    grid_json["steps"] = grid.steps;
    report["grid"] = std::move(grid_json);

    if (grid.start == 0.0) {
        report["semigroup_deviation"] = semigroup_deviation(trace);
    } else {
        report["semigroup_deviation"] = nullptr;  // grid not sum-closed
    }

    const DivisibilityReport divisibility = p_divisibility_scan(trace, tol);
    Json windows = Json::array();
    for (const DivisibilityWindow &w : divisibility.windows) {
        windows.push_back(Json::array({w.s, w.t, w.flag}));
    }
    Json p_div;
    p_div["windows"] = std::move(windows);
    p_div["change_points"] = divisibility.change_points;
    report["p_divisibility"] = std::move(p_div);

    report["bijectivity_failures"] = bijectivity_failures(trace, tol);

    const std::optional<double> recurrence = recurrence_detect(trace, recurrence_epsilon);
    report["recurrence_epsilon"] = recurrence_epsilon;
    if (recurrence) {
        report["recurrence"] = *recurrence;
    } else {
        report["recurrence"] = nullptr;
    }

    // Remainder fit on its own short-time grid, per the Taylor expansion.
    {
        std::vector<double> fit_grid;
        for (int i = 0; i <= 24; ++i) {
            fit_grid.push_back(std::pow(10.0, -3.0 + 2.0 * i / 24.0));
        }
        CurveTrace fit_trace;
        fit_trace.grid = fit_grid;
        fit_trace.source = trace.source;
        for (double t : fit_grid) {
            fit_trace.channels.emplace_back(trace.dim(), trace.dim(), trace.superop_at(t));
        }
        const RemainderFit fit = remainder_order(fit_trace, d1, d2);
        Json remainder;
        remainder["slope"] = fit.slope;
        remainder["exact_match"] = fit.exact_match;
        report["remainder"] = std::move(remainder);
    }

    // Cache the scanned trace for reuse.
    if (!out_path.empty()) {
        std::ofstream csv(out_path + ".trace.csv", std::ios::binary);
        if (csv) {
            write_trace_csv(csv, trace);
        }
    }
    emit_json(report, out_path);
    return 0;
}

int run_example_qubit(const std::string &out_path) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix v(2, 2);
    v(1, 1) = 1.0;

    Json report;
    report["type"] = "example_qubit_report";
    bool pass = true;

    // Dephasing semigroup: off-diagonal factor e^{-t/2}.
    {
        LindbladData data;
        data.h0 = Matrix(2, 2);
        data.jumps = {v};
        const Generator gen = generator(data);
        double worst = 0.0;
        for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            const Channel phi = semigroup_evolve(gen, t);
            const Matrix out = phi.apply(Matrix::matrix_unit(2, 0, 1));
            worst = std::max(worst, std::abs(out(0, 1) - std::exp(-t / 2.0)));
        }
        Json section;
        section["max_abs_error"] = worst;
        section["tolerance"] = 1e-10;
        report["semigroup_offdiagonal_decay"] = std::move(section);
        pass = pass && worst <= 1e-10;
    }

    // m = 1 curve with H = V/sqrt2: off-diagonal phases e^{-it/sqrt2}.
    {
        const StinespringCurve curve =
            make_curve(2, 1, complex(inv_sqrt2) * v, Matrix::identity(1));
        double worst = 0.0;
        for (int i = 0; i <= 99; ++i) {
            const double t = 2.0 * std::sqrt(2.0) * std::numbers::pi * i / 99.0;
            const Matrix out = evaluate(curve, t).apply(Matrix::matrix_unit(2, 0, 1));
            worst = std::max(worst, std::abs(out(0, 1) - std::exp(complex(0.0, -t * inv_sqrt2))));
        }
        Json section;
        section["max_abs_error"] = worst;
        section["tolerance"] = 1e-10;
        report["phase_curve"] = std::move(section);
        pass = pass && worst <= 1e-10;
    }

    // m = 2 construction: H matches the closed qubit form, the curve follows
    // cos(t/sqrt2) off-diagonally, and D2 = -Gamma_V.
    {
        LindbladData data;
        data.h0 = Matrix(2, 2);
        data.jumps = {v};
        const StinespringCurve curve = build_curve_from_lindblad(data);

        Matrix h_expected(4, 4);
        h_expected(2, 3) = inv_sqrt2;
        h_expected(3, 2) = inv_sqrt2;
        const double h_error = (curve.hamiltonian - h_expected).max_abs();

        double worst = 0.0;
        for (int i = 0; i <= 99; ++i) {
            const double t = 2.0 * std::sqrt(2.0) * std::numbers::pi * i / 99.0;
            const Matrix out = evaluate(curve, t).apply(Matrix::matrix_unit(2, 0, 1));
            worst = std::max(worst, std::abs(out(0, 1) - std::cos(t * inv_sqrt2)));
        }

        const double d2_residual =
            (derivative_at_zero(curve, 2) + dissipator_superop(v)).frobenius_norm();

        Json section;
        section["hamiltonian_error"] = h_error;
        section["cosine_max_abs_error"] = worst;
        section["second_derivative_residual"] = d2_residual;
        section["tolerance"] = 1e-10;
        report["cosine_curve"] = std::move(section);
        pass = pass && h_error <= 1e-10 && worst <= 1e-10 && d2_residual <= 1e-10;
    }

    // Third derivative of the one-parameter family: -(3/2) b sigma_y a22.
    {
        Json entries = Json::array();
        Matrix sigma_y(2, 2);
        sigma_y(0, 1) = complex(0.0, -1.0);
        sigma_y(1, 0) = complex(0.0, 1.0);
        for (double b : {0.3, inv_sqrt2, 1.0}) {
            Matrix h(4, 4);
            h(1, 3) = b;
            h(3, 1) = b;
            h(2, 3) = inv_sqrt2;
            h(3, 2) = inv_sqrt2;
            const StinespringCurve curve = make_curve(2, 2, h, Matrix::matrix_unit(2, 0, 0));
            const Matrix d3 = derivative_at_zero(curve, 3);
            Matrix expected(4, 4);
            const Matrix column = vec(complex(-1.5 * b) * sigma_y);
            for (std::size_t r = 0; r < 4; ++r) {
                expected(r, 3) = column(r, 0);  // action on E_22 only
            }
            const double residual = (d3 - expected).frobenius_norm();
            Json entry;
            entry["b"] = b;
            entry["residual"] = residual;
            entries.push_back(std::move(entry));
            pass = pass && residual <= 1e-8;
            if (b == inv_sqrt2) {
                const complex coefficient = d3(2, 3);  // (1,2) entry of D3(E_22)
                const complex expected_coeff(0.0, 3.0 / (2.0 * std::sqrt(2.0)));
                Json coeff;
                coeff["value"] = Json::array({coefficient.real(), coefficient.imag()});
                coeff["abs_error"] = std::abs(coefficient - expected_coeff);
                report["third_derivative_coefficient"] = std::move(coeff);
                pass = pass && std::abs(coefficient - expected_coeff) <= 1e-8;
            }
        }
        report["third_derivative_family"] = std::move(entries);
    }

    // Diagnostics on the cosine curve.
    {
        LindbladData data;
        data.h0 = Matrix(2, 2);
        data.jumps = {v};
        const StinespringCurve curve = build_curve_from_lindblad(data);
        const double pi = std::numbers::pi;

        const CurveTrace trace = trace_from_curve(curve, uniform_grid(0.0, 10.0, 1000));
        const std::vector<double> failures = bijectivity_failures(trace, 1e-9);
        const std::optional<double> recurrence = recurrence_detect(trace, 1e-6);

        const CurveTrace fine =
            trace_from_curve(curve, uniform_grid(2.2, 2.25, 50));
        const DivisibilityReport divisibility = p_divisibility_scan(fine);

        Json section;
        section["bijectivity_failures"] = failures;
        section["bijectivity_expected"] = Json::array({pi * inv_sqrt2, pi * inv_sqrt2 + std::sqrt(2.0) * pi});
        section["p_divisibility_change_points"] = divisibility.change_points;
        section["p_divisibility_expected"] = pi * inv_sqrt2;
        if (recurrence) {
            section["recurrence"] = *recurrence;
        } else {
            section["recurrence"] = nullptr;
        }
        section["recurrence_expected"] = 2.0 * std::sqrt(2.0) * pi;
        report["diagnostics"] = std::move(section);

        pass = pass && failures.size() == 2 && std::abs(failures[0] - pi * inv_sqrt2) <= 1e-4 &&
               std::abs(failures[1] - (pi * inv_sqrt2 + std::sqrt(2.0) * pi)) <= 1e-4;
        pass = pass && divisibility.change_points.size() == 1 &&
               std::abs(divisibility.change_points[0] - pi * inv_sqrt2) <= 1e-3;
        pass = pass && recurrence.has_value() &&
               std::abs(*recurrence - 2.0 * std::sqrt(2.0) * pi) <= 1e-3;
    }

    report["pass"] = pass;
    emit_json(report, out_path);
    if (!pass) {
        throw ToleranceFailure("example-qubit checks exceeded their tolerances");
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum channel representations, GKSL semigroups, and type-I Stinespring dilation curves"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string curve_path;
    std::string lindblad_path;
    std::string from;
    std::string to;
    std::string grid_text = "0:1:100";
    double tol_flag = -1.0;
    std::uint64_t seed = 1;
    int order = 1;
    double recurrence_epsilon = 1e-6;

    auto *convert = app.add_subcommand("convert", "Convert between Choi, Kraus, and Stinespring forms");
    convert->add_option("--in", in_path, "input representation JSON")->required();
    convert->add_option("--from", from, "input form: choi|kraus|stinespring")->required();
    convert->add_option("--to", to, "output form: choi|kraus|stinespring")->required();
    convert->add_option("--out", out_path, "output path (stdout when omitted)");
    convert->add_option("--tol", tol_flag, "tolerance override");
    convert->add_option("--seed", seed, "seed for the unitary completion");

    auto *evolve = app.add_subcommand("evolve", "Evolve a GKSL generator over a time grid to CSV");
    evolve->add_option("--in", in_path, "lindblad JSON")->required();
    evolve->add_option("--grid", grid_text, "time grid start:stop:steps");
    evolve->add_option("--out", out_path, "output CSV path (stdout when omitted)");
    evolve->add_option("--tol", tol_flag, "tolerance override");

    auto *dilate = app.add_subcommand("dilate", "Build the finite-dimensional Stinespring curve of a generator");
    dilate->add_option("--in", in_path, "lindblad JSON")->required();
    dilate->add_option("--out", out_path, "output path (stdout when omitted)");
    dilate->add_option("--tol", tol_flag, "tolerance override");

    auto *derivatives = app.add_subcommand("derivatives", "Exact curve derivative superoperator at t = 0");
    derivatives->add_option("--in", in_path, "stinespring_curve JSON")->required();
    derivatives->add_option("--order", order, "derivative order (>= 1)")->required();
    derivatives->add_option("--out", out_path, "output path (stdout when omitted)");
    derivatives->add_option("--tol", tol_flag, "tolerance override");

    auto *diagnose = app.add_subcommand("diagnose", "Semigroup deviation, P-divisibility, bijectivity, recurrence");
    diagnose->add_option("--curve", curve_path, "stinespring_curve JSON");
    diagnose->add_option("--lindblad", lindblad_path, "lindblad JSON");
    diagnose->add_option("--grid", grid_text, "time grid start:stop:steps");
    diagnose->add_option("--out", out_path, "report path (stdout when omitted)");
    diagnose->add_option("--tol", tol_flag, "tolerance override");
    diagnose->add_option("--epsilon", recurrence_epsilon, "recurrence detection threshold");

    auto *example = app.add_subcommand("example-qubit", "Reproduce the qubit dephasing example end to end");
    example->add_option("--out", out_path, "report path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        const double tol = tol_flag > 0.0 ? tol_flag : default_tolerance();
        if (convert->parsed()) {
            return run_convert(in_path, from, to, out_path, tol, seed);
        }
        if (evolve->parsed()) {
            return run_evolve(in_path, parse_grid(grid_text), out_path, tol);
        }
        if (dilate->parsed()) {
            return run_dilate(in_path, out_path, tol);
        }
        if (derivatives->parsed()) {
            return run_derivatives(in_path, order, out_path, tol);
        }
        if (diagnose->parsed()) {
            return run_diagnose(curve_path, lindblad_path, parse_grid(grid_text), out_path, tol,
                                recurrence_epsilon);
        }
        if (example->parsed()) {
            return run_example_qubit(out_path);
        }
    } catch (const ToleranceFailure &err) {
        Json error;
        error["error"] = Json{{"kind", "tolerance"}, {"message", err.what()}};
        std::cerr << dump_canonical(error);
        return kExitTolerance;
    } catch (const ValidationError &err) {
        Json error;
        error["error"] = Json{{"kind", "validation"}, {"message", err.what()}};
        std::cerr << dump_canonical(error);
        return kExitValidation;
    } catch (const std::invalid_argument &err) {
        Json error;
        error["error"] = Json{{"kind", "validation"}, {"message", err.what()}};
        std::cerr << dump_canonical(error);
        return kExitValidation;
    } catch (const std::exception &err) {
        Json error;
        error["error"] = Json{{"kind", "internal"}, {"message", err.what()}};
        std::cerr << dump_canonical(error);
        return 1;
    }
    return 0;
}
