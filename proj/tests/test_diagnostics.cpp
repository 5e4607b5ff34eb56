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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "stinekit/diagnostics.hpp"

using namespace stinekit;
using namespace stinekit::testing;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;
const double kPi = std::numbers::pi;

LindbladData dephasing_data() {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    data.jumps = {dephasing_jump()};
    return data;
}

/// The cosine curve of the qubit example.
StinespringCurve cosine_curve() {
    return build_curve_from_lindblad(dephasing_data());
}

/// The m = 1 phase curve of the qubit example.
StinespringCurve phase_curve() {
    return make_curve(2, 1, complex(kInvSqrt2) * dephasing_jump(), Matrix::identity(1));
}

}  // namespace

TEST_CASE("semigroup traces have no semigroup deviation") {
    const CurveTrace trace =
        trace_from_generator(generator(dephasing_data()), uniform_grid(0.0, 4.0, 40));
    CHECK(semigroup_deviation(trace) <= 1e-9);
}

TEST_CASE("unitary curves have no semigroup deviation") {
    LindbladData data;
    data.h0 = pauli_z();
    const StinespringCurve curve = build_curve_from_lindblad(data);
    const CurveTrace trace = trace_from_curve(curve, uniform_grid(0.0, 4.0, 40));
    CHECK(semigroup_deviation(trace) <= 1e-9);
}

TEST_CASE("the cosine curve violates the semigroup law by a known amount") {
    const double s = kPi / (2.0 * std::sqrt(2.0));
    const CurveTrace trace = trace_from_curve(cosine_curve(), uniform_grid(0.0, 2.0 * s, 2));
    // At s = t = pi/(2 sqrt2): |cos(2s/sqrt2) - cos^2(s/sqrt2)| = 1/2 on each
    // of the two off-diagonal superoperator entries.
    const double deviation = semigroup_deviation(trace);
    CHECK(deviation > 0.5);
    CHECK(deviation == doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-10));
}

TEST_CASE("semigroup deviation requires a sum-closed grid") {
    const CurveTrace trace = trace_from_curve(cosine_curve(), {0.5, 1.0, 1.5});
    CHECK_THROWS_AS(semigroup_deviation(trace), std::invalid_argument);
    const CurveTrace uneven = trace_from_curve(cosine_curve(), {0.0, 0.3, 1.0});
    CHECK_THROWS_AS(semigroup_deviation(uneven), std::invalid_argument);
}

TEST_CASE("p-divisibility of the cosine curve changes at pi/sqrt2") {
    const CurveTrace trace = trace_from_curve(cosine_curve(), uniform_grid(2.2, 2.25, 50));
    const DivisibilityReport report = p_divisibility_scan(trace);
    REQUIRE(report.change_points.size() == 1);
    CHECK(std::abs(report.change_points.front() - kPi * kInvSqrt2) <= 1e-3);
    // Windows before the change point are positive, after are not.
    CHECK(report.windows.front().flag == 1);
    CHECK(report.windows.back().flag == 0);
}

TEST_CASE("GKSL dephasing is P-divisible everywhere scanned") {
    const CurveTrace trace =
        trace_from_generator(generator(dephasing_data()), uniform_grid(0.0, 5.0, 100));
    const DivisibilityReport report = p_divisibility_scan(trace);
    CHECK(report.change_points.empty());
    for (const DivisibilityWindow &window : report.windows) {
        CHECK(window.flag == 1);
    }
}

TEST_CASE("the identity trace is P-divisible everywhere") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    const CurveTrace trace =
        trace_from_curve(build_curve_from_lindblad(data), uniform_grid(0.0, 3.0, 30));
    const DivisibilityReport report = p_divisibility_scan(trace);
    for (const DivisibilityWindow &window : report.windows) {
        CHECK(window.flag == 1);
    }
}

TEST_CASE("phase curve stays P-divisible (unitary family)") {
    const CurveTrace trace = trace_from_curve(phase_curve(), uniform_grid(0.0, 6.0, 60));
    for (const DivisibilityWindow &window : p_divisibility_scan(trace).windows) {
        CHECK(window.flag == 1);
    }
}

TEST_CASE("bijectivity failures of the cosine curve") {
    const CurveTrace trace = trace_from_curve(cosine_curve(), uniform_grid(0.0, 7.0, 700));
    const std::vector<double> failures = bijectivity_failures(trace, 1e-9);
    REQUIRE(failures.size() == 2);
    CHECK(std::abs(failures[0] - kPi * kInvSqrt2) < 1e-6);
    CHECK(std::abs(failures[1] - (kPi * kInvSqrt2 + std::sqrt(2.0) * kPi)) < 1e-6);
}

TEST_CASE("GKSL dephasing never loses bijectivity") {
    const CurveTrace trace =
        trace_from_generator(generator(dephasing_data()), uniform_grid(0.0, 20.0, 200));
    CHECK(bijectivity_failures(trace, 1e-9).empty());
}

TEST_CASE("identity trace never loses bijectivity") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    const CurveTrace trace =
        trace_from_curve(build_curve_from_lindblad(data), uniform_grid(0.0, 3.0, 30));
    CHECK(bijectivity_failures(trace, 1e-9).empty());
}

TEST_CASE("recurrence of the cosine curve at 2 sqrt2 pi") {
    const CurveTrace trace = trace_from_curve(cosine_curve(), uniform_grid(0.0, 10.0, 1000));
    const auto recurrence = recurrence_detect(trace, 1e-6);
    REQUIRE(recurrence.has_value());
    CHECK(std::abs(*recurrence - 2.0 * std::sqrt(2.0) * kPi) < 1e-3);
}

TEST_CASE("recurrence of the phase curve at 2 sqrt2 pi") {
    const CurveTrace trace = trace_from_curve(phase_curve(), uniform_grid(0.0, 10.0, 1000));
    const auto recurrence = recurrence_detect(trace, 1e-6);
    REQUIRE(recurrence.has_value());
    CHECK(std::abs(*recurrence - 2.0 * std::sqrt(2.0) * kPi) < 1e-3);
}

TEST_CASE("strictly dissipative semigroups never recur") {
    const CurveTrace trace =
        trace_from_generator(generator(dephasing_data()), uniform_grid(0.1, 100.0, 999));
    CHECK_FALSE(recurrence_detect(trace, 0.5).has_value());
}

TEST_CASE("remainder order of random curves is cubic") {
    Rng rng(71);
    Matrix h = rng.hermitian_matrix(6);
    h *= complex(1.0 / h.frobenius_norm());
    const StinespringCurve curve = make_curve(2, 3, h, random_state(3, rng));
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) {
        grid.push_back(std::pow(10.0, -3.0 + 2.0 * i / 20.0));
    }
    const CurveTrace trace = trace_from_curve(curve, grid);
    const RemainderFit fit =
        remainder_order(trace, derivative_at_zero(curve, 1), derivative_at_zero(curve, 2));
    CHECK_FALSE(fit.exact_match);
    CHECK(fit.slope > 2.8);
    CHECK(fit.slope < 3.2);
}

TEST_CASE("remainder order drops to quadratic when D2 is withheld") {
    Rng rng(72);
    LindbladData data;
    data.h0 = Matrix(2, 2);
    data.jumps = {rng.gaussian_matrix(2, 2)};
    const StinespringCurve curve = build_curve_from_lindblad(data);
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) {
        grid.push_back(std::pow(10.0, -3.0 + 2.0 * i / 20.0));
    }
    const CurveTrace trace = trace_from_curve(curve, grid);
    const std::size_t dim2 = curve.sys_dim * curve.sys_dim;
    const RemainderFit fit =
        remainder_order(trace, derivative_at_zero(curve, 1), Matrix(dim2, dim2));
    CHECK(fit.slope > 1.9);
    CHECK(fit.slope < 2.1);
}

TEST_CASE("remainder order reports an exact match for the trivial curve") {
    const StinespringCurve curve = make_curve(2, 2, Matrix(4, 4), Matrix::matrix_unit(2, 0, 0));
    std::vector<double> grid = {1e-3, 1e-2, 1e-1};
    const CurveTrace trace = trace_from_curve(curve, grid);
    const RemainderFit fit = remainder_order(trace, Matrix(4, 4), Matrix(4, 4));
    CHECK(fit.exact_match);
}

TEST_CASE("remainder order rejects grids outside the short-time window") {
    const CurveTrace trace = trace_from_curve(cosine_curve(), uniform_grid(0.0, 1.0, 10));
    CHECK_THROWS_AS(remainder_order(trace, Matrix(4, 4), Matrix(4, 4)), std::invalid_argument);
}

TEST_CASE("deviation separates semigroups from genuinely dissipative curves") {
    Rng rng(73);
    for (std::size_t n = 2; n <= 3; ++n) {
        LindbladData data;
        data.h0 = rng.hermitian_matrix(n);
        data.h0 *= complex(0.5);
        Matrix v = rng.gaussian_matrix(n, n);
        v *= complex(1.0 / v.frobenius_norm());
        data.jumps = {v};

        const StinespringCurve curve = build_curve_from_lindblad(data);
        const CurveTrace curve_trace_ = trace_from_curve(curve, uniform_grid(0.0, 5.0, 50));
        CHECK(semigroup_deviation(curve_trace_) > 1e-3);

        const CurveTrace semigroup_trace =
            trace_from_generator(generator(data), uniform_grid(0.0, 5.0, 50));
        CHECK(semigroup_deviation(semigroup_trace) <= 1e-9);

        LindbladData closed;
        closed.h0 = data.h0;
        const CurveTrace unitary_trace =
            trace_from_curve(build_curve_from_lindblad(closed), uniform_grid(0.0, 5.0, 50));
        CHECK(semigroup_deviation(unitary_trace) <= 1e-9);
    }
}

TEST_CASE("deterministic pure states are normalized projectors") {
    for (std::size_t dim : {2, 3, 4}) {
        const std::vector<Matrix> states = deterministic_pure_states(dim, 64);
        CHECK(states.size() == 64);
        for (const Matrix &rho : states) {
            CHECK(std::abs(rho.trace() - complex(1.0)) < 1e-12);
            CHECK((rho * rho - rho).max_abs() < 1e-12);
        }
    }
}
