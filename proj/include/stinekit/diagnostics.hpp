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

#ifndef STINEKIT_DIAGNOSTICS_HPP
#define STINEKIT_DIAGNOSTICS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "stinekit/channels.hpp"
#include "stinekit/dilation.hpp"
#include "stinekit/gksl.hpp"

namespace stinekit {

enum class TraceSource {
    kSemigroup,
    kStinespringCurve,
};

/// Sampled (t, Phi_t) pairs on a strictly increasing grid. When available,
/// `superop_at` evaluates the underlying family at off-grid times so scans
/// can refine their findings past grid resolution.
struct CurveTrace {
    std::vector<double> grid;
    std::vector<Channel> channels;
    TraceSource source = TraceSource::kStinespringCurve;
    std::function<Matrix(double)> superop_at;

    std::size_t dim() const { return channels.empty() ? 0 : channels.front().in_dim(); }
};

std::vector<double> uniform_grid(double start, double stop, std::size_t steps);

CurveTrace trace_from_curve(const StinespringCurve &curve, std::vector<double> grid);
CurveTrace trace_from_generator(const Generator &gen, std::vector<double> grid);

/// max over sampled pairs of ||Phi_{s+t} - Phi_s o Phi_t||_F. Requires the
/// grid to be uniform starting at zero so it is closed under sums.
double semigroup_deviation(const CurveTrace &trace);

struct DivisibilityWindow {
    double s = 0.0;
    double t = 0.0;
    int flag = 0;  // 1 positive-divisible, 0 not, -1 indeterminate (singular Phi_s)
};

struct DivisibilityReport {
    std::vector<DivisibilityWindow> windows;
    std::vector<double> change_points;
};

/// Tests positivity of the intermediate maps Phi_t o Phi_s^{-1} on adjacent
/// grid pairs. A diagonal superoperator is tested exactly via the Schur
/// multiplier criterion; otherwise a deterministic grid of pure states is
/// sampled. Change points are refined by bisection but remain O(grid step)
/// accurate by construction.
DivisibilityReport p_divisibility_scan(const CurveTrace &trace, double tol = kDefaultTol);

/// Times where |det(superop)| dips below `det_tol`; grid local minima are
/// refined by golden-section search when an evaluator is available.
std::vector<double> bijectivity_failures(const CurveTrace &trace, double det_tol = 1e-9);

/// First t > 0 where ||Phi_t - id||_F < epsilon, from refined grid minima;
/// empty for strictly dissipative semigroups.
std::optional<double> recurrence_detect(const CurveTrace &trace, double epsilon);

struct RemainderFit {
    bool exact_match = false;
    double slope = 0.0;
};

/// Least-squares slope of log ||Phi_t - id - t D1 - t^2/2 D2||_F against
/// log t. The grid must lie within [1e-3, 1e-1]. Deviations all below 1e-14
/// are reported as exact-match instead of a slope.
RemainderFit remainder_order(const CurveTrace &trace, const Matrix &d1, const Matrix &d2);

/// Deterministic pure-state sample used by the positivity tests: a Fibonacci
/// sphere for qubits, a fixed-seed ensemble for higher dimensions.
std::vector<Matrix> deterministic_pure_states(std::size_t dim, std::size_t count = 256);

}  // namespace stinekit

#endif
