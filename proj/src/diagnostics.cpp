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

#include "stinekit/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stinekit/linalg.hpp"
#include "stinekit/rng.hpp"

namespace stinekit {

namespace {

void require_valid_trace(const CurveTrace &trace) {
    if (trace.grid.empty() || trace.grid.size() != trace.channels.size()) {
        throw std::invalid_argument("CurveTrace: empty or inconsistent grid");
    }
    for (std::size_t i = 1; i < trace.grid.size(); ++i) {
        if (trace.grid[i] <= trace.grid[i - 1]) {
            throw std::invalid_argument("CurveTrace: grid not strictly increasing");
        }
    }
    const std::size_t dim = trace.channels.front().in_dim();
    for (const Channel &ch : trace.channels) {
        if (ch.in_dim() != dim || ch.out_dim() != dim) {
            throw std::invalid_argument("CurveTrace: channel dimensions inconsistent");
        }
    }
}

/// Golden-section minimization of a unimodal scalar function on [a, b].
double golden_minimize(const std::function<double(double)> &f, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; iter < 80 && (b - a) > 1e-12 * std::max(1.0, std::abs(b)); ++iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Positivity of the map given by `superop` on n x n inputs: exact Schur
/// multiplier criterion for diagonal superoperators, sampled pure states
/// otherwise. Returns the most negative eigenvalue seen.
bool map_is_positive(const Matrix &superop, std::size_t n, double tol) {
    const double scale = std::max(1.0, superop.max_abs());
    bool diagonal = true;
    for (std::size_t r = 0; r < superop.rows() && diagonal; ++r) {
        for (std::size_t c = 0; c < superop.cols(); ++c) {
            if (r != c && std::abs(superop(r, c)) > 1e-10 * scale) {
                diagonal = false;
                break;
            }
        }
    }
    if (diagonal) {
        // X -> L (Hadamard) X with multipliers L(j,k) at vec index k*n + j;
        // the map is positive iff the multiplier matrix is PSD.
        Matrix multipliers(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                multipliers(j, k) = superop(k * n + j, k * n + j);
            }
        }
        if (!multipliers.is_hermitian(1e-8 * scale)) {
            return false;  // not even Hermiticity-preserving
        }
        const HermitianEig eig = hermitian_eig(hermitize(multipliers), 1.0);
        return eig.eigenvalues.front() >= -tol;
    }

    const std::vector<Matrix> states = deterministic_pure_states(n);
    for (const Matrix &rho : states) {
        const Matrix out = hermitize(unvec(superop * vec(rho), n, n));
        const HermitianEig eig = hermitian_eig(out, 1.0);
        if (eig.eigenvalues.front() < -tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Matrix> deterministic_pure_states(std::size_t dim, std::size_t count) {
    std::vector<Matrix> states;
    states.reserve(count);
    if (dim == 2) {
        // Fibonacci sphere on the Bloch ball surface.
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t i = 0; i < count; ++i) {
            const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
            const double theta = std::acos(std::clamp(z, -1.0, 1.0));
            const double phi = golden_angle * static_cast<double>(i);
            Matrix psi(2, 1);
            psi(0, 0) = std::cos(theta / 2.0);
            psi(1, 0) = std::exp(complex(0.0, phi)) * std::sin(theta / 2.0);
            states.push_back(psi * psi.adjoint());
        }
        return states;
    }
    Rng rng(0x9E3779B97F4A7C15ULL + dim);
    for (std::size_t i = 0; i < count; ++i) {
        Matrix psi = rng.gaussian_matrix(dim, 1);
        const double norm = psi.frobenius_norm();
        psi *= complex(1.0 / norm);
        states.push_back(psi * psi.adjoint());
    }
    return states;
}

std::vector<double> uniform_grid(double start, double stop, std::size_t steps) {
    if (steps < 1 || !(stop > start) || start < 0.0) {
        throw std::invalid_argument("uniform_grid: need steps >= 1 and stop > start >= 0");
    }
    std::vector<double> grid(steps + 1);
    const double h = (stop - start) / static_cast<double>(steps);
    for (std::size_t i = 0; i <= steps; ++i) {
        grid[i] = start + static_cast<double>(i) * h;
    }
    return grid;
}

CurveTrace trace_from_curve(const StinespringCurve &curve, std::vector<double> grid) {
    CurveTrace trace;
    trace.grid = std::move(grid);
    trace.source = TraceSource::kStinespringCurve;
    trace.channels.reserve(trace.grid.size());
    for (double t : trace.grid) {
        trace.channels.push_back(evaluate(curve, t));
    }
    trace.superop_at = [curve](double t) { return evaluate(curve, t).superop(); };
    require_valid_trace(trace);
    return trace;
}

CurveTrace trace_from_generator(const Generator &gen, std::vector<double> grid) {
    CurveTrace trace;
    trace.grid = std::move(grid);
    trace.source = TraceSource::kSemigroup;
    trace.channels.reserve(trace.grid.size());
    for (double t : trace.grid) {
        trace.channels.push_back(semigroup_evolve(gen, t));
    }
    trace.superop_at = [gen](double t) { return semigroup_evolve(gen, t).superop(); };
    require_valid_trace(trace);
    return trace;
}

double semigroup_deviation(const CurveTrace &trace) {
    require_valid_trace(trace);
    const std::size_t count = trace.grid.size();
    if (count < 2) {
        return 0.0;
    }
    const double h = trace.grid[1] - trace.grid[0];
    if (std::abs(trace.grid.front()) > 1e-12) {
        throw std::invalid_argument("semigroup_deviation: grid must start at 0 to be sum-closed");
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (std::abs(trace.grid[i] - static_cast<double>(i) * h) > 1e-9 * std::max(1.0, trace.grid.back())) {
            throw std::invalid_argument("semigroup_deviation: grid not sum-closed (non-uniform)");
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i; i + j < count; ++j) {
            const Matrix composed = trace.channels[i].superop() * trace.channels[j].superop();
            worst = std::max(worst, (trace.channels[i + j].superop() - composed).frobenius_norm());
        }
    }
    return worst;
}

DivisibilityReport p_divisibility_scan(const CurveTrace &trace, double tol) {
    require_valid_trace(trace);
    const std::size_t n = trace.dim();
    DivisibilityReport report;

    auto window_flag = [&](const Matrix &superop_s, const Matrix &superop_t) -> int {
        const LuDecomposition lu = lu_factor(superop_s);
        if (lu.singular) {
            return -1;
        }
        complex det(static_cast<double>(lu.permutation_sign), 0.0);
        for (std::size_t i = 0; i < superop_s.rows(); ++i) {
            det *= lu.lu(i, i);
        }
        if (std::abs(det) < 1e-12) {
            return -1;
        }
        // Phi_t o Phi_s^{-1}: solve S_s^T Y = S_t^T, intermediate = Y^T.
        const Matrix intermediate = lu_solve(lu_factor(superop_s.transpose()),
                                             superop_t.transpose()).transpose();
        return map_is_positive(intermediate, n, tol) ? 1 : 0;
    };

    for (std::size_t i = 0; i + 1 < trace.grid.size(); ++i) {
        DivisibilityWindow window;
        window.s = trace.grid[i];
        window.t = trace.grid[i + 1];
        window.flag = window_flag(trace.channels[i].superop(), trace.channels[i + 1].superop());
        report.windows.push_back(window);
    }

    // Bisection refinement of flag flips. The probe window width stays fixed
    // at the grid step, so the change point inherits O(grid step) accuracy;
    // the reported time is the midpoint of the flipping probe window.
    for (std::size_t i = 0; i + 1 < report.windows.size(); ++i) {
        const int a = report.windows[i].flag;
        const int b = report.windows[i + 1].flag;
        if (a == -1 || b == -1 || a == b) {
            continue;
        }
        double lo = report.windows[i].s;
        double hi = report.windows[i + 1].s;
        const double width = report.windows[i].t - report.windows[i].s;
        if (trace.superop_at) {
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                const int flag = window_flag(trace.superop_at(mid), trace.superop_at(mid + width));
                if (flag == -1) {
                    break;
                }
                if (flag == a) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        }
        report.change_points.push_back(0.5 * (lo + hi) + 0.5 * width);
    }
    return report;
}

std::vector<double> bijectivity_failures(const CurveTrace &trace, double det_tol) {
    require_valid_trace(trace);
    std::vector<double> failures;
    std::vector<double> magnitudes(trace.grid.size());
    for (std::size_t i = 0; i < trace.grid.size(); ++i) {
        magnitudes[i] = std::abs(determinant(trace.channels[i].superop()));
    }

    auto det_at = [&](double t) { return std::abs(determinant(trace.superop_at(t))); };

    auto record = [&](double t) {
        if (failures.empty() || t - failures.back() > 1e-6 * std::max(1.0, t)) {
            failures.push_back(t);
        }
    };
    for (std::size_t i = 1; i + 1 < trace.grid.size(); ++i) {
        const bool local_min = magnitudes[i] <= magnitudes[i - 1] && magnitudes[i] <= magnitudes[i + 1];
        if (!local_min) {
            continue;
        }
        if (trace.superop_at) {
            const double refined = golden_minimize(det_at, trace.grid[i - 1], trace.grid[i + 1]);
            if (det_at(refined) < det_tol) {
                record(refined);
            }
        } else if (magnitudes[i] < det_tol) {
            record(trace.grid[i]);
        }
    }
    return failures;
}

std::optional<double> recurrence_detect(const CurveTrace &trace, double epsilon) {
    require_valid_trace(trace);
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("recurrence_detect: epsilon must be positive");
    }
    const std::size_t n = trace.dim();
    const Matrix ident = Matrix::identity(n * n);
    std::vector<double> distances(trace.grid.size());
    for (std::size_t i = 0; i < trace.grid.size(); ++i) {
        distances[i] = (trace.channels[i].superop() - ident).frobenius_norm();
    }
    auto distance_at = [&](double t) { return (trace.superop_at(t) - ident).frobenius_norm(); };

    // Skip the initial departure from the identity, then look for dips.
    std::size_t start = 0;
    while (start < distances.size() && distances[start] < epsilon) {
        ++start;
    }
    for (std::size_t i = start + 1; i + 1 < distances.size(); ++i) {
        if (distances[i] > distances[i - 1] || distances[i] > distances[i + 1]) {
            continue;
        }
        if (trace.superop_at) {
            const double refined = golden_minimize(distance_at, trace.grid[i - 1], trace.grid[i + 1]);
            if (distance_at(refined) < epsilon) {
                return refined;
            }
        } else if (distances[i] < epsilon) {
            return trace.grid[i];
        }
    }
    return std::nullopt;
}

RemainderFit remainder_order(const CurveTrace &trace, const Matrix &d1, const Matrix &d2) {
    require_valid_trace(trace);
    if (trace.grid.front() < 1e-3 * (1.0 - 1e-9) || trace.grid.back() > 1e-1 * (1.0 + 1e-9)) {
        throw std::invalid_argument("remainder_order: grid must lie within [1e-3, 1e-1]");
    }
    const std::size_t n = trace.dim();
    const Matrix ident = Matrix::identity(n * n);

    std::vector<double> xs;
    std::vector<double> ys;
    bool any_above_floor = false;
    for (std::size_t i = 0; i < trace.grid.size(); ++i) {
        const double t = trace.grid[i];
        const Matrix taylor = ident + complex(t) * d1 + complex(0.5 * t * t) * d2;
        const double deviation = (trace.channels[i].superop() - taylor).frobenius_norm();
        if (deviation > 1e-14) {
            any_above_floor = true;
        }
        if (deviation > 1e-300) {
            xs.push_back(std::log(t));
            ys.push_back(std::log(deviation));
        }
    }
    RemainderFit fit;
    if (!any_above_floor || xs.size() < 2) {
        fit.exact_match = true;
        return fit;
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(xs.size());
    mean_y /= static_cast<double>(xs.size());
    double cov = 0.0;
    double var = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cov += (xs[i] - mean_x) * (ys[i] - mean_y);
        var += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    fit.slope = cov / var;
    return fit;
}

}  // namespace stinekit
