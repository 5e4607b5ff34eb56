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

#ifndef STINEKIT_TESTS_HELPERS_HPP
#define STINEKIT_TESTS_HELPERS_HPP

#include <cmath>
#include <functional>

#include "stinekit/channels.hpp"
#include "stinekit/linalg.hpp"
#include "stinekit/matrix.hpp"
#include "stinekit/rng.hpp"

namespace stinekit::testing {

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

inline Matrix pauli_y() {
    Matrix m(2, 2);
    m(0, 1) = complex(0.0, -1.0);
    m(1, 0) = complex(0.0, 1.0);
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

/// diag(0, 1), the dephasing jump operator of the qubit example.
inline Matrix dephasing_jump() {
    Matrix m(2, 2);
    m(1, 1) = 1.0;
    return m;
}

/// Inverse square root of a positive definite matrix, via the spectrum.
inline Matrix inverse_sqrt(const Matrix &a) {
    const HermitianEig eig = hermitian_eig(hermitize(a), 1e-6);
    const std::size_t n = a.rows();
    Matrix scaled(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const double factor = 1.0 / std::sqrt(eig.eigenvalues[c]);
        for (std::size_t r = 0; r < n; ++r) {
            scaled(r, c) = eig.eigenvectors(r, c) * factor;
        }
    }
    return scaled * eig.eigenvectors.adjoint();
}

/// Random trace-preserving Kraus set: Gaussian operators renormalized so
/// that sum K*K = identity. Ill-conditioned draws are rejected so the
/// normalization holds to machine precision.
inline KrausSet random_cptp_kraus(std::size_t in_dim, std::size_t out_dim, std::size_t count,
                                  Rng &rng) {
    // Trace preservation needs sum K*K of full rank, so count*out_dim >= in_dim.
    count = std::max(count, (in_dim + out_dim - 1) / out_dim);
    while (true) {
        KrausSet kraus;
        kraus.in_dim = in_dim;
        kraus.out_dim = out_dim;
        Matrix gram(in_dim, in_dim);
        for (std::size_t i = 0; i < count; ++i) {
            kraus.operators.push_back(rng.gaussian_matrix(out_dim, in_dim));
            gram += kraus.operators.back().adjoint() * kraus.operators.back();
        }
        const HermitianEig eig = hermitian_eig(hermitize(gram), 1e-6);
        if (eig.eigenvalues.front() < 0.02 * eig.eigenvalues.back()) {
            continue;
        }
        const Matrix fix = inverse_sqrt(gram);
        for (Matrix &k : kraus.operators) {
            k = k * fix;
        }
        return kraus;
    }
}

/// Random density matrix of full rank.
inline Matrix random_state(std::size_t dim, Rng &rng) {
    const Matrix g = rng.gaussian_matrix(dim, dim);
    Matrix rho = g * g.adjoint();
    rho *= complex(1.0 / rho.trace().real());
    return hermitize(rho);
}

/// Superoperator matrix of an arbitrary map by column assembly, the direct
/// oracle against which convention-dependent builders are checked.
inline Matrix superop_of(std::size_t in_dim, std::size_t out_dim,
                         const std::function<Matrix(const Matrix &)> &map) {
    Matrix superop(out_dim * out_dim, in_dim * in_dim);
    for (std::size_t j = 0; j < in_dim; ++j) {
        for (std::size_t k = 0; k < in_dim; ++k) {
            const Matrix image = map(Matrix::matrix_unit(in_dim, j, k));
            const Matrix column = vec(image);
            const std::size_t col = k * in_dim + j;
            for (std::size_t r = 0; r < column.rows(); ++r) {
                superop(r, col) = column(r, 0);
            }
        }
    }
    return superop;
}

/// Central finite difference of a matrix-valued function, with one Richardson
/// extrapolation step; orders 1..3.
inline Matrix finite_difference(const std::function<Matrix(double)> &f, int order, double h) {
    auto stencil = [&](double step) -> Matrix {
        switch (order) {
            case 1:
                return complex(1.0 / (2.0 * step)) * (f(step) - f(-step));
            case 2:
                return complex(1.0 / (step * step)) * (f(step) - complex(2.0) * f(0.0) + f(-step));
            case 3:
                return complex(1.0 / (2.0 * step * step * step)) *
                       (f(2.0 * step) - complex(2.0) * f(step) + complex(2.0) * f(-step) -
                        f(-2.0 * step));
            default:
                throw std::invalid_argument("finite_difference: order must be 1..3");
        }
    };
    // Error is O(h^2) for all three stencils, so one Richardson step with
    // h -> h/2 cancels the leading term.
    const Matrix coarse = stencil(h);
    const Matrix fine = stencil(h / 2.0);
    return complex(1.0 / 3.0) * (complex(4.0) * fine - coarse);
}

}  // namespace stinekit::testing

#endif
