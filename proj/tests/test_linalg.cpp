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

#include "helpers.hpp"
#include "stinekit/linalg.hpp"

using namespace stinekit;
using namespace stinekit::testing;

TEST_CASE("hermitian_eig on diag(0,1)") {
    const HermitianEig eig = hermitian_eig(dephasing_jump());
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig on sigma_x") {
    const HermitianEig eig = hermitian_eig(pauli_x());
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = rng.hermitian_matrix(4);
        const HermitianEig eig = hermitian_eig(a);
        Matrix lambda(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            lambda(i, i) = eig.eigenvalues[i];
        }
        const Matrix reconstructed = eig.eigenvectors * lambda * eig.eigenvectors.adjoint();
        CHECK((reconstructed - a).frobenius_norm() <= 1e-12 * std::max(1.0, a.frobenius_norm()));
        CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - Matrix::identity(4)).max_abs() < 1e-13);
    }
}

TEST_CASE("hermitian_eig of a PSD matrix has no eigenvalue below -tol") {
    Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix g = rng.gaussian_matrix(4, 4);
        const Matrix psd = hermitize(g * g.adjoint());
        const HermitianEig eig = hermitian_eig(psd);
        CHECK(eig.eigenvalues.front() >= -kDefaultTol);
    }
}

TEST_CASE("hermitian_eig rejects bad input") {
    CHECK_THROWS_AS(hermitian_eig(Matrix(2, 3)), std::invalid_argument);
    Matrix skew(2, 2);
    skew(0, 1) = 1.0;
    skew(1, 0) = -1.0;
    CHECK_THROWS_AS(hermitian_eig(skew), std::invalid_argument);
}

TEST_CASE("unitary_exponential basics") {
    CHECK(approx_equal(unitary_exponential(Matrix(3, 3), 1.7), Matrix::identity(3), 1e-14));

    const Matrix u = unitary_exponential(pauli_z(), 0.9);
    CHECK(std::abs(u(0, 0) - std::exp(complex(0.0, 0.9))) < 1e-13);
    CHECK(std::abs(u(1, 1) - std::exp(complex(0.0, -0.9))) < 1e-13);
    CHECK(std::abs(u(0, 1)) < 1e-13);
}

TEST_CASE("unitary_exponential satisfies the one-parameter group law") {
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix h = rng.hermitian_matrix(4);
        const double s = rng.uniform() * 2.0;
        const double t = rng.uniform() * 2.0;
        const Matrix combined = unitary_exponential(h, s + t);
        const Matrix split = unitary_exponential(h, s) * unitary_exponential(h, t);
        CHECK((combined - split).frobenius_norm() < 1e-10);
        const Matrix u = unitary_exponential(h, t);
        CHECK((u.adjoint() * u - Matrix::identity(4)).max_abs() < 1e-12);
    }
}

TEST_CASE("general_exponential basics") {
    CHECK(approx_equal(general_exponential(Matrix(3, 3)), Matrix::identity(3), 1e-15));

    Matrix decay(1, 1);
    decay(0, 0) = -0.5 * 1.3;
    CHECK(std::abs(general_exponential(decay)(0, 0) - std::exp(-1.3 / 2.0)) < 1e-14);
}

TEST_CASE("general_exponential inverse identity on random matrices") {
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = rng.gaussian_matrix(4, 4);
        const double norm = a.one_norm();
        if (norm > 2.0) {
            a *= complex(2.0 / norm);
        }
        const Matrix product = general_exponential(a) * general_exponential(-a);
        CHECK((product - Matrix::identity(4)).frobenius_norm() < 1e-10);
    }
}

TEST_CASE("general_exponential scaling branch matches the group law") {
    Rng rng(25);
    const Matrix a = rng.gaussian_matrix(4, 4);  // one_norm well above theta_13 after scaling
    const Matrix big = complex(3.0) * a;
    const Matrix once = general_exponential(big);
    const Matrix halves = general_exponential(complex(0.5) * big);
    CHECK((once - halves * halves).frobenius_norm() < 1e-9 * once.frobenius_norm());
}

TEST_CASE("trace_norm values") {
    Matrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -2.0;
    CHECK(trace_norm(d) == doctest::Approx(3.0).epsilon(1e-12));

    Rng rng(26);
    const Matrix u = unitary_exponential(rng.hermitian_matrix(3), 1.0);
    CHECK(trace_norm(u) == doctest::Approx(3.0).epsilon(1e-10));

    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = rng.gaussian_matrix(3, 3);
        CHECK(a.frobenius_norm() <= trace_norm(a) + 1e-10);
    }
}

TEST_CASE("trace_norm is multiplicative over kron") {
    Rng rng(27);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = rng.gaussian_matrix(2, 2);
        const Matrix b = rng.gaussian_matrix(3, 3);
        CHECK(trace_norm(kron(a, b)) ==
              doctest::Approx(trace_norm(a) * trace_norm(b)).epsilon(1e-8));
    }
}

TEST_CASE("lu solve, inverse, determinant") {
    Rng rng(28);
    const Matrix a = rng.gaussian_matrix(5, 5);
    const Matrix b = rng.gaussian_matrix(5, 2);
    const Matrix x = solve(a, b);
    CHECK((a * x - b).max_abs() < 1e-10);
    CHECK((a * inverse(a) - Matrix::identity(5)).max_abs() < 1e-10);

    Matrix upper(2, 2);
    upper(0, 0) = 2.0;
    upper(0, 1) = 7.0;
    upper(1, 1) = complex(0.0, 3.0);
    CHECK(std::abs(determinant(upper) - complex(0.0, 6.0)) < 1e-14);
    CHECK(std::abs(determinant(Matrix(3, 3))) == 0.0);
}

TEST_CASE("complete_to_unitary preserves fixed columns and is unitary") {
    Rng rng(29);
    const std::size_t n = 12;
    Matrix partial(n, n);
    // Orthonormal seed columns at scattered positions.
    partial(0, 2) = 1.0;
    partial(5, 7) = complex(0.0, 1.0);
    const std::vector<std::size_t> fixed = {2, 7};
    const Matrix u = complete_to_unitary(partial, fixed, rng);
    CHECK((u.adjoint() * u - Matrix::identity(n)).frobenius_norm() < 1e-12);
    CHECK(u(0, 2) == complex(1.0));
    CHECK(u(5, 7) == complex(0.0, 1.0));
}
