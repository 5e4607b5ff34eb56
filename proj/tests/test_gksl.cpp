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
#include "stinekit/gksl.hpp"

using namespace stinekit;
using namespace stinekit::testing;

namespace {

LindbladData random_lindblad(Rng &rng, std::size_t n, std::size_t jump_count) {
    LindbladData data;
    data.h0 = rng.hermitian_matrix(n);
    data.h0 *= complex(0.5 / std::max(1.0, data.h0.frobenius_norm()));
    for (std::size_t j = 0; j < jump_count; ++j) {
        Matrix v = rng.gaussian_matrix(n, n);
        v *= complex(0.5 / std::max(1.0, v.frobenius_norm()));
        data.jumps.push_back(v);
    }
    return data;
}

}  // namespace

TEST_CASE("dissipator of the zero operator vanishes") {
    CHECK(dissipator_superop(Matrix(3, 3)).max_abs() == 0.0);
}

TEST_CASE("dissipator of diag(0,1) halves the off-diagonal") {
    const Matrix gamma = dissipator_superop(dephasing_jump());
    const Matrix x = Matrix::matrix_unit(2, 0, 1);
    const Matrix out = unvec(gamma * vec(x), 2, 2);
    CHECK(approx_equal(out, complex(0.5) * x, 1e-15));
}

TEST_CASE("dissipator of the identity vanishes") {
    CHECK(dissipator_superop(Matrix::identity(4)).max_abs() < 1e-15);
}

TEST_CASE("adjoint action superoperator matches direct application") {
    Rng rng(41);
    const Matrix h = rng.hermitian_matrix(3);
    const Matrix expected = superop_of(3, 3, [&](const Matrix &x) { return h * x - x * h; });
    CHECK((adjoint_action_superop(h) - expected).max_abs() < 1e-14);
}

TEST_CASE("generator of the dephasing example has spectrum {0, 0, 0, -1/2}") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    data.jumps = {dephasing_jump()};
    const Generator gen = generator(data);
    Matrix expected(4, 4);
    expected(1, 1) = -0.5;
    expected(2, 2) = -0.5;
    CHECK(approx_equal(gen.superop, expected, 1e-15));
}

TEST_CASE("generator with no jumps is a pure commutator") {
    LindbladData data;
    data.h0 = pauli_z();
    const Generator gen = generator(data);
    const Matrix expected = superop_of(2, 2, [&](const Matrix &x) {
        return complex(0.0, -1.0) * (pauli_z() * x - x * pauli_z());
    });
    CHECK((gen.superop - expected).max_abs() < 1e-14);
}

TEST_CASE("generators annihilate the trace and preserve Hermiticity") {
    Rng rng(42);
    const LindbladData data = random_lindblad(rng, 3, 2);
    const Generator gen = generator(data);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix x = rng.gaussian_matrix(3, 3);
        const Matrix image = unvec(gen.superop * vec(x), 3, 3);
        CHECK(std::abs(image.trace()) < 1e-12);
        const Matrix image_adjoint = unvec(gen.superop * vec(x.adjoint()), 3, 3);
        CHECK((image_adjoint - image.adjoint()).max_abs() < 1e-12);
    }
}

TEST_CASE("generator rejects a non-Hermitian H_0") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    data.h0(0, 1) = 1.0;
    CHECK_THROWS_AS(generator(data), std::invalid_argument);
}

TEST_CASE("generator is invariant under jump phase gauge") {
    Rng rng(43);
    LindbladData data = random_lindblad(rng, 3, 1);
    const Generator before = generator(data);
    data.jumps[0] *= std::exp(complex(0.0, 1.2345));
    const Generator after = generator(data);
    CHECK((before.superop - after.superop).max_abs() < 1e-14);
}

TEST_CASE("semigroup at t = 0 is the identity channel") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    data.jumps = {dephasing_jump()};
    const Channel phi = semigroup_evolve(generator(data), 0.0);
    CHECK(approx_equal(phi.superop(), Matrix::identity(4), 1e-15));
}

TEST_CASE("dephasing semigroup damps off-diagonals and fixes diagonals") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    data.jumps = {dephasing_jump()};
    const Generator gen = generator(data);
    for (double t : {0.2, 1.0, 3.7}) {
        const Channel phi = semigroup_evolve(gen, t);
        const Matrix off = phi.apply(Matrix::matrix_unit(2, 0, 1));
        CHECK(std::abs(off(0, 1) - std::exp(-t / 2.0)) < 1e-13);
        const Matrix diag = phi.apply(dephasing_jump());
        CHECK(approx_equal(diag, dephasing_jump(), 1e-13));
    }
}

TEST_CASE("negative evolution times are rejected") {
    LindbladData data;
    data.h0 = Matrix(2, 2);
    CHECK_THROWS_AS(semigroup_evolve(generator(data), -0.1), std::invalid_argument);
}

TEST_CASE("semigroup law on a 5x5 grid") {
    Rng rng(44);
    const Generator gen = generator(random_lindblad(rng, 2, 2));
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            const double s = 0.3 * i;
            const double t = 0.3 * j;
            const Matrix lhs = semigroup_evolve(gen, s + t).superop();
            const Matrix rhs = semigroup_evolve(gen, s).superop() * semigroup_evolve(gen, t).superop();
            CHECK((lhs - rhs).frobenius_norm() < 1e-10);
        }
    }
}

TEST_CASE("random semigroups are CPTP at sampled times") {
    Rng rng(45);
    for (int trial = 0; trial < 4; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const Generator gen = generator(random_lindblad(rng, n, 1 + trial % 3));
        for (double t : {0.1, 0.5, 1.0, 2.0}) {
            const Channel phi = semigroup_evolve(gen, t);
            CHECK(is_completely_positive(phi, 1e-9).completely_positive);
            CHECK(is_trace_preserving(phi, 1e-9));
        }
    }
}

TEST_CASE("finite differences of the semigroup recover the generator") {
    Rng rng(46);
    const Generator gen = generator(random_lindblad(rng, 3, 2));
    const auto flow = [&](double t) {
        return general_exponential(complex(t) * gen.superop);
    };
    const Matrix fd = finite_difference(flow, 1, 1e-3);
    CHECK((fd - gen.superop).frobenius_norm() < 1e-6);
}
