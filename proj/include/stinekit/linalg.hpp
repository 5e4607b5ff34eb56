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

#ifndef STINEKIT_LINALG_HPP
#define STINEKIT_LINALG_HPP

#include <cstdint>
#include <vector>

#include "stinekit/matrix.hpp"
#include "stinekit/rng.hpp"

namespace stinekit {

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors the matching unitary of column vectors.
struct HermitianEig {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Cyclic complex Jacobi eigensolver. The input is symmetrized internally;
/// a Hermiticity violation beyond `tol` (max entry) or a non-square input
/// throws std::invalid_argument.
HermitianEig hermitian_eig(const Matrix &a, double tol = kDefaultTol);

/// e^{iht} for Hermitian h, via eigendecomposition.
Matrix unitary_exponential(const Matrix &h, double t, double tol = kDefaultTol);

/// e^m for arbitrary square m: scaling-and-squaring with the order-13 Pade
/// approximant and the standard theta_13 threshold.
Matrix general_exponential(const Matrix &m);

/// Sum of singular values, computed from the spectrum of A*A.
double trace_norm(const Matrix &a);

struct LuDecomposition {
    Matrix lu;
    std::vector<std::size_t> pivots;
    int permutation_sign = 1;
    bool singular = false;
};

LuDecomposition lu_factor(const Matrix &a);
Matrix lu_solve(const LuDecomposition &lu, const Matrix &rhs);
Matrix solve(const Matrix &a, const Matrix &rhs);
Matrix inverse(const Matrix &a);
complex determinant(const Matrix &a);

/// Eigenvalues of a PSD matrix with small negatives clamped to zero; values
/// below kRankCutoff relative to the largest are treated as exact zeros.
std::vector<double> clamped_psd_eigenvalues(const std::vector<double> &eigenvalues);

/// Completes a partial matrix whose columns listed in `fixed_cols` form an
/// orthonormal system (all other columns zero) to a full unitary. Free
/// columns are drawn from `rng` and re-orthonormalized, so the result is
/// deterministic for a fixed seed.
Matrix complete_to_unitary(const Matrix &partial, const std::vector<std::size_t> &fixed_cols, Rng &rng);

}  // namespace stinekit

#endif
