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

#ifndef STINEKIT_GKSL_HPP
#define STINEKIT_GKSL_HPP

#include <vector>

#include "stinekit/channels.hpp"
#include "stinekit/matrix.hpp"

namespace stinekit {

/// Hermitian H_0 plus a finite list of jump matrices {V_j}; defines the
/// generator L = -i ad_{H_0} - sum_j Gamma_{V_j}.
struct LindbladData {
    Matrix h0;
    std::vector<Matrix> jumps;

    std::size_t dim() const { return h0.rows(); }
};

void validate(const LindbladData &data, double tol = kDefaultTol);

/// Matrix of a generator acting on n x n inputs, n^2 x n^2 under the fixed
/// vec convention.
struct Generator {
    std::size_t dim = 0;
    Matrix superop;
};

// Superoperator matrices of the elementary maps, all under vec(AXB) =
// (B^T (x) A) vec(X).
Matrix left_multiply_superop(const Matrix &a);                    // X -> A X
Matrix right_multiply_superop(const Matrix &b);                   // X -> X B
Matrix sandwich_superop(const Matrix &a, const Matrix &b);        // X -> A X B
Matrix adjoint_action_superop(const Matrix &h);                   // X -> [H, X]

/// Dissipator Gamma_V : X -> (V*V X + X V*V)/2 - V X V*.
Matrix dissipator_superop(const Matrix &v);

/// L = -i ad_{H_0} - sum_j Gamma_{V_j}; rejects non-Hermitian H_0.
Generator generator(const LindbladData &data, double tol = kDefaultTol);

/// Phi_t = e^{tL} as a Channel; t must be nonnegative.
Channel semigroup_evolve(const Generator &gen, double t);

}  // namespace stinekit

#endif
