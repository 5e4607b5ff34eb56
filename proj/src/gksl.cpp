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

#include "stinekit/gksl.hpp"

#include <stdexcept>

#include "stinekit/linalg.hpp"

namespace stinekit {

void validate(const LindbladData &data, double tol) {
    if (!data.h0.is_square()) {
        throw std::invalid_argument("LindbladData: H_0 not square");
    }
    if (!data.h0.is_hermitian(tol)) {
        throw std::invalid_argument("LindbladData: H_0 not Hermitian within tolerance");
    }
    for (const Matrix &v : data.jumps) {
        if (v.rows() != data.dim() || v.cols() != data.dim()) {
            throw std::invalid_argument("LindbladData: jump operator dimension mismatch");
        }
    }
}

Matrix left_multiply_superop(const Matrix &a) {
    return kron(Matrix::identity(a.cols()), a);
}

Matrix right_multiply_superop(const Matrix &b) {
    return kron(b.transpose(), Matrix::identity(b.rows()));
}

Matrix sandwich_superop(const Matrix &a, const Matrix &b) {
    return kron(b.transpose(), a);
}

Matrix adjoint_action_superop(const Matrix &h) {
    return left_multiply_superop(h) - right_multiply_superop(h);
}

Matrix dissipator_superop(const Matrix &v) {
    if (!v.is_square()) {
        throw std::invalid_argument("dissipator_superop: jump operator not square");
    }
    const Matrix vdv = v.adjoint() * v;
    return complex(0.5) * (left_multiply_superop(vdv) + right_multiply_superop(vdv)) -
           sandwich_superop(v, v.adjoint());
}

Generator generator(const LindbladData &data, double tol) {
    validate(data, tol);
    const std::size_t n = data.dim();
    Matrix superop = complex(0.0, -1.0) * adjoint_action_superop(data.h0);
    for (const Matrix &v : data.jumps) {
        superop -= dissipator_superop(v);
    }
    return Generator{n, std::move(superop)};
}

Channel semigroup_evolve(const Generator &gen, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("semigroup_evolve: negative time");
    }
    return Channel(gen.dim, gen.dim, general_exponential(complex(t) * gen.superop));
}

}  // namespace stinekit
