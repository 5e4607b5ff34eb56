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

#include "stinekit/dilation.hpp"

#include <cmath>
#include <stdexcept>

#include "stinekit/linalg.hpp"

namespace stinekit {

AncillaState make_ancilla_state(const Matrix &omega, double tol) {
    if (!omega.is_square()) {
        throw std::invalid_argument("AncillaState: omega not square");
    }
    if (!omega.is_hermitian(tol)) {
        throw std::invalid_argument("AncillaState: omega not Hermitian within tolerance");
    }
    if (std::abs(omega.trace() - complex(1.0)) > tol) {
        throw std::invalid_argument("AncillaState: omega not normalized to unit trace");
    }
    const HermitianEig eig = hermitian_eig(omega, tol);
    if (eig.eigenvalues.front() < -tol) {
        throw std::invalid_argument("AncillaState: omega not positive semi-definite");
    }
    const std::vector<double> clamped = clamped_psd_eigenvalues(eig.eigenvalues);

    AncillaState state;
    state.omega = omega;
    const std::size_t m = omega.rows();
    state.weights.resize(m);
    state.basis = Matrix(m, m);
    // Reverse into descending order so the support comes first.
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t src = m - 1 - k;
        state.weights[k] = clamped[src];
        for (std::size_t i = 0; i < m; ++i) {
            state.basis(i, k) = eig.eigenvectors(i, src);
        }
    }
    state.rank = 0;
    while (state.rank < m && state.weights[state.rank] > 0.0) {
        ++state.rank;
    }
    return state;
}

StinespringCurve make_curve(std::size_t sys_dim, std::size_t anc_dim, const Matrix &hamiltonian,
                            const Matrix &omega, double tol) {
    if (hamiltonian.rows() != sys_dim * anc_dim || hamiltonian.cols() != sys_dim * anc_dim) {
        throw std::invalid_argument("StinespringCurve: Hamiltonian dimension mismatch");
    }
    if (!hamiltonian.is_hermitian(tol)) {
        throw std::invalid_argument("StinespringCurve: Hamiltonian not Hermitian within tolerance");
    }
    if (omega.rows() != anc_dim || omega.cols() != anc_dim) {
        throw std::invalid_argument("StinespringCurve: omega dimension mismatch");
    }
    StinespringCurve curve;
    curve.sys_dim = sys_dim;
    curve.anc_dim = anc_dim;
    curve.hamiltonian = hamiltonian;
    curve.ancilla = make_ancilla_state(omega, tol);
    return curve;
}

Matrix ancilla_trace(const Matrix &b, std::size_t sys_dim, std::size_t anc_dim) {
    if (b.rows() != sys_dim * anc_dim || b.cols() != sys_dim * anc_dim) {
        throw std::invalid_argument("ancilla_trace: dimension mismatch");
    }
    Matrix out(sys_dim, sys_dim);
    for (std::size_t j = 0; j < sys_dim; ++j) {
        for (std::size_t k = 0; k < sys_dim; ++k) {
            complex sum = 0.0;
            for (std::size_t a = 0; a < anc_dim; ++a) {
                sum += b(j * anc_dim + a, k * anc_dim + a);
            }
            out(j, k) = sum;
        }
    }
    return out;
}

Matrix operator_partial_trace(const Matrix &b, const Matrix &a, std::size_t sys_dim,
                              std::size_t anc_dim) {
    if (b.rows() != sys_dim * anc_dim || b.cols() != sys_dim * anc_dim) {
        throw std::invalid_argument("operator_partial_trace: dimension mismatch");
    }
    if (a.rows() != anc_dim || a.cols() != anc_dim) {
        throw std::invalid_argument("operator_partial_trace: weight operator dimension mismatch");
    }
    Matrix out(sys_dim, sys_dim);
    for (std::size_t j = 0; j < sys_dim; ++j) {
        for (std::size_t k = 0; k < sys_dim; ++k) {
            // tr(A B_{jk}) over the ancilla block at system position (j, k).
            complex sum = 0.0;
            for (std::size_t r = 0; r < anc_dim; ++r) {
                for (std::size_t c = 0; c < anc_dim; ++c) {
                    sum += a(r, c) * b(j * anc_dim + c, k * anc_dim + r);
                }
            }
            out(j, k) = sum;
        }
    }
    return out;
}

namespace {

/// Assembles the superoperator of X -> tr_K(f(X (x) omega)) column by column.
template <typename EmbeddedMap>
Matrix curve_superop(const StinespringCurve &curve, EmbeddedMap &&f) {
    const std::size_t n = curve.sys_dim;
    const std::size_t m = curve.anc_dim;
    Matrix superop(n * n, n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix embedded = kron(Matrix::matrix_unit(n, j, k), curve.ancilla.omega);
            const Matrix out = ancilla_trace(f(embedded), n, m);
            const std::size_t col = k * n + j;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    superop(c * n + r, col) = out(r, c);
                }
            }
        }
    }
    return superop;
}

}  // namespace

Channel evaluate(const StinespringCurve &curve, double t) {
    const Matrix u = unitary_exponential(curve.hamiltonian, t);
    const Matrix u_adj = u.adjoint();
    Matrix superop = curve_superop(curve, [&](const Matrix &embedded) {
        return u * embedded * u_adj;
    });
    return Channel(curve.sys_dim, curve.sys_dim, std::move(superop));
}

Matrix derivative_at_zero(const StinespringCurve &curve, int order) {
    if (order < 1) {
        throw std::invalid_argument("derivative_at_zero: order must be at least 1");
    }
    const Matrix &h = curve.hamiltonian;
    return curve_superop(curve, [&](const Matrix &embedded) {
        Matrix iterated = embedded;
        for (int q = 0; q < order; ++q) {
            iterated = complex(0.0, 1.0) * (h * iterated - iterated * h);
        }
        return iterated;
    });
}

JumpOperators extract_jump_operators(const StinespringCurve &curve, double tol) {
    const std::size_t n = curve.sys_dim;
    const std::size_t m = curve.anc_dim;
    const AncillaState &anc = curve.ancilla;
    JumpOperators jumps;

    // Full set: V_{jk} = sqrt(2 r_k) tr_{|g_k><g_j|}(H) over the completed
    // basis, k restricted to the support of omega.
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < anc.rank; ++k) {
            Matrix weight(m, m);  // |g_k><g_j|
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    weight(r, c) = anc.basis(r, k) * std::conj(anc.basis(c, j));
                }
            }
            jumps.full.push_back(complex(std::sqrt(2.0 * anc.weights[k])) *
                                 operator_partial_trace(curve.hamiltonian, weight, n, m));
        }
    }

    // Reduced set: Kraus operators of the completely positive part
    // Psi(X) = 2 tr_K(H (X (x) omega) H); at most n^2 of them.
    const Matrix &h = curve.hamiltonian;
    const Matrix psi_superop = curve_superop(curve, [&](const Matrix &embedded) {
        return complex(2.0) * (h * embedded * h);
    });
    const Matrix psi_choi = choi_of(Channel(n, n, psi_superop));
    const KrausSet reduced = kraus_from_choi(psi_choi, n, n, tol);
    jumps.reduced = reduced.operators;
    return jumps;
}

StinespringCurve build_curve_from_lindblad(const LindbladData &data, double tol) {
    validate(data, tol);
    const std::size_t n = data.dim();
    const std::size_t m = data.jumps.size() + 1;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    Matrix h(n * m, n * m);
    for (std::size_t j = 0; j < data.jumps.size(); ++j) {
        h += complex(inv_sqrt2) * (kron(data.jumps[j], Matrix::matrix_unit(m, j + 1, 0)) +
                                   kron(data.jumps[j].adjoint(), Matrix::matrix_unit(m, 0, j + 1)));
    }
    h -= kron(data.h0, Matrix::matrix_unit(m, 0, 0));

    return make_curve(n, m, h, Matrix::matrix_unit(m, 0, 0), tol);
}

double taylor_compare(const StinespringCurve &curve, double t) {
    const std::size_t n = curve.sys_dim;
    const Matrix d1 = derivative_at_zero(curve, 1);
    const Matrix d2 = derivative_at_zero(curve, 2);
    const Matrix taylor =
        Matrix::identity(n * n) + complex(t) * d1 + complex(0.5 * t * t) * d2;
    return (evaluate(curve, t).superop() - taylor).frobenius_norm();
}

}  // namespace stinekit
