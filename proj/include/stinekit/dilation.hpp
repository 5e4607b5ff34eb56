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

#ifndef STINEKIT_DILATION_HPP
#define STINEKIT_DILATION_HPP

#include <vector>

#include "stinekit/channels.hpp"
#include "stinekit/gksl.hpp"
#include "stinekit/matrix.hpp"

namespace stinekit {

/// Ancilla state omega with its spectral data. The eigenbasis is stored in
/// full (descending eigenvalues), so the first `rank` columns carry the
/// support vectors g_k with weights r_k > 0 and the remaining columns are
/// the orthonormal completion into the null space.
struct AncillaState {
    Matrix omega;
    std::vector<double> weights;  // descending, clamped at the rank cutoff
    Matrix basis;                 // columns; unitary
    std::size_t rank = 0;

    std::size_t dim() const { return omega.rows(); }
};

/// Builds the spectral data; rejects omega that is not PSD with unit trace.
AncillaState make_ancilla_state(const Matrix &omega, double tol = kDefaultTol);

/// Type-I Stinespring curve t -> tr_K(e^{iHt}((.) (x) omega)e^{-iHt}) on the
/// system (x) ancilla space of dimension n*m.
struct StinespringCurve {
    std::size_t sys_dim = 0;
    std::size_t anc_dim = 0;
    Matrix hamiltonian;  // nm x nm, Hermitian
    AncillaState ancilla;
};

StinespringCurve make_curve(std::size_t sys_dim, std::size_t anc_dim, const Matrix &hamiltonian,
                            const Matrix &omega, double tol = kDefaultTol);

/// Standard partial trace over the second (ancilla) tensor factor.
Matrix ancilla_trace(const Matrix &b, std::size_t sys_dim, std::size_t anc_dim);

/// Operator partial trace tr_A(B): the unique n x n matrix with
/// tr(tr_A(B) X) = tr(B (X (x) A)) for all X; entrywise tr_A(B)(j,k) =
/// tr(A B_{jk}) over the ancilla blocks B_{jk}.
Matrix operator_partial_trace(const Matrix &b, const Matrix &a, std::size_t sys_dim,
                              std::size_t anc_dim);

/// Channel at time t: X -> tr_K(e^{iHt}(X (x) omega)e^{-iHt}).
Channel evaluate(const StinespringCurve &curve, double t);

/// Exact superoperator of the order-q derivative at t = 0, computed as
/// X -> tr_K((i ad_H)^q (X (x) omega)). Order 1 equals i[tr_omega(H), .];
/// order 2 equals -tr_omega(H^2)(.) - (.)tr_omega(H^2) + 2tr_K(H((.)(x)omega)H).
Matrix derivative_at_zero(const StinespringCurve &curve, int order);

/// Jump operators witnessing the second derivative: V_{jk} =
/// sqrt(2 r_k) tr_{|g_k><g_j|}(H) over the completed basis (full set,
/// size rank * m), plus the reduced set (at most n^2) recovered from the
/// Kraus decomposition of the completely positive part
/// Psi = 2 tr_K(H((.)(x)omega)H). Both satisfy -sum Gamma_V = second
/// derivative at zero.
struct JumpOperators {
    std::vector<Matrix> full;
    std::vector<Matrix> reduced;
};

JumpOperators extract_jump_operators(const StinespringCurve &curve, double tol = kDefaultTol);

/// Finite-dimensional dilation of a generator: m = |J|+1 ancilla levels,
/// H = (1/sqrt2) sum_j (V_j (x) |e_{j+1}><e_1| + V_j* (x) |e_1><e_{j+1}|)
///     - H_0 (x) |e_1><e_1|, omega = |e_1><e_1|.
/// The curve has first derivative -i ad_{H_0} and second derivative
/// -sum_j Gamma_{V_j} - ad_{H_0}^2 (which is -sum_j Gamma_{V_j} when
/// H_0 = 0).
StinespringCurve build_curve_from_lindblad(const LindbladData &data, double tol = kDefaultTol);

/// Frobenius deviation of the superoperator of Phi_t from the second-order
/// Taylor polynomial id + t D1 + t^2/2 D2 built from the exact derivatives.
double taylor_compare(const StinespringCurve &curve, double t);

}  // namespace stinekit

#endif
