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

#ifndef STINEKIT_CHANNELS_HPP
#define STINEKIT_CHANNELS_HPP

#include <cstdint>
#include <vector>

#include "stinekit/linalg.hpp"
#include "stinekit/matrix.hpp"

namespace stinekit {

/// A linear map on matrices, stored canonically as its superoperator matrix
/// under the fixed column-stacking vec convention: for Phi mapping n x n to
/// m x m matrices, superop is m^2 x n^2 with superop * vec(X) = vec(Phi(X)).
/// Choi / Kraus / Stinespring forms are derived views.
class Channel {
  public:
    Channel(std::size_t in_dim, std::size_t out_dim, Matrix superop);

    static Channel identity(std::size_t n);

    std::size_t in_dim() const { return in_dim_; }
    std::size_t out_dim() const { return out_dim_; }
    const Matrix &superop() const { return superop_; }

    Matrix apply(const Matrix &x) const;
    /// Composition (*this) after `inner`.
    Channel compose(const Channel &inner) const;

  private:
    std::size_t in_dim_;
    std::size_t out_dim_;
    Matrix superop_;
};

/// Kraus operators {K_i}, each out_dim x in_dim.
struct KrausSet {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::vector<Matrix> operators;
};

/// Dilation data. For trace-preserving channels `unitary_form` is true and
/// `u` is the d*ell x d*ell unitary of the extended evolution with
/// d = lcm(m, n); otherwise `u` holds the plain Stinespring isometry stack
/// (m*ell x n) of the completely positive map.
struct StinespringDilation {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::size_t d = 0;
    std::size_t ell = 0;
    std::size_t ancilla_index = 0;  // the fixed pure ancilla state e_1
    bool unitary_form = true;
    Matrix u;
};

struct CpReport {
    bool completely_positive = false;
    double min_eigenvalue = 0.0;
};

/// Choi matrix C(Phi) = sum_{j,k} |e_j><e_k| (x) Phi(|e_j><e_k|), nm x nm.
Matrix choi_of(const Channel &phi);

/// Inverse of choi_of: rebuilds the superoperator from a Choi matrix.
Channel channel_from_choi(const Matrix &choi, std::size_t in_dim, std::size_t out_dim);

Channel channel_from_kraus(const KrausSet &kraus);

/// Positivity of the Choi matrix, with the witnessing minimal eigenvalue.
CpReport is_completely_positive(const Channel &phi, double tol = kDefaultTol);

bool is_trace_preserving(const Channel &phi, double tol = kDefaultTol);

/// Kraus operators from the eigendecomposition of a PSD Choi matrix.
/// Eigenvalues below the relative rank cutoff are dropped; a negative
/// eigenvalue beyond `tol` throws (map not completely positive).
KrausSet kraus_from_choi(const Matrix &choi, std::size_t in_dim, std::size_t out_dim,
                         double tol = kDefaultTol);

/// Unitary dilation of a trace-preserving Kraus set: the isometry that
/// collects the K_i in the first block-column is completed to a unitary on
/// d*ell dimensions, d = lcm(m, n). For a non-trace-preserving set the plain
/// isometry stack is returned instead, flagged via unitary_form = false.
StinespringDilation stinespring_from_kraus(const KrausSet &kraus, std::uint64_t seed,
                                           double tol = kDefaultTol);

/// Blockwise Kraus recovery from a dilation; (d/m)*ell operators in the
/// unitary case. Throws on a non-unitary U in unitary form.
KrausSet kraus_from_stinespring(const StinespringDilation &dilation, double tol = kDefaultTol);

/// The channel a dilation represents (partial trace of the conjugated
/// embedding), used by the reconstruction tests and roundtrip metadata.
Channel channel_from_stinespring(const StinespringDilation &dilation);

/// Frobenius distance between Choi matrices.
double choi_distance(const Channel &a, const Channel &b);

}  // namespace stinekit

#endif
