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

#include "stinekit/channels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stinekit {

Channel::Channel(std::size_t in_dim, std::size_t out_dim, Matrix superop)
    : in_dim_(in_dim), out_dim_(out_dim), superop_(std::move(superop)) {
    if (in_dim_ == 0 || out_dim_ == 0) {
        throw std::invalid_argument("Channel: dimensions must be positive");
    }
    if (superop_.rows() != out_dim_ * out_dim_ || superop_.cols() != in_dim_ * in_dim_) {
        throw std::invalid_argument("Channel: superoperator shape mismatch");
    }
}

Channel Channel::identity(std::size_t n) {
    return Channel(n, n, Matrix::identity(n * n));
}

Matrix Channel::apply(const Matrix &x) const {
    if (x.rows() != in_dim_ || x.cols() != in_dim_) {
        throw std::invalid_argument("Channel::apply: input dimension mismatch");
    }
    return unvec(superop_ * vec(x), out_dim_, out_dim_);
}

Channel Channel::compose(const Channel &inner) const {
    if (inner.out_dim_ != in_dim_) {
        throw std::invalid_argument("Channel::compose: dimension mismatch");
    }
    return Channel(inner.in_dim_, out_dim_, superop_ * inner.superop_);
}

Matrix choi_of(const Channel &phi) {
    const std::size_t n = phi.in_dim();
    const std::size_t m = phi.out_dim();
    Matrix choi(n * m, n * m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix block = phi.apply(Matrix::matrix_unit(n, j, k));
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    choi(j * m + r, k * m + c) = block(r, c);
                }
            }
        }
    }
    return choi;
}

Channel channel_from_choi(const Matrix &choi, std::size_t in_dim, std::size_t out_dim) {
    const std::size_t n = in_dim;
    const std::size_t m = out_dim;
    if (choi.rows() != n * m || choi.cols() != n * m) {
        throw std::invalid_argument("channel_from_choi: Choi matrix shape mismatch");
    }
    Matrix superop(m * m, n * n);
    // Phi(E_jk)[r,c] = C[(j,r),(k,c)]; columns of the superoperator are
    // vec(Phi(E_jk)) at vec-index k*n + j.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t col = k * n + j;
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    superop(c * m + r, col) = choi(j * m + r, k * m + c);
                }
            }
        }
    }
    return Channel(n, m, superop);
}

Channel channel_from_kraus(const KrausSet &kraus) {
    const std::size_t n = kraus.in_dim;
    const std::size_t m = kraus.out_dim;
    if (kraus.operators.empty()) {
        throw std::invalid_argument("channel_from_kraus: empty operator list");
    }
    Matrix superop(m * m, n * n);
    for (const Matrix &k : kraus.operators) {
        if (k.rows() != m || k.cols() != n) {
            throw std::invalid_argument("channel_from_kraus: operator shape mismatch");
        }
        superop += kron(k.conjugate(), k);  // X -> K X K* is conj(K) (x) K
    }
    return Channel(n, m, superop);
}

CpReport is_completely_positive(const Channel &phi, double tol) {
    const Matrix choi = hermitize(choi_of(phi));
    const HermitianEig eig = hermitian_eig(choi, 1e-6 * std::max(1.0, choi.max_abs()));
    CpReport report;
    report.min_eigenvalue = eig.eigenvalues.front();
    report.completely_positive = report.min_eigenvalue >= -tol;
    return report;
}

bool is_trace_preserving(const Channel &phi, double tol) {
    // tr(Phi(X)) = tr(X) for all X iff S^T vec(I_m) = vec(I_n).
    const Matrix lhs = phi.superop().transpose() * vec(Matrix::identity(phi.out_dim()));
    return approx_equal(lhs, vec(Matrix::identity(phi.in_dim())), tol);
}

KrausSet kraus_from_choi(const Matrix &choi, std::size_t in_dim, std::size_t out_dim, double tol) {
    const std::size_t n = in_dim;
    const std::size_t m = out_dim;
    if (choi.rows() != n * m || choi.cols() != n * m) {
        throw std::invalid_argument("kraus_from_choi: Choi matrix shape mismatch");
    }
    const HermitianEig eig = hermitian_eig(hermitize(choi), 1e-6 * std::max(1.0, choi.max_abs()));
    if (eig.eigenvalues.front() < -tol) {
        throw std::invalid_argument("kraus_from_choi: Choi matrix not positive semi-definite");
    }
    const std::vector<double> lambdas = clamped_psd_eigenvalues(eig.eigenvalues);

    KrausSet out;
    out.in_dim = n;
    out.out_dim = m;
    for (std::size_t idx = lambdas.size(); idx-- > 0;) {
        if (lambdas[idx] == 0.0) {
            continue;
        }
        const double weight = std::sqrt(lambdas[idx]);
        // Choi row index (j, r) = j*m + r corresponds to e_j (x) K e_j slots:
        // the eigenvector is vec(K) up to the (system, output) interleaving.
        Matrix k(m, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < m; ++r) {
                k(r, j) = weight * eig.eigenvectors(j * m + r, idx);
            }
        }
        out.operators.push_back(std::move(k));
    }
    return out;
}

namespace {

Matrix trace_preservation_defect(const KrausSet &kraus) {
    Matrix sum(kraus.in_dim, kraus.in_dim);
    for (const Matrix &k : kraus.operators) {
        sum += k.adjoint() * k;
    }
    return sum - Matrix::identity(kraus.in_dim);
}

}  // namespace

StinespringDilation stinespring_from_kraus(const KrausSet &kraus, std::uint64_t seed, double tol) {
    const std::size_t n = kraus.in_dim;
    const std::size_t m = kraus.out_dim;
    if (kraus.operators.empty()) {
        throw std::invalid_argument("stinespring_from_kraus: empty operator list");
    }
    const std::size_t count = kraus.operators.size();

    StinespringDilation dilation;
    dilation.in_dim = n;
    dilation.out_dim = m;
    dilation.ancilla_index = 0;

    if (trace_preservation_defect(kraus).max_abs() > tol) {
        // Not trace-preserving: no unitary form, fall back to the plain
        // isometry stack U0 x = sum_i (K_i x) (x) e_i.
        dilation.unitary_form = false;
        dilation.d = 0;
        dilation.ell = count;
        Matrix u0(m * count, n);
        for (std::size_t i = 0; i < count; ++i) {
            const Matrix &k = kraus.operators[i];
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    u0(r * count + i, c) = k(r, c);
                }
            }
        }
        dilation.u = std::move(u0);
        return dilation;
    }

    const std::size_t d = std::lcm(m, n);
    const std::size_t pad_rows = d / m;
    const std::size_t pad_cols = d / n;
    const std::size_t ell = count * pad_cols;

    // Composite ordering is system (x) pad (x) kraus-index (x) pad, which is
    // exactly C^d (x) C^ell with d = system*pad on either side.
    // U0 = sum_{i,j} K_i (x) |e_1><e_j| (x) |e_i><e_1| (x) |e_j><e_1|,
    // entered entrywise: rows factor as (r, 0, i, j), columns as (c, j, 0, 0).
    Matrix u0(d * ell, d * ell);
    std::vector<std::size_t> fixed_cols;
    for (std::size_t i = 0; i < count; ++i) {
        const Matrix &k = kraus.operators[i];
        for (std::size_t j = 0; j < pad_cols; ++j) {
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    const std::size_t row = ((r * pad_rows + 0) * count + i) * pad_cols + j;
                    const std::size_t col = ((c * pad_cols + j) * count + 0) * pad_cols + 0;
                    u0(row, col) = k(r, c);
                }
            }
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t j = 0; j < pad_cols; ++j) {
            fixed_cols.push_back((c * pad_cols + j) * count * pad_cols);
        }
    }

    Rng rng(seed);
    dilation.unitary_form = true;
    dilation.d = d;
    dilation.ell = ell;
    dilation.u = complete_to_unitary(u0, fixed_cols, rng);
    return dilation;
}

KrausSet kraus_from_stinespring(const StinespringDilation &dilation, double tol) {
    const std::size_t n = dilation.in_dim;
    const std::size_t m = dilation.out_dim;
    KrausSet out;
    out.in_dim = n;
    out.out_dim = m;

    if (!dilation.unitary_form) {
        const std::size_t ell = dilation.ell;
        if (dilation.u.rows() != m * ell || dilation.u.cols() != n) {
            throw std::invalid_argument("kraus_from_stinespring: isometry shape mismatch");
        }
        for (std::size_t i = 0; i < ell; ++i) {
            Matrix k(m, n);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    k(r, c) = dilation.u(r * ell + i, c);
                }
            }
            out.operators.push_back(std::move(k));
        }
        return out;
    }

    const std::size_t d = dilation.d;
    const std::size_t ell = dilation.ell;
    const Matrix &u = dilation.u;
    if (u.rows() != d * ell || u.cols() != d * ell) {
        throw std::invalid_argument("kraus_from_stinespring: unitary shape mismatch");
    }
    if ((u.adjoint() * u - Matrix::identity(d * ell)).max_abs() > tol) {
        throw std::invalid_argument("kraus_from_stinespring: U not unitary within tolerance");
    }
    const std::size_t pad_rows = d / m;
    const std::size_t pad_cols = d / n;

    // K_{ij}[k, c] = U_{j1}[(k, i), (c, 1)] with U = sum U_{ab} (x) |e_a><e_b|
    // over C^d (x) C^ell blocks.
    for (std::size_t i = 0; i < pad_rows; ++i) {
        for (std::size_t j = 0; j < ell; ++j) {
            Matrix k(m, n);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    const std::size_t row = (r * pad_rows + i) * ell + j;
                    const std::size_t col = (c * pad_cols + 0) * ell + 0;
                    k(r, c) = u(row, col);
                }
            }
            out.operators.push_back(std::move(k));
        }
    }
    return out;
}

Channel channel_from_stinespring(const StinespringDilation &dilation) {
    const std::size_t n = dilation.in_dim;
    const std::size_t m = dilation.out_dim;

    const auto embed_and_trace = [&](const Matrix &embedded, std::size_t anc_dim) {
        Matrix result(m, m);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                complex sum = 0.0;
                for (std::size_t a = 0; a < anc_dim; ++a) {
                    sum += embedded(r * anc_dim + a, c * anc_dim + a);
                }
                result(r, c) = sum;
            }
        }
        return result;
    };

    Matrix superop(m * m, n * n);
    if (dilation.unitary_form) {
        const std::size_t total = dilation.d * dilation.ell;
        const std::size_t anc_in = total / n;
        const std::size_t anc_out = total / m;
        const Matrix ancilla = Matrix::matrix_unit(anc_in, 0, 0);
        const Matrix u_adj = dilation.u.adjoint();
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Matrix embedded =
                    dilation.u * kron(Matrix::matrix_unit(n, j, k), ancilla) * u_adj;
                const Matrix block = embed_and_trace(embedded, anc_out);
                const std::size_t col = k * n + j;
                for (std::size_t r = 0; r < m; ++r) {
                    for (std::size_t c = 0; c < m; ++c) {
                        superop(c * m + r, col) = block(r, c);
                    }
                }
            }
        }
    } else {
        const std::size_t ell = dilation.ell;
        const Matrix u_adj = dilation.u.adjoint();
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Matrix embedded = dilation.u * Matrix::matrix_unit(n, j, k) * u_adj;
                const Matrix block = embed_and_trace(embedded, ell);
                const std::size_t col = k * n + j;
                for (std::size_t r = 0; r < m; ++r) {
                    for (std::size_t c = 0; c < m; ++c) {
                        superop(c * m + r, col) = block(r, c);
                    }
                }
            }
        }
    }
    return Channel(n, m, superop);
}

double choi_distance(const Channel &a, const Channel &b) {
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) {
        throw std::invalid_argument("choi_distance: channel dimension mismatch");
    }
    return (choi_of(a) - choi_of(b)).frobenius_norm();
}

}  // namespace stinekit
