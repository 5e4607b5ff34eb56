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

#include "stinekit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stinekit {

namespace {

double offdiagonal_norm(const Matrix &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

HermitianEig hermitian_eig(const Matrix &a, double tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_eig: matrix not square");
    }
    if (!a.is_hermitian(tol)) {
        throw std::invalid_argument("hermitian_eig: Hermiticity violation beyond tolerance");
    }
    const std::size_t n = a.rows();
    Matrix work = hermitize(a);
    Matrix vectors = Matrix::identity(n);

    const double scale = std::max(work.frobenius_norm(), 1e-300);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiagonal_norm(work) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complex apq = work(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale) {
                    work(p, q) = 0.0;
                    work(q, p) = 0.0;
                    continue;
                }
                // Unitary 2x2 rotation R with R* A R diagonal on (p,q):
                // R = [[c, s e^{i phi}], [-s e^{-i phi}, c]], phi = arg(A_pq).
                const complex phase = apq / mag;
                const double app = work(p, p).real();
                const double aqq = work(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const complex sp = s * phase;              // s e^{i phi}
                const complex spc = s * std::conj(phase);  // s e^{-i phi}

                // Columns p, q: A <- A R.
                for (std::size_t i = 0; i < n; ++i) {
                    const complex aip = work(i, p);
                    const complex aiq = work(i, q);
                    work(i, p) = c * aip - spc * aiq;
                    work(i, q) = sp * aip + c * aiq;
                }
                // Rows p, q: A <- R* A.
                for (std::size_t j = 0; j < n; ++j) {
                    const complex apj = work(p, j);
                    const complex aqj = work(q, j);
                    work(p, j) = c * apj - sp * aqj;
                    work(q, j) = spc * apj + c * aqj;
                }
                work(p, q) = 0.0;
                work(q, p) = 0.0;
                work(p, p) = complex(work(p, p).real(), 0.0);
                work(q, q) = complex(work(q, q).real(), 0.0);

                for (std::size_t i = 0; i < n; ++i) {
                    const complex vip = vectors(i, p);
                    const complex viq = vectors(i, q);
                    vectors(i, p) = c * vip - spc * viq;
                    vectors(i, q) = sp * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work(i, i).real() < work(j, j).real();
    });

    HermitianEig result;
    result.eigenvalues.resize(n);
    result.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        result.eigenvalues[k] = work(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            result.eigenvectors(i, k) = vectors(i, order[k]);
        }
    }
    return result;
}

Matrix unitary_exponential(const Matrix &h, double t, double tol) {
    const HermitianEig eig = hermitian_eig(h, tol);
    const std::size_t n = h.rows();
    Matrix phased(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const complex phase = std::exp(complex(0.0, eig.eigenvalues[c] * t));
        for (std::size_t r = 0; r < n; ++r) {
            phased(r, c) = eig.eigenvectors(r, c) * phase;
        }
    }
    return phased * eig.eigenvectors.adjoint();
}

Matrix general_exponential(const Matrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("general_exponential: matrix not square");
    }
    const std::size_t n = m.rows();
    // Order-13 Pade coefficients and theta_13 from the standard
    // scaling-and-squaring scheme (Higham 2005).
    static const double b[] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    constexpr double kTheta13 = 5.371920351148152;

    int squarings = 0;
    Matrix a = m;
    const double norm = a.one_norm();
    if (norm > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
        a *= complex(std::ldexp(1.0, -squarings));
    }

    const Matrix ident = Matrix::identity(n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;

    Matrix u = a * (a6 * (complex(b[13]) * a6 + complex(b[11]) * a4 + complex(b[9]) * a2) +
                    complex(b[7]) * a6 + complex(b[5]) * a4 + complex(b[3]) * a2 + complex(b[1]) * ident);
    Matrix v = a6 * (complex(b[12]) * a6 + complex(b[10]) * a4 + complex(b[8]) * a2) +
               complex(b[6]) * a6 + complex(b[4]) * a4 + complex(b[2]) * a2 + complex(b[0]) * ident;

    Matrix result = solve(v - u, v + u);
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

double trace_norm(const Matrix &a) {
    const Matrix gram = a.adjoint() * a;
    const HermitianEig eig = hermitian_eig(hermitize(gram), 1e-6 * std::max(1.0, gram.max_abs()));
    double sum = 0.0;
    for (double lambda : eig.eigenvalues) {
        sum += std::sqrt(std::max(lambda, 0.0));
    }
    return sum;
}

LuDecomposition lu_factor(const Matrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("lu_factor: matrix not square");
    }
    const std::size_t n = a.rows();
    LuDecomposition out;
    out.lu = a;
    out.pivots.resize(n);
    Matrix &lu = out.lu;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu(i, k));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        out.pivots[k] = pivot;
        if (pivot != k) {
            out.permutation_sign = -out.permutation_sign;
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(lu(k, c), lu(pivot, c));
            }
        }
        if (best == 0.0) {
            out.singular = true;
            continue;
        }
        const complex inv_pivot = complex(1.0) / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const complex factor = lu(i, k) * inv_pivot;
            lu(i, k) = factor;
            if (factor == complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t c = k + 1; c < n; ++c) {
                lu(i, c) -= factor * lu(k, c);
            }
        }
    }
    return out;
}

Matrix lu_solve(const LuDecomposition &lu, const Matrix &rhs) {
    if (lu.singular) {
        throw std::runtime_error("lu_solve: matrix is singular");
    }
    const std::size_t n = lu.lu.rows();
    if (rhs.rows() != n) {
        throw std::invalid_argument("lu_solve: right-hand side row mismatch");
    }
    Matrix x = rhs;
    for (std::size_t k = 0; k < n; ++k) {
        if (lu.pivots[k] != k) {
            for (std::size_t c = 0; c < x.cols(); ++c) {
                std::swap(x(k, c), x(lu.pivots[k], c));
            }
        }
    }
    // Forward substitution (unit lower triangle).
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            const complex factor = lu.lu(i, k);
            if (factor == complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < x.cols(); ++c) {
                x(i, c) -= factor * x(k, c);
            }
        }
    }
    // Back substitution.
    for (std::size_t ii = n; ii-- > 0;) {
        const complex diag = lu.lu(ii, ii);
        for (std::size_t c = 0; c < x.cols(); ++c) {
            x(ii, c) /= diag;
        }
        for (std::size_t k = 0; k < ii; ++k) {
            const complex factor = lu.lu(k, ii);
            if (factor == complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < x.cols(); ++c) {
                x(k, c) -= factor * x(ii, c);
            }
        }
    }
    return x;
}

Matrix solve(const Matrix &a, const Matrix &rhs) {
    return lu_solve(lu_factor(a), rhs);
}

Matrix inverse(const Matrix &a) {
    return solve(a, Matrix::identity(a.rows()));
}

complex determinant(const Matrix &a) {
    const LuDecomposition lu = lu_factor(a);
    if (lu.singular) {
        return complex(0.0, 0.0);
    }
    complex det = complex(static_cast<double>(lu.permutation_sign), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        det *= lu.lu(i, i);
    }
    return det;
}

std::vector<double> clamped_psd_eigenvalues(const std::vector<double> &eigenvalues) {
    double largest = 0.0;
    for (double lambda : eigenvalues) {
        largest = std::max(largest, lambda);
    }
    const double cutoff = kRankCutoff * largest;
    std::vector<double> clamped(eigenvalues.size());
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        clamped[i] = (eigenvalues[i] <= cutoff) ? 0.0 : eigenvalues[i];
    }
    return clamped;
}

Matrix complete_to_unitary(const Matrix &partial, const std::vector<std::size_t> &fixed_cols, Rng &rng) {
    if (!partial.is_square()) {
        throw std::invalid_argument("complete_to_unitary: matrix not square");
    }
    const std::size_t n = partial.rows();
    Matrix u = partial;
    std::vector<bool> fixed(n, false);
    std::vector<std::size_t> established(fixed_cols);
    for (std::size_t c : fixed_cols) {
        fixed[c] = true;
    }

    auto project_out = [&](std::vector<complex> &v) {
        for (std::size_t c : established) {
            complex overlap = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                overlap += std::conj(u(i, c)) * v[i];
            }
            for (std::size_t i = 0; i < n; ++i) {
                v[i] -= overlap * u(i, c);
            }
        }
    };

    for (std::size_t col = 0; col < n; ++col) {
        if (fixed[col]) {
            continue;
        }
        while (true) {
            std::vector<complex> v(n);
            for (auto &x : v) {
                x = rng.gaussian_complex();
            }
            project_out(v);
            double norm = 0.0;
            for (const auto &x : v) {
                norm += std::norm(x);
            }
            norm = std::sqrt(norm);
            if (norm < 0.3) {
                continue;  // nearly in the span, redraw
            }
            for (auto &x : v) {
                x /= norm;
            }
            project_out(v);  // second pass for orthogonality at machine precision
            norm = 0.0;
            for (const auto &x : v) {
                norm += std::norm(x);
            }
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < n; ++i) {
                u(i, col) = v[i] / norm;
            }
            established.push_back(col);
            break;
        }
    }
    return u;
}

}  // namespace stinekit
