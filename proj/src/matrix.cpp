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

#include "stinekit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stinekit {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::basis_vector(std::size_t n, std::size_t i) {
    Matrix v(n, 1);
    v(i, 0) = 1.0;
    return v;
}

Matrix Matrix::matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator*=(complex scalar) {
    for (auto &x : data_) {
        x *= scalar;
    }
    return *this;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out = *this;
    for (auto &x : out.data_) {
        x = std::conj(x);
    }
    return out;
}

complex Matrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace: matrix not square");
    }
    complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &x : data_) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto &x : data_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double Matrix::one_norm() const {
    double best = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) {
            s += std::abs((*this)(r, c));
        }
        best = std::max(best, s);
    }
    return best;
}

bool Matrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

Matrix operator+(Matrix a, const Matrix &b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix &b) {
    a -= b;
    return a;
}

Matrix operator-(const Matrix &a) {
    return complex(-1.0) * a;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("operator*: inner dimension mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const complex ark = a(r, k);
            if (ark == complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator*(complex scalar, Matrix a) {
    a *= scalar;
    return a;
}

Matrix operator*(Matrix a, complex scalar) {
    a *= scalar;
    return a;
}

bool approx_equal(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.data()[i] - b.data()[i]) > tol) {
            return false;
        }
    }
    return true;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const complex f = a(ar, ac);
            if (f == complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
                }
            }
        }
    }
    return out;
}

Matrix vec(const Matrix &x) {
    Matrix v(x.rows() * x.cols(), 1);
    std::size_t k = 0;
    for (std::size_t c = 0; c < x.cols(); ++c) {
        for (std::size_t r = 0; r < x.rows(); ++r) {
            v(k++, 0) = x(r, c);
        }
    }
    return v;
}

Matrix unvec(const Matrix &v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) {
        throw std::invalid_argument("unvec: vector length does not match target shape");
    }
    Matrix x(rows, cols);
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) {
            x(r, c) = v(k++, 0);
        }
    }
    return x;
}

Matrix hermitize(const Matrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitize: matrix not square");
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
        }
    }
    return out;
}

}  // namespace stinekit
