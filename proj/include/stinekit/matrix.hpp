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

#ifndef STINEKIT_MATRIX_HPP
#define STINEKIT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace stinekit {

using complex = std::complex<double>;

/// Default absolute tolerance for equality / Hermiticity / PSD decisions on
/// unit-normalized inputs. Overridable per call.
inline constexpr double kDefaultTol = 1e-9;

/// Relative eigenvalue cutoff below which a PSD matrix is treated as rank
/// deficient (Kraus extraction, rk(omega)).
inline constexpr double kRankCutoff = 1e-12;

/// Dense complex matrix with row-major storage. The universal value type of
/// the library; all operations are pure and values are freely shareable.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, complex(0.0, 0.0)) {}

    static Matrix identity(std::size_t n);
    /// Column vector e_i (zero-based index) in dimension n.
    static Matrix basis_vector(std::size_t n, std::size_t i);
    /// Matrix unit |e_i><e_j| (zero-based) in dimension n.
    static Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool is_square() const { return rows_ == cols_; }

    complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<complex> &data() const { return data_; }
    std::vector<complex> &data() { return data_; }

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(complex scalar);

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conjugate() const;

    complex trace() const;
    double frobenius_norm() const;
    /// Largest absolute entry.
    double max_abs() const;
    /// Maximum absolute column sum (induced 1-norm), used by the exponential
    /// scaling heuristic.
    double one_norm() const;

    bool is_hermitian(double tol = kDefaultTol) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator-(const Matrix &a);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(complex scalar, Matrix a);
Matrix operator*(Matrix a, complex scalar);

/// Entrywise equality within an absolute tolerance.
bool approx_equal(const Matrix &a, const Matrix &b, double tol = kDefaultTol);

/// Kronecker product; dimensions multiply.
Matrix kron(const Matrix &a, const Matrix &b);

/// Vectorization X -> sum_i e_i (x) X e_i: block i of the result holds column
/// i of X (column stacking). An m x n matrix maps to an mn x 1 vector.
Matrix vec(const Matrix &x);

/// Exact inverse of vec; target shape must be given explicitly.
Matrix unvec(const Matrix &v, std::size_t rows, std::size_t cols);

/// (A + A*)/2.
Matrix hermitize(const Matrix &a);

}  // namespace stinekit

#endif
