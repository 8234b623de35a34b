// Copyright 2026 The superpose Authors
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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace superpose {

using Complex = std::complex<double>;

/// Default absolute tolerance for equality checks and rank cutoffs. All
/// quantities handled here are O(1).
inline constexpr double kDefaultTol = 1e-9;

/// Largest supported dimension of vectors and of either matrix side.
inline constexpr std::size_t kMaxDim = 4;

/// Dense complex vector of dimension 1..4 with inline storage.
class CVector {
   public:
    CVector() = default;
    explicit CVector(std::size_t dim);
    CVector(std::initializer_list<Complex> entries);

    /// Unit coordinate vector e_k in dimension dim.
    static CVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator[](std::size_t i) {
        return data_[i];
    }
    const Complex &operator[](std::size_t i) const {
        return data_[i];
    }
    std::span<const Complex> entries() const {
        return {data_.data(), dim_};
    }

    double norm_sq() const;
    double norm() const;

   private:
    std::size_t dim_ = 0;
    std::array<Complex, kMaxDim> data_{};
};

/// Dense row-major complex matrix with both sides in 1..4.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::initializer_list<Complex> diag);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    double frobenius_norm() const;
    /// Largest entry modulus.
    double max_abs() const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex s);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(Complex s, CMatrix m);
CVector operator+(const CVector &a, const CVector &b);
CVector operator*(Complex s, const CVector &v);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix &m);

/// Throws DomainError when a.cols() != b.rows().
CMatrix matmul(const CMatrix &a, const CMatrix &b);
CVector matvec(const CMatrix &a, const CVector &v);

/// Tensor product with the first factor major: index i*b.dim()+j holds a_i b_j.
CVector kron(const CVector &a, const CVector &b);

/// v v^dagger.
CMatrix outer(const CVector &v);

/// <u|v> = sum conj(u_i) v_i.
Complex inner(const CVector &u, const CVector &v);

/// 2D wedge u_0 v_1 - u_1 v_0; zero iff the two vectors are parallel.
Complex wedge(const CVector &u, const CVector &v);

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol = kDefaultTol);
bool approx_equal(const CVector &a, const CVector &b, double tol = kDefaultTol);

/// True when |m - m^dagger| is entrywise below tol * max(1, max|m_ij|).
bool is_hermitian(const CMatrix &m, double tol = kDefaultTol);

/// Eigenvalues of a Hermitian matrix in ascending order. 2x2 uses the closed
/// form; larger sizes run cyclic Jacobi on the real symmetric embedding
/// [[Re, -Im], [Im, Re]], whose spectrum is the complex one doubled.
///
/// Throws DomainError on non-square or non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const CMatrix &m, double tol = kDefaultTol);

/// Singular values in descending order (min(rows, cols) of them), via one-sided
/// Jacobi, which keeps small singular values accurate to ~eps * largest.
std::vector<double> singular_values(const CMatrix &m);

/// Number of singular values above tol * (largest singular value); 0 for the
/// zero matrix.
std::size_t numeric_rank(const CMatrix &m, double tol = kDefaultTol);

}  // namespace superpose
