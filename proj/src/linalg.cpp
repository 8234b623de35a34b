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

#include "superpose/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "superpose/error.hpp"

namespace superpose {

namespace {

void check_dim(std::size_t n, const char *what) {
    if (n == 0 || n > kMaxDim) {
        throw DomainError(std::string(what) + " dimension must be in 1.." + std::to_string(kMaxDim));
    }
}

/// Row-major real square matrix used by the Jacobi kernels.
struct RealSquare {
    std::size_t n;
    std::vector<double> a;
    double &operator()(std::size_t r, std::size_t c) {
        return a[r * n + c];
    }
};

/// Real embedding [[Re, -Im], [Im, Re]] of a complex rows x cols matrix.
std::vector<double> real_embedding(const CMatrix &m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    std::vector<double> out(4 * r * c);
    const std::size_t stride = 2 * c;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const Complex z = m(i, j);
            out[i * stride + j] = z.real();
            out[i * stride + j + c] = -z.imag();
            out[(i + r) * stride + j] = z.imag();
            out[(i + r) * stride + j + c] = z.real();
        }
    }
    return out;
}

/// Cyclic Jacobi eigenvalue iteration for a real symmetric matrix.
std::vector<double> symmetric_jacobi(RealSquare s) {
    const std::size_t n = s.n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            diag += s(p, p) * s(p, p);
            for (std::size_t q = p + 1; q < n; ++q) {
                off += s(p, q) * s(p, q);
            }
        }
        if (off <= 1e-32 * std::max(diag, 1e-300)) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = s(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s(k, p);
                    const double skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s(p, k);
                    const double sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = s(i, i);
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

CVector::CVector(std::size_t dim) : dim_(dim) {
    check_dim(dim, "vector");
}

CVector::CVector(std::initializer_list<Complex> entries) : dim_(entries.size()) {
    check_dim(dim_, "vector");
    std::copy(entries.begin(), entries.end(), data_.begin());
}

CVector CVector::basis(std::size_t dim, std::size_t k) {
    CVector v(dim);
    if (k >= dim) {
        throw DomainError("basis index out of range");
    }
    v[k] = 1.0;
    return v;
}

double CVector::norm_sq() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        s += std::norm(data_[i]);
    }
    return s;
}

double CVector::norm() const {
    return std::sqrt(norm_sq());
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_dim(rows, "matrix row");
    check_dim(cols, "matrix column");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : rows_(rows.size()) {
    check_dim(rows_, "matrix row");
    cols_ = rows.begin()->size();
    check_dim(cols_, "matrix column");
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DomainError("ragged matrix literal");
        }
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
        ++r;
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<Complex> diag) {
    CMatrix m(diag.size(), diag.size());
    std::size_t i = 0;
    for (const Complex &d : diag) {
        m(i, i) = d;
        ++i;
    }
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        s += std::norm(data_[i]);
    }
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        m = std::max(m, std::abs(data_[i]));
    }
    return m;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DomainError("matrix dimension mismatch in addition");
    }
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DomainError("matrix dimension mismatch in subtraction");
    }
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex s) {
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        data_[i] *= s;
    }
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix &b) {
    a -= b;
    return a;
}

CMatrix operator*(Complex s, CMatrix m) {
    m *= s;
    return m;
}

CVector operator+(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("vector dimension mismatch in addition");
    }
    CVector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

CVector operator*(Complex s, const CVector &v) {
    CVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

CMatrix adjoint(const CMatrix &m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DomainError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + ")");
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += a(r, k) * b(k, c);
            }
            out(r, c) = s;
        }
    }
    return out;
}

CVector matvec(const CMatrix &a, const CVector &v) {
    if (a.cols() != v.dim()) {
        throw DomainError("matvec: dimension mismatch");
    }
    CVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            s += a(r, k) * v[k];
        }
        out[r] = s;
    }
    return out;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

CMatrix outer(const CVector &v) {
    CMatrix out(v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            out(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return out;
}

Complex inner(const CVector &u, const CVector &v) {
    if (u.dim() != v.dim()) {
        throw DomainError("inner: dimension mismatch");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        s += std::conj(u[i]) * v[i];
    }
    return s;
}

Complex wedge(const CVector &u, const CVector &v) {
    if (u.dim() != 2 || v.dim() != 2) {
        throw DomainError("wedge: needs two 2-vectors");
    }
    return u[0] * v[1] - u[1] * v[0];
}

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return (a - b).max_abs() <= tol;
}

bool approx_equal(const CVector &a, const CVector &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

bool is_hermitian(const CMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - adjoint(m)).max_abs() <= tol * std::max(1.0, m.max_abs());
}

std::vector<double> hermitian_eigenvalues(const CMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw DomainError("hermitian_eigenvalues: matrix is not square");
    }
    if (!is_hermitian(m, tol)) {
        throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
    }
    const std::size_t n = m.rows();
    if (n == 1) {
        return {m(0, 0).real()};
    }
    if (n == 2) {
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double half = 0.5 * (a - d);
        const double r = std::sqrt(half * half + std::norm(0.5 * (m(0, 1) + std::conj(m(1, 0)))));
        return {mean - r, mean + r};
    }
    // Symmetrize before embedding so the real matrix is exactly symmetric.
    CMatrix h = 0.5 * (m + adjoint(m));
    RealSquare s{2 * n, real_embedding(h)};
    std::vector<double> doubled = symmetric_jacobi(std::move(s));
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return ev;
}

std::vector<double> singular_values(const CMatrix &m) {
    const std::size_t rows = 2 * m.rows();
    const std::size_t cols = 2 * m.cols();
    std::vector<double> a = real_embedding(m);
    auto at = [&](std::size_t r, std::size_t c) -> double & { return a[r * cols + c]; };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t k = j + 1; k < cols; ++k) {
                double alpha = 0.0;
                double beta = 0.0;
                double gamma = 0.0;
                for (std::size_t r = 0; r < rows; ++r) {
                    alpha += at(r, j) * at(r, j);
                    beta += at(r, k) * at(r, k);
                    gamma += at(r, j) * at(r, k);
                }
                if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < rows; ++r) {
                    const double x = at(r, j);
                    const double y = at(r, k);
                    at(r, j) = c * x - s * y;
                    at(r, k) = s * x + c * y;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> doubled(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            s += at(r, c) * at(r, c);
        }
        doubled[c] = std::sqrt(s);
    }
    std::sort(doubled.begin(), doubled.end(), std::greater<>());
    const std::size_t count = std::min(m.rows(), m.cols());
    std::vector<double> sv(count);
    for (std::size_t i = 0; i < count; ++i) {
        sv[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return sv;
}

std::size_t numeric_rank(const CMatrix &m, double tol) {
    const std::vector<double> sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) {
        return 0;
    }
    const double cutoff = tol * sv.front();
    return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cutoff; }));
}

}  // namespace superpose
