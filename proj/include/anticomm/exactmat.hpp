#pragma once

// Exact dense linear algebra over a field. Everything here is templated on
// the scalar so that it works for any exact field type usable as an Eigen
// scalar; the library instantiates it with Rational.
//
// Vectorization is column-major throughout: vec(X) stacks the columns of X,
// so vec(A X B) = kron(B^T, A) vec(X).

#include "anticomm/errors.hpp"
#include "anticomm/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace anticomm {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using Index = Eigen::Index;

template <typename Scalar>
struct RrefResult {
    Matrix<Scalar> reduced;
    Index rank = 0;
    std::vector<Index> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    RrefResult<Scalar> out;
    out.reduced = m;
    Matrix<Scalar>& r = out.reduced;
    const Index rows = r.rows();
    const Index cols = r.cols();
    Index row = 0;
    for (Index col = 0; col < cols && row < rows; ++col) {
        Index piv = row;
        while (piv < rows && r(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) r.row(piv).swap(r.row(row));
        const Scalar inv = Scalar(1) / r(row, col);
        for (Index j = col; j < cols; ++j) r(row, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == row || r(i, col) == 0) continue;
            const Scalar f = r(i, col);
            for (Index j = col; j < cols; ++j) r(i, j) -= f * r(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

/// Rank by forward elimination only (no back substitution).
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> r = m;
    const Index rows = r.rows();
    const Index cols = r.cols();
    Index row = 0;
    for (Index col = 0; col < cols && row < rows; ++col) {
        Index piv = row;
        while (piv < rows && r(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) r.row(piv).swap(r.row(row));
        for (Index i = row + 1; i < rows; ++i) {
            if (r(i, col) == 0) continue;
            const Scalar f = r(i, col) / r(row, col);
            for (Index j = col; j < cols; ++j) r(i, j) -= f * r(row, j);
        }
        ++row;
    }
    return row;
}

/// Canonical null-space basis: one vector per free column (in index order),
/// with that column set to 1 and the other free columns set to 0.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernel(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const auto red = rref(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vector<Scalar>> basis;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vector<Scalar> v = Vector<Scalar>::Zero(cols);
        v(f) = Scalar(1);
        for (Index i = 0; i < red.rank; ++i) v(red.pivots[static_cast<std::size_t>(i)]) = -red.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Kronecker product: kron(A,B)(i*p+k, j*q+l) = A(i,j) * B(k,l) for B of shape p x q.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    using Scalar = typename DA::Scalar;
    const Index p = b.rows();
    const Index q = b.cols();
    Matrix<Scalar> out(a.rows() * p, a.cols() * q);
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out.block(i * p, j * q, p, q) = a(i, j) * b;
    return out;
}

template <typename Derived>
Vector<typename Derived::Scalar> vec(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Vector<Scalar> v(m.rows() * m.cols());
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
    return v;
}

template <typename Derived>
Matrix<typename Derived::Scalar> unvec(const Eigen::MatrixBase<Derived>& v, Index rows, Index cols) {
    using Scalar = typename Derived::Scalar;
    if (v.size() != rows * cols) throw ShapeError("unvec: length does not match target shape");
    Matrix<Scalar> m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
    return m;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) return false;
    return true;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (m.rows() != m.cols()) throw ShapeError(std::string(what) + ": matrix is not square");
}

/// Inverse via Gauss-Jordan on [M | I]; nullopt when M is singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    require_square(m, "inverse");
    const Index n = m.rows();
    Matrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
    auto red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[static_cast<std::size_t>(n - 1)] != n - 1)) return std::nullopt;
    return Matrix<Scalar>(red.reduced.rightCols(n));
}

/// Block-diagonal join.
template <typename Scalar>
Matrix<Scalar> block_diag(const std::vector<Matrix<Scalar>>& blocks) {
    Index rows = 0;
    Index cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix<Scalar> out = Matrix<Scalar>::Zero(rows, cols);
    Index r = 0;
    Index c = 0;
    for (const auto& b : blocks) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

template <typename Scalar>
Matrix<Scalar> diagonal(const std::vector<Scalar>& entries) {
    const auto n = static_cast<Index>(entries.size());
    Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
    for (Index i = 0; i < n; ++i) out(i, i) = entries[static_cast<std::size_t>(i)];
    return out;
}

template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, int k) {
    using Scalar = typename Derived::Scalar;
    require_square(m, "matrix_power");
    Matrix<Scalar> out = Matrix<Scalar>::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

}  // namespace anticomm
