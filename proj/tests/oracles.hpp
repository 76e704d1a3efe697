#pragma once

// Independent reference implementations used only by the tests. Everything here
// is deliberately naive: cofactor expansion, definition unrolling, brute force.

#include "anticomm/polynomial.hpp"
#include "anticomm/sampler.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace oracle {

using anticomm::Index;
using anticomm::Polynomial;
using anticomm::RatMatrix;
using anticomm::Rational;

inline Rational q(const char* s) { return anticomm::parse_rational(s); }

inline RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Index>(rows.size());
    const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
    RatMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

inline RatMatrix minor_of(const RatMatrix& m, Index row, Index col) {
    const Index n = m.rows();
    RatMatrix out(n - 1, n - 1);
    for (Index i = 0, oi = 0; i < n; ++i) {
        if (i == row) continue;
        for (Index j = 0, oj = 0; j < n; ++j) {
            if (j == col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const RatMatrix& m) {
    if (m.rows() == 0) return 1;
    Rational acc = 0;
    for (Index j = 0; j < m.cols(); ++j) {
        if (m(0, j) == 0) continue;
        const Rational term = m(0, j) * cofactor_det(minor_of(m, 0, j));
        acc += j % 2 == 0 ? term : Rational(-term);
    }
    return acc;
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline Polynomial poly_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    Polynomial acc;
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        const Polynomial term = m[0][j] * poly_det(sub);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

/// det(X I - A) by cofactor expansion over Q[X].
inline Polynomial cofactor_charpoly(const RatMatrix& a) {
    const auto n = static_cast<std::size_t>(a.rows());
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ii = static_cast<Index>(i);
            const auto jj = static_cast<Index>(j);
            m[i][j] = i == j ? Polynomial::linear(a(ii, jj)) : Polynomial::constant(-a(ii, jj));
        }
    return poly_det(m);
}

/// kron by direct index enumeration: (A (x) B)(i p + k, j q + l) = A(i, j) B(k, l).
inline RatMatrix kron_by_definition(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Product of (X - r) over the given roots.
inline Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& r : roots) p = p * Polynomial::linear(r);
    return p;
}

inline RatMatrix random_int_matrix(anticomm::SplitMix64& rng, Index rows, Index cols, int bound) {
    RatMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-bound, bound));
    return m;
}

inline RatMatrix companion(const Polynomial& monic) {
    const int n = monic.degree();
    RatMatrix c = RatMatrix::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
    return c;
}

}  // namespace oracle
