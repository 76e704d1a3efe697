#pragma once

#include "anticomm/exactmat.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace anticomm {

/// Univariate polynomial over a field, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <typename Scalar>
class BasicPolynomial {
public:
    BasicPolynomial() = default;
    explicit BasicPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static BasicPolynomial constant(const Scalar& c) { return BasicPolynomial({c}); }
    static BasicPolynomial x() { return BasicPolynomial({Scalar(0), Scalar(1)}); }
    /// X - root
    static BasicPolynomial linear(const Scalar& root) { return BasicPolynomial({-root, Scalar(1)}); }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coeff(int k) const {
        return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : Scalar(0);
    }
    Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

    BasicPolynomial monic() const {
        if (is_zero()) return *this;
        BasicPolynomial out = *this;
        const Scalar lc = leading();
        for (auto& c : out.coeffs_) c /= lc;
        return out;
    }

    BasicPolynomial derivative() const {
        std::vector<Scalar> d;
        for (int k = 1; k <= degree(); ++k) d.push_back(Scalar(k) * coeffs_[static_cast<std::size_t>(k)]);
        return BasicPolynomial(std::move(d));
    }

    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation at a square matrix.
    template <typename Derived>
    Matrix<Scalar> evaluate(const Eigen::MatrixBase<Derived>& m) const {
        require_square(m, "polynomial evaluation");
        const Index n = m.rows();
        Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * m;
            for (Index i = 0; i < n; ++i) acc(i, i) += *it;
        }
        return acc;
    }

    friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return BasicPolynomial(std::move(c));
    }
    friend BasicPolynomial operator-(const BasicPolynomial& a) {
        BasicPolynomial out = a;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) { return a + (-b); }
    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return BasicPolynomial(std::move(c));
    }
    friend BasicPolynomial operator*(const Scalar& s, const BasicPolynomial& a) {
        return constant(s) * a;
    }
    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    BasicPolynomial pow(int k) const {
        BasicPolynomial out = constant(Scalar(1));
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    /// Euclidean division; throws InvalidArgument when dividing by zero.
    std::pair<BasicPolynomial, BasicPolynomial> divmod(const BasicPolynomial& d) const {
        if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
        std::vector<Scalar> r = coeffs_;
        const int dd = d.degree();
        const int qd = degree() - dd;
        if (qd < 0) return {BasicPolynomial(), *this};
        std::vector<Scalar> q(static_cast<std::size_t>(qd + 1), Scalar(0));
        const Scalar lc = d.leading();
        for (int k = qd; k >= 0; --k) {
            const Scalar f = r[static_cast<std::size_t>(k + dd)] / lc;
            q[static_cast<std::size_t>(k)] = f;
            if (f == 0) continue;
            for (int j = 0; j <= dd; ++j)
                r[static_cast<std::size_t>(k + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(dd));
        return {BasicPolynomial(std::move(q)), BasicPolynomial(std::move(r))};
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicPolynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (int k = p.degree(); k >= 0; --k) {
            const Scalar& c = p.coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (k > 0) os << "X^" << k;
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;

/// Monic gcd; gcd(0, 0) = 0.
template <typename Scalar>
BasicPolynomial<Scalar> gcd(BasicPolynomial<Scalar> a, BasicPolynomial<Scalar> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// det(X I - A), via reduction to upper Hessenberg form by exact similarity
/// transformations followed by the Hessenberg determinant recurrence.
template <typename Derived>
BasicPolynomial<typename Derived::Scalar> charpoly(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    using Poly = BasicPolynomial<Scalar>;
    require_square(a, "charpoly");
    Matrix<Scalar> h = a;
    const Index n = h.rows();

    for (Index m = 1; m + 1 < n; ++m) {
        Index piv = m;
        while (piv < n && h(piv, m - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            h.row(piv).swap(h.row(m));
            h.col(piv).swap(h.col(m));
        }
        for (Index i = m + 1; i < n; ++i) {
            if (h(i, m - 1) == 0) continue;
            const Scalar u = h(i, m - 1) / h(m, m - 1);
            h.row(i) -= u * h.row(m);
            h.col(m) += u * h.col(i);
        }
    }

    std::vector<Poly> p;
    p.reserve(static_cast<std::size_t>(n + 1));
    p.push_back(Poly::constant(Scalar(1)));
    for (Index k = 1; k <= n; ++k) {
        Poly next = Poly::linear(h(k - 1, k - 1)) * p[static_cast<std::size_t>(k - 1)];
        Scalar t(1);
        for (Index i = k - 2; i >= 0; --i) {
            t *= h(i + 1, i);
            if (t == 0) break;
            next = next - (h(i, k - 1) * t) * p[static_cast<std::size_t>(i)];
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

}  // namespace anticomm
