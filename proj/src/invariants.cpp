#include "anticomm/invariants.hpp"

#include "anticomm/sampler.hpp"

#include <algorithm>

namespace anticomm {

namespace {

std::vector<RatMatrix> powers(const RatMatrix& m, int d) {
    std::vector<RatMatrix> out{RatMatrix::Identity(m.rows(), m.cols())};
    for (int k = 1; k <= d; ++k) out.push_back(out.back() * m);
    return out;
}

void require_pair_shape(const RatMatrix& a, const RatMatrix& b) {
    require_square(a, "invariants");
    require_square(b, "invariants");
    if (a.rows() != b.rows()) throw ShapeError("invariants: A and B have different sizes");
}

}  // namespace

InvariantVector trace_invariants(const RatMatrix& a, const RatMatrix& b, int d) {
    require_pair_shape(a, b);
    if (d < 0) d = static_cast<int>(2 * a.rows());
    const auto pa = powers(a, d);
    const auto pb = powers(b, d);
    InvariantVector out;
    out.degreeBound = d;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            // Tr(P Q) = sum_{k,l} P(k,l) Q(l,k)
            out.values[{i, j}] = pa[static_cast<std::size_t>(i)].cwiseProduct(pb[static_cast<std::size_t>(j)].transpose()).sum();
    return out;
}

RatMatrix invariant_gradients(const RatMatrix& a, const RatMatrix& b, int d) {
    require_pair_shape(a, b);
    const Index n = a.rows();
    const auto pa = powers(a, d);
    const auto pb = powers(b, d);
    auto pa_at = [&](int k) -> const RatMatrix& { return pa[static_cast<std::size_t>(k)]; };
    auto pb_at = [&](int k) -> const RatMatrix& { return pb[static_cast<std::size_t>(k)]; };

    std::vector<RatVector> rows;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            if (i + j == 0) continue;
            // d Tr(A^i B^j)[X] = Tr(Mx X) with Mx = sum_{k<i} A^(i-1-k) B^j A^k,
            // and Tr(M X) = vec(M^T) . vec(X).
            RatMatrix mx = RatMatrix::Zero(n, n);
            for (int k = 0; k < i; ++k) mx += pa_at(i - 1 - k) * pb_at(j) * pa_at(k);
            RatMatrix my = RatMatrix::Zero(n, n);
            for (int l = 0; l < j; ++l) my += pb_at(j - 1 - l) * pa_at(i) * pb_at(l);
            RatVector row(2 * n * n);
            row.head(n * n) = vec(RatMatrix(mx.transpose()));
            row.tail(n * n) = vec(RatMatrix(my.transpose()));
            rows.push_back(std::move(row));
        }
    RatMatrix out(static_cast<Index>(rows.size()), 2 * n * n);
    for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Index>(k)) = rows[k].transpose();
    return out;
}

Index invariant_jacobian_rank(const RatMatrix& a, const RatMatrix& b, int d) {
    require_pair_shape(a, b);
    if (d < 0) d = static_cast<int>(2 * a.rows());
    const RatMatrix grads = invariant_gradients(a, b, d);
    const Index n = a.rows();
    const auto basis = kernel(tangent_operator(a, b));
    RatMatrix tangent(2 * n * n, static_cast<Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) tangent.col(static_cast<Index>(k)) = basis[k];
    return rank(RatMatrix(grads * tangent));
}

namespace {

// Any nonzero v with M v = lambda v for a rank-deficient M - lambda I; assumes a
// one-dimensional eigenspace.
RatVector eigenline(const RatMatrix& m, const Rational& lambda) {
    RatMatrix shifted = m;
    for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    auto basis = kernel(shifted);
    if (basis.size() != 1) throw NotGeneric("eigenspace is not one-dimensional");
    return basis.front();
}

}  // namespace

PlanePointMultiset eta(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    const ComponentTriple t = triple_from_ranks(a, b);
    if (!is_generic_pair(a, b, t)) throw NotGeneric("pair is not in the generic locus of its component");

    PlanePointMultiset out;
    const Index n = a.rows();
    if (n == 0) return out;
    const auto roots = rational_roots(charpoly(a));
    if (!roots.splits) throw IrrationalSpectrum("spectrum of A is not rational");

    const RatMatrix b2 = b * b;
    for (const auto& root : roots.roots) {
        if (root.root == 0) continue;
        const RatVector v = eigenline(a, root.root);
        const RatVector w = b2 * v;
        Index k = 0;
        while (v(k) == 0) ++k;
        out.points.push_back({root.root, w(k) / v(k)});
    }

    // B preserves ker A. The canonical kernel basis K is the identity on the free
    // columns of A, so B K = K M gives M = (B K) restricted to those rows.
    const auto kbasis = kernel(a);
    if (!kbasis.empty()) {
        const auto r = static_cast<Index>(kbasis.size());
        RatMatrix kmat(n, r);
        for (Index j = 0; j < r; ++j) kmat.col(j) = kbasis[static_cast<std::size_t>(j)];
        const RatMatrix bk = b * kmat;
        const auto pivots = rref(a).pivots;
        RatMatrix restricted(r, r);
        Index row = 0;
        for (Index col = 0; col < n; ++col) {
            if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
            restricted.row(row++) = bk.row(col);
        }
        const auto broots = rational_roots(charpoly(restricted));
        if (!broots.splits) throw IrrationalSpectrum("spectrum of B on ker A is not rational");
        for (const auto& root : broots.roots)
            for (int k = 0; k < root.multiplicity; ++k) out.points.push_back({Rational(0), root.root});
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

Rational omega(const std::vector<PlanePoint>& u, const std::vector<PlanePoint>& v) {
    if (u.size() != v.size()) throw ShapeError("omega: tuples have different lengths");
    Rational acc = 0;
    for (std::size_t k = 0; k < u.size(); ++k) acc += u[k].x * v[k].y - v[k].x * u[k].y;
    return acc;
}

}  // namespace anticomm
