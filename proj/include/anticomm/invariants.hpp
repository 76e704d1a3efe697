#pragma once

// Conjugation invariants Tr(A^i B^j), their differential along the variety, and
// the map eta sending a generic pair to n points of the plane.

#include "anticomm/classify.hpp"

#include <map>
#include <utility>
#include <vector>

namespace anticomm {

struct InvariantVector {
    int degreeBound = 0;
    /// (i, j) -> Tr(A^i B^j) for i + j <= degreeBound.
    std::map<std::pair<int, int>, Rational> values;

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Default degree bound is 2n (pass d < 0).
InvariantVector trace_invariants(const RatMatrix& a, const RatMatrix& b, int d = -1);

/// Rank of the differential of (A, B) -> (Tr(A^i B^j))_{0 < i+j <= d} restricted to the
/// tangent space {(X, Y) : XB + BX + AY + YA = 0}. At generic points this measures
/// the dimension of the image of the component in the quotient. d < 0 means 2n.
Index invariant_jacobian_rank(const RatMatrix& a, const RatMatrix& b, int d = -1);

/// Gradient rows of the trace invariants over (vec X, vec Y), one per (i, j), 0 < i+j <= d.
RatMatrix invariant_gradients(const RatMatrix& a, const RatMatrix& b, int d);

struct PlanePoint {
    Rational x;
    Rational y;

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
    friend bool operator<(const PlanePoint& u, const PlanePoint& v) {
        return u.x < v.x || (u.x == v.x && u.y < v.y);
    }
};

/// Multiset of n plane points, kept sorted.
struct PlanePointMultiset {
    std::vector<PlanePoint> points;

    friend bool operator==(const PlanePointMultiset&, const PlanePointMultiset&) = default;
};

/// For each nonzero eigenvalue a of A: (a, kappa) with kappa the eigenvalue of B^2 on the
/// a-eigenline (0 when -a is not an eigenvalue); for each eigenvalue b of B restricted
/// to ker A: (0, b). Throws NotAntiCommuting, NotGeneric, IrrationalSpectrum.
PlanePointMultiset eta(const RatMatrix& a, const RatMatrix& b);

/// sum_k x_k y'_k - x'_k y_k. Throws ShapeError on length mismatch.
Rational omega(const std::vector<PlanePoint>& u, const std::vector<PlanePoint>& v);

}  // namespace anticomm
