#pragma once

// Component index set TP_n = {(p, m, r) : 2p + m + r = n} and classification of
// anti-commuting pairs into the component Z_{p,m,r} given by the covering
// construction (nilpotent part, +-a paired parts, unpaired nonzero eigenvalues).

#include "anticomm/spectral.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace anticomm {

struct ComponentTriple {
    int p = 0;
    int m = 0;
    int r = 0;

    int n() const { return 2 * p + m + r; }
    friend auto operator<=>(const ComponentTriple&, const ComponentTriple&) = default;
};

/// Throws InvalidArgument unless p, m, r >= 0 and 2p + m + r == n.
ComponentTriple make_triple(int n, int p, int m, int r);

/// All triples for n, sorted lexicographically by (p, m).
std::vector<ComponentTriple> enumerate_components(int n);

ComponentTriple direct_sum(const ComponentTriple& a, const ComponentTriple& b);

/// (p, m, r) -> (p, r, m): the component of (B, A).
ComponentTriple flip(const ComponentTriple& t);

struct NilpotentPart {
    Partition partition;  // Jordan type at eigenvalue 0
    int p0 = 0;
    int r = 0;
};

struct PairedPart {
    Rational a;  // positive representative of {a, -a}
    Partition nu;  // type at a
    Partition mu;  // type at -a
    int p = 0;
    int m = 0;
};

struct SingletonPart {
    Rational a;
    int multiplicity = 0;
};

struct ClassificationReport {
    ComponentTriple triple;
    NilpotentPart nilpotent;
    std::vector<PairedPart> paired;        // ascending by a
    std::vector<SingletonPart> singletons;  // ascending by a
};

/// Component (p, m, r) containing (A, B) for every B anti-commuting with A.
/// Throws IrrationalSpectrum when charpoly(A) does not split over Q.
ClassificationReport component_of(const RatMatrix& a);

bool anticommutes(const RatMatrix& a, const RatMatrix& b);

/// Throws ShapeError / NotAntiCommuting.
void require_anticommuting(const RatMatrix& a, const RatMatrix& b);

/// Number of distinct nonzero eigenvalues of M, i.e. deg of the squarefree part of
/// charpoly(M) / X^e. No roots are extracted.
int distinct_nonzero_eigenvalue_count(const RatMatrix& m);

/// Generic-locus test for t: rank A = 2p+m, rank B = 2p+r; A, B diagonalizable;
/// nonzero eigenvalues of A (resp. B) pairwise distinct; A^2 has exactly p+m (resp.
/// B^2 exactly p+r) distinct nonzero eigenvalues. Throws NotAntiCommuting.
bool is_generic_pair(const RatMatrix& a, const RatMatrix& b, const ComponentTriple& t);

/// The only triple a generic pair can belong to: 2p = rank A + rank B - n,
/// m = rank A - 2p, r = rank B - 2p. Throws NotGeneric if any entry is negative.
ComponentTriple triple_from_ranks(const RatMatrix& a, const RatMatrix& b);

/// (A, B) -> (A^2, B); the result commutes. Throws NotAntiCommuting.
std::pair<RatMatrix, RatMatrix> bridge_square(const RatMatrix& a, const RatMatrix& b);

/// (A, B) -> (A^2, B^2); the result commutes. Throws NotAntiCommuting.
std::pair<RatMatrix, RatMatrix> bridge_square2(const RatMatrix& a, const RatMatrix& b);

}  // namespace anticomm
