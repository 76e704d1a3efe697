#pragma once

// Spectral structure over Q: squarefree parts, rational roots, Jordan types.
// Anything that needs eigenvalues requires the characteristic polynomial to
// split over Q and throws IrrationalSpectrum otherwise.

#include "anticomm/polynomial.hpp"

#include <initializer_list>
#include <vector>

namespace anticomm {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts the parts and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// nu'_k = #{i : nu_i >= k}
Partition transpose_partition(const Partition& p);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

struct JordanBlock {
    Rational eigenvalue;
    Partition partition;

    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Full Jordan structure of a matrix with rational spectrum. Eigenvalues are
/// pairwise distinct; list order is significant for jordan_matrix.
struct JordanData {
    std::vector<JordanBlock> blocks;

    int size() const;
    /// Throws InvalidArgument on repeated eigenvalues.
    void validate() const;
    friend bool operator==(const JordanData&, const JordanData&) = default;
};

struct RootMultiplicity {
    Rational root;
    int multiplicity = 0;

    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
    std::vector<RootMultiplicity> roots;  // ascending by root
    bool splits = false;
};

/// Monic p / gcd(p, p'). Throws InvalidArgument on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

/// All rational roots with exact multiplicities. Throws InvalidArgument on zero.
RationalRoots rational_roots(const Polynomial& p);

/// q(A) == 0 for q the squarefree part of the characteristic polynomial.
bool is_diagonalizable(const RatMatrix& a);

/// Block sizes of eigenvalue alpha; empty if alpha is not an eigenvalue.
Partition jordan_type(const RatMatrix& a, const Rational& alpha);

/// Jordan data with eigenvalues in ascending order.
JordanData jordan_data(const RatMatrix& a);

}  // namespace anticomm
