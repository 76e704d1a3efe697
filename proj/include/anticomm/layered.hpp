#pragma once

// Normal forms: Jordan matrices, the grouped nilpotent blocks JJ_{s,n}(alpha),
// and sigma-layered (block) matrices, which are exactly the solutions B of
// J_m(a) B = sigma B J_n(sigma a).
//
// Jordan blocks carry their 1s on the superdiagonal.

#include "anticomm/spectral.hpp"

#include <optional>
#include <vector>

namespace anticomm {

enum class Sigma : int { Plus = 1, Minus = -1 };

inline int value(Sigma s) { return static_cast<int>(s); }
/// sigma^k
inline int power(Sigma s, Index k) { return s == Sigma::Minus && k % 2 != 0 ? -1 : 1; }

RatMatrix jordan_block(Index size, const Rational& alpha);

/// Block-diagonal Jordan matrix: eigenvalues in listed order, sizes decreasing.
RatMatrix jordan_matrix(const JordanData& data);

/// The sn x sn matrix alpha I + (I_n on the block superdiagonal of an s x s grid).
RatMatrix jbold(Index s, Index n, const Rational& alpha);

/// diag(JJ_{1,n_1}(0), ..., JJ_{s,n_s}(0)); zero multiplicities contribute nothing.
RatMatrix stacked_nilpotent(const std::vector<Index>& multiplicities);

struct LayeredSpec {
    Sigma sigma = Sigma::Plus;
    Index rows = 0;
    Index cols = 0;
    std::vector<Rational> v;  // length min(rows, cols)
};

struct LayeredBlockSpec {
    Sigma sigma = Sigma::Plus;
    Index s = 0;  // block rows
    Index t = 0;  // block columns
    Index blockRows = 0;
    Index blockCols = 0;
    std::vector<RatMatrix> blocks;  // min(s, t) matrices of shape blockRows x blockCols
};

/// Row i is sigma^i (v_1, ..., v_{k-i}) starting at column (cols - k) + i, k = min(rows, cols):
/// right-justified when rows <= cols, top-justified when rows >= cols.
RatMatrix layered_matrix(const LayeredSpec& spec);

/// Block analogue of layered_matrix on an s x t grid of blockRows x blockCols blocks.
RatMatrix layered_block(const LayeredBlockSpec& spec);

/// The unique v with layered_matrix({sigma, m, n, v}) == M, if any.
std::optional<std::vector<Rational>> match_layered(Sigma sigma, Index m, Index n, const RatMatrix& mat);

std::optional<std::vector<RatMatrix>> match_layered_block(Sigma sigma, Index s, Index t, Index blockRows,
                                                          Index blockCols, const RatMatrix& mat);

}  // namespace anticomm
