#include "anticomm/layered.hpp"

#include <algorithm>

namespace anticomm {

RatMatrix jordan_block(Index size, const Rational& alpha) {
    RatMatrix j = RatMatrix::Zero(size, size);
    for (Index i = 0; i < size; ++i) {
        j(i, i) = alpha;
        if (i + 1 < size) j(i, i + 1) = 1;
    }
    return j;
}

RatMatrix jordan_matrix(const JordanData& data) {
    data.validate();
    std::vector<RatMatrix> blocks;
    for (const auto& b : data.blocks)
        for (int part : b.partition.parts()) blocks.push_back(jordan_block(part, b.eigenvalue));
    return block_diag(blocks);
}

RatMatrix jbold(Index s, Index n, const Rational& alpha) {
    if (s < 0 || n < 0) throw InvalidArgument("jbold: negative size");
    RatMatrix out = RatMatrix::Zero(s * n, s * n);
    for (Index i = 0; i < s * n; ++i) out(i, i) = alpha;
    for (Index b = 0; b + 1 < s; ++b)
        for (Index k = 0; k < n; ++k) out(b * n + k, (b + 1) * n + k) = 1;
    return out;
}

RatMatrix stacked_nilpotent(const std::vector<Index>& multiplicities) {
    std::vector<RatMatrix> blocks;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        blocks.push_back(jbold(static_cast<Index>(i + 1), multiplicities[i], Rational(0)));
    return block_diag(blocks);
}

namespace {

// Position of layer coefficient for grid cell (i, j); -1 if the cell is zero.
Index layer_index(Index s, Index t, Index i, Index j) {
    const Index k = std::min(s, t);
    const Index q = j - (t - k) - i;
    if (i >= k || q < 0) return -1;
    return q;
}

}  // namespace

RatMatrix layered_block(const LayeredBlockSpec& spec) {
    const Index k = std::min(spec.s, spec.t);
    if (static_cast<Index>(spec.blocks.size()) != k)
        throw ShapeError("layered_block: expected min(s, t) blocks");
    for (const auto& b : spec.blocks)
        if (b.rows() != spec.blockRows || b.cols() != spec.blockCols)
            throw ShapeError("layered_block: block has wrong shape");
    RatMatrix out = RatMatrix::Zero(spec.s * spec.blockRows, spec.t * spec.blockCols);
    for (Index i = 0; i < spec.s; ++i)
        for (Index j = 0; j < spec.t; ++j) {
            const Index q = layer_index(spec.s, spec.t, i, j);
            if (q < 0) continue;
            out.block(i * spec.blockRows, j * spec.blockCols, spec.blockRows, spec.blockCols) =
                Rational(power(spec.sigma, i)) * spec.blocks[static_cast<std::size_t>(q)];
        }
    return out;
}

RatMatrix layered_matrix(const LayeredSpec& spec) {
    LayeredBlockSpec block{spec.sigma, spec.rows, spec.cols, 1, 1, {}};
    if (static_cast<Index>(spec.v.size()) != std::min(spec.rows, spec.cols))
        throw ShapeError("layered_matrix: expected min(m, n) coefficients");
    for (const auto& b : spec.v) block.blocks.push_back(RatMatrix::Constant(1, 1, b));
    return layered_block(block);
}

std::optional<std::vector<RatMatrix>> match_layered_block(Sigma sigma, Index s, Index t, Index blockRows,
                                                          Index blockCols, const RatMatrix& mat) {
    if (mat.rows() != s * blockRows || mat.cols() != t * blockCols)
        throw ShapeError("match_layered_block: matrix shape does not match the block grid");
    const Index k = std::min(s, t);
    std::vector<RatMatrix> blocks;
    for (Index q = 0; q < k; ++q)
        blocks.emplace_back(mat.block(0, (t - k + q) * blockCols, blockRows, blockCols));
    const LayeredBlockSpec spec{sigma, s, t, blockRows, blockCols, blocks};
    if (layered_block(spec) != mat) return std::nullopt;
    return blocks;
}

std::optional<std::vector<Rational>> match_layered(Sigma sigma, Index m, Index n, const RatMatrix& mat) {
    auto blocks = match_layered_block(sigma, m, n, 1, 1, mat);
    if (!blocks) return std::nullopt;
    std::vector<Rational> v;
    for (const auto& b : *blocks) v.push_back(b(0, 0));
    return v;
}

}  // namespace anticomm
