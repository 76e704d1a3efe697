#include "anticomm/commutant.hpp"

#include <algorithm>
#include <sstream>

namespace anticomm {

RatMatrix sigma_commutator_operator(const RatMatrix& a, Sigma sigma) {
    require_square(a, "sigma_commutant");
    const Index n = a.rows();
    const RatMatrix id = RatMatrix::Identity(n, n);
    // vec(A B) = (I (x) A) vec(B), vec(B A) = (A^T (x) I) vec(B)
    return kron(id, a) - Rational(value(sigma)) * kron(RatMatrix(a.transpose()), id);
}

CommutantBasis sigma_commutant(const RatMatrix& a, Sigma sigma) {
    CommutantBasis out{a, sigma, {}};
    const Index n = a.rows();
    for (const auto& v : kernel(sigma_commutator_operator(a, sigma))) out.basis.push_back(unvec(v, n, n));
    return out;
}

namespace {

struct FlatBlock {
    Rational eigenvalue;
    Index size;
};

std::vector<FlatBlock> flatten(const JordanData& data) {
    std::vector<FlatBlock> out;
    for (const auto& b : data.blocks)
        for (int part : b.partition.parts()) out.push_back({b.eigenvalue, part});
    return out;
}

}  // namespace

std::size_t commutant_dim_formula(const JordanData& data, Sigma sigma) {
    const auto blocks = flatten(data);
    std::size_t dim = 0;
    for (const auto& bi : blocks)
        for (const auto& bj : blocks)
            if (bi.eigenvalue == Rational(value(sigma)) * bj.eigenvalue)
                dim += static_cast<std::size_t>(std::min(bi.size, bj.size));
    return dim;
}

StructureReport verify_commutant_structure(const JordanData& data, Sigma sigma) {
    StructureReport report;
    const RatMatrix a = jordan_matrix(data);
    const auto com = sigma_commutant(a, sigma);
    report.dim = com.dim();
    report.expectedDim = commutant_dim_formula(data, sigma);
    if (report.dim != report.expectedDim) {
        std::ostringstream msg;
        msg << "kernel dimension " << report.dim << " != formula " << report.expectedDim;
        report.violations.push_back(msg.str());
    }

    const auto blocks = flatten(data);
    std::vector<Index> offsets{0};
    for (const auto& b : blocks) offsets.push_back(offsets.back() + b.size);

    for (std::size_t e = 0; e < com.basis.size(); ++e) {
        const RatMatrix& basis_elem = com.basis[e];
        if (!is_zero(RatMatrix(a * basis_elem - Rational(value(sigma)) * basis_elem * a))) {
            report.violations.push_back("basis element " + std::to_string(e) + " does not solve the equation");
            continue;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = 0; j < blocks.size(); ++j) {
                const RatMatrix sub =
                    basis_elem.block(offsets[i], offsets[j], blocks[i].size, blocks[j].size);
                const bool paired = blocks[i].eigenvalue == Rational(value(sigma)) * blocks[j].eigenvalue;
                const bool ok = paired ? match_layered(sigma, blocks[i].size, blocks[j].size, sub).has_value()
                                       : is_zero(sub);
                if (!ok) {
                    std::ostringstream msg;
                    msg << "basis element " << e << " block (" << i << "," << j << ") is "
                        << (paired ? "not layered" : "nonzero");
                    report.violations.push_back(msg.str());
                }
            }
    }
    return report;
}

std::vector<RatMatrix> leading_diagonal_blocks(const std::vector<Index>& multiplicities, const RatMatrix& b) {
    std::vector<RatMatrix> out;
    Index offset = 0;
    for (std::size_t k = 0; k < multiplicities.size(); ++k) {
        const Index i = static_cast<Index>(k + 1);
        const Index ni = multiplicities[k];
        out.emplace_back(b.block(offset, offset, ni, ni));
        offset += i * ni;
    }
    return out;
}

bool detblock_check(const std::vector<Index>& multiplicities, const RatMatrix& b) {
    const RatMatrix a = stacked_nilpotent(multiplicities);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("detblock_check: B does not match the multiplicity vector");
    if (!is_zero(RatMatrix(a * b + b * a))) throw NotInCommutant("B does not anti-commute with the nilpotent normal form");

    const auto leading = leading_diagonal_blocks(multiplicities, b);
    Polynomial expected = Polynomial::constant(1);
    for (std::size_t k = 0; k < leading.size(); ++k) {
        if (leading[k].rows() == 0) continue;
        const int i = static_cast<int>(k + 1);
        expected = expected * charpoly(leading[k]).pow((i + 1) / 2) *
                   charpoly(RatMatrix(-leading[k])).pow(i / 2);
    }
    return charpoly(b) == expected;
}

}  // namespace anticomm
