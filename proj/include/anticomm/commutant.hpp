#pragma once

#include "anticomm/layered.hpp"

#include <string>
#include <vector>

namespace anticomm {

/// Basis of {B : A B = sigma B A}. sigma = -1 is the anti-commutant.
struct CommutantBasis {
    RatMatrix A;
    Sigma sigma = Sigma::Minus;
    std::vector<RatMatrix> basis;

    std::size_t dim() const { return basis.size(); }
};

/// The n^2 x n^2 matrix of B -> A B - sigma B A acting on vec(B).
RatMatrix sigma_commutator_operator(const RatMatrix& a, Sigma sigma);

/// Kernel of B -> A B - sigma B A, as n x n matrices (canonical null basis order).
CommutantBasis sigma_commutant(const RatMatrix& a, Sigma sigma);

/// Sum over ordered pairs of individual Jordan blocks (i, j) with alpha_i == sigma alpha_j
/// of min(m_i, m_j).
std::size_t commutant_dim_formula(const JordanData& data, Sigma sigma);

struct StructureReport {
    std::size_t dim = 0;
    std::size_t expectedDim = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Builds A = jordan_matrix(data), solves for its sigma-commutant and checks every
/// basis element block by block: zero where alpha_i != sigma alpha_j, sigma-layered otherwise.
StructureReport verify_commutant_structure(const JordanData& data, Sigma sigma);

/// Leading inner blocks B^(1)_ii of B in the block grid of stacked_nilpotent(multiplicities).
std::vector<RatMatrix> leading_diagonal_blocks(const std::vector<Index>& multiplicities, const RatMatrix& b);

/// For A = stacked_nilpotent(multiplicities) and B anti-commuting with A, checks
///   charpoly(B) == prod_i charpoly(B1_ii)^ceil(i/2) * charpoly(-B1_ii)^floor(i/2).
/// Throws NotInCommutant if A B + B A != 0.
bool detblock_check(const std::vector<Index>& multiplicities, const RatMatrix& b);

}  // namespace anticomm
