#include "doctest.h"
#include "oracles.hpp"

#include "anticomm/commutant.hpp"
#include "anticomm/sampler.hpp"

using namespace anticomm;
using oracle::mat;

namespace {

// Brute-force: the kernel of B -> AB - sigma BA assembled entry by entry.
std::size_t brute_force_dim(const RatMatrix& a, Sigma sigma) {
    const Index n = a.rows();
    RatMatrix op = RatMatrix::Zero(n * n, n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            RatMatrix e = RatMatrix::Zero(n, n);
            e(i, j) = 1;
            const RatMatrix img = a * e - Rational(value(sigma)) * e * a;
            for (Index k = 0; k < n; ++k)
                for (Index l = 0; l < n; ++l) op(k * n + l, i * n + j) = img(k, l);
        }
    return static_cast<std::size_t>(n * n - rank(op));
}

bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& m) {
    const Index n = m.rows();
    RatMatrix cols(n * n, static_cast<Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) cols.col(static_cast<Index>(k)) = vec(basis[k]);
    RatMatrix ext(n * n, cols.cols() + 1);
    ext << cols, vec(m);
    return rank(ext) == rank(cols);
}

}  // namespace

TEST_CASE("anti-commutant of small matrices") {
    CHECK(sigma_commutant(RatMatrix::Zero(2, 2), Sigma::Minus).dim() == 4);
    CHECK(sigma_commutant(RatMatrix::Identity(2, 2), Sigma::Minus).dim() == 0);

    const auto j2 = sigma_commutant(mat({{0, 1}, {0, 0}}), Sigma::Minus);
    CHECK(j2.dim() == 2);
    CHECK(j2.dim() == brute_force_dim(j2.A, Sigma::Minus));
    CHECK(in_span(j2.basis, mat({{1, 0}, {0, -1}})));
    CHECK(in_span(j2.basis, mat({{0, 1}, {0, 0}})));

    const auto d = sigma_commutant(mat({{1, 0}, {0, -1}}), Sigma::Minus);
    CHECK(d.dim() == 2);
    for (const auto& b : d.basis) {
        CHECK(b(0, 0) == 0);
        CHECK(b(1, 1) == 0);
    }
}

TEST_CASE("kernel dimension matches brute force on random matrices") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = rng.uniform(1, 4);
        JordanData data;
        data.blocks.push_back({Rational(rng.uniform(-1, 1)), partitions_of(static_cast<int>(n)).back()});
        const RatMatrix g = random_invertible(rng, n, 2);
        const RatMatrix a = g * jordan_matrix(data) * *inverse(g);
        for (Sigma s : {Sigma::Plus, Sigma::Minus}) {
            const auto com = sigma_commutant(a, s);
            CHECK(com.dim() == brute_force_dim(a, s));
            CHECK(com.dim() == commutant_dim_formula(data, s));
            for (const auto& b : com.basis) CHECK(is_zero(RatMatrix(a * b - Rational(value(s)) * b * a)));
        }
    }
}

TEST_CASE("commutant_dim_formula") {
    CHECK(commutant_dim_formula({{{Rational(0), Partition{2, 1}}}}, Sigma::Minus) == 5);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            std::size_t d = 0;
            for (int i = 0; i < lam.length(); ++i) d += static_cast<std::size_t>((2 * i + 1) * lam[static_cast<std::size_t>(i)]);
            CHECK(commutant_dim_formula({{{Rational(0), lam}}}, Sigma::Plus) == d);
        }
    CHECK(commutant_dim_formula({{{Rational(1), Partition{1}}, {Rational(2), Partition{1}}}}, Sigma::Minus) == 0);
}

TEST_CASE("verify_commutant_structure") {
    auto rep = verify_commutant_structure({{{Rational(-1), Partition{1}}, {Rational(1), Partition{2}}}}, Sigma::Minus);
    CHECK(rep.ok());
    CHECK(rep.dim == 2);
    rep = verify_commutant_structure({{{Rational(0), Partition{3}}}}, Sigma::Minus);
    CHECK(rep.ok());
    CHECK(rep.dim == 3);
    rep = verify_commutant_structure({{{Rational(2), Partition{2}}, {Rational(3), Partition{1}}}}, Sigma::Minus);
    CHECK(rep.ok());
    CHECK(rep.dim == 0);
}

TEST_CASE("detblock_check") {
    CHECK(detblock_check({1}, mat({{7}})));
    const RatMatrix b = mat({{4, 9}, {0, -4}});
    CHECK(detblock_check({0, 1}, b));
    CHECK(charpoly(b) == oracle::from_roots({4, -4}));
    CHECK_THROWS_AS(detblock_check({0, 1}, mat({{1, 0}, {0, 1}})), NotInCommutant);
    CHECK_THROWS_AS(detblock_check({0, 1}, mat({{1}})), ShapeError);

    const std::vector<Index> mults{1, 1, 1};
    const auto basis = sigma_commutant(stacked_nilpotent(mults), Sigma::Minus).basis;
    SplitMix64 rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix m = RatMatrix::Zero(6, 6);
        for (const auto& e : basis) m += random_rational(rng, 5) * e;
        CHECK(detblock_check(mults, m));
        CHECK(charpoly(m) == oracle::cofactor_charpoly(m));
    }
}

TEST_CASE("anti-commutant of a stacked nilpotent is block anti-layered") {
    const std::vector<Index> mults{1, 2};
    const RatMatrix a = stacked_nilpotent(mults);
    const auto com = sigma_commutant(a, Sigma::Minus);
    // blocks of sizes n_i (i times): ((1)), ((2,2)) -> sum over pairs of min(i,j) n_i n_j
    CHECK(com.dim() == 1 * 1 * 1 + 2 * (1 * 1 * 2) + 2 * 2 * 2);
    for (const auto& b : com.basis) {
        CHECK(match_layered_block(Sigma::Minus, 1, 2, 1, 2, b.block(0, 1, 1, 4)).has_value());
        CHECK(match_layered_block(Sigma::Minus, 2, 1, 2, 1, b.block(1, 0, 4, 1)).has_value());
        CHECK(match_layered_block(Sigma::Minus, 2, 2, 2, 2, b.block(1, 1, 4, 4)).has_value());
    }
}
