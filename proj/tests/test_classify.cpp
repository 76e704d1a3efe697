#include "doctest.h"
#include "oracles.hpp"

#include "anticomm/classify.hpp"
#include "anticomm/layered.hpp"
#include "anticomm/sampler.hpp"

#include <set>

using namespace anticomm;
using oracle::mat;

TEST_CASE("enumerate_components") {
    CHECK(enumerate_components(1) == std::vector<ComponentTriple>{{0, 0, 1}, {0, 1, 0}});
    CHECK(enumerate_components(2).size() == 4);
    CHECK(enumerate_components(5).size() == 12);
    CHECK_THROWS_AS(enumerate_components(0), InvalidArgument);
    for (int n = 1; n <= 50; ++n) {
        std::set<std::tuple<int, int, int>> brute;
        for (int p = 0; 2 * p <= n; ++p)
            for (int m = 0; 2 * p + m <= n; ++m) brute.insert({p, m, n - 2 * p - m});
        const auto comps = enumerate_components(n);
        CHECK(comps.size() == brute.size());
        CHECK(std::is_sorted(comps.begin(), comps.end()));
        const int k = n / 2;
        CHECK(comps.size() == static_cast<std::size_t>(n % 2 == 0 ? (k + 1) * (k + 1) : (k + 1) * (k + 2)));
    }
}

TEST_CASE("component arithmetic") {
    CHECK(direct_sum({1, 0, 0}, {0, 0, 1}) == ComponentTriple{1, 0, 1});
    CHECK(direct_sum({0, 1, 0}, {0, 1, 0}) == ComponentTriple{0, 2, 0});
    CHECK(flip({1, 2, 0}) == ComponentTriple{1, 0, 2});
    for (const auto& t : enumerate_components(6)) CHECK(flip(flip(t)) == t);
    CHECK_THROWS_AS(make_triple(2, 1, 1, 0), InvalidArgument);
    CHECK(make_triple(3, 1, 1, 0).n() == 3);
}

TEST_CASE("component_of named matrices") {
    CHECK(component_of(RatMatrix::Zero(3, 3)).triple == ComponentTriple{0, 0, 3});
    CHECK(component_of(jordan_block(2, 0)).triple == ComponentTriple{1, 0, 0});
    CHECK(component_of(jordan_block(3, 0)).triple == ComponentTriple{1, 0, 1});
    const RatMatrix mixed = block_diag(std::vector<RatMatrix>{jordan_block(2, 1), jordan_block(1, -1)});
    const auto rep = component_of(mixed);
    CHECK(rep.triple == ComponentTriple{1, 1, 0});
    REQUIRE(rep.paired.size() == 1);
    CHECK(rep.paired[0].a == 1);
    CHECK(rep.paired[0].nu == Partition{2});
    CHECK(rep.paired[0].mu == Partition{1});
    CHECK(component_of(mat({{2, 0}, {0, 3}})).triple == ComponentTriple{0, 2, 0});
    CHECK_THROWS_AS(component_of(oracle::companion(Polynomial({-2, 0, 1}))), IrrationalSpectrum);
}

TEST_CASE("component_of is a similarity invariant") {
    SplitMix64 rng(14);
    const RatMatrix a = block_diag(std::vector<RatMatrix>{jordan_block(2, 3), jordan_block(2, -3), jordan_block(1, 5),
                                                          jordan_block(3, 0)});
    const auto base = component_of(a).triple;
    // (3): nu' = mu' = (1,1) -> p 2, m 0; 5: m 1; J_3(0): p 1, r 1
    CHECK(base == ComponentTriple{3, 1, 1});
    for (int trial = 0; trial < 5; ++trial) {
        const RatMatrix g = random_invertible(rng, a.rows(), 2);
        CHECK(component_of(RatMatrix(g * a * *inverse(g))).triple == base);
    }
}

TEST_CASE("is_generic_pair") {
    const RatMatrix a = mat({{1, 0}, {0, -1}});
    const RatMatrix b = mat({{0, 1}, {1, 0}});
    CHECK(is_generic_pair(a, b, {1, 0, 0}));
    CHECK_FALSE(is_generic_pair(jordan_block(2, 0), mat({{1, 0}, {0, -1}}), {1, 0, 0}));
    CHECK_FALSE(is_generic_pair(a, RatMatrix::Zero(2, 2), {1, 0, 0}));
    CHECK_THROWS_AS(is_generic_pair(a, RatMatrix::Identity(2, 2), {1, 0, 0}), NotAntiCommuting);
    CHECK(triple_from_ranks(a, b) == ComponentTriple{1, 0, 0});
}

TEST_CASE("distinct_nonzero_eigenvalue_count") {
    CHECK(distinct_nonzero_eigenvalue_count(mat({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}})) == 2);
    CHECK(distinct_nonzero_eigenvalue_count(mat({{1, 0}, {0, 1}})) == 1);
    CHECK(distinct_nonzero_eigenvalue_count(RatMatrix::Zero(2, 2)) == 0);
    CHECK(distinct_nonzero_eigenvalue_count(oracle::companion(Polynomial({-2, 0, 1}))) == 2);
}

TEST_CASE("bridges commute") {
    const auto [x, y] = bridge_square(mat({{1, 0}, {0, -1}}), mat({{0, 1}, {1, 0}}));
    CHECK(x == RatMatrix::Identity(2, 2));
    CHECK(y == mat({{0, 1}, {1, 0}}));
    const auto [u, v] = bridge_square(jordan_block(2, 0), mat({{1, 0}, {0, -1}}));
    CHECK(is_zero(u));
    CHECK(is_zero(RatMatrix(u * v - v * u)));
    CHECK_THROWS_AS(bridge_square2(RatMatrix::Identity(2, 2), RatMatrix::Identity(2, 2)), NotAntiCommuting);
    for (const auto& t : enumerate_components(4)) {
        const auto s = sample_component(t, {1});
        const auto [a2, b2] = bridge_square2(s.A, s.B);
        CHECK(a2 * b2 == b2 * a2);
        const auto [a1, b1] = bridge_square(s.A, s.B);
        CHECK(a1 * b1 == b1 * a1);
    }
}
