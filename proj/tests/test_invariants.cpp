#include "doctest.h"
#include "oracles.hpp"

#include "anticomm/invariants.hpp"
#include "anticomm/sampler.hpp"

using namespace anticomm;
using oracle::mat;

namespace {

Rational trace_word(const RatMatrix& a, const RatMatrix& b, int i, int j) {
    return (matrix_power(a, i) * matrix_power(b, j)).trace();
}

}  // namespace

TEST_CASE("trace invariants of a 2x2 pair") {
    const auto inv = trace_invariants(mat({{1, 0}, {0, -1}}), mat({{0, 1}, {1, 0}}), 4);
    CHECK(inv.degreeBound == 4);
    CHECK(inv.values.size() == 15);
    CHECK(inv.values.at({0, 0}) == 2);
    CHECK(inv.values.at({2, 0}) == 2);
    CHECK(inv.values.at({0, 2}) == 2);
    CHECK(inv.values.at({1, 1}) == 0);
    CHECK(inv.values.at({2, 2}) == 2);
}

TEST_CASE("trace invariants agree with direct products") {
    const auto s = sample_component({1, 1, 1}, {4});
    const auto inv = trace_invariants(s.A, s.B);
    CHECK(inv.degreeBound == 8);
    for (const auto& [ij, t] : inv.values) CHECK(t == trace_word(s.A, s.B, ij.first, ij.second));
}

TEST_CASE("zero A") {
    SplitMix64 rng(1);
    const RatMatrix b = random_matrix(rng, 3, 3, 4);
    for (const auto& [ij, t] : trace_invariants(RatMatrix::Zero(3, 3), b, 5).values)
        if (ij.first >= 1) CHECK(t == 0);
}

TEST_CASE("conjugation invariance and odd-odd vanishing") {
    SplitMix64 rng(7);
    for (const auto& t : enumerate_components(4)) {
        const auto s = sample_component(t, {3});
        const auto base = trace_invariants(s.A, s.B);
        for (const auto& [ij, v] : base.values)
            if (ij.first % 2 == 1 && ij.second % 2 == 1) CHECK(v == 0);
        const RatMatrix g = random_invertible(rng, 4, 3);
        const RatMatrix gi = *inverse(g);
        CHECK(trace_invariants(RatMatrix(g * s.A * gi), RatMatrix(g * s.B * gi)) == base);
    }
    CHECK_THROWS_AS(trace_invariants(RatMatrix::Zero(2, 2), RatMatrix::Zero(3, 3)), ShapeError);
}

TEST_CASE("invariant gradients are directional derivatives") {
    // Tr((A+hX)^i (B+hY)^j) is a polynomial in h; its linear coefficient is recovered from
    // i+j+1 exact evaluations by Lagrange interpolation at h = 0..i+j.
    const auto s = sample_component({1, 0, 1}, {0});
    const Index n = s.A.rows();
    SplitMix64 rng(2);
    const RatMatrix x = random_matrix(rng, n, n, 3);
    const RatMatrix y = random_matrix(rng, n, n, 3);
    RatVector xy(2 * n * n);
    xy << vec(x), vec(y);
    const int d = 3;
    const RatVector dir = invariant_gradients(s.A, s.B, d) * xy;
    int row = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            if (i + j == 0) continue;
            const int deg = i + j;
            std::vector<Rational> hs, vals;
            for (int h = 0; h <= deg; ++h) {
                hs.emplace_back(h);
                vals.push_back(trace_word(RatMatrix(s.A + Rational(h) * x), RatMatrix(s.B + Rational(h) * y), i, j));
            }
            Polynomial interp;
            for (std::size_t k = 0; k < hs.size(); ++k) {
                Polynomial basis = Polynomial::constant(vals[k]);
                for (std::size_t l = 0; l < hs.size(); ++l)
                    if (l != k) basis = basis * Polynomial::linear(hs[l]) * Polynomial::constant(1 / (hs[k] - hs[l]));
                interp = interp + basis;
            }
            CHECK(dir(row++) == interp.coeff(1));
        }
}

TEST_CASE("invariant_jacobian_rank") {
    // d Tr(A) = Tr(X) and d Tr(B) = Tr(Y) survive at the origin; everything of degree >= 2 vanishes.
    CHECK(invariant_jacobian_rank(RatMatrix::Zero(2, 2), RatMatrix::Zero(2, 2)) == 2);
    const auto s = sample_component({1, 0, 0}, {0});
    CHECK(invariant_jacobian_rank(s.A, s.B, 4) == 2);
    const auto t = sample_component({0, 0, 3}, {0});
    CHECK(invariant_jacobian_rank(t.A, t.B, 6) == 3);
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : enumerate_components(n)) {
            const auto u = sample_component(c, {1});
            CHECK(invariant_jacobian_rank(u.A, u.B) == n);
        }
}

TEST_CASE("eta on named pairs") {
    const auto e = eta(mat({{2, 0}, {0, -2}}), mat({{0, 3}, {1, 0}}));
    CHECK(e.points == std::vector<PlanePoint>{{Rational(-2), Rational(3)}, {Rational(2), Rational(3)}});
    CHECK(eta(mat({{5}}), mat({{0}})).points == std::vector<PlanePoint>{{Rational(5), Rational(0)}});
    CHECK(eta(mat({{0}}), mat({{7}})).points == std::vector<PlanePoint>{{Rational(0), Rational(7)}});
    CHECK_THROWS_AS(eta(jordan_block(2, 0), mat({{1, 0}, {0, -1}})), NotGeneric);
    CHECK_THROWS_AS(eta(RatMatrix::Identity(2, 2), RatMatrix::Identity(2, 2)), NotAntiCommuting);
}

TEST_CASE("eta recovers sample parameters and is conjugation invariant") {
    SplitMix64 rng(10);
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_components(n)) {
            SampleConfig cfg;
            cfg.seed = 6;
            const auto s = sample_component(t, cfg);
            const auto e = eta(s.A, s.B);
            CHECK(e.points.size() == static_cast<std::size_t>(n));
            std::vector<PlanePoint> want;
            for (int i = 0; i < t.p; ++i) {
                const auto k = static_cast<std::size_t>(i);
                want.push_back({s.a[k], s.b[k] * s.c[k]});
                want.push_back({-s.a[k], s.b[k] * s.c[k]});
            }
            for (int i = t.p; i < t.p + t.m; ++i) want.push_back({s.a[static_cast<std::size_t>(i)], Rational(0)});
            for (const auto& b : s.bTail) want.push_back({Rational(0), b});
            std::sort(want.begin(), want.end());
            CHECK(e.points == want);
            const RatMatrix g = random_invertible(rng, n, 2);
            const RatMatrix gi = *inverse(g);
            CHECK(eta(RatMatrix(g * s.A * gi), RatMatrix(g * s.B * gi)) == e);
        }
}

TEST_CASE("omega") {
    const std::vector<PlanePoint> u{{Rational(1), Rational(0)}};
    const std::vector<PlanePoint> v{{Rational(0), Rational(1)}};
    CHECK(omega(u, v) == 1);
    CHECK(omega(u, u) == 0);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PlanePoint> x, y;
        for (int k = 0; k < 4; ++k) {
            x.push_back({random_rational(rng, 5), random_rational(rng, 5)});
            y.push_back({random_rational(rng, 5), random_rational(rng, 5)});
        }
        CHECK(omega(x, y) == -omega(y, x));
        CHECK(omega(x, x) == 0);
    }
    CHECK_THROWS_AS(omega(u, {}), ShapeError);
}

TEST_CASE("samples from components with different rank signatures have different invariants") {
    for (int n = 1; n <= 4; ++n) {
        const auto comps = enumerate_components(n);
        for (const auto& s : comps)
            for (const auto& t : comps) {
                if (2 * s.p + s.m == 2 * t.p + t.m && 2 * s.p + s.r == 2 * t.p + t.r) continue;
                const auto u = sample_component(s, {0});
                const auto v = sample_component(t, {0});
                CHECK_FALSE(trace_invariants(u.A, u.B) == trace_invariants(v.A, v.B));
            }
    }
}
