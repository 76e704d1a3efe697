#pragma once

// Exact sampling of points on the components Z_{p,m,r} and of semi-nilpotent
// pairs, plus local dimension measurements by exact ranks.
//
// Randomness comes from SplitMix64: the k-th draw for seed s is
//   z = s + (k+1) * 0x9E3779B97F4A7C15,
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9,
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB,
//   z ^ (z >> 31),
// so every sample is a pure function of (inputs, seed). Bounded integers are
// drawn by rejection to avoid modulo bias.

#include "anticomm/classify.hpp"
#include "anticomm/layered.hpp"

#include <cstdint>
#include <vector>

namespace anticomm {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

struct SampleConfig {
    std::uint64_t seed = 0;
    int coeffBound = 8;  // numerators in [-bound, bound], denominators in [1, bound]
    int retries = 64;
    bool conjugate = true;  // false: g = I
};

/// Nonzero rational with numerator in [-bound, bound] and denominator in [1, bound].
Rational random_nonzero_rational(SplitMix64& rng, int bound);
Rational random_rational(SplitMix64& rng, int bound);
RatMatrix random_matrix(SplitMix64& rng, Index rows, Index cols, int bound);
/// Integer entries in [-bound, bound], resampled until invertible.
RatMatrix random_invertible(SplitMix64& rng, Index n, int bound, int retries = 64);

struct ComponentSample {
    ComponentTriple triple;
    RatMatrix A;
    RatMatrix B;
    RatMatrix g;
    std::vector<Rational> a;      // a_1 .. a_{p+m}
    std::vector<Rational> b;      // b_1 .. b_p (paired blocks [[0, b_i], [c_i, 0]])
    std::vector<Rational> c;      // c_1 .. c_p
    std::vector<Rational> bTail;  // b_{p+1} .. b_{p+r}
};

/// (g A0 g^-1, g B0 g^-1) with
///   A0 = diag(a_1, -a_1, ..., a_p, -a_p, a_{p+1}, ..., a_{p+m}, 0^r),
///   B0 = diag([[0,b_1],[c_1,0]], ..., [[0,b_p],[c_p,0]], 0^m, b_{p+1}, ..., b_{p+r}).
/// Parameters are redrawn until the pair lies in the generic locus of t.
/// Throws InvalidArgument for a bad triple, RetriesExhausted on persistent collisions.
ComponentSample sample_component(const ComponentTriple& t, const SampleConfig& cfg);

/// As sample_component with c_i = 1 and b_i = t_i^2, so B has rational spectrum
/// {+-t_i} u {b_{p+j}} u {0^m}; additionally component_of(B) == flip(t).
ComponentSample sample_component_flippable(const ComponentTriple& t, const SampleConfig& cfg);

struct NilpotentSample {
    std::vector<Index> multiplicities;
    RatMatrix A;
    RatMatrix B;
    /// Prescribed spectrum of the leading block B^(1)_ii for each i (empty if n_i = 0).
    std::vector<std::vector<Rational>> leadingSpectra;
};

/// A = stacked_nilpotent(multiplicities); B anti-layered block by block with random
/// inner blocks and B^(1)_ii = g_i diag(spectrum_i) g_i^-1. Spectral values are nonzero
/// and pairwise distinct up to sign across all blocks; B is redrawn until each such value
/// d of block i has a single Jordan block of size ceil(i/2) at d and floor(i/2) at -d.
NilpotentSample sample_nilpotent_pair(const std::vector<Index>& multiplicities, const SampleConfig& cfg);

struct DimReport {
    Index tangentDim = 0;
    Index orbitDim = 0;
    Index stabilizerDim = 0;
    Index fiberDim = 0;
};

/// The n^2 x 2n^2 matrix of (X, Y) -> X B + B X + A Y + Y A on (vec X, vec Y).
RatMatrix tangent_operator(const RatMatrix& a, const RatMatrix& b);

/// 2n^2 - rank(tangent_operator). Throws NotAntiCommuting.
Index tangent_dim(const RatMatrix& a, const RatMatrix& b);

/// Basis of the tangent kernel, as 2n^2 columns. Throws NotAntiCommuting.
RatMatrix tangent_basis(const RatMatrix& a, const RatMatrix& b);

/// Stabilizer {X : XA = AX, XB = BX}, orbit n^2 - stabilizer, fiber tangent - orbit.
DimReport orbit_dim(const RatMatrix& a, const RatMatrix& b);

}  // namespace anticomm
