#include "anticomm/sampler.hpp"

#include <string>

namespace anticomm {

namespace {

// Conjugating matrices use small integer entries to keep sampled pairs readable.
constexpr int kConjugatorBound = 2;

bool distinct_up_to_sign(const std::vector<Rational>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j] || values[i] == -values[j]) return false;
    return true;
}

bool pairwise_distinct(const std::vector<Rational>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j]) return false;
    return true;
}

std::vector<Rational> draw_nonzero(SplitMix64& rng, std::size_t count, int bound) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_nonzero_rational(rng, bound));
    return out;
}

void validate(const ComponentTriple& t, const SampleConfig& cfg) {
    make_triple(t.n(), t.p, t.m, t.r);
    if (t.n() < 1) throw InvalidArgument("sample: n must be positive");
    if (cfg.coeffBound < 2) throw InvalidArgument("sample: coeffBound must be at least 2");
}

ComponentSample sample_impl(const ComponentTriple& t, const SampleConfig& cfg, bool flippable) {
    validate(t, cfg);
    SplitMix64 rng(cfg.seed);
    const auto p = static_cast<std::size_t>(t.p);
    const auto m = static_cast<std::size_t>(t.m);
    const auto r = static_cast<std::size_t>(t.r);
    const Index n = t.n();

    for (int attempt = 0; attempt < cfg.retries; ++attempt) {
        ComponentSample s;
        s.triple = t;
        s.a = draw_nonzero(rng, p + m, cfg.coeffBound);
        if (!distinct_up_to_sign(s.a)) continue;

        std::vector<Rational> kappa;  // b_i c_i
        if (flippable) {
            const auto roots = draw_nonzero(rng, p, cfg.coeffBound);
            if (!distinct_up_to_sign(roots)) continue;
            for (const auto& x : roots) {
                s.b.push_back(x * x);
                s.c.emplace_back(1);
            }
        } else {
            s.b = draw_nonzero(rng, p, cfg.coeffBound);
            s.c = draw_nonzero(rng, p, cfg.coeffBound);
        }
        for (std::size_t i = 0; i < p; ++i) kappa.push_back(s.b[i] * s.c[i]);
        if (!pairwise_distinct(kappa)) continue;

        s.bTail = draw_nonzero(rng, r, cfg.coeffBound);
        if (!distinct_up_to_sign(s.bTail)) continue;
        bool clash = false;
        for (const auto& k : kappa)
            for (const auto& bt : s.bTail) clash = clash || k == bt * bt;
        if (clash) continue;

        std::vector<Rational> adiag;
        for (std::size_t i = 0; i < p; ++i) {
            adiag.push_back(s.a[i]);
            adiag.push_back(-s.a[i]);
        }
        for (std::size_t i = p; i < p + m; ++i) adiag.push_back(s.a[i]);
        adiag.resize(static_cast<std::size_t>(n), Rational(0));

        RatMatrix b0 = RatMatrix::Zero(n, n);
        for (std::size_t i = 0; i < p; ++i) {
            const auto k = static_cast<Index>(2 * i);
            b0(k, k + 1) = s.b[i];
            b0(k + 1, k) = s.c[i];
        }
        for (std::size_t j = 0; j < r; ++j) {
            const auto k = static_cast<Index>(2 * p + m + j);
            b0(k, k) = s.bTail[j];
        }

        s.g = cfg.conjugate ? random_invertible(rng, n, kConjugatorBound, cfg.retries) : RatMatrix::Identity(n, n);
        const RatMatrix g_inv = *inverse(s.g);
        s.A = s.g * diagonal(adiag) * g_inv;
        s.B = s.g * b0 * g_inv;

        if (!anticommutes(s.A, s.B)) continue;
        if (!is_generic_pair(s.A, s.B, t)) continue;
        if (component_of(s.A).triple != t) continue;
        if (flippable && component_of(s.B).triple != flip(t)) continue;
        return s;
    }
    throw RetriesExhausted("sample_component: no generic sample after " + std::to_string(cfg.retries) +
                           " attempts");
}

}  // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t threshold = (0 - range) % range;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) return lo + static_cast<std::int64_t>(x % range);
    }
}

Rational random_rational(SplitMix64& rng, int bound) {
    const auto n = rng.uniform(-bound, bound);
    const auto d = rng.uniform(1, bound);
    return Rational(n, d);
}

Rational random_nonzero_rational(SplitMix64& rng, int bound) {
    for (;;) {
        const Rational q = random_rational(rng, bound);
        if (q != 0) return q;
    }
}

RatMatrix random_matrix(SplitMix64& rng, Index rows, Index cols, int bound) {
    RatMatrix out(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) out(i, j) = random_rational(rng, bound);
    return out;
}

RatMatrix random_invertible(SplitMix64& rng, Index n, int bound, int retries) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        RatMatrix g(n, n);
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i < n; ++i) g(i, j) = Rational(rng.uniform(-bound, bound));
        if (rank(g) == n) return g;
    }
    throw RetriesExhausted("random_invertible: only singular draws");
}

ComponentSample sample_component(const ComponentTriple& t, const SampleConfig& cfg) {
    return sample_impl(t, cfg, false);
}

ComponentSample sample_component_flippable(const ComponentTriple& t, const SampleConfig& cfg) {
    return sample_impl(t, cfg, true);
}

NilpotentSample sample_nilpotent_pair(const std::vector<Index>& multiplicities, const SampleConfig& cfg) {
    if (cfg.coeffBound < 2) throw InvalidArgument("sample: coeffBound must be at least 2");
    Index n = 0;
    for (std::size_t k = 0; k < multiplicities.size(); ++k) {
        if (multiplicities[k] < 0) throw InvalidArgument("sample_nilpotent_pair: negative multiplicity");
        n += static_cast<Index>(k + 1) * multiplicities[k];
    }
    if (n < 1) throw InvalidArgument("sample_nilpotent_pair: empty multiplicity vector");

    const auto s = multiplicities.size();
    std::vector<Index> offsets{0};
    for (std::size_t k = 0; k < s; ++k) offsets.push_back(offsets.back() + static_cast<Index>(k + 1) * multiplicities[k]);

    SplitMix64 rng(cfg.seed);
    NilpotentSample out;
    out.multiplicities = multiplicities;
    out.A = stacked_nilpotent(multiplicities);

    for (int attempt = 0; attempt < cfg.retries; ++attempt) {
        out.leadingSpectra.assign(s, {});
        std::vector<Rational> all;
        for (std::size_t k = 0; k < s; ++k) {
            out.leadingSpectra[k] = draw_nonzero(rng, static_cast<std::size_t>(multiplicities[k]), cfg.coeffBound);
            all.insert(all.end(), out.leadingSpectra[k].begin(), out.leadingSpectra[k].end());
        }
        if (!distinct_up_to_sign(all)) continue;

        RatMatrix b = RatMatrix::Zero(n, n);
        for (std::size_t i = 0; i < s; ++i) {
            const Index ni = multiplicities[i];
            if (ni == 0) continue;
            for (std::size_t j = 0; j < s; ++j) {
                const Index nj = multiplicities[j];
                if (nj == 0) continue;
                const auto bi = static_cast<Index>(i + 1);
                const auto bj = static_cast<Index>(j + 1);
                LayeredBlockSpec spec{Sigma::Minus, bi, bj, ni, nj, {}};
                for (Index q = 0; q < std::min(bi, bj); ++q) spec.blocks.push_back(random_matrix(rng, ni, nj, cfg.coeffBound));
                if (i == j) {
                    const RatMatrix g = random_invertible(rng, ni, kConjugatorBound, cfg.retries);
                    spec.blocks[0] = g * diagonal(out.leadingSpectra[i]) * *inverse(g);
                }
                b.block(offsets[i], offsets[j], bi * ni, bj * nj) = layered_block(spec);
            }
        }
        if (!anticommutes(out.A, b)) continue;

        bool generic = true;
        for (std::size_t k = 0; k < s && generic; ++k) {
            const int i = static_cast<int>(k + 1);
            const Partition up{(i + 1) / 2};
            const Partition down = i / 2 > 0 ? Partition{i / 2} : Partition{};
            for (const auto& d : out.leadingSpectra[k]) {
                if (jordan_type(b, d) != up || jordan_type(b, Rational(-d)) != down) {
                    generic = false;
                    break;
                }
            }
        }
        if (!generic) continue;
        out.B = std::move(b);
        return out;
    }
    throw RetriesExhausted("sample_nilpotent_pair: no generic sample after " + std::to_string(cfg.retries) +
                           " attempts");
}

RatMatrix tangent_operator(const RatMatrix& a, const RatMatrix& b) {
    const Index n = a.rows();
    const RatMatrix id = RatMatrix::Identity(n, n);
    RatMatrix op(n * n, 2 * n * n);
    op.leftCols(n * n) = kron(RatMatrix(b.transpose()), id) + kron(id, b);
    op.rightCols(n * n) = kron(id, a) + kron(RatMatrix(a.transpose()), id);
    return op;
}

Index tangent_dim(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    const Index n = a.rows();
    return 2 * n * n - rank(tangent_operator(a, b));
}

RatMatrix tangent_basis(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    const auto basis = kernel(tangent_operator(a, b));
    RatMatrix out(2 * a.rows() * a.rows(), static_cast<Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) out.col(static_cast<Index>(k)) = basis[k];
    return out;
}

DimReport orbit_dim(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    const Index n = a.rows();
    const RatMatrix id = RatMatrix::Identity(n, n);
    RatMatrix stab(2 * n * n, n * n);
    stab.topRows(n * n) = kron(RatMatrix(a.transpose()), id) - kron(id, a);
    stab.bottomRows(n * n) = kron(RatMatrix(b.transpose()), id) - kron(id, b);
    DimReport rep;
    rep.stabilizerDim = n * n - rank(stab);
    rep.orbitDim = n * n - rep.stabilizerDim;
    rep.tangentDim = tangent_dim(a, b);
    rep.fiberDim = rep.tangentDim - rep.orbitDim;
    return rep;
}

}  // namespace anticomm
