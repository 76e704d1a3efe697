#include "anticomm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace anticomm {

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fail(SuiteResult& res, std::string check, Json inputs, Json expected, Json got) {
    res.failures.push_back({std::move(check), std::move(inputs), std::move(expected), std::move(got)});
}

// Runs one case; a library exception is a failure of that case, not of the suite.
void run_case(SuiteResult& res, const std::string& check, const Json& inputs, const std::function<void()>& body) {
    ++res.cases;
    try {
        body();
    } catch (const Error& e) {
        fail(res, check, inputs, "no exception", std::string("exception: ") + e.what());
    }
}

Json triple_seed(const ComponentTriple& t, std::uint64_t seed) { return Json{{"triple", to_json(t)}, {"seed", seed}}; }

Json mults_json(const std::vector<Index>& mults) { return Json(mults); }

std::vector<Index> multiplicities_of(const Partition& lambda) {
    std::vector<Index> out(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts()) ++out[static_cast<std::size_t>(part - 1)];
    return out;
}

std::vector<std::vector<Index>> multiplicity_vectors(int maxN) {
    std::vector<std::vector<Index>> out;
    for (int n = 1; n <= maxN; ++n)
        for (const auto& lambda : partitions_of(n)) out.push_back(multiplicities_of(lambda));
    return out;
}

RatMatrix conjugate(const RatMatrix& g, const RatMatrix& m) { return g * m * *inverse(g); }

std::vector<ComponentTriple> triples_up_to(int maxN) {
    std::vector<ComponentTriple> out;
    for (int n = 1; n <= maxN; ++n)
        for (const auto& t : enumerate_components(n)) out.push_back(t);
    return out;
}

std::size_t expected_component_count(int n) {
    const auto k = static_cast<std::size_t>(n / 2);
    return n % 2 == 0 ? (k + 1) * (k + 1) : (k + 1) * (k + 2);
}

// Nonzero eigenvalues of a sample's A, up to sign.
std::vector<Rational> abs_spectrum(const ComponentSample& s) {
    std::vector<Rational> out;
    for (const auto& a : s.a) out.push_back(abs(a));
    return out;
}

bool disjoint(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    for (const auto& x : u)
        if (std::find(v.begin(), v.end(), x) != v.end()) return false;
    return true;
}

// Every JordanData over `pool` (ascending) with total size in [1, maxN].
void enumerate_jordan_data(const std::vector<Rational>& pool, std::size_t idx, int budget, JordanData& cur,
                           std::vector<JordanData>& out) {
    if (idx == pool.size()) {
        if (!cur.blocks.empty()) out.push_back(cur);
        return;
    }
    enumerate_jordan_data(pool, idx + 1, budget, cur, out);
    for (int k = 1; k <= budget; ++k)
        for (const auto& lambda : partitions_of(k)) {
            cur.blocks.push_back({pool[idx], lambda});
            enumerate_jordan_data(pool, idx + 1, budget - k, cur, out);
            cur.blocks.pop_back();
        }
}

PlanePointMultiset expected_eta(const ComponentSample& s) {
    PlanePointMultiset out;
    const auto p = static_cast<std::size_t>(s.triple.p);
    for (std::size_t i = 0; i < p; ++i) {
        out.points.push_back({s.a[i], s.b[i] * s.c[i]});
        out.points.push_back({-s.a[i], s.b[i] * s.c[i]});
    }
    for (std::size_t k = p; k < s.a.size(); ++k) out.points.push_back({s.a[k], Rational(0)});
    for (const auto& b : s.bTail) out.points.push_back({Rational(0), b});
    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace

SuiteResult check_component_counts(int maxN) {
    Stopwatch clock;
    SuiteResult res{"component-counts", 0, {}, 0};
    for (int n = 1; n <= maxN; ++n)
        run_case(res, "count", Json{{"n", n}}, [&] {
            const auto comps = enumerate_components(n);
            if (comps.size() != expected_component_count(n))
                fail(res, "count", Json{{"n", n}}, expected_component_count(n), comps.size());
            for (const auto& t : comps)
                if (t.n() != n || t.p < 0 || t.m < 0 || t.r < 0) fail(res, "triple", Json{{"n", n}}, n, to_json(t));
        });
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_commutant_structure(int maxN) {
    Stopwatch clock;
    SuiteResult res{"commutant-structure", 0, {}, 0};
    const std::vector<Rational> pool{-2, -1, 0, 1, 2, 3};
    std::vector<JordanData> all;
    JordanData cur;
    enumerate_jordan_data(pool, 0, maxN, cur, all);
    for (const auto& data : all)
        for (Sigma sigma : {Sigma::Plus, Sigma::Minus}) {
            const Json inputs{{"jordan", to_json(data)}, {"sigma", value(sigma)}};
            run_case(res, "structure", inputs, [&] {
                const StructureReport rep = verify_commutant_structure(data, sigma);
                if (!rep.ok()) fail(res, "structure", inputs, Json::array(), Json(rep.violations));
            });
        }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_nilpotent_dims(int maxN) {
    Stopwatch clock;
    SuiteResult res{"nilpotent-dims", 0, {}, 0};
    for (int n = 1; n <= maxN; ++n)
        for (const auto& lambda : partitions_of(n))
            for (Sigma sigma : {Sigma::Plus, Sigma::Minus}) {
                const Json inputs{{"lambda", to_json(lambda)}, {"sigma", value(sigma)}};
                run_case(res, "d_lambda", inputs, [&] {
                    std::size_t d = 0;
                    for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i)
                        d += (2 * i + 1) * static_cast<std::size_t>(lambda[i]);
                    std::size_t squares = 0;
                    const Partition conj = transpose_partition(lambda);
                    for (int part : conj.parts()) squares += static_cast<std::size_t>(part * part);
                    const JordanData data{{{Rational(0), lambda}}};
                    const std::size_t dim = sigma_commutant(jordan_matrix(data), sigma).dim();
                    if (dim != d || squares != d)
                        fail(res, "d_lambda", inputs, d, Json{{"kernelDim", dim}, {"conjugateSquares", squares}});
                    const std::size_t orbit = static_cast<std::size_t>(n * n) - d;
                    if (orbit + dim != static_cast<std::size_t>(n * n))
                        fail(res, "dim N_lambda", inputs, n * n, orbit + dim);
                });
            }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_covering(int maxN, int seeds) {
    Stopwatch clock;
    SuiteResult res{"covering", 0, {}, 0};
    for (const auto& t : triples_up_to(maxN))
        for (int seed = 0; seed < seeds; ++seed) {
            const Json inputs = triple_seed(t, static_cast<std::uint64_t>(seed));
            run_case(res, "round-trip", inputs, [&] {
                const auto s = sample_component(t, {static_cast<std::uint64_t>(seed)});
                if (!anticommutes(s.A, s.B)) fail(res, "anticommutes", inputs, true, false);
                const auto got = component_of(s.A).triple;
                if (got != t) fail(res, "component_of", inputs, to_json(t), to_json(got));
                if (!is_generic_pair(s.A, s.B, t)) fail(res, "generic", inputs, true, false);
            });
        }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_dimensions(int maxN, int seeds) {
    Stopwatch clock;
    SuiteResult res{"dimensions", 0, {}, 0};
    for (const auto& t : triples_up_to(maxN))
        for (int seed = 0; seed < seeds; ++seed) {
            const Index n = t.n();
            const Json expected{{"tangentDim", n * n + t.p}, {"stabilizerDim", n - t.p}, {"fiberDim", n}};
            const Json inputs = triple_seed(t, static_cast<std::uint64_t>(seed));
            run_case(res, "dims", inputs, [&] {
                auto measure = [&](std::uint64_t s) {
                    const auto smp = sample_component(t, {s});
                    const DimReport rep = orbit_dim(smp.A, smp.B);
                    return Json{{"tangentDim", rep.tangentDim},
                                {"stabilizerDim", rep.stabilizerDim},
                                {"fiberDim", rep.fiberDim}};
                };
                Json got = measure(static_cast<std::uint64_t>(seed));
                if (got != expected) got = measure(static_cast<std::uint64_t>(seed) + 1000);
                if (got != expected) fail(res, "dims", inputs, expected, got);
            });
        }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_flip(int maxN) {
    Stopwatch clock;
    SuiteResult res{"flip", 0, {}, 0};
    for (const auto& t : triples_up_to(maxN)) {
        const Json inputs = triple_seed(t, 0);
        run_case(res, "flip", inputs, [&] {
            const auto s = sample_component_flippable(t, {0});
            const auto ta = component_of(s.A).triple;
            const auto tb = component_of(s.B).triple;
            if (tb != flip(ta)) fail(res, "flip", inputs, to_json(flip(ta)), to_json(tb));
        });
    }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_direct_sum(int maxN) {
    Stopwatch clock;
    SuiteResult res{"direct-sum", 0, {}, 0};
    constexpr int kAttempts = 32;
    for (int n1 = 1; n1 < maxN; ++n1)
        for (int n2 = 1; n1 + n2 <= maxN; ++n2)
            for (const auto& t1 : enumerate_components(n1))
                for (const auto& t2 : enumerate_components(n2)) {
                    const Json inputs{{"t1", to_json(t1)}, {"t2", to_json(t2)}};
                    run_case(res, "direct-sum", inputs, [&] {
                        for (int attempt = 0; attempt < kAttempts; ++attempt) {
                            const auto s1 = sample_component(t1, {static_cast<std::uint64_t>(2 * attempt)});
                            const auto s2 = sample_component(t2, {static_cast<std::uint64_t>(2 * attempt + 1)});
                            if (!disjoint(abs_spectrum(s1), abs_spectrum(s2))) continue;
                            const RatMatrix a = block_diag(std::vector<RatMatrix>{s1.A, s2.A});
                            const RatMatrix b = block_diag(std::vector<RatMatrix>{s1.B, s2.B});
                            if (!anticommutes(a, b)) fail(res, "anticommutes", inputs, true, false);
                            const auto got = component_of(a).triple;
                            if (got != direct_sum(t1, t2))
                                fail(res, "component_of", inputs, to_json(direct_sum(t1, t2)), to_json(got));
                            return;
                        }
                        fail(res, "disjoint spectra", inputs, "disjoint draw", "none found");
                    });
                }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_nilpotent_covering(int maxN) {
    Stopwatch clock;
    SuiteResult res{"nilpotent-covering", 0, {}, 0};
    for (const auto& mults : multiplicity_vectors(maxN)) {
        const Json inputs{{"multiplicities", mults_json(mults)}};
        run_case(res, "nilpotent", inputs, [&] {
            const auto s = sample_nilpotent_pair(mults, {0});
            int p = 0, n = 0, odd = 0;
            for (std::size_t k = 0; k < mults.size(); ++k) {
                const int i = static_cast<int>(k + 1);
                p += static_cast<int>(mults[k]) * (i / 2);
                odd += static_cast<int>(mults[k]) * (i % 2);
                n += static_cast<int>(mults[k]) * i;
            }
            const ComponentTriple expected{p, 0, n - 2 * p};
            if (!anticommutes(s.A, s.B)) fail(res, "anticommutes", inputs, true, false);
            const auto ta = component_of(s.A).triple;
            if (ta != expected) fail(res, "component_of(A)", inputs, to_json(expected), to_json(ta));
            const auto tb = component_of(s.B).triple;
            if (tb != flip(expected)) fail(res, "component_of(B)", inputs, to_json(flip(expected)), to_json(tb));
            if (odd != n - 2 * p) fail(res, "odd count", inputs, n - 2 * p, odd);

            const auto nonzero = std::count_if(mults.begin(), mults.end(), [](Index x) { return x != 0; });
            if (nonzero == 1 && mults.back() == 1) {
                const int size = static_cast<int>(mults.size());
                for (const auto& d : s.leadingSpectra.back()) {
                    const Partition up = jordan_type(s.B, d);
                    const Partition down = jordan_type(s.B, Rational(-d));
                    const Partition wantUp{(size + 1) / 2};
                    const Partition wantDown = size / 2 > 0 ? Partition{size / 2} : Partition{};
                    if (up != wantUp || down != wantDown)
                        fail(res, "jordan sizes", inputs,
                             Json{{"at d", to_json(wantUp)}, {"at -d", to_json(wantDown)}},
                             Json{{"at d", to_json(up)}, {"at -d", to_json(down)}});
                }
            }
        });
    }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_detblock(int maxN) {
    Stopwatch clock;
    SuiteResult res{"detblock", 0, {}, 0};
    constexpr int kCombinations = 3;
    for (const auto& mults : multiplicity_vectors(maxN)) {
        const Json inputs{{"multiplicities", mults_json(mults)}};
        run_case(res, "sampled", inputs, [&] {
            const auto s = sample_nilpotent_pair(mults, {0});
            if (!detblock_check(mults, s.B)) fail(res, "sampled", inputs, true, false);
        });
        const RatMatrix a = stacked_nilpotent(mults);
        const auto basis = sigma_commutant(a, Sigma::Minus).basis;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Json in{{"multiplicities", mults_json(mults)}, {"basisElement", k}};
            run_case(res, "basis", in, [&] {
                if (!detblock_check(mults, basis[k])) fail(res, "basis", in, true, false);
            });
        }
        SplitMix64 rng(0);
        for (int c = 0; c < kCombinations; ++c) {
            const Json in{{"multiplicities", mults_json(mults)}, {"combination", c}};
            run_case(res, "combination", in, [&] {
                RatMatrix b = RatMatrix::Zero(a.rows(), a.cols());
                for (const auto& e : basis) b += random_rational(rng, 8) * e;
                if (!detblock_check(mults, b)) fail(res, "combination", in, true, false);
            });
        }
    }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_invariants(int maxN) {
    Stopwatch clock;
    SuiteResult res{"invariants", 0, {}, 0};
    constexpr int kConjugations = 20;
    std::vector<ComponentSample> samples;
    for (const auto& t : triples_up_to(maxN)) {
        const Json inputs = triple_seed(t, 0);
        run_case(res, "sample", inputs, [&] {
            auto s = sample_component(t, {0});
            const int d = 2 * t.n();
            const auto inv = trace_invariants(s.A, s.B, d);
            for (const auto& [ij, value] : inv.values)
                if (ij.first % 2 == 1 && ij.second % 2 == 1 && value != 0)
                    fail(res, "odd-odd", Json{{"sample", inputs}, {"i", ij.first}, {"j", ij.second}}, "0",
                         to_string(value));
            const Index rk = invariant_jacobian_rank(s.A, s.B, d);
            if (rk != t.n()) fail(res, "jacobian rank", inputs, t.n(), rk);
            samples.push_back(std::move(s));
        });
    }
    for (int k = 0; k < kConjugations && !samples.empty(); ++k) {
        const auto& s = samples[static_cast<std::size_t>(k) % samples.size()];
        const Json inputs{{"sample", to_json(s.triple)}, {"conjugation", k}};
        run_case(res, "conjugation", inputs, [&] {
            SplitMix64 rng(static_cast<std::uint64_t>(k));
            const RatMatrix g = random_invertible(rng, s.A.rows(), 3);
            const auto before = trace_invariants(s.A, s.B);
            const auto after = trace_invariants(conjugate(g, s.A), conjugate(g, s.B));
            if (before != after) fail(res, "conjugation", inputs, to_json(before), to_json(after));
        });
    }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_eta(int maxN) {
    Stopwatch clock;
    SuiteResult res{"eta", 0, {}, 0};
    constexpr int kConjugations = 5;
    for (const auto& t : triples_up_to(maxN)) {
        const Json inputs = triple_seed(t, 0);
        run_case(res, "parameters", inputs, [&] {
            SampleConfig cfg;
            cfg.conjugate = false;
            const auto s = sample_component(t, cfg);
            const auto want = expected_eta(s);
            const auto got = eta(s.A, s.B);
            if (got != want) fail(res, "parameters", inputs, to_json(want), to_json(got));
        });
        run_case(res, "orbit", inputs, [&] {
            const auto s = sample_component(t, {0});
            const auto base = eta(s.A, s.B);
            if (base != expected_eta(s)) fail(res, "parameters (conjugated)", inputs, to_json(expected_eta(s)), to_json(base));
            SplitMix64 rng(1);
            for (int k = 0; k < kConjugations; ++k) {
                const RatMatrix g = random_invertible(rng, s.A.rows(), 3);
                const auto moved = eta(conjugate(g, s.A), conjugate(g, s.B));
                if (moved != base)
                    fail(res, "orbit", Json{{"sample", inputs}, {"conjugation", k}}, to_json(base), to_json(moved));
            }
        });
    }
    res.wallSeconds = clock.seconds();
    return res;
}

SuiteResult check_bridges(int maxN) {
    Stopwatch clock;
    SuiteResult res{"bridges", 0, {}, 0};
    auto check_pair = [&](const RatMatrix& a, const RatMatrix& b, const Json& inputs) {
        run_case(res, "bridges", inputs, [&] {
            for (const auto& [name, out] : {std::pair{"square", bridge_square(a, b)}, std::pair{"square2", bridge_square2(a, b)}}) {
                const auto& [x, y] = out;
                if (!is_zero(RatMatrix(x * y - y * x))) fail(res, name, inputs, "commuting", "non-commuting");
            }
        });
    };
    for (const auto& t : triples_up_to(maxN))
        for (std::uint64_t seed = 0; seed < 2; ++seed) {
            const auto s = sample_component(t, {seed});
            check_pair(s.A, s.B, triple_seed(t, seed));
        }
    for (const auto& mults : multiplicity_vectors(maxN)) {
        const auto s = sample_nilpotent_pair(mults, {0});
        check_pair(s.A, s.B, Json{{"multiplicities", mults_json(mults)}});
    }
    res.wallSeconds = clock.seconds();
    return res;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"components", "commutant", "nilpotent", "classify",
                                                "dims",       "invariants", "all"};
    return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, int maxN) {
    if (maxN < 1) throw InvalidArgument("verify: max-n must be positive");
    std::vector<SuiteResult> out;
    const bool all = name == "all";
    if (all || name == "components") out.push_back(check_component_counts(maxN));
    if (all || name == "commutant") {
        out.push_back(check_commutant_structure(maxN));
        out.push_back(check_detblock(maxN));
    }
    if (all || name == "nilpotent") {
        out.push_back(check_nilpotent_dims(maxN));
        out.push_back(check_nilpotent_covering(maxN));
    }
    if (all || name == "classify") {
        out.push_back(check_covering(maxN));
        out.push_back(check_flip(maxN));
        out.push_back(check_direct_sum(maxN));
    }
    if (all || name == "dims") out.push_back(check_dimensions(maxN));
    if (all || name == "invariants") {
        out.push_back(check_invariants(maxN));
        out.push_back(check_eta(maxN));
        out.push_back(check_bridges(maxN));
    }
    if (out.empty()) throw InvalidArgument("verify: unknown suite '" + name + "'");
    return out;
}

Json to_json(const std::string& suite, int maxN, const std::vector<SuiteResult>& results) {
    std::size_t cases = 0;
    Json failures = Json::array();
    Json parts = Json::array();
    for (const auto& r : results) {
        cases += r.cases;
        for (const auto& f : r.failures)
            failures.push_back(Json{{"suite", r.name}, {"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
        parts.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures.size()}});
    }
    return Json{{"suite", suite}, {"maxN", maxN}, {"cases", cases}, {"failures", std::move(failures)}, {"results", std::move(parts)}};
}

}  // namespace anticomm
