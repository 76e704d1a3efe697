#pragma once

// Property suites over the whole library. Each check enumerates its cases
// exhaustively up to a size bound and records every mismatch; nothing aborts
// early. Suites are shared by `anticomm verify` and the acceptance test.

#include "anticomm/json_io.hpp"

#include <string>
#include <vector>

namespace anticomm {

struct Failure {
    std::string check;
    Json inputs;
    Json expected;
    Json got;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    double wallSeconds = 0;

    bool ok() const { return failures.empty(); }
};

/// |enumerate_components(n)| against the closed count, n = 1..maxN.
SuiteResult check_component_counts(int maxN);

/// Every JordanData over eigenvalues {0, +-1, +-2, 3} of size <= maxN, both signs:
/// kernel dimension equals the block formula and each basis element has the block pattern.
SuiteResult check_commutant_structure(int maxN);

/// For every partition of n <= maxN and both signs, dim of the commutant of J_lambda(0)
/// equals sum (2i-1) lambda_i and sum of squared conjugate parts.
SuiteResult check_nilpotent_dims(int maxN);

/// Sampled pairs of every component, n <= maxN, `seeds` seeds: anti-commute, classify back, generic.
SuiteResult check_covering(int maxN, int seeds = 5);

/// tangent = n^2 + p, stabilizer = n - p, fiber = n on sampled pairs; a failing seed is redrawn once.
SuiteResult check_dimensions(int maxN, int seeds = 3);

/// component_of(B) == flip(component_of(A)) on flippable samples.
SuiteResult check_flip(int maxN);

/// Block-diagonal joins of samples with A-spectra disjoint up to sign, n1 + n2 <= maxN.
SuiteResult check_direct_sum(int maxN);

/// Nilpotent samples for every multiplicity vector of size <= maxN classify to
/// (sum n_i floor(i/2), 0, n - 2p), B to the flipped triple; single blocks J_s(0) give
/// B Jordan sizes ceil(s/2) at d and floor(s/2) at -d.
SuiteResult check_nilpotent_covering(int maxN);

/// detblock_check on sampled B, on each anti-commutant basis element and on random
/// combinations of them, for every multiplicity vector of size <= maxN.
SuiteResult check_detblock(int maxN);

/// Conjugation invariance (20 conjugations), odd-odd vanishing on every sample, and
/// invariant_jacobian_rank == n with d = 2n; samples of size <= maxN.
SuiteResult check_invariants(int maxN);

/// eta reproduces the construction parameters when g = I and is unchanged by 5 conjugations.
SuiteResult check_eta(int maxN);

/// Both bridge maps produce commuting pairs on every sample of size <= maxN.
SuiteResult check_bridges(int maxN);

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a named group of checks. Throws InvalidArgument on an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, int maxN);

/// {"suite", "maxN", "cases", "failures": [...], "results": [...]}; wall time excluded.
Json to_json(const std::string& suite, int maxN, const std::vector<SuiteResult>& results);

}  // namespace anticomm
