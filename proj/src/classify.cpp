#include "anticomm/classify.hpp"

#include <algorithm>

namespace anticomm {

ComponentTriple make_triple(int n, int p, int m, int r) {
    if (p < 0 || m < 0 || r < 0 || 2 * p + m + r != n)
        throw InvalidArgument("invalid component triple: need p, m, r >= 0 and 2p + m + r = n");
    return {p, m, r};
}

std::vector<ComponentTriple> enumerate_components(int n) {
    if (n < 1) throw InvalidArgument("enumerate_components: n must be positive");
    std::vector<ComponentTriple> out;
    for (int p = 0; 2 * p <= n; ++p)
        for (int m = 0; m <= n - 2 * p; ++m) out.push_back({p, m, n - 2 * p - m});
    return out;
}

ComponentTriple direct_sum(const ComponentTriple& a, const ComponentTriple& b) {
    return {a.p + b.p, a.m + b.m, a.r + b.r};
}

ComponentTriple flip(const ComponentTriple& t) { return {t.p, t.r, t.m}; }

ClassificationReport component_of(const RatMatrix& a) {
    require_square(a, "component_of");
    const JordanData data = jordan_data(a);
    ClassificationReport rep;

    auto find = [&](const Rational& ev) -> const JordanBlock* {
        for (const auto& b : data.blocks)
            if (b.eigenvalue == ev) return &b;
        return nullptr;
    };

    if (const auto* zero = find(Rational(0))) {
        rep.nilpotent.partition = zero->partition;
        for (int part : zero->partition.parts()) rep.nilpotent.p0 += part / 2;
        rep.nilpotent.r = zero->partition.weight() - 2 * rep.nilpotent.p0;
    }

    int p = rep.nilpotent.p0;
    int m = 0;
    for (const auto& b : data.blocks) {
        if (b.eigenvalue == 0) continue;
        const auto* partner = find(-b.eigenvalue);
        if (partner == nullptr) {
            rep.singletons.push_back({b.eigenvalue, b.partition.weight()});
            m += b.partition.weight();
            continue;
        }
        if (b.eigenvalue < 0) continue;  // counted with its positive partner
        PairedPart part{b.eigenvalue, b.partition, partner->partition, 0, 0};
        const auto nu_t = transpose_partition(part.nu);
        const auto mu_t = transpose_partition(part.mu);
        for (std::size_t k = 0; k < std::min(nu_t.parts().size(), mu_t.parts().size()); ++k)
            part.p += std::min(nu_t[k], mu_t[k]);
        part.m = part.nu.weight() + part.mu.weight() - 2 * part.p;
        p += part.p;
        m += part.m;
        rep.paired.push_back(std::move(part));
    }
    rep.triple = {p, m, rep.nilpotent.r};
    return rep;
}

bool anticommutes(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) return false;
    return is_zero(RatMatrix(a * b + b * a));
}

void require_anticommuting(const RatMatrix& a, const RatMatrix& b) {
    require_square(a, "pair");
    require_square(b, "pair");
    if (a.rows() != b.rows()) throw ShapeError("pair: A and B have different sizes");
    if (!anticommutes(a, b)) throw NotAntiCommuting();
}

int distinct_nonzero_eigenvalue_count(const RatMatrix& m) {
    require_square(m, "distinct_nonzero_eigenvalue_count");
    if (m.rows() == 0) return 0;
    const Polynomial chi = charpoly(m);
    int e = 0;
    while (chi.coeff(e) == 0) ++e;
    std::vector<Rational> rest(chi.coeffs().begin() + e, chi.coeffs().end());
    return squarefree_part(Polynomial(std::move(rest))).degree();
}

namespace {

// charpoly(M) = X^e q with q squarefree and q(0) != 0.
bool nonzero_eigenvalues_distinct(const RatMatrix& m) {
    const Polynomial chi = charpoly(m);
    int e = 0;
    while (chi.coeff(e) == 0) ++e;
    std::vector<Rational> rest(chi.coeffs().begin() + e, chi.coeffs().end());
    const Polynomial q(std::move(rest));
    return squarefree_part(q).degree() == q.degree();
}

}  // namespace

bool is_generic_pair(const RatMatrix& a, const RatMatrix& b, const ComponentTriple& t) {
    require_anticommuting(a, b);
    if (t.n() != a.rows() || t.p < 0 || t.m < 0 || t.r < 0) return false;
    if (rank(a) != 2 * t.p + t.m || rank(b) != 2 * t.p + t.r) return false;
    if (!is_diagonalizable(a) || !is_diagonalizable(b)) return false;
    if (!nonzero_eigenvalues_distinct(a) || !nonzero_eigenvalues_distinct(b)) return false;
    const RatMatrix a2 = a * a;
    const RatMatrix b2 = b * b;
    return distinct_nonzero_eigenvalue_count(a2) == t.p + t.m && distinct_nonzero_eigenvalue_count(b2) == t.p + t.r;
}

ComponentTriple triple_from_ranks(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    const auto n = static_cast<int>(a.rows());
    const auto ra = static_cast<int>(rank(a));
    const auto rb = static_cast<int>(rank(b));
    const int twice_p = ra + rb - n;
    if (twice_p < 0 || twice_p % 2 != 0) throw NotGeneric("ranks of A and B fit no component triple");
    const ComponentTriple t{twice_p / 2, ra - twice_p, rb - twice_p};
    if (t.m < 0 || t.r < 0) throw NotGeneric("ranks of A and B fit no component triple");
    return t;
}

std::pair<RatMatrix, RatMatrix> bridge_square(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    return {a * a, b};
}

std::pair<RatMatrix, RatMatrix> bridge_square2(const RatMatrix& a, const RatMatrix& b) {
    require_anticommuting(a, b);
    return {a * a, b * b};
}

}  // namespace anticomm
