#include "anticomm/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace anticomm {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase_if(parts, [](int p) { return p == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition transpose_partition(const Partition& p) {
    std::vector<int> t;
    const int longest = p.empty() ? 0 : p[0];
    for (int k = 1; k <= longest; ++k) {
        int count = 0;
        for (int part : p.parts())
            if (part >= k) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

int JordanData::size() const {
    int n = 0;
    for (const auto& b : blocks) n += b.partition.weight();
    return n;
}

void JordanData::validate() const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks[i].eigenvalue == blocks[j].eigenvalue)
                throw InvalidArgument("JordanData: repeated eigenvalue " + to_string(blocks[i].eigenvalue));
}

// ------------------------------------------------------- integer divisors

namespace {

bool probably_prime(const Integer& x) { return mpz_probab_prime_p(x.backend().data(), 30) > 0; }

// Pollard-Brent rho; returns a nontrivial factor of a composite odd x.
Integer rho_factor(const Integer& x) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, g = 1, q = 1, ys, r_x;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % x); };
        do {
            r_x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(Integer(r_x - y))) % x;
                }
                g = boost::multiprecision::gcd(q, x);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == x) {
            do {
                ys = f(ys);
                g = boost::multiprecision::gcd(abs(Integer(r_x - ys)), x);
            } while (g == 1);
        }
        if (g != x) return g;
    }
}

void factor_into(Integer x, std::map<Integer, int>& out) {
    if (x == 1) return;
    for (unsigned p = 2; p < 1000; ++p) {
        while (x % p == 0) {
            ++out[Integer(p)];
            x /= p;
        }
        if (x == 1) return;
    }
    if (probably_prime(x)) {
        ++out[x];
        return;
    }
    const Integer f = rho_factor(x);
    factor_into(f, out);
    factor_into(Integer(x / f), out);
}

/// Positive divisors of |x|, x != 0.
std::vector<Integer> divisors(const Integer& x) {
    std::map<Integer, int> primes;
    factor_into(abs(x), primes);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Integer coefficients of a primitive multiple of p.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        ints.push_back(Integer(num(c) * (l / den(c))));
        g = boost::multiprecision::gcd(g, ints.back());
    }
    for (auto& v : ints) v /= g;
    return ints;
}

}  // namespace

// ------------------------------------------------------------- polynomials

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("squarefree_part of the zero polynomial");
    return p.divmod(gcd(p, p.derivative())).first.monic();
}

RationalRoots rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("rational_roots of the zero polynomial");
    RationalRoots out;

    std::vector<Rational> candidates;
    int zero_mult = 0;
    while (p.coeff(zero_mult) == 0) ++zero_mult;
    if (zero_mult > 0) candidates.emplace_back(0);

    // Candidate search on the squarefree part with the zero root removed.
    std::vector<Rational> shifted(p.coeffs().begin() + zero_mult, p.coeffs().end());
    const Polynomial core = squarefree_part(Polynomial(std::move(shifted)));
    if (core.degree() >= 1) {
        const auto c = primitive_integer_coeffs(core);
        const int d = core.degree();
        // Cauchy bound on root magnitudes.
        Rational bound = 0;
        for (int k = 0; k < d; ++k) bound = std::max(bound, Rational(abs(c[static_cast<std::size_t>(k)]), abs(c.back())));
        bound += 1;
        const auto numerators = divisors(c.front());
        const auto denominators = divisors(c.back());
        for (const auto& q : denominators) {
            for (const auto& pn : numerators) {
                if (boost::multiprecision::gcd(pn, q) != 1) continue;
                if (Rational(pn, q) > bound) continue;
                for (int s : {1, -1}) {
                    const Integer num_s = s * pn;
                    // sum c_k num^k q^(d-k)
                    Integer acc = 0;
                    Integer np = 1;
                    std::vector<Integer> qpow(static_cast<std::size_t>(d + 1));
                    qpow[0] = 1;
                    for (int k = 1; k <= d; ++k) qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;
                    for (int k = 0; k <= d; ++k) {
                        acc += c[static_cast<std::size_t>(k)] * np * qpow[static_cast<std::size_t>(d - k)];
                        np *= num_s;
                    }
                    if (acc == 0) candidates.emplace_back(num_s, q);
                }
            }
        }
    }

    std::sort(candidates.begin(), candidates.end());
    int total = 0;
    for (const auto& r : candidates) {
        Polynomial rest = p;
        int mult = 0;
        const Polynomial lin = Polynomial::linear(r);
        for (;;) {
            auto [q, rem] = rest.divmod(lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        out.roots.push_back({r, mult});
        total += mult;
    }
    out.splits = total == p.degree();
    return out;
}

// ---------------------------------------------------------------- matrices

bool is_diagonalizable(const RatMatrix& a) {
    require_square(a, "is_diagonalizable");
    if (a.rows() == 0) return true;
    return is_zero(squarefree_part(charpoly(a)).evaluate(a));
}

Partition jordan_type(const RatMatrix& a, const Rational& alpha) {
    require_square(a, "jordan_type");
    const Index n = a.rows();
    RatMatrix shifted = a;
    for (Index i = 0; i < n; ++i) shifted(i, i) -= alpha;

    // ranks[k] = rank((A - alpha I)^k)
    std::vector<Index> ranks{n};
    RatMatrix power = RatMatrix::Identity(n, n);
    while (true) {
        power = power * shifted;
        ranks.push_back(rank(power));
        if (ranks.back() == ranks[ranks.size() - 2]) break;
    }
    // at_least[k-1] = number of blocks of size >= k
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const auto at_least = static_cast<int>(ranks[k - 1] - ranks[k]);
        const auto at_least_next = k + 1 < ranks.size() ? static_cast<int>(ranks[k] - ranks[k + 1]) : 0;
        for (int i = 0; i < at_least - at_least_next; ++i) parts.push_back(static_cast<int>(k));
    }
    return Partition::from_unsorted(std::move(parts));
}

JordanData jordan_data(const RatMatrix& a) {
    require_square(a, "jordan_data");
    JordanData out;
    if (a.rows() == 0) return out;
    const auto roots = rational_roots(charpoly(a));
    if (!roots.splits) throw IrrationalSpectrum("characteristic polynomial does not split over Q");
    for (const auto& r : roots.roots) out.blocks.push_back({r.root, jordan_type(a, r.root)});
    return out;
}

}  // namespace anticomm
