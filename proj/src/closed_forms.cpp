#include "gpp/closed_forms.hpp"

#include <algorithm>
#include <cassert>

#include "gpp/combinatorics.hpp"
#include "gpp/errors.hpp"

namespace gpp {
namespace {

FormulaResult make_result(GpPolynomial poly, FamilySpec family, int expected_gp,
                          std::vector<std::string> notes) {
    FormulaResult r{std::move(poly), expected_gp, std::move(family), std::move(notes)};
    assert(static_cast<int>(r.poly.degree()) == expected_gp);
    return r;
}

GpPolynomial one_plus_x_pow(int n) {
    std::vector<BigNat> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = binom(n, k);
    return GpPolynomial(std::move(c));
}

// (2j-1)!! = (2j)!/(2^j j!): perfect pairings of 2j points.
BigNat odd_double_factorial(int j) {
    BigNat r = 1;
    for (int i = 1; i <= j; ++i) r *= 2ULL * i - 1;
    return r;
}

}  // namespace

FormulaResult psi_complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    return make_result(one_plus_x_pow(n), FamilySpec::complete(n), n, {"(1+x)^n"});
}

FormulaResult psi_edgeless(int n) {
    if (n < 1) throw InputError("edgeless graph needs n >= 1");
    return make_result(one_plus_x_pow(n), FamilySpec::edgeless(n), n,
                       {"every vertex subset is in general position: (1+x)^n"});
}

FormulaResult psi_path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    if (n == 1) {
        return make_result(GpPolynomial({1, 1}), FamilySpec::path(1), 1, {"single vertex"});
    }
    return make_result(GpPolynomial({1, BigNat(static_cast<unsigned long long>(n)),
                                     binom(n, 2)}),
                       FamilySpec::path(n), 2, {"1 + nx + C(n,2)x^2"});
}

FormulaResult psi_multipartite(const std::vector<int>& parts) {
    FamilySpec spec = FamilySpec::multipartite(parts);
    spec.validate();

    const int t = static_cast<int>(parts.size());
    int total = 0;
    int biggest = 0;
    std::vector<unsigned long long> sizes;
    sizes.reserve(parts.size());
    for (int p : parts) {
        total += p;
        biggest = std::max(biggest, p);
        sizes.push_back(static_cast<unsigned long long>(p));
    }
    const int d = std::max(t, biggest);

    // alpha_k = e_k(n_1..n_t) + sum_i C(n_i,k): transversal sets using at most
    // one vertex per part, plus sets inside a single part.
    const std::vector<BigNat> e = elem_sym_all(sizes, d);
    std::vector<BigNat> c(static_cast<std::size_t>(d) + 1);
    c[0] = 1;
    if (d >= 1) c[1] = static_cast<unsigned long long>(total);
    for (int k = 2; k <= d; ++k) {
        BigNat v = e[k];
        for (unsigned long long ni : sizes) v += binom(ni, k);
        c[k] = v;
    }
    return make_result(GpPolynomial(std::move(c)), spec, d,
                       {"gp = max{largest part, number of parts}"});
}

FormulaResult psi_balanced(int r, int t) {
    FamilySpec spec = FamilySpec::balanced(r, t);
    spec.validate();
    const int d = std::max(r, t);
    std::vector<BigNat> c(static_cast<std::size_t>(d) + 1);
    c[0] = 1;
    c[1] = static_cast<unsigned long long>(t) * r;
    for (int k = 2; k <= d; ++k) {
        c[k] = binom(t, k) * nat_pow(r, k) + BigNat(static_cast<unsigned long long>(t)) * binom(r, k);
    }
    return make_result(GpPolynomial(std::move(c)), spec, d,
                       {"alpha_k = C(t,k) r^k + t C(r,k)"});
}

FormulaResult psi_broom(int s, int r) {
    FamilySpec spec = FamilySpec::broom(s, r);
    spec.validate();
    const int n = s + r + 1;
    std::vector<BigNat> c(static_cast<std::size_t>(std::max(2, r + 1)) + 1);
    c[0] = 1;
    c[1] = static_cast<unsigned long long>(n);
    c[2] = binom(n, 2);
    for (int k = 3; k < static_cast<int>(c.size()); ++k) {
        c[k] = BigNat(static_cast<unsigned long long>(s)) * binom(r, k - 1) + binom(r, k);
    }
    GpPolynomial poly(std::move(c));
    const int d = static_cast<int>(poly.degree());
    return make_result(std::move(poly), spec, d,
                       {"beta_k = s C(r,k-1) + C(r,k) for k >= 3"});
}

FormulaResult psi_comb(int n) {
    FamilySpec spec = FamilySpec::comb(n);
    spec.validate();
    const int d = std::max(2, n);
    std::vector<BigNat> c(static_cast<std::size_t>(d) + 1);
    c[0] = 1;
    c[1] = 2ULL * n;
    c[2] = binom(2ULL * n, 2);
    for (int k = 3; k <= n; ++k) c[k] = BigNat(4) * binom(n, k);
    return make_result(GpPolynomial(std::move(c)), spec, d,
                       {"alpha_k = 4 C(n,k) for k >= 3"});
}

FormulaResult psi_kneser2(int n) {
    if (n <= 4) {
        throw RefusalError("kneser2 closed form needs n >= 5 (below that the graph is "
                           "edgeless or disconnected); use the enumerator");
    }
    const int d = std::max(n - 1, 6);
    std::vector<BigNat> c(static_cast<std::size_t>(d) + 1);
    c[0] = 1;
    c[1] = binom(n, 2);
    // The j-indexed family: sets of pairwise-disjoint pairs plus stars, at
    // every 2 <= j <= n-1 ...
    for (int j = 2; j <= n - 1; ++j) {
        c[j] += binom(n, 2LL * j) * odd_double_factorial(j) +
                BigNat(static_cast<unsigned long long>(n)) * binom(n - 1, j);
    }
    // ... and the standalone x^3..x^6 block on top of it.
    c[3] += binom(n, 3) + BigNat(12) * binom(n, 4);
    c[4] += BigNat(15) * binom(n, 4);
    c[5] += BigNat(6) * binom(n, 4);
    c[6] += binom(n, 4);
    GpPolynomial poly(std::move(c));
    const int deg = static_cast<int>(poly.degree());
    return make_result(std::move(poly), FamilySpec::kneser2(n), deg,
                       {"pairwise-disjoint-pair and star families plus the small-set block"});
}

FormulaResult psi_tstar(int r, int a) {
    FamilySpec spec = FamilySpec::tstar(r, a);
    spec.validate();
    const int lo = std::min(r, a);
    const int m = std::max(r, a);

    if (lo == 1) {
        return make_result(one_plus_x_pow(r * a), spec, r * a,
                           {"min{r,a}=1: the graph is edgeless on ar vertices"});
    }
    if (lo == 2) {
        if (m == 2) {
            // T*(2,2) is 2K_2: disconnected, and the distance argument behind
            // the m >= 3 case does not hold. The enumerator gives (1+x)^4.
            throw RefusalError("tstar(2,2) is the disjoint union of two edges; the "
                               "case formula does not apply — use the enumerator");
        }
        std::vector<BigNat> c(static_cast<std::size_t>(m) + 1);
        c[0] = 1;
        c[1] = 2ULL * m;
        c[2] = binom(2ULL * m, 2);
        for (int k = 3; k <= m; ++k) c[k] = BigNat(2) * binom(m, k);
        return make_result(GpPolynomial(std::move(c)), spec, m,
                           {"min{r,a}=2: K_{m,m} minus a perfect matching, m = " +
                            std::to_string(m)});
    }

    const int d = std::max({a, r, 4});
    std::vector<BigNat> c(static_cast<std::size_t>(d) + 1);
    c[0] = 1;
    c[1] = static_cast<unsigned long long>(a) * r;
    c[2] = binom(static_cast<unsigned long long>(a) * r, 2);
    const BigNat rect = binom(a, 2) * binom(r, 2);
    for (int k = 3; k <= d; ++k) {
        c[k] = BigNat(static_cast<unsigned long long>(a)) * binom(r, k) +
               BigNat(static_cast<unsigned long long>(r)) * binom(a, k) +
               factorial(k) * binom(a, k) * binom(r, k) + rect * binom(4, k);
    }
    return make_result(GpPolynomial(std::move(c)), spec, d,
                       {"r,a>=3: single rows, single columns, cliques, and 2x2 rectangles"});
}

FormulaResult psi_tstar_legacy(int r, int a) {
    FamilySpec spec = FamilySpec::tstar(r, a);
    spec.validate();
    const int top = std::max({r, a, 4});
    std::vector<BigNat> c(static_cast<std::size_t>(top) + 1);
    c[0] = 1;
    c[1] = static_cast<unsigned long long>(a) * r;
    c[2] = binom(static_cast<unsigned long long>(a) * r, 2);
    c[3] += BigNat(2ULL * a) * BigNat(static_cast<unsigned long long>(a - 1)) * binom(r, 2);
    c[4] += binom(a, 2) * binom(r, 2);
    for (int k = 3; k <= top; ++k) {
        c[k] += BigNat(static_cast<unsigned long long>(a)) * binom(r, k) +
                nat_pow(r, k) * binom(a, k);
    }
    GpPolynomial poly(std::move(c));
    const int deg = static_cast<int>(poly.degree());
    return make_result(std::move(poly), spec, deg,
                       {"superseded predecessor formula; known-incorrect for r,a >= 3 "
                        "(clique term overcounted)"});
}

FormulaResult psi_corona_edgeless(int n) {
    if (n < 1) throw InputError("corona of edgeless graph needs n >= 1");
    GpPolynomial k2({1, 2, 1});
    return make_result(k2.pow(static_cast<unsigned>(n)),
                       FamilySpec::corona_of(FamilySpec::edgeless(n)), 2 * n,
                       {"disjoint union of n copies of K_2: (1+2x+x^2)^n"});
}

GpPolynomial psi_disjoint_union(const std::vector<GpPolynomial>& polys) {
    GpPolynomial out;  // 1
    for (const auto& p : polys) out = out * p;
    return out;
}

std::optional<FormulaResult> closed_form_for(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::Complete: return psi_complete(spec.params[0]);
        case Kind::Edgeless: return psi_edgeless(spec.params[0]);
        case Kind::Path: return psi_path(spec.params[0]);
        case Kind::Multipartite: return psi_multipartite(spec.params);
        case Kind::Balanced: return psi_balanced(spec.params[0], spec.params[1]);
        case Kind::Broom: return psi_broom(spec.params[0], spec.params[1]);
        case Kind::Comb: return psi_comb(spec.params[0]);
        case Kind::Kneser2: return psi_kneser2(spec.params[0]);
        case Kind::TStar: return psi_tstar(spec.params[0], spec.params[1]);
        case Kind::Corona: {
            const FamilySpec& inner = spec.children[0];
            if (inner.kind == Kind::Edgeless) return psi_corona_edgeless(inner.params[0]);
            if (inner.kind == Kind::Path) {
                FormulaResult comb = psi_comb(inner.params[0]);
                comb.family = spec;
                comb.notes.insert(comb.notes.begin(), "corona of a path is the comb");
                return comb;
            }
            return std::nullopt;
        }
        case Kind::DisjointUnion: {
            std::vector<GpPolynomial> polys;
            std::vector<std::string> notes{"product over disjoint components"};
            for (const auto& child : spec.children) {
                auto sub = closed_form_for(child);
                if (!sub) return std::nullopt;
                polys.push_back(sub->poly);
            }
            GpPolynomial prod = psi_disjoint_union(polys);
            const int gp = static_cast<int>(prod.degree());
            return FormulaResult{std::move(prod), gp, spec, std::move(notes)};
        }
        case Kind::Cycle:
        case Kind::EdgeListFile:
        case Kind::Graph6:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace gpp
