#include "gpp/enumerator.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>

#include "gpp/errors.hpp"

namespace gpp {
namespace {

// S is in general position; does S + v stay so? Only triples {a,b,v} with
// a,b in S are new, and a triple can violate only when all three pairwise
// distances are finite.
bool extension_ok(const DistanceMatrix& d, const std::vector<int>& s, int v) {
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int a = s[i];
        const std::int32_t dav = d.at(a, v);
        for (std::size_t j = i + 1; j < k; ++j) {
            const int b = s[j];
            const std::int32_t dab = d.at(a, b);
            const std::int32_t dbv = d.at(b, v);
            if (dab < 0 || dav < 0 || dbv < 0) continue;
            if (dab == dav + dbv || dav == dab + dbv || dbv == dab + dav) return false;
        }
    }
    return true;
}

// Search-node accounting shared across workers. Every visited set is charged
// exactly once; workers batch their charges so the shared counter is not a
// per-node contention point. The total is exact once every worker has
// flushed, so budget detection never misses.
struct BudgetTracker {
    unsigned long long budget;
    std::atomic<unsigned long long> used{0};
    std::atomic<bool> over{false};

    bool add(unsigned long long delta) {
        if (used.fetch_add(delta, std::memory_order_relaxed) + delta > budget) {
            over.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
    bool exhausted() const { return over.load(std::memory_order_relaxed); }
};

struct LocalBudget {
    static constexpr unsigned long long kFlushEvery = 8192;
    BudgetTracker* shared;
    unsigned long long pending = 0;

    // Charge one visited set; false once the budget is known to be gone.
    bool charge() {
        if (++pending >= kFlushEvery) return flush();
        return !shared->exhausted();
    }
    bool flush() {
        const unsigned long long batch = pending;
        pending = 0;
        if (batch > 0 && !shared->add(batch)) return false;
        return !shared->exhausted();
    }
};

// Canonical-order DFS below a fixed prefix: extend only past the current
// maximum, so every general position set is reached exactly once. `visit`
// sees each set after it has been charged.
template <typename Visit>
void dfs(const DistanceMatrix& d, int n, std::vector<int>& s, LocalBudget& budget,
         Visit&& visit) {
    if (budget.shared->exhausted()) return;
    const int lo = s.empty() ? 0 : s.back() + 1;
    for (int v = lo; v < n; ++v) {
        if (!extension_ok(d, s, v)) continue;
        if (!budget.charge()) return;
        s.push_back(v);
        visit(s);
        dfs(d, n, s, budget, visit);
        s.pop_back();
    }
}

// Seed phase: visit every general position set of size < depth, collect the
// sets of size exactly `depth` as independent work units for the parallel
// phase. Their subtrees partition the remaining search space.
template <typename Visit>
void dfs_collect_seeds(const DistanceMatrix& d, int n, std::vector<int>& s,
                       std::size_t depth, LocalBudget& budget, Visit&& visit,
                       std::vector<std::vector<int>>& seeds) {
    const int lo = s.empty() ? 0 : s.back() + 1;
    for (int v = lo; v < n; ++v) {
        if (!extension_ok(d, s, v)) continue;
        if (!budget.charge()) return;
        s.push_back(v);
        visit(s);
        if (s.size() == depth) {
            seeds.push_back(s);
        } else {
            dfs_collect_seeds(d, n, s, depth, budget, visit, seeds);
        }
        s.pop_back();
    }
}

int resolve_threads(const EnumeratorOptions& opt) {
    return opt.threads > 0 ? opt.threads : omp_get_max_threads();
}

void check_vertex_budget(const Graph& g, const EnumeratorOptions& opt) {
    if (g.order() > opt.vertex_budget) throw VertexBudgetError(g.order(), opt.vertex_budget);
}

GpPolynomial counts_to_poly(const std::vector<unsigned long long>& counts) {
    std::vector<BigNat> coeffs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) coeffs[k] = counts[k];
    return GpPolynomial(std::move(coeffs));
}

}  // namespace

GpWitness is_general_position(const std::vector<int>& set, const DistanceMatrix& dist) {
    GpWitness w;
    w.set = set;
    std::sort(w.set.begin(), w.set.end());
    for (std::size_t i = 0; i < w.set.size(); ++i) {
        if (w.set[i] < 0 || w.set[i] >= dist.order()) {
            throw InputError("vertex id out of range: " + std::to_string(w.set[i]));
        }
        if (i > 0 && w.set[i] == w.set[i - 1]) {
            throw InputError("duplicate vertex in set: " + std::to_string(w.set[i]));
        }
    }
    // y is the candidate middle vertex; triples scanned in (y,x,z) order.
    for (int y : w.set) {
        for (int x : w.set) {
            if (x == y) continue;
            const std::int32_t dxy = dist.at(x, y);
            if (dxy < 0) continue;
            for (int z : w.set) {
                if (z == y || z == x) continue;
                const std::int32_t dyz = dist.at(y, z);
                const std::int32_t dxz = dist.at(x, z);
                if (dyz < 0 || dxz < 0) continue;
                if (dxz == dxy + dyz) {
                    w.violation = {{x, y, z}};
                    return w;
                }
            }
        }
    }
    return w;
}

GpPolynomial count_gp_sets_serial(const Graph& g, const EnumeratorOptions& opt) {
    check_vertex_budget(g, opt);
    const int n = g.order();
    const DistanceMatrix dist = all_pairs_distances(g);

    BudgetTracker tracker{opt.node_budget};
    LocalBudget budget{&tracker};

    std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
    bool ok = budget.charge();  // the empty set
    counts[0] = 1;
    std::vector<int> s;
    s.reserve(n);
    if (ok) {
        dfs(dist, n, s, budget, [&](const std::vector<int>& set) { ++counts[set.size()]; });
        ok = budget.flush();
    }
    if (!ok || tracker.exhausted()) throw NodeBudgetError(opt.node_budget);
    return counts_to_poly(counts);
}

GpPolynomial count_gp_sets(const Graph& g, const EnumeratorOptions& opt) {
    check_vertex_budget(g, opt);
    const int n = g.order();
    const DistanceMatrix dist = all_pairs_distances(g);
    const std::size_t kSeedDepth = 3;

    BudgetTracker tracker{opt.node_budget};
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
    counts[0] = 1;

    // Serial prefix: count all sets smaller than the seed depth, gather the
    // depth-3 sets whose subtrees the workers then split between themselves.
    std::vector<std::vector<int>> seeds;
    {
        LocalBudget budget{&tracker};
        bool ok = budget.charge();
        if (ok) {
            std::vector<int> s;
            s.reserve(n);
            dfs_collect_seeds(dist, n, s, kSeedDepth, budget,
                              [&](const std::vector<int>& set) { ++counts[set.size()]; },
                              seeds);
            ok = budget.flush();
        }
        if (!ok || tracker.exhausted()) throw NodeBudgetError(opt.node_budget);
    }

#pragma omp parallel num_threads(resolve_threads(opt))
    {
        std::vector<unsigned long long> local(counts.size(), 0);
        LocalBudget budget{&tracker};
        std::vector<int> s;
        s.reserve(n);

#pragma omp for schedule(dynamic, 16) nowait
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            if (tracker.exhausted()) continue;
            s = seeds[i];
            dfs(dist, n, s, budget,
                [&](const std::vector<int>& set) { ++local[set.size()]; });
        }
        budget.flush();

#pragma omp critical
        {
            // Exact integer tallies: merge order cannot change the result.
            for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
        }
    }

    if (tracker.exhausted()) throw NodeBudgetError(opt.node_budget);
    return counts_to_poly(counts);
}

GpPolynomial count_gp_sets_naive(const Graph& g, const EnumeratorOptions& opt) {
    check_vertex_budget(g, opt);
    const int n = g.order();
    if (n > 20) {
        throw RefusalError("naive 2^n scan capped at 20 vertices, got " +
                           std::to_string(n));
    }
    const DistanceMatrix dist = all_pairs_distances(g);
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) set.push_back(v);
        }
        if (is_general_position(set, dist).in_general_position()) ++counts[set.size()];
    }
    return counts_to_poly(counts);
}

int gp_number(const Graph& g, const EnumeratorOptions& opt) {
    return static_cast<int>(count_gp_sets(g, opt).degree());
}

std::vector<std::vector<int>> max_gp_sets(const Graph& g, const EnumeratorOptions& opt) {
    check_vertex_budget(g, opt);
    const int n = g.order();
    const DistanceMatrix dist = all_pairs_distances(g);

    BudgetTracker tracker{opt.node_budget};
    LocalBudget budget{&tracker};

    std::vector<std::vector<int>> best{{}};
    std::size_t best_size = 0;
    bool ok = budget.charge();
    std::vector<int> s;
    s.reserve(n);
    if (ok) {
        // Canonical DFS emits sets in lexicographic order, so `best` stays
        // sorted.
        dfs(dist, n, s, budget, [&](const std::vector<int>& set) {
            if (set.size() > best_size) {
                best_size = set.size();
                best.clear();
            }
            if (set.size() == best_size) best.push_back(set);
        });
        ok = budget.flush();
    }
    if (!ok || tracker.exhausted()) throw NodeBudgetError(opt.node_budget);
    return best;
}

}  // namespace gpp
