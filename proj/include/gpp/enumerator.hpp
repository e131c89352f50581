#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gpp/graph.hpp"
#include "gpp/polynomial.hpp"

namespace gpp {

// Result of testing one vertex set: either the set is in general position,
// or `violation` holds the first triple (x,y,z) found with
// d(x,z) = d(x,y) + d(y,z), all three distances finite.
struct GpWitness {
    std::vector<int> set;
    std::optional<std::array<int, 3>> violation;

    bool in_general_position() const { return !violation.has_value(); }
};

struct EnumeratorOptions {
    int vertex_budget = 24;
    unsigned long long node_budget = 100'000'000ULL;
    int threads = 0;  // 0 = library default
};

// Scans triples in lexicographic (y,x,z) order over the sorted set, where y
// is the candidate middle vertex, and reports the first violation as (x,y,z).
// Throws InputError if a vertex id is outside the matrix.
GpWitness is_general_position(const std::vector<int>& set, const DistanceMatrix& dist);

// Exact count of general position sets of every size, by depth-first
// extension over the downward-closed family: a set is only ever extended by
// vertices above its current maximum, so each set is visited exactly once,
// and extending by v only needs the triples that involve v. OpenMP splits
// the search by the smallest element; counts merge by addition and the
// result is identical to the serial run.
GpPolynomial count_gp_sets(const Graph& g, const EnumeratorOptions& opt = {});

// Single-threaded reference implementation of the same traversal.
GpPolynomial count_gp_sets_serial(const Graph& g, const EnumeratorOptions& opt = {});

// Full 2^n subset scan through is_general_position; the slow cross-check for
// the pruned traversal. Hard-capped at 20 vertices.
GpPolynomial count_gp_sets_naive(const Graph& g, const EnumeratorOptions& opt = {});

// Degree of count_gp_sets(g): the maximum size of a general position set.
int gp_number(const Graph& g, const EnumeratorOptions& opt = {});

// All general position sets of maximum size, in lexicographic order.
std::vector<std::vector<int>> max_gp_sets(const Graph& g, const EnumeratorOptions& opt = {});

}  // namespace gpp
