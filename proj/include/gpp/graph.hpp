#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpp {

// Finite simple undirected graph on vertices 0..n-1. The adjacency matrix
// gives O(1) membership; neighbor lists give fast row iteration for BFS.
// Labels are advisory provenance strings (Kneser pairs, grid coordinates,
// corona leaves); nothing behavioral depends on them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    // Inserts {u,v}; duplicates collapse. Throws InputError on self-loops or
    // out-of-range endpoints.
    void add_edge(int u, int v);

    const std::vector<int>& neighbors(int u) const { return nbrs_[u]; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, std::string s);

    // "0" or the assigned label; used by witness printing.
    std::string display(int v) const;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::string> labels_;
};

// All-pairs shortest-path distances; kUnreachable marks pairs with no path.
// The general-position predicate treats unreachable distances as "no geodesic
// exists", never as a large number.
class DistanceMatrix {
public:
    static constexpr std::int32_t kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<std::int32_t> d) : n_(n), d_(std::move(d)) {}

    int order() const { return n_; }

    std::int32_t at(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * n_ + v];
    }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    int n_ = 0;
    std::vector<std::int32_t> d_;
};

// BFS from every source (sources run in parallel, each row is independent).
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace gpp
