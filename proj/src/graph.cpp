#include "gpp/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "gpp/errors.hpp"

namespace gpp {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    nbrs_.assign(n, {});
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                         std::to_string(v) + " (order " + std::to_string(n_) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++edge_count_;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[v];
}

void Graph::set_label(int v, std::string s) {
    if (v < 0 || v >= n_) throw InputError("label index out of range");
    if (labels_.empty()) labels_.assign(n_, {});
    labels_[v] = std::move(s);
}

std::string Graph::display(int v) const {
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::int32_t> d(static_cast<std::size_t>(n) * n,
                                DistanceMatrix::kUnreachable);

#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        std::int32_t* row = d.data() + static_cast<std::size_t>(s) * n;
        std::vector<int> frontier{s};
        std::vector<int> next;
        row[s] = 0;
        std::int32_t depth = 0;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (int u : frontier) {
                for (int w : g.neighbors(u)) {
                    if (row[w] == DistanceMatrix::kUnreachable) {
                        row[w] = depth;
                        next.push_back(w);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    return DistanceMatrix(n, std::move(d));
}

}  // namespace gpp
