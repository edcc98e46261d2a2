#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pratio {

using Edge = std::pair<int, int>;

/**
 * Undirected simple graph on vertices 0..n-1.
 *
 * Adjacency is held twice: a dense symmetric bit matrix for O(1) edge
 * queries, and a compressed neighbour list for iteration. Values are
 * immutable once built.
 */
class Graph {
public:
    Graph() : Graph(1, std::vector<std::uint64_t>(1, 0)) {}

    int order() const { return n_; }
    std::size_t size() const { return targets_.size() / 2; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    std::span<const int> neighbors(int v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const { return max_degree() == min_degree(); }
    bool is_complete() const { return size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    friend Graph build_graph(int n, std::span<const Edge> edges);

private:
    Graph(int n, std::vector<std::uint64_t> bits);

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> offsets_;
    std::vector<int> targets_;
};

/// Throws std::invalid_argument on n < 1, loops or out-of-range endpoints.
/// Duplicate pairs (in either orientation) collapse to one edge.
Graph build_graph(int n, std::span<const Edge> edges);

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// P_r . K_s: path of order r glued by an end vertex to one vertex of K_s.
struct KiteSpec {
    int r = 1;
    int s = 2;

    int order() const { return r + s - 1; }
    friend bool operator==(const KiteSpec&, const KiteSpec&) = default;
};

/**
 * Realize a kite. Vertices 0..r-2 form the pendant path with 0 the free
 * end, r-1 is the attachment vertex and r-1..r+s-2 is the clique.
 */
Graph kite(KiteSpec spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Image of g under the vertex map v -> perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g);

/// Multi-source BFS; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources);

struct PendantPath {
    std::vector<int> vertices;  // v1 (degree 1) first
    int attachment = -1;
};

/**
 * Longest maximal pendant path grown from a degree-1 vertex, with the
 * vertex it hangs from. Ties go to the lexicographically smallest vertex
 * list. On a bare path graph the walk reaches the opposite degree-1 end,
 * which is reported as the attachment. Empty when there is no degree-1
 * vertex.
 */
std::optional<PendantPath> find_pendant_path(const Graph& g);

}  // namespace pratio
