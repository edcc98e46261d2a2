#include "pratio/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pratio {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(int n, std::vector<std::uint64_t> bits)
    : n_(n), words_(words_for(n)), bits_(std::move(bits)), offsets_(n + 1, 0) {
    for (int u = 0; u < n_; ++u) {
        int deg = 0;
        for (std::size_t w = 0; w < words_; ++w)
            deg += std::popcount(bits_[u * words_ + w]);
        offsets_[u + 1] = offsets_[u] + deg;
    }
    targets_.resize(offsets_[n_]);
    for (int u = 0; u < n_; ++u) {
        int* out = targets_.data() + offsets_[u];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = bits_[u * words_ + w];
            while (word) {
                *out++ = static_cast<int>(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    const std::size_t words = words_for(n);
    std::vector<std::uint64_t> bits(words * n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        bits[u * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits[v * words + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    return Graph(n, std::move(bits));
}

Graph kite(KiteSpec spec) {
    if (spec.r < 1 || spec.s < 2)
        throw std::invalid_argument("kite needs r >= 1 and s >= 2");
    const int n = spec.order();
    std::vector<Edge> edges;
    edges.reserve(spec.r - 1 + static_cast<std::size_t>(spec.s) * (spec.s - 1) / 2);
    for (int i = 0; i + 1 < spec.r; ++i) edges.emplace_back(i, i + 1);
    for (int u = spec.r - 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (perm.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("permutation size does not match graph order");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return build_graph(g.order(), edges);
}

std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue;
    queue.reserve(g.order());
    for (int s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const int source = 0;
    const auto dist = bfs_distances(g, std::span<const int>(&source, 1));
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<PendantPath> find_pendant_path(const Graph& g) {
    std::optional<PendantPath> best;
    for (int start = 0; start < g.order(); ++start) {
        if (g.degree(start) != 1) continue;
        PendantPath candidate;
        candidate.vertices.push_back(start);
        int prev = -1;
        int cur = start;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            if (g.degree(next) != 2) {
                candidate.attachment = next;
                break;
            }
            candidate.vertices.push_back(next);
            prev = cur;
            cur = next;
        }
        if (!best || candidate.vertices.size() > best->vertices.size() ||
            (candidate.vertices.size() == best->vertices.size() &&
             candidate.vertices < best->vertices))
            best = std::move(candidate);
    }
    return best;
}

}  // namespace pratio
