#include "pratio/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include "pratio/graph6.hpp"
#include "pratio/kite.hpp"
#include "pratio/spectral.hpp"

namespace pratio {

namespace {

bool mask_connected(int n, const std::uint32_t* adj) {
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == (std::uint32_t{1} << n) - 1;
}

struct Candidate {
    Graph graph;
    double log_gamma = 0.0;
    std::string graph6;
    std::optional<KiteSpec> kite;
};

// True when a should represent a tie class instead of b.
bool preferred(const Candidate& a, const Candidate& b) {
    if (a.kite.has_value() != b.kite.has_value()) return a.kite.has_value();
    return a.graph6 < b.graph6;
}

/**
 * Keeps the top_k distinct values of log gamma seen so far, one
 * representative graph per value (values within kTieLogGamma share a
 * slot). Anything strictly below threshold() can never enter, which is
 * what makes pruning against it exact.
 */
class TopCandidates {
public:
    explicit TopCandidates(int k) : k_(std::max(1, k)) {}

    double threshold() const {
        if (static_cast<int>(slots_.size()) < k_) return -std::numeric_limits<double>::infinity();
        return slots_.back().log_gamma - kTieLogGamma;
    }

    void offer(const Graph& g, double log_gamma) {
        if (log_gamma < threshold()) return;
        Candidate c{g, log_gamma, encode_graph6(g), is_kite_graph(g)};
        offer(std::move(c));
    }

    void offer(Candidate c) {
        if (c.log_gamma < threshold()) return;
        for (auto& slot : slots_) {
            if (std::abs(slot.log_gamma - c.log_gamma) <= kTieLogGamma) {
                if (preferred(c, slot)) slot = std::move(c);
                return;
            }
        }
        auto pos = std::find_if(slots_.begin(), slots_.end(),
                                [&](const Candidate& s) { return s.log_gamma < c.log_gamma; });
        slots_.insert(pos, std::move(c));
        if (static_cast<int>(slots_.size()) > k_) slots_.pop_back();
    }

    std::vector<Candidate>& slots() { return slots_; }

private:
    int k_;
    std::vector<Candidate> slots_;
};

struct ScanState {
    explicit ScanState(int k) : top(k) {}
    TopCandidates top;
    long long scanned = 0;
    long long disconnected = 0;
};

void scan_graph(const Graph& g, ScanState& st, bool prune) {
    ++st.scanned;
    if (prune && prune_bound(g, st.top.threshold())) return;
    const PerronData pd = perron(g, kScanTol);
    st.top.offer(g, pd.log_gamma);
}

template <class Work>
std::vector<ScanState> run_chunks(int chunks, int top_k, Work&& work) {
    std::vector<ScanState> states;
    states.reserve(chunks);
    for (int i = 0; i < chunks; ++i) states.emplace_back(top_k);
    if (chunks == 1) {
        work(0, states[0]);
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < chunks; ++i) pool.emplace_back([&, i] { work(i, states[i]); });
    }
    return states;
}

VerificationReport finish(int n, std::vector<ScanState>& states, int top_k,
                          std::chrono::steady_clock::time_point started) {
    VerificationReport rep;
    rep.n = n;
    TopCandidates merged(top_k);
    for (auto& st : states) {
        rep.graphs_scanned += st.scanned;
        rep.disconnected_skipped += st.disconnected;
        for (auto& c : st.top.slots()) merged.offer(std::move(c));
    }
    auto& slots = merged.slots();
    if (slots.empty()) throw std::invalid_argument("no connected graph was scanned");

    for (auto& c : slots) c.log_gamma = perron(c.graph, kFinalTol).log_gamma;
    std::stable_sort(slots.begin(), slots.end(), [](const Candidate& a, const Candidate& b) {
        return a.log_gamma > b.log_gamma;
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < slots.size(); ++i)
        if (slots[0].log_gamma - slots[i].log_gamma <= kTieLogGamma && preferred(slots[i], slots[best]))
            best = i;
    const Candidate& winner = slots[best];
    rep.max_log_gamma = slots[0].log_gamma;
    rep.argmax_graph = winner.graph6;
    rep.matched_spec = winner.kite;
    rep.is_kite = winner.kite.has_value();
    for (const auto& c : slots) {
        if (rep.max_log_gamma - c.log_gamma > kTieLogGamma) {
            rep.runner_up_log_gamma = c.log_gamma;
            break;
        }
    }
    for (const auto& c : slots) rep.top.push_back({c.graph6, c.log_gamma, c.kite});
    if (n >= 4) rep.best_kite_log_gamma = best_kite(n).log_gamma;
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

}  // namespace

void enumerate_connected(int n, std::uint64_t begin, std::uint64_t end,
                         const std::function<void(const Graph&)>& visit) {
    if (n < kBuiltinMinOrder || n > kBuiltinMaxOrder)
        throw std::invalid_argument("built-in enumeration supports 2 <= n <= 7; use graph6 "
                                    "ingestion for larger orders");
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    end = std::min(end, limit);

    std::vector<Edge> edges;
    std::uint32_t adj[kBuiltinMaxOrder];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        std::fill(adj, adj + n, 0u);
        for (std::uint64_t m = mask; m; m &= m - 1) {
            const auto [u, v] = pairs[std::countr_zero(m)];
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        if (!mask_connected(n, adj)) continue;
        edges.clear();
        for (std::uint64_t m = mask; m; m &= m - 1) edges.push_back(pairs[std::countr_zero(m)]);
        visit(build_graph(n, edges));
    }
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit) {
    enumerate_connected(n, 0, std::numeric_limits<std::uint64_t>::max(), visit);
}

std::optional<KiteSpec> is_kite_graph(const Graph& g) {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    if (g.is_complete()) return KiteSpec{1, n};
    const auto pp = find_pendant_path(g);
    if (!pp) return std::nullopt;
    if (g.degree(pp->attachment) == 1) {
        // Bare path P_n = P_{n-1} . K_2.
        if (static_cast<int>(pp->vertices.size()) + 1 == n) return KiteSpec{n - 1, 2};
        return std::nullopt;
    }
    const int r = static_cast<int>(pp->vertices.size()) + 1;
    const int s = n - r + 1;
    std::vector<char> on_path(n, 0);
    for (int v : pp->vertices) on_path[v] = 1;
    std::vector<int> clique;
    for (int v = 0; v < n; ++v)
        if (!on_path[v]) clique.push_back(v);
    if (g.size() != static_cast<std::size_t>(r - 1) + static_cast<std::size_t>(s) * (s - 1) / 2)
        return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j])) return std::nullopt;
    return KiteSpec{r, s};
}

double cheap_log_gamma_upper(const Graph& g) {
    if (g.is_regular()) return 0.0;
    return (g.order() - 1) * std::log(static_cast<double>(g.max_degree()));
}

bool prune_bound(const Graph& g, double threshold) { return cheap_log_gamma_upper(g) < threshold; }

VerificationReport verify_conjecture(int n, const VerifyOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    if (n < kBuiltinMinOrder || n > kBuiltinMaxOrder)
        throw std::invalid_argument("built-in enumeration supports 2 <= n <= 7; use graph6 "
                                    "ingestion for larger orders");
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const int chunks = static_cast<int>(std::clamp<std::uint64_t>(opts.threads, 1, total));
    const std::uint64_t step = (total + chunks - 1) / chunks;
    auto states = run_chunks(chunks, opts.top_k, [&](int i, ScanState& st) {
        const std::uint64_t begin = step * i;
        enumerate_connected(n, begin, std::min(total, begin + step),
                            [&](const Graph& g) { scan_graph(g, st, opts.prune); });
    });
    return finish(n, states, opts.top_k, started);
}

VerificationReport verify_conjecture(int n, std::istream& graph6_lines, const VerifyOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<Graph> graphs;
    long long disconnected = 0;
    std::string line;
    long long line_no = 0;
    while (std::getline(graph6_lines, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (g.order() != n)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": graph has order " +
                                        std::to_string(g.order()) + ", expected " +
                                        std::to_string(n));
        if (!is_connected(g)) {
            ++disconnected;
            continue;
        }
        graphs.push_back(std::move(g));
    }
    if (graphs.empty() && disconnected == 0) throw std::invalid_argument("graph6 source is empty");

    const int count = static_cast<int>(graphs.size());
    const int chunks = std::clamp(opts.threads, 1, std::max(1, count));
    const int step = (count + chunks - 1) / std::max(1, chunks);
    auto states = run_chunks(chunks, opts.top_k, [&](int i, ScanState& st) {
        for (int idx = step * i; idx < std::min(count, step * (i + 1)); ++idx)
            scan_graph(graphs[idx], st, opts.prune);
    });
    states[0].disconnected = disconnected;
    return finish(n, states, opts.top_k, started);
}

VerificationReport verify_conjecture_file(int n, const std::string& path, const VerifyOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file '" + path + "'");
    return verify_conjecture(n, in, opts);
}

}  // namespace pratio
