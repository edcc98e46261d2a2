#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pratio/graph.hpp"

namespace pratio {

inline constexpr int kBuiltinMinOrder = 2;
inline constexpr int kBuiltinMaxOrder = 7;
inline constexpr double kScanTol = 1e-10;
inline constexpr double kFinalTol = 1e-13;
inline constexpr double kTieLogGamma = 1e-9;

/**
 * Calls `visit` once per connected labelled graph on n vertices, in
 * increasing order of the edge-subset bitmask (bit i = i-th pair of the
 * column-major upper triangle, the graph6 bit order). Isomorphic copies
 * are all visited. Throws std::invalid_argument outside [2, 7]; larger
 * orders should come from an external graph6 corpus.
 */
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

/// Same, restricted to masks in [begin, end).
void enumerate_connected(int n, std::uint64_t begin, std::uint64_t end,
                         const std::function<void(const Graph&)>& visit);

/// The (r, s) with g isomorphic to P_r . K_s, if any. Paths match (n-1, 2)
/// and complete graphs (1, n).
std::optional<KiteSpec> is_kite_graph(const Graph& g);

/// Cheap upper bound on log gamma: 0 for regular graphs, otherwise
/// (n - 1) log(max degree).
double cheap_log_gamma_upper(const Graph& g);

/// True when cheap_log_gamma_upper(g) < threshold, i.e. g cannot beat it.
bool prune_bound(const Graph& g, double threshold);

struct ScoredGraph {
    std::string graph6;
    double log_gamma = 0.0;
    std::optional<KiteSpec> kite;
};

struct VerificationReport {
    int n = 0;
    long long graphs_scanned = 0;
    long long disconnected_skipped = 0;
    double max_log_gamma = 0.0;
    std::string argmax_graph;
    bool is_kite = false;
    std::optional<KiteSpec> matched_spec;
    /// Largest log gamma more than kTieLogGamma below the maximum.
    std::optional<double> runner_up_log_gamma;
    /// log gamma of best_kite(n), for n >= 4.
    std::optional<double> best_kite_log_gamma;
    /// Distinct-value leaders, best first, re-solved at kFinalTol.
    std::vector<ScoredGraph> top;
    double wall_time_seconds = 0.0;
};

struct VerifyOptions {
    bool prune = true;
    int threads = 1;
    int top_k = 10;
};

/// Built-in enumeration for 2 <= n <= 7.
VerificationReport verify_conjecture(int n, const VerifyOptions& opts = {});

/**
 * One graph6 line per graph. Blank lines are ignored, disconnected graphs
 * are counted and skipped. Throws std::invalid_argument on a malformed
 * line, a graph of the wrong order, or when no graph is read.
 */
VerificationReport verify_conjecture(int n, std::istream& graph6_lines,
                                     const VerifyOptions& opts = {});

/// Throws std::runtime_error when the file cannot be opened.
VerificationReport verify_conjecture_file(int n, const std::string& path,
                                          const VerifyOptions& opts = {});

}  // namespace pratio
