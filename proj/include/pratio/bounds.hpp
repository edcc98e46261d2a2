#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pratio/graph.hpp"
#include "pratio/spectral.hpp"

namespace pratio {

// All bounds below are natural logarithms of bounds on gamma.

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr int kLemmaCheckMinOrder = 5000;
inline constexpr int kLemma21ReportMaxPath = 64;

/// (n - 1) log lambda1. Throws std::domain_error unless lambda1 > 1.
double schneider_bound(const PerronData& pd, int n);

/// log phi_{d+1}(sigma) with d = pd.k_minus_1. Needs lambda1 > 2.
double cg_distance_bound(const PerronData& pd);

/// log phi_j(sigma) - log x_{v_j} along `path` = v1..vk, 1 <= j <= k.
double lemma21_bound(const PerronData& pd, std::span<const int> path, int j);

/**
 * Lower and upper logs of the sandwich
 *   (l - 1/(l-1))^{j-2} l <= phi_j(sigma) <= (l - 1/l)^{j-2} l.
 * Needs lambda1 > 2 and j >= 2. The upper side is attained at j = 2 and 3.
 */
std::pair<double, double> lemma22_sandwich(double lambda1, long j);

/// Open interval that must contain k for an extremal graph of order n >= 5000.
std::pair<double, double> k_window(long n);

struct BoundSlack {
    std::string name;
    double value = 0.0;  // bound - observed log gamma
};

struct BoundReport {
    int n = 0;
    double log_gamma = 0.0;
    std::optional<double> schneider;
    std::optional<double> cg_distance;
    /// Pendant-path bound for j = 1..k along the min->max path (short paths only).
    std::vector<double> lemma21;
    /// Sandwich around log phi_k(sigma), k >= 2.
    std::optional<std::pair<double, double>> lemma22;
    std::optional<std::pair<double, double>> k_window;
    std::vector<BoundSlack> slacks;
};

BoundReport bound_report(const Graph& g, const PerronData& pd);

enum class CheckStatus { holds, fails, not_applicable };
enum class Relation { less, greater, between, equal };

struct LemmaContext {
    int n = 0;
    int k = 0;
    double lambda1 = 0.0;
    double norm2_squared = 0.0;
    std::optional<double> x_k_minus_1;
    std::optional<int> degree_k_minus_1;
};

/// lhs `relation` rhs; for `between`, rhs < lhs < rhs_upper.
struct LemmaCheckOutcome {
    std::string lemma;
    CheckStatus status = CheckStatus::not_applicable;
    Relation relation = Relation::less;
    double lhs = 0.0;
    double rhs = 0.0;
    double rhs_upper = 0.0;
    LemmaContext context;
};

/**
 * Evaluates the structural conclusions about an extremal graph on g:
 * 3.1 (pendant path + dominating v_k), 3.1-remark (lambda < n-k+1),
 * 3.2 (lambda > n-k), 3.3 (k window), 3.4 (norm window), 3.5
 * (lambda < n-k+3/5), 3.6 (x_{k-1} < n^-0.24), 3.7 (deg v_{k-1} = 2).
 * 3.3-3.6 are not applicable below n = 5000; 3.6 and 3.7 need k >= 2.
 */
std::vector<LemmaCheckOutcome> lemma_checks(const Graph& g, const PerronData& pd);

const char* to_string(CheckStatus s);
const char* to_string(Relation r);

}  // namespace pratio
