#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pratio/graph.hpp"

namespace pratio {

inline constexpr double kDefaultPerronTol = 1e-12;
inline constexpr long kDefaultPerronMaxIter = 1'000'000;
/// Relative closeness (in log x) for membership of the argmin/argmax sets.
inline constexpr double kTieTolerance = 1e-9;

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(long iterations, double residual);
    long iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    long iterations_;
    double residual_;
};

/**
 * Principal eigenpair of a connected graph with the eigenvector scaled so
 * its largest entry is 1.
 *
 * `log_x` is authoritative. `x` is exp(log_x) and flushes to zero for
 * entries below the double range (long pendant paths on dense graphs).
 */
struct PerronData {
    double lambda1 = 0.0;
    std::vector<double> x;
    std::vector<double> log_x;
    double log_gamma = 0.0;
    std::vector<int> argmin;
    std::vector<int> argmax;
    /// Shortest min->max path v1..vk; lexicographically smallest among ties.
    std::vector<int> min_max_path;
    int k_minus_1 = 0;
    std::optional<double> sigma;
    /// max_v |(Ax)_v - lambda1 x_v| / (lambda1 x_v) at termination.
    double relative_residual = 0.0;
    long iterations = 0;

    int k() const { return k_minus_1 + 1; }
    /// exp(log_gamma); +inf once it leaves the double range.
    double gamma() const;
    /// Sum of x_v^2 under max-entry-1 scaling.
    double norm2_squared() const;
};

/**
 * Shifted power iteration on A + I starting from the degree vector.
 *
 * Terminates when every entry satisfies the eigen-equation to relative
 * accuracy `tol` (which also bounds the absolute residual by
 * tol * max(1, lambda1)). Switches to a log-domain sweep as soon as an
 * entry drops below 1e-250.
 *
 * Throws std::invalid_argument for disconnected graphs or tol <= 0, and
 * NonConvergence when max_iter sweeps are exhausted.
 */
PerronData perron(const Graph& g, double tol = kDefaultPerronTol,
                  long max_iter = kDefaultPerronMaxIter);

/// Larger root of s + 1/s = lambda1. Throws std::domain_error unless lambda1 > 2.
double sigma_of(double lambda1);

/**
 * log phi_j where phi_j = (sigma^j - sigma^-j) / (sigma - sigma^-1) and
 * sigma = sigma_of(lambda1). Stable for large j and for lambda1 near 2.
 * phi_0 = 0 gives -inf.
 */
double log_phi(double lambda1, long j);

/// Shortest graph distance between the argmin and argmax sets of pd (k - 1).
int min_max_distance(const Graph& g, const PerronData& pd);

}  // namespace pratio
