#pragma once

#include <optional>
#include <vector>

#include "pratio/graph.hpp"

namespace pratio {

inline constexpr double kDefaultKiteTol = 1e-13;
inline constexpr int kKiteBisectionCap = 200;
inline constexpr int kPathProfileMaxR = 100;

struct KiteSolution {
    KiteSpec spec;
    double lambda1 = 0.0;
    std::optional<double> sigma;
    double log_gamma = 0.0;
    /// x_1..x_r along the pendant path with x_r = 1 (only for r <= kPathProfileMaxR).
    std::vector<double> path_profile;

    /// Linear-domain gamma, exposed only while log_gamma < 700.
    std::optional<double> gamma() const;
};

/**
 * Secular function of P_r . K_s,
 *   F(l) = l phi_r(l) - phi_{r-1}(l) - (s-1) phi_r(l) / (l - s + 2),
 * with phi_0 = 0, phi_1 = 1, phi_{j+1} = l phi_j - phi_{j-1}. The pair
 * (phi_j, phi_{j-1}) is rescaled every 50 steps, so only the sign of the
 * returned value is meaningful for large r.
 */
double kite_secular(KiteSpec spec, double lambda);

/// Spectral radius of P_r . K_s by bisection of kite_secular on (s-1, s).
/// r = 1 returns s - 1. Throws std::invalid_argument for s < 3 when r >= 2, or tol <= 0.
double kite_lambda1(KiteSpec spec, double tol = kDefaultKiteTol);

/// log gamma(P_r . K_s) = log phi_r(sigma). Zero for r = 1.
/// Throws std::domain_error when lambda1 <= 2 (s = 2 with r >= 2).
double kite_log_gamma(KiteSpec spec, double tol = kDefaultKiteTol);

KiteSolution solve_kite(KiteSpec spec, double tol = kDefaultKiteTol);

/**
 * Kite of order n with the largest principal ratio over r in 2..n-2
 * (s = n - r + 1 >= 3); ties go to the smaller r. The sweep is split into
 * contiguous chunks across `threads` workers. Throws for n < 4.
 */
KiteSolution best_kite(int n, int threads = 1, double tol = kDefaultKiteTol);

/// log gamma of every kite P_r . K_{n-r+1}, r = 2..n-2, indexed by r - 2.
std::vector<double> kite_log_gamma_profile(int n, int threads = 1,
                                           double tol = kDefaultKiteTol);

}  // namespace pratio
