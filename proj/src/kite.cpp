#include "pratio/kite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pratio/spectral.hpp"

namespace pratio {

namespace {

constexpr int kRescaleEvery = 50;

void check_secular_domain(KiteSpec spec) {
    if (spec.r < 2) throw std::invalid_argument("secular equation needs r >= 2");
    if (spec.s < 3) throw std::invalid_argument("secular equation needs s >= 3");
}

template <class F>
void parallel_chunks(int count, int threads, F&& work) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        work(0, count);
        return;
    }
    std::vector<std::jthread> pool;
    const int step = (count + threads - 1) / threads;
    for (int begin = 0; begin < count; begin += step)
        pool.emplace_back([&work, begin, end = std::min(count, begin + step)] { work(begin, end); });
}

}  // namespace

std::optional<double> KiteSolution::gamma() const {
    if (log_gamma < 700.0) return std::exp(log_gamma);
    return std::nullopt;
}

double kite_secular(KiteSpec spec, double lambda) {
    check_secular_domain(spec);
    double prev = 0.0;  // phi_{j-1}
    double cur = 1.0;   // phi_j
    for (int j = 1; j < spec.r; ++j) {
        const double next = lambda * cur - prev;
        prev = cur;
        cur = next;
        if (j % kRescaleEvery == 0) {
            prev /= cur;
            cur = 1.0;
        }
    }
    return lambda * cur - prev - (spec.s - 1) * cur / (lambda - spec.s + 2);
}

double kite_lambda1(KiteSpec spec, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("kite_lambda1: tolerance must be positive");
    if (spec.r < 1 || spec.s < 2) throw std::invalid_argument("kite needs r >= 1 and s >= 2");
    if (spec.r == 1) return spec.s - 1.0;
    check_secular_domain(spec);

    double lo = spec.s - 1 + 1e-9;
    double hi = spec.s;
    for (int it = 0; it < kKiteBisectionCap && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (kite_secular(spec, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double kite_log_gamma(KiteSpec spec, double tol) {
    if (spec.r == 1) {
        if (spec.s < 2) throw std::invalid_argument("kite needs s >= 2");
        return 0.0;
    }
    if (spec.r >= 2 && spec.s == 2)
        throw std::domain_error("kite_log_gamma: lambda1 <= 2 for s = 2");
    const double lambda = kite_lambda1(spec, tol);
    return log_phi(lambda, spec.r);
}

KiteSolution solve_kite(KiteSpec spec, double tol) {
    KiteSolution sol;
    sol.spec = spec;
    sol.lambda1 = kite_lambda1(spec, tol);
    if (sol.lambda1 > 2.0) sol.sigma = sigma_of(sol.lambda1);
    if (spec.r == 1) {
        sol.log_gamma = 0.0;
        sol.path_profile = {1.0};
        return sol;
    }
    sol.log_gamma = log_phi(sol.lambda1, spec.r);
    if (spec.r <= kPathProfileMaxR) {
        sol.path_profile.resize(spec.r);
        for (int i = 1; i <= spec.r; ++i)
            sol.path_profile[i - 1] = std::exp(log_phi(sol.lambda1, i) - sol.log_gamma);
    }
    return sol;
}

std::vector<double> kite_log_gamma_profile(int n, int threads, double tol) {
    if (n < 4) throw std::invalid_argument("kite profile needs n >= 4");
    const int count = n - 3;
    std::vector<double> out(count);
    parallel_chunks(count, threads, [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const int r = i + 2;
            out[i] = kite_log_gamma({r, n - r + 1}, tol);
        }
    });
    return out;
}

KiteSolution best_kite(int n, int threads, double tol) {
    if (n < 4) throw std::invalid_argument("best_kite needs n >= 4");
    const auto profile = kite_log_gamma_profile(n, threads, tol);
    std::size_t best = 0;
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile[i] > profile[best]) best = i;
    const int r = static_cast<int>(best) + 2;
    return solve_kite({r, n - r + 1}, tol);
}

}  // namespace pratio
