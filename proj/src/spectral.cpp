#include "pratio/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace pratio {

namespace {

// Below this an entry is one or two sweeps away from the denormal range.
constexpr double kLogDomainThreshold = 1e-250;
// exp() of anything above this stays comfortably normal.
constexpr double kLinearSafeLog = -600.0;

struct Sweep {
    double lambda = 0.0;
    double relative_residual = 0.0;
};

// One product with A in the linear domain. ax receives A x.
Sweep linear_sweep(const Graph& g, const std::vector<double>& x, std::vector<double>& ax) {
    const int n = g.order();
    double num = 0.0;
    double den = 0.0;
    for (int v = 0; v < n; ++v) {
        double s = 0.0;
        for (int u : g.neighbors(v)) s += x[u];
        ax[v] = s;
        num += x[v] * s;
        den += x[v] * x[v];
    }
    Sweep out;
    out.lambda = num / den;
    for (int v = 0; v < n; ++v)
        out.relative_residual =
            std::max(out.relative_residual, std::abs(ax[v] - out.lambda * x[v]) / (out.lambda * x[v]));
    return out;
}

// Same product with entries held as logarithms. log_ax receives log (A x).
Sweep log_sweep(const Graph& g, const std::vector<double>& log_x, std::vector<double>& xl,
                std::vector<double>& log_ax) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) xl[v] = std::exp(log_x[v]);
    double num = 0.0;
    double den = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int u : nb) {
            lo = std::min(lo, log_x[u]);
            hi = std::max(hi, log_x[u]);
        }
        double s = 0.0;
        if (lo > kLinearSafeLog) {
            for (int u : nb) s += xl[u];
            log_ax[v] = std::log(s);
        } else {
            for (int u : nb) s += std::exp(log_x[u] - hi);
            log_ax[v] = hi + std::log(s);
        }
        num += xl[v] * std::exp(log_ax[v]);
        den += xl[v] * xl[v];
    }
    Sweep out;
    out.lambda = num / den;
    const double log_lambda = std::log(out.lambda);
    for (int v = 0; v < n; ++v)
        out.relative_residual = std::max(
            out.relative_residual, std::abs(std::expm1(log_ax[v] - log_x[v] - log_lambda)));
    return out;
}

double log_sinh(double y) {
    if (y > 20.0) return y - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * y));
    return std::log(std::sinh(y));
}

void finalize(const Graph& g, PerronData& pd) {
    const int n = g.order();
    pd.x.resize(n);
    for (int v = 0; v < n; ++v) pd.x[v] = std::exp(pd.log_x[v]);
    const double min_log = *std::min_element(pd.log_x.begin(), pd.log_x.end());
    pd.log_gamma = -min_log;
    pd.argmin.clear();
    pd.argmax.clear();
    for (int v = 0; v < n; ++v) {
        if (pd.log_x[v] >= -kTieTolerance) pd.argmax.push_back(v);
        if (pd.log_x[v] <= min_log + kTieTolerance) pd.argmin.push_back(v);
    }

    const auto dist = bfs_distances(g, pd.argmax);
    int start = pd.argmin.front();
    for (int v : pd.argmin)
        if (dist[v] < dist[start]) start = v;
    pd.min_max_path = {start};
    for (int cur = start; dist[cur] > 0;) {
        int next = -1;
        for (int u : g.neighbors(cur))
            if (dist[u] == dist[cur] - 1 && (next < 0 || u < next)) next = u;
        pd.min_max_path.push_back(next);
        cur = next;
    }
    pd.k_minus_1 = dist[start];
    if (pd.lambda1 > 2.0) pd.sigma = sigma_of(pd.lambda1);
}

}  // namespace

NonConvergence::NonConvergence(long iterations, double residual)
    : std::runtime_error("power iteration did not converge after " + std::to_string(iterations) +
                         " sweeps (relative residual " + std::to_string(residual) + ")"),
      iterations_(iterations),
      residual_(residual) {}

double PerronData::gamma() const { return std::exp(log_gamma); }

double PerronData::norm2_squared() const {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

PerronData perron(const Graph& g, double tol, long max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("perron: tolerance must be positive");
    if (!is_connected(g)) throw std::invalid_argument("perron: graph is disconnected");
    const int n = g.order();
    PerronData pd;
    if (n == 1) {
        pd.log_x = {0.0};
        finalize(g, pd);
        return pd;
    }

    std::vector<double> x(n);
    const double max_deg = g.max_degree();
    for (int v = 0; v < n; ++v) x[v] = g.degree(v) / max_deg;
    std::vector<double> ax(n);

    double residual = std::numeric_limits<double>::infinity();
    long iter = 0;
    bool log_domain = false;
    while (iter < max_iter) {
        ++iter;
        const Sweep sw = linear_sweep(g, x, ax);
        residual = sw.relative_residual;
        if (residual <= tol) {
            pd.lambda1 = sw.lambda;
            pd.log_x.resize(n);
            for (int v = 0; v < n; ++v) pd.log_x[v] = std::log(x[v]);
            break;
        }
        double top = 0.0;
        for (int v = 0; v < n; ++v) {
            x[v] += ax[v];
            top = std::max(top, x[v]);
        }
        double bottom = 1.0;
        for (int v = 0; v < n; ++v) {
            x[v] /= top;
            bottom = std::min(bottom, x[v]);
        }
        if (bottom < kLogDomainThreshold) {
            log_domain = true;
            break;
        }
    }

    if (log_domain) {
        std::vector<double> log_x(n);
        for (int v = 0; v < n; ++v) log_x[v] = std::log(x[v]);
        std::vector<double> xl(n);
        std::vector<double>& log_ax = ax;
        bool done = false;
        while (iter < max_iter) {
            ++iter;
            const Sweep sw = log_sweep(g, log_x, xl, log_ax);
            residual = sw.relative_residual;
            if (residual <= tol) {
                pd.lambda1 = sw.lambda;
                pd.log_x = log_x;
                done = true;
                break;
            }
            double top = -std::numeric_limits<double>::infinity();
            for (int v = 0; v < n; ++v) {
                const double a = log_x[v];
                const double b = log_ax[v];
                log_x[v] = std::max(a, b) + std::log1p(std::exp(-std::abs(a - b)));
                top = std::max(top, log_x[v]);
            }
            for (int v = 0; v < n; ++v) log_x[v] -= top;
        }
        if (!done) throw NonConvergence(iter, residual);
    } else if (pd.log_x.empty()) {
        throw NonConvergence(iter, residual);
    }

    pd.relative_residual = residual;
    pd.iterations = iter;
    finalize(g, pd);
    return pd;
}

double sigma_of(double lambda1) {
    if (!(lambda1 > 2.0))
        throw std::domain_error("sigma is defined only for lambda1 > 2 (got " +
                                std::to_string(lambda1) + ")");
    return (lambda1 + std::sqrt((lambda1 - 2.0) * (lambda1 + 2.0))) / 2.0;
}

double log_phi(double lambda1, long j) {
    if (!(lambda1 > 2.0)) throw std::domain_error("log_phi needs lambda1 > 2");
    if (j < 0) throw std::invalid_argument("log_phi needs j >= 0");
    if (j == 0) return -std::numeric_limits<double>::infinity();
    if (j == 1) return 0.0;
    const double d = lambda1 - 2.0;
    const double t = std::log1p(d / 2.0 + std::sqrt(d * (lambda1 + 2.0)) / 2.0);
    return log_sinh(static_cast<double>(j) * t) - log_sinh(t);
}

int min_max_distance(const Graph& g, const PerronData& pd) {
    const auto dist = bfs_distances(g, pd.argmax);
    int best = g.order();
    for (int v : pd.argmin) best = std::min(best, dist[v]);
    return best;
}

}  // namespace pratio
