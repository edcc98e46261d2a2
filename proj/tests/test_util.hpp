#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pratio/graph.hpp"

namespace test_util {

// Dense symmetric eigensolver; independent of the power iteration.
struct DenseEigen {
    double lambda1;
    std::vector<double> x;  // max entry 1
    double log_gamma;
};

inline DenseEigen dense_perron(const pratio::Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd v = es.eigenvectors().col(n - 1);
    if (v.sum() < 0) v = -v;
    const double mx = v.maxCoeff();
    DenseEigen out{es.eigenvalues()(n - 1), {}, 0.0};
    for (int i = 0; i < n; ++i) out.x.push_back(v(i) / mx);
    out.log_gamma = -std::log(*std::min_element(out.x.begin(), out.x.end()));
    return out;
}

// Real root of a cubic c3 x^3 + c2 x^2 + c1 x + c0 in [lo, hi] by bisection.
inline double cubic_root(double c3, double c2, double c1, double c0, double lo, double hi) {
    auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline pratio::Graph random_connected(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<pratio::Edge> edges;
    // random spanning tree first
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng) && std::find(edges.begin(), edges.end(), pratio::Edge{u, v}) == edges.end())
                edges.emplace_back(u, v);
    return pratio::build_graph(n, edges);
}

}  // namespace test_util
