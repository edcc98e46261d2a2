#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pratio/bounds.hpp"
#include "pratio/kite.hpp"
#include "test_util.hpp"

using namespace pratio;
using doctest::Approx;

namespace {

const LemmaCheckOutcome& find(const std::vector<LemmaCheckOutcome>& v, const std::string& id) {
    for (const auto& o : v)
        if (o.lemma == id) return o;
    FAIL("missing lemma " << id);
    return v.front();
}

}  // namespace

TEST_CASE("schneider bound") {
    const PerronData k3 = perron(complete_graph(3));
    CHECK(schneider_bound(k3, 3) == Approx(2 * std::log(2.0)).epsilon(1e-12));
    const PerronData paw = perron(kite({2, 3}));
    CHECK(schneider_bound(paw, 4) == Approx(3 * std::log(2.1700864866260)).epsilon(1e-10));
    CHECK(schneider_bound(paw, 4) >= paw.log_gamma);
    const PerronData p3 = perron(path_graph(3));
    CHECK(schneider_bound(p3, 3) == Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(schneider_bound(p3, 3) >= p3.log_gamma);
}

TEST_CASE("distance bound") {
    const PerronData k4 = perron(complete_graph(4));
    CHECK(cg_distance_bound(k4) == 0.0);
    CHECK(k4.log_gamma == Approx(0.0));
    const PerronData paw = perron(kite({2, 3}));
    CHECK(std::abs(cg_distance_bound(paw) - std::log(paw.lambda1)) <= 1e-12);
    CHECK(std::abs(cg_distance_bound(paw) - paw.log_gamma) <= 1e-9);
    const PerronData k45 = perron(kite({4, 5}));
    CHECK(cg_distance_bound(k45) - k45.log_gamma >= -1e-9);
    CHECK(cg_distance_bound(k45) - k45.log_gamma < 1e-9);
}

TEST_CASE("pendant path bound is tight on kites") {
    for (int r = 2; r <= 10; ++r)
        for (int s = 3; s <= 10; ++s) {
            const PerronData pd = perron(kite({r, s}), 1e-13);
            const auto& path = pd.min_max_path;
            CHECK(std::abs(lemma21_bound(pd, path, 1) - pd.log_gamma) <= 1e-12);
            for (int j = 1; j <= r; ++j) {
                // the tail exactly reproduces phi_j / x_{v_j}
                const double b = lemma21_bound(pd, path, j);
                CHECK(std::abs(b - pd.log_gamma) <= 1e-9);
            }
        }
}

TEST_CASE("pendant path bound holds on random graphs") {
    std::mt19937 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = test_util::random_connected(rng, 6 + trial % 14, 0.25);
        const PerronData pd = perron(g);
        if (pd.lambda1 <= 2.0) continue;
        for (int j = 1; j <= pd.k(); ++j) CHECK(lemma21_bound(pd, pd.min_max_path, j) >= pd.log_gamma - 1e-9);
        CHECK(cg_distance_bound(pd) >= pd.log_gamma - 1e-9);
        CHECK(cg_distance_bound(pd) <= schneider_bound(pd, g.order()) + 1e-9);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("sandwich") {
    const auto [lo2, hi2] = lemma22_sandwich(2.5, 2);
    CHECK(lo2 == Approx(std::log(2.5)));
    CHECK(hi2 == Approx(std::log(2.5)));
    const auto [lo3, hi3] = lemma22_sandwich(2.5, 3);
    CHECK(hi3 == Approx(std::log(5.25)).epsilon(1e-14));
    CHECK(lo3 == Approx(std::log((2.5 - 1 / 1.5) * 2.5)).epsilon(1e-14));
    CHECK(log_phi(2.5, 3) == Approx(hi3).epsilon(1e-14));
    for (double l : {2.01, 2.1, 2.5, 3.0, 5.0, 10.0, 100.0})
        for (long j = 2; j <= 50; ++j) {
            const auto [lo, hi] = lemma22_sandwich(l, j);
            const double v = log_phi(l, j);
            CHECK(lo <= v + 1e-9);
            CHECK(v <= hi + 1e-9);
        }
    CHECK_THROWS_AS(lemma22_sandwich(2.0, 3), std::domain_error);
    CHECK_THROWS_AS(lemma22_sandwich(3.0, 1), std::invalid_argument);
}

TEST_CASE("k window") {
    const auto [lo, hi] = k_window(5000);
    CHECK(lo == Approx(4191.684484717544).epsilon(1e-13));
    CHECK(hi == Approx(4481.877181240776).epsilon(1e-13));
    CHECK_THROWS_AS(k_window(4999), std::invalid_argument);
}

TEST_CASE("bound report slacks are non-negative") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = test_util::random_connected(rng, 5 + trial % 20, 0.3);
        const PerronData pd = perron(g);
        const BoundReport rep = bound_report(g, pd);
        for (const auto& s : rep.slacks) CHECK_MESSAGE(s.value >= -kBoundTolerance, s.name);
    }
    const PerronData pd = perron(complete_graph(5));
    const BoundReport rep = bound_report(complete_graph(5), pd);
    CHECK_FALSE(rep.k_window);
}

TEST_CASE("lemma checks on small graphs") {
    const Graph k5 = complete_graph(5);
    const auto k5c = lemma_checks(k5, perron(k5));
    CHECK(find(k5c, "3.1").status == CheckStatus::holds);
    CHECK(find(k5c, "3.4").status == CheckStatus::not_applicable);
    CHECK(find(k5c, "3.5").status == CheckStatus::not_applicable);
    CHECK(find(k5c, "3.6").status == CheckStatus::not_applicable);

    const Graph k45 = kite({4, 5});
    const auto kc = lemma_checks(k45, perron(k45));
    CHECK(find(kc, "3.7").status == CheckStatus::holds);
    CHECK(find(kc, "3.1").status == CheckStatus::holds);
    CHECK(find(kc, "3.2").status == CheckStatus::holds);
    CHECK(find(kc, "3.1-remark").status == CheckStatus::holds);
    REQUIRE(find(kc, "3.7").context.degree_k_minus_1);
    CHECK(*find(kc, "3.7").context.degree_k_minus_1 == 2);
}

TEST_CASE("lemma checks on the best kite of order 5000") {
    const KiteSolution best = best_kite(5000);
    const Graph g = kite(best.spec);
    const PerronData pd = perron(g);
    CHECK(pd.lambda1 == Approx(best.lambda1).epsilon(1e-11));
    const auto checks = lemma_checks(g, pd);
    for (const auto& o : checks) CHECK_MESSAGE(o.status == CheckStatus::holds, o.lemma);
    const auto& l36 = find(checks, "3.6");
    REQUIRE(l36.context.x_k_minus_1);
    CHECK(*l36.context.x_k_minus_1 < std::pow(5000.0, -0.24));
}
