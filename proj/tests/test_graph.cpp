#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pratio/graph.hpp"
#include "test_util.hpp"

using namespace pratio;

TEST_CASE("build_graph basics") {
    const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(k3.is_complete());
    CHECK(k3 == complete_graph(3));

    const Graph single = build_graph(1, {});
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);
    CHECK(is_connected(single));

    // duplicate edges collapse
    const Graph dup = build_graph(2, {{0, 1}, {1, 0}});
    CHECK(dup.size() == 1);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK_THROWS_AS(build_graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("kite construction") {
    CHECK(kite({1, 5}) == complete_graph(5));

    const Graph paw = kite({2, 3});
    CHECK(paw == build_graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}));
    std::vector<int> deg;
    for (int v = 0; v < 4; ++v) deg.push_back(paw.degree(v));
    CHECK(deg == std::vector<int>{1, 3, 2, 2});

    for (int r = 1; r <= 8; ++r)
        for (int s = 2; s <= 8; ++s) {
            const Graph g = kite({r, s});
            CHECK(g.order() == r + s - 1);
            CHECK(g.size() == static_cast<std::size_t>(r - 1 + s * (s - 1) / 2));
            CHECK(is_connected(g));
        }
    CHECK(kite({3, 4}).size() == 8);

    CHECK_THROWS_AS(kite({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(kite({2, 1}), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete_graph(3)));
    CHECK_FALSE(is_connected(build_graph(2, {})));
    CHECK(is_connected(kite({5, 7})));
    CHECK_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("bfs distances") {
    const Graph p = path_graph(5);
    const std::vector<int> src{0};
    CHECK(bfs_distances(p, src) == std::vector<int>{0, 1, 2, 3, 4});
    const std::vector<int> ends{0, 4};
    CHECK(bfs_distances(p, ends) == std::vector<int>{0, 1, 2, 1, 0});
    const auto d = bfs_distances(build_graph(3, {{0, 1}}), src);
    CHECK(d[2] < 0);
}

TEST_CASE("pendant path") {
    const auto kp = find_pendant_path(kite({4, 5}));
    REQUIRE(kp);
    CHECK(kp->vertices == std::vector<int>{0, 1, 2});
    CHECK(kp->attachment == 3);

    CHECK_FALSE(find_pendant_path(complete_graph(4)));
    CHECK_FALSE(find_pendant_path(cycle_graph(6)));

    const auto pp = find_pendant_path(path_graph(5));
    REQUIRE(pp);
    CHECK(pp->vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(pp->attachment == 4);

    // two pendant paths of lengths 1 and 2 on a triangle: the longer wins
    const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}});
    const auto lp = find_pendant_path(g);
    REQUIRE(lp);
    CHECK(lp->vertices == std::vector<int>{5, 4});
    CHECK(lp->attachment == 3);
}

TEST_CASE("relabel preserves structure") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = test_util::random_connected(rng, 9, 0.3);
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        CHECK(h.size() == g.size());
        for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u], perm[v]));
    }
}

TEST_CASE("edges are sorted and symmetric adjacency") {
    const Graph g = kite({3, 4});
    const auto e = g.edges();
    CHECK(std::is_sorted(e.begin(), e.end()));
    for (auto [u, v] : e) {
        CHECK(u < v);
        CHECK(g.adjacent(u, v));
        CHECK(g.adjacent(v, u));
    }
}
