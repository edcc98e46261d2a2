#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pratio/graph6.hpp"
#include "test_util.hpp"

using namespace pratio;

namespace {

struct Row {
    std::string g6;
    int n;
    std::vector<Edge> edges;
};

std::vector<Row> load_reference() {
    std::ifstream in(PRATIO_TEST_DATA "/graph6_reference.txt");
    REQUIRE(in);
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        Row r;
        std::string edges;
        std::getline(ss, r.g6, '\t');
        ss >> r.n;
        ss.ignore();
        std::getline(ss, edges);
        std::stringstream es(edges);
        std::string tok;
        while (es >> tok) {
            const auto dash = tok.find('-');
            r.edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

TEST_CASE("small known strings") {
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    CHECK(encode_graph6(path_graph(3)) == "Bg");
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("agrees with reference codec corpus") {
    const auto rows = load_reference();
    CHECK(rows.size() > 1000);
    for (const auto& r : rows) {
        const Graph expected = build_graph(r.n, r.edges);
        const Graph parsed = parse_graph6(r.g6);
        CHECK(parsed == expected);
        CHECK(encode_graph6(expected) == r.g6);
    }
}

TEST_CASE("round trip on random graphs") {
    std::mt19937 rng(2024);
    for (int n : {1, 2, 5, 6, 7, 12, 40, 62}) {
        std::bernoulli_distribution coin(0.4);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) edges.emplace_back(u, v);
        const Graph g = build_graph(n, edges);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);       // too short
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);     // too long
    CHECK_THROWS_AS(parse_graph6("Bx"), std::invalid_argument);      // nonzero padding
    CHECK_THROWS_AS(parse_graph6("B "), std::invalid_argument);      // byte below 63
    CHECK_THROWS_AS(parse_graph6("~?@?"), std::invalid_argument);    // long form
    CHECK_THROWS_AS(encode_graph6(path_graph(63)), std::invalid_argument);
}
