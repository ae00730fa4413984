#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramsey/graph6.hpp"
#include "ramsey/named.hpp"
#include "test_support.hpp"

using namespace ramsey;

TEST_CASE("hand-encoded graph6 values") {
    // K3: header 'B' = 63+3; bits (0,1),(0,2),(1,2) = 111, padded to 111000
    // = 56, byte 56+63 = 'w'.
    CHECK(to_graph6(named_graph("K3")) == "Bw");
    CHECK(parse_graph6("Bw") == named_graph("K3"));

    // Single vertex: header only.
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@") == Graph(1));

    // Path 0-1-2: bits 101, padded 101000 = 40, byte 'g'.
    CHECK(to_graph6(named_graph("P3")) == "Bg");
    CHECK(parse_graph6("Bg") == named_graph("P3"));
}

TEST_CASE("C5 round-trips") {
    Graph c5 = named_graph("C5");
    CHECK(parse_graph6(to_graph6(c5)) == c5);
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);

    try {
        parse_graph6("B");  // K3 header with missing bit section
        FAIL("expected throw");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 1);
    }

    try {
        parse_graph6(std::string("B") + char(20));  // body byte below 63
        FAIL("expected throw");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 1);
    }

    try {
        parse_graph6("Bww");  // trailing junk
        FAIL("expected throw");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 2);
    }

    // 65-vertex header.
    std::string big = "~";
    big += char(63);
    big += char(64);
    big += char(63 + 1);
    CHECK_THROWS_AS(parse_graph6(big), Graph6Error);
}

TEST_CASE("round-trip on random graphs up to 30 vertices") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        Graph g = testsupport::random_graph(rng, n, 0.35);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("round-trip at the 64-vertex cap uses the long header") {
    std::mt19937 rng(5);
    Graph g = testsupport::random_graph(rng, 64, 0.2);
    std::string enc = to_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == g);
}
