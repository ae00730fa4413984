#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "ramsey/enumerate.hpp"
#include "ramsey/named.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

/// Unpruned reference: tries all 2^C(n,2) complete colorings and verifies
/// each one from scratch. Only sane for n <= 5.
bool brute_exists_good(int n, const Graph& h, int p) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Graph red(n);
        int bit = 0;
        for (int v = 0; v < n; ++v)
            for (int u = v + 1; u < n; ++u, ++bit)
                if ((mask >> bit) & 1u) red.add_edge(u, v);
        if (is_good(verify_coloring(coloring_from_red(red), h, p))) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("search agrees with unpruned enumeration up to K5") {
    std::vector<Graph> targets = {named_graph("K3"), named_graph("P3"), named_graph("P4"),
                                  named_graph("C4"), named_graph("S3")};
    // a couple of disconnected forests as well
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    targets.push_back(two_edges);
    Graph edge_plus_point(3);
    edge_plus_point.add_edge(0, 1);
    targets.push_back(edge_plus_point);

    for (const Graph& h : targets) {
        for (int n = 1; n <= 5; ++n) {
            for (int p : {2, 3, 4}) {
                SearchResult res = exists_good_coloring(n, h, p);
                bool brute = brute_exists_good(n, h, p);
                INFO("n=" << n << " p=" << p << " |H|=" << h.n());
                CHECK((res.status == SearchStatus::WitnessFound) == brute);
                if (res.witness) CHECK(is_good(verify_coloring(*res.witness, h, p)));
            }
        }
    }
}

TEST_CASE("monotonicity: once exhausted, larger orders stay exhausted") {
    Graph h = named_graph("K3");
    bool seen_exhausted = false;
    for (int n = 3; n <= 8; ++n) {
        SearchResult res = exists_good_coloring(n, h, 3);
        REQUIRE(res.status != SearchStatus::Inconclusive);
        if (seen_exhausted) CHECK(res.status == SearchStatus::Exhausted);
        if (res.status == SearchStatus::Exhausted) seen_exhausted = true;
    }
    CHECK(seen_exhausted);
}

TEST_CASE("pentagon witness exists for (K3,3) at order 5 but not 6") {
    SearchResult at5 = exists_good_coloring(5, named_graph("K3"), 3);
    REQUIRE(at5.status == SearchStatus::WitnessFound);
    CHECK(is_good(verify_coloring(*at5.witness, named_graph("K3"), 3)));

    SearchResult at6 = exists_good_coloring(6, named_graph("K3"), 3);
    CHECK(at6.status == SearchStatus::Exhausted);
    CHECK(at6.nodes > 0);
}

TEST_CASE("H1 at p=3: witness at 6, exhausted at 7") {
    Graph h1 = named_graph("H1");
    CHECK(exists_good_coloring(6, h1, 3).status == SearchStatus::WitnessFound);
    CHECK(exists_good_coloring(7, h1, 3).status == SearchStatus::Exhausted);
}

TEST_CASE("ramsey numbers by search") {
    auto k3 = ramsey_number(named_graph("K3"), 3);
    CHECK(k3.value == RamseyValue::exact(6, Provenance::SearchProved));
    CHECK(k3.value.provenance == Provenance::SearchProved);
    REQUIRE(k3.witness.has_value());
    CHECK(k3.witness->order() == 5);

    CHECK(ramsey_number(named_graph("C4"), 3).value == RamseyValue::exact(7, Provenance::SearchProved));
    CHECK(ramsey_number(named_graph("P4"), 3).value == RamseyValue::exact(7, Provenance::SearchProved));

    CHECK_THROWS_AS(ramsey_number(Graph(3), 3), std::invalid_argument);
}

TEST_CASE("budget exhaustion reports an interval, not a wrong answer") {
    SearchOptions tiny;
    tiny.budget = 50;
    auto res = ramsey_number(named_graph("K3"), 4, tiny);
    CHECK_FALSE(res.value.is_exact());
    CHECK(res.value.provenance == Provenance::Mixed);
    CHECK(res.value.lo >= turan_lower_bound(3, 4));

    SearchResult inconclusive = exists_good_coloring(8, named_graph("K3"), 4, tiny);
    CHECK(inconclusive.status == SearchStatus::Inconclusive);
    CHECK(inconclusive.nodes == 50);
}

TEST_CASE("worker count does not change the result") {
    Graph h1 = named_graph("H1");
    for (int n : {6, 7}) {
        SearchResult solo = exists_good_coloring(n, h1, 3, {std::numeric_limits<std::uint64_t>::max(), 1});
        SearchResult quad = exists_good_coloring(n, h1, 3, {std::numeric_limits<std::uint64_t>::max(), 4});
        CHECK(solo.status == quad.status);
        CHECK(solo.nodes == quad.nodes);
        CHECK(solo.witness.has_value() == quad.witness.has_value());
        if (solo.witness) CHECK(solo.witness->red == quad.witness->red);
    }
}

TEST_CASE("node counts are reproducible") {
    SearchResult a = exists_good_coloring(6, named_graph("K3"), 3);
    SearchResult b = exists_good_coloring(6, named_graph("K3"), 3);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("trees on up to 5 vertices hit the Turan bound at p=3") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& t : all_trees(n)) {
            auto res = ramsey_number(t, 3);
            CHECK(res.value == RamseyValue::exact(2 * (n - 1) + 1, Provenance::SearchProved));
        }
}
