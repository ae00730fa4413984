#include <catch2/catch_amalgamated.hpp>

#include "ramsey/catalog.hpp"

using namespace ramsey;

#ifndef RAMSEY_DEFAULT_CATALOG
#error "build must define RAMSEY_DEFAULT_CATALOG"
#endif

TEST_CASE("shipped catalog loads and holds the table") {
    Catalog cat = load_catalog(RAMSEY_DEFAULT_CATALOG);
    CHECK(cat.size() >= 50);

    CHECK(cat.lookup({"K3", "K3"}) == RamseyValue::exact(6, Provenance::Catalog));
    CHECK(cat.lookup({"H1", "K3"}) == RamseyValue::exact(7, Provenance::Catalog));
    CHECK(cat.lookup({"K4-e", "K7"}) == RamseyValue::interval(28, 31, Provenance::Catalog));
    CHECK(cat.lookup({"K4", "K6"}) == RamseyValue::interval(35, 41, Provenance::Catalog));
    CHECK(cat.lookup({"H6", "K7"}) == RamseyValue::at_least(28, Provenance::Catalog));
    CHECK(cat.lookup({"K3", "K2"}) == RamseyValue::exact(3, Provenance::Catalog));

    // normalization sorts complete-graph arguments
    CHECK(cat.lookup({"K5", "K3"}) == RamseyValue::exact(14, Provenance::Catalog));
    CHECK(cat.lookup({"K3", "H1"}) == RamseyValue::exact(7, Provenance::Catalog));

    CHECK_FALSE(cat.lookup({"H1", "K40"}).has_value());

    // the verbatim anomalies carry their flag
    CHECK(cat.entry({"H1", "K10"})->data_quality);
    CHECK(cat.entry({"K3", "K10"})->data_quality);
    CHECK(cat.entry({"H3", "K4"})->data_quality);
    CHECK_FALSE(cat.entry({"H3", "K3"})->data_quality);
}

TEST_CASE("catalog round-trips through serialization") {
    Catalog cat = load_catalog(RAMSEY_DEFAULT_CATALOG);
    Catalog again = parse_catalog(serialize_catalog(cat));
    REQUIRE(again.size() == cat.size());
    for (const auto& [key, entry] : cat.entries()) {
        const CatalogEntry* e = again.entry(key);
        REQUIRE(e != nullptr);
        CHECK(e->value == entry.value);
        CHECK(e->source == entry.source);
        CHECK(e->data_quality == entry.data_quality);
    }
}

TEST_CASE("turan violations are rejected with the key named") {
    std::string bad = R"([{"graphs": ["H1", "K3"], "value": 5, "source": "user"}])";
    try {
        parse_catalog(bad);
        FAIL("expected CatalogError");
    } catch (const CatalogError& e) {
        std::string msg = e.what();
        CHECK(msg.find("H1") != std::string::npos);
        CHECK(msg.find("7") != std::string::npos);
    }

    // the same value under a data-quality flag is stored verbatim
    std::string flagged =
        R"([{"graphs": ["H1", "K3"], "value": 5, "source": "user", "flag": "data-quality"}])";
    Catalog cat = parse_catalog(flagged);
    CHECK(cat.lookup({"H1", "K3"}) == RamseyValue::exact(5, Provenance::Catalog));
}

TEST_CASE("weaker-than-turan lower bounds are not contradictions") {
    // [36, inf) does not contradict the bound 37: the true value may be 37.
    std::string weak = R"([{"graphs": ["H2", "K10"], "value": {"ge": 36}, "source": "user"}])";
    CHECK_NOTHROW(parse_catalog(weak));
}

TEST_CASE("malformed catalogs are rejected") {
    CHECK_THROWS_AS(parse_catalog("{"), CatalogError);
    CHECK_THROWS_AS(parse_catalog(R"({"graphs": []})"), CatalogError);
    CHECK_THROWS_AS(parse_catalog(R"([{"graphs": ["K3"], "value": 6}])"), CatalogError);
    CHECK_THROWS_AS(parse_catalog(R"([{"graphs": ["K3","K3"], "value": {"lo": 9, "hi": 6}}])"),
                    CatalogError);
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), CatalogError);
}

TEST_CASE("g6-prefixed keys resolve for validation") {
    // g6:Bw is K3; an entry below its Turan bound must be rejected
    std::string bad = R"([{"graphs": ["g6:Bw", "K4"], "value": 4, "source": "user"}])";
    CHECK_THROWS_AS(parse_catalog(bad), CatalogError);
    std::string good = R"([{"graphs": ["g6:Bw", "K4"], "value": 9, "source": "user"}])";
    Catalog cat = parse_catalog(good);
    CHECK(cat.lookup({"g6:Bw", "K4"}) == RamseyValue::exact(9, Provenance::Catalog));
}
