#include <doctest.h>

#include <random>

#include "hypercol/construction.hpp"
#include "hypercol/hgr_io.hpp"
#include "oracles.hpp"

using namespace hypercol;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_hgr(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("canonical serialisation") {
    CHECK(to_hgr(build_base(3)) == "p hgr 6 4 3\n1 2 3\n2 3 4\n3 4 5\n4 5 6\n");
    CHECK(to_hgr(Hypergraph(3, 2, {})) == "p hgr 3 0 2\n");
}

TEST_CASE("parsing tolerates comments, blank lines and unsorted lines") {
    const auto h = parse_hgr("c generated by hand\np hgr 4 2 2\n\n2 1\nc between\n4 3\n");
    CHECK(oracle::edges_of(h) == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(to_hgr(h) == "p hgr 4 2 2\n1 2\n3 4\n");
}

TEST_CASE("duplicate lines are collapsed and counted") {
    const auto h = parse_hgr("p hgr 3 3 2\n1 2\n2 1\n2 3\n");
    CHECK(h.num_edges() == 2);
    CHECK(h.duplicates_dropped() == 1);
}

TEST_CASE("parse errors carry the line number") {
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("p hgr 3 1\n") == 1);
    CHECK(parse_error_line("1 2\n") == 1);
    CHECK(parse_error_line("p hgr 3 1 2\n1 4\n") == 2);
    CHECK(parse_error_line("p hgr 3 1 2\n0 1\n") == 2);
    CHECK(parse_error_line("p hgr 3 1 2\n1 2 3\n") == 2);
    CHECK(parse_error_line("c x\np hgr 3 1 2\n1 1\n") == 3);
    CHECK(parse_error_line("p hgr 3 1 2\n1 x\n") == 2);
    CHECK(parse_error_line("p hgr 3 1 2\n1 2\n2 3\n") == 3);
    CHECK(parse_error_line("p hgr 3 2 2\n1 2\n") == 2);
    CHECK(parse_error_line("p hgr 3 1 1\n1\n") == 1);
    CHECK_THROWS_AS(parse_hgr(""), ParseError);
}

TEST_CASE("round trip on constructed and random instances") {
    for (auto [r, d] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}})
        CHECK(parse_hgr(to_hgr(build({r, d}))) == build({r, d}));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 2 + rng() % 3;
        const auto h = oracle::random_hypergraph(rng, r + rng() % 10, r, rng() % 30);
        const auto text = to_hgr(h);
        CHECK(parse_hgr(text) == h);
        CHECK(to_hgr(parse_hgr(text)) == text);
    }
}
