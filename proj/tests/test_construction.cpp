#include <doctest.h>

#include <set>
#include <sstream>

#include "hypercol/construction.hpp"
#include "hypercol/hgr_io.hpp"
#include "oracles.hpp"

using namespace hypercol;

namespace {

// G_2 for r = 2, enumerated by hand: copies {0,1}, {2,3}; S-sets {0,2},
// {0,3}, {1,2}, {1,3} get new vertices 4..7.
const char* const kG2r2 =
    "p hgr 8 10 2\n"
    "1 2\n1 5\n1 6\n2 7\n2 8\n3 4\n3 5\n3 7\n4 6\n4 8\n";

}  // namespace

TEST_CASE("base case windows") {
    const auto g2 = build_base(2);
    CHECK(g2.num_vertices() == 2);
    CHECK(oracle::edges_of(g2) == std::vector<Edge>{{0, 1}});

    const auto g3 = build_base(3);
    CHECK(g3.num_vertices() == 6);
    CHECK(oracle::edges_of(g3) == std::vector<Edge>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}});

    for (std::size_t r = 2; r <= 6; ++r) {
        const auto g = build_base(r);
        CHECK(g.num_vertices() == r * (r - 1));
        CHECK(g.num_edges() == (r - 1) * (r - 1));
        for (std::size_t i = 0; i < g.num_edges(); ++i)
            for (std::size_t j = 0; j < r; ++j)
                CHECK(g.edge(i)[j] == i + j);
    }
    CHECK_THROWS_AS(build_base(1), InputError);
}

TEST_CASE("first extension for r = 2 matches the hand enumeration") {
    const auto c = extend(build_base(2), 2, 2);
    CHECK(to_hgr(c.graph) == kG2r2);
    CHECK(to_hgr(build({2, 2})) == kG2r2);

    using P = VertexProvenance;
    const std::vector<P> expected{P::copy(0, 0), P::copy(0, 1), P::copy(1, 0), P::copy(1, 1),
                                  P::fresh(0, 1), P::fresh(1, 1), P::fresh(2, 1), P::fresh(3, 1)};
    CHECK(c.provenance == expected);
}

TEST_CASE("predicted sizes") {
    auto s = predict_sizes(2, 2);
    CHECK(s.vertices == 8);
    CHECK(s.edges == 10);
    CHECK(s.num_s == 4);

    s = predict_sizes(3, 2);
    CHECK(s.vertices == 1368);
    CHECK(s.edges == 2712);
    CHECK(s.num_s == 675);

    s = predict_sizes(4, 1);
    CHECK(s.vertices == 12);
    CHECK(s.edges == 9);
    CHECK(s.num_s == 0);

    s = predict_sizes(2, 3);
    CHECK(s.vertices == 536);
    CHECK(s.edges == 1566);
    CHECK(s.num_s == 512);

    // C(4,3) * C(1368,2)^3 = 4 * 935028^3
    s = predict_sizes(3, 3);
    CHECK(s.num_s == BigInt("3269895248396567808"));

    // Far beyond 64 bits, still exact.
    s = predict_sizes(2, 6);
    CHECK(s.vertices > BigInt("1000000000000000000000000000000"));

    CHECK_THROWS_AS(predict_sizes(2, 0), InputError);
    CHECK_THROWS_AS(predict_sizes(1, 1), InputError);
}

TEST_CASE("built sizes equal the prediction for every buildable case") {
    for (auto [r, d] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
        CAPTURE(r);
        CAPTURE(d);
        const auto predicted = predict_sizes(r, d);
        if (predicted.vertices + predicted.edges > kDefaultSizeCap)
            continue;
        const auto g = build({r, d});
        CHECK(predicted.vertices == g.num_vertices());
        CHECK(predicted.edges == g.num_edges());
        CHECK(g.duplicates_dropped() == 0);
    }
}

TEST_CASE("new vertices have degree d and sit in exactly one edge per chosen copy") {
    for (auto [r, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto c = build_with_provenance({r, d});
        const auto& g = c.graph;
        REQUIRE(c.provenance.size() == g.num_vertices());
        const std::size_t copies = d + r - 2;
        const std::size_t block = predict_sizes(r, d - 1).vertices.convert_to<std::size_t>();

        auto is_new = [&](VertexId v) { return c.provenance[v].kind == VertexProvenance::Kind::kNew; };
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const auto& p = c.provenance[v];
            if (is_new(v)) {
                CHECK(degree(g, v) == d);
                CHECK(p.b >= 1);
                CHECK(p.b <= r - 1);
            } else {
                REQUIRE(p.kind == VertexProvenance::Kind::kCopy);
                CHECK(p.a < copies);
                CHECK(v == p.a * block + p.b);
            }
        }
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            const auto e = g.edge(i);
            std::size_t fresh = 0;
            std::set<std::size_t> blocks;
            for (auto v : e) {
                if (is_new(v))
                    ++fresh;
                else
                    blocks.insert(v / block);
            }
            CHECK(fresh <= 1);
            CHECK(blocks.size() == 1);
        }
    }
}

TEST_CASE("extension of r = 3 base") {
    const auto c = extend(build_base(3), 3, 2);
    CHECK(c.graph.num_vertices() == 1368);
    CHECK(c.graph.num_edges() == 2712);
    // First S-set: copies {0,1}, local pairs {0,1} and {0,1} -> vertices 0,1,6,7.
    const std::vector<VertexId> first{0, 1, 18};
    CHECK(c.graph.find_edge(first) >= 0);
    CHECK(c.graph.find_edge(std::vector<VertexId>{6, 7, 18}) >= 0);
    CHECK(c.graph.find_edge(std::vector<VertexId>{0, 1, 19}) >= 0);
    CHECK(degree(c.graph, 18) == 2);
    CHECK(c.provenance[18] == VertexProvenance::fresh(0, 1));
    CHECK(c.provenance[19] == VertexProvenance::fresh(0, 2));
    // Second S-set keeps copy 0's pair and advances copy 1's pair to {0,2}.
    CHECK(c.graph.find_edge(std::vector<VertexId>{6, 8, 20}) >= 0);
    CHECK(c.graph.find_edge(std::vector<VertexId>{0, 1, 20}) >= 0);
}

TEST_CASE("size cap refusal") {
    CHECK_THROWS_AS(build({3, 3}), SizeRefused);
    try {
        build({3, 3});
    } catch (const SizeRefused& e) {
        CHECK(e.predicted().num_s == predict_sizes(3, 3).num_s);
        CHECK(std::string(e.what()).find("numS=3269895248396567808") != std::string::npos);
    }
    CHECK_THROWS_AS(build({2, 2}, BigInt(17)), SizeRefused);
    CHECK(build({2, 2}, BigInt(18)).num_vertices() == 8);
    CHECK_THROWS_AS(extend(build_base(2), 2, 2, BigInt(10)), SizeRefused);
    CHECK_THROWS_AS(extend(build_base(2), 2, 1), InputError);
    CHECK_THROWS_AS(extend(build_base(3), 2, 2), InputError);
    CHECK_THROWS_AS(build({2, 0}), InputError);
}

TEST_CASE("construction is deterministic") {
    CHECK(to_hgr(build({3, 2})) == to_hgr(build({3, 2})));
    CHECK(to_hgr(build({2, 3})) == to_hgr(build({2, 3})));
}

TEST_CASE("provenance sidecar round trip") {
    const auto c = build_with_provenance({2, 2});
    std::stringstream ss;
    write_provenance(ss, c.provenance);
    CHECK(ss.str().rfind("v 1 COPY 0 1\nv 2 COPY 0 2\nv 3 COPY 1 1\n", 0) == 0);
    CHECK(ss.str().find("v 8 NEW 3 1\n") != std::string::npos);
    CHECK(parse_provenance(ss) == c.provenance);

    std::stringstream base;
    write_provenance(base, build_with_provenance({3, 1}).provenance);
    CHECK(base.str().rfind("v 1 BASE\n", 0) == 0);

    std::istringstream bad("v 1 COPY 0 1\nv 3 NEW 0 1\n");
    CHECK_THROWS_AS(parse_provenance(bad), ParseError);
    std::istringstream unknown("v 1 OLD 0 1\n");
    CHECK_THROWS_AS(parse_provenance(unknown), ParseError);
}
