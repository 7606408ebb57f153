#include "doctest.h"
#include "elnet/errors.hpp"
#include "elnet/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace elnet;

namespace {

// Emitted text, parsed back.
Json reparse(const Json& j) { return parse_json_text(j.dump()); }

Json text(const char* s) { return parse_json_text(s); }

}  // namespace

TEST_CASE("rationals") {
    CHECK(rat_to_json(Rat(3, 6)) == "1/2");
    CHECK(rat_to_json(Rat(-4, 2)) == "-2");
    CHECK(rat_from_json(Json("7/3")) == Rat(7, 3));
    CHECK(rat_to_json(Rat(7, 3), RatFormat{3}) == "2.333");
    CHECK_THROWS_AS(rat_from_json(Json(3)), ParseError);
    CHECK_THROWS_AS(rat_from_json(Json("1.5")), ParseError);
    CHECK_THROWS_AS(rat_from_json(Json("1/x")), ParseError);
    oracle::RatGen g(1);
    for (int i = 0; i < 200; ++i) {
        const Rat r = g.any(100000);
        CHECK(rat_from_json(reparse(rat_to_json(r))) == r);
    }
}

TEST_CASE("disk graphs round trip") {
    for (int n = 1; n <= 5; ++n) {
        const DiskGraph g = builtin_graph(n);
        const Json j = graph_to_json(g);
        const DiskGraph back = graph_from_json(reparse(j));
        CHECK(graph_to_json(back).dump() == j.dump());
        CHECK(back.num_faces() == g.num_faces());
    }
    const Json star = graph_to_json(fixture::star());
    CHECK(star["boundary"] == Json::array({"b1", "b2", "b3"}));
    CHECK(star["edges"]["a"] == Json::array({"u", "b1"}));
}

TEST_CASE("disk graph schema errors") {
    const char* ok = R"({"n":2,"boundary":["x","y"],"rotations":{"x":["e"],"y":["e"]},"edges":{"e":["x","y"]}})";
    CHECK(graph_from_json(text(ok)).num_edges() == 1);
    CHECK_THROWS_AS(graph_from_json(text(R"({"n":2,"boundary":["x","y"],"rotations":{}})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(text(R"({"n":"2","boundary":[],"rotations":{},"edges":{}})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(text(R"({"n":1,"boundary":["x","y"],"rotations":{},"edges":{}})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(text(R"({"n":0,"boundary":[],"rotations":{},"edges":{},"extra":1})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(text(R"({"n":2,"boundary":["x","y"],"rotations":{"x":["e"],"y":["e"]},"edges":{"e":["x"]}})")),
                    ParseError);
    CHECK_THROWS_AS(graph_from_json(text("[1,2]")), ParseError);
    CHECK_THROWS_AS(parse_json_text("{"), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), ParseError);
    // a rotation missing an edge is an embedding error
    CHECK_THROWS_AS(graph_from_json(text(R"({"n":2,"boundary":["x","y"],"rotations":{"x":["e"],"y":[]},"edges":{"e":["x","y"]}})")),
                    Error);
}

TEST_CASE("bipartite graphs round trip") {
    const BipartiteGraph sq = fixture::square();
    const Json j = bipartite_to_json(sq);
    const BipartiteGraph back = bipartite_from_json(reparse(j));
    CHECK(bipartite_to_json(back).dump() == j.dump());
    CHECK(back.color == sq.color);
    const Temperley tp = temperley_plus(builtin_graph(3), {1, 2, 3});
    const Json tj = bipartite_to_json(tp.graph);
    CHECK(bipartite_to_json(bipartite_from_json(reparse(tj))).dump() == tj.dump());
    Json bad = j;
    bad["color"][bad["color"].begin().key()] = "red";
    CHECK_THROWS_AS(bipartite_from_json(bad), ParseError);
    Json missing = j;
    missing.erase("color");
    CHECK_THROWS_AS(bipartite_from_json(missing), ParseError);
}

TEST_CASE("Plucker vectors and matrix points round trip") {
    oracle::RatGen g(2);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = g.uniform(1, 3), n = k + g.uniform(0, 3);
        const Mat m = oracle::random_positive_point(g, k, n);
        const PluckerVector p = plucker(m);
        const Json pj = plucker_to_json(p);
        const PluckerVector pb = plucker_from_json(reparse(pj));
        CHECK(pb.k == p.k);
        CHECK(pb.n == p.n);
        CHECK(pb.coords == p.coords);
        CHECK(plucker_to_json(pb).dump() == pj.dump());
        const MatrixPoint mp{m, true};
        const MatrixPoint back = point_from_json(reparse(point_to_json(mp)));
        CHECK(back.matrix == m);
    }
    const Json p = text(R"({"k":2,"n":4,"coords":{"1,2":"1","3,4":"5/2"}})");
    CHECK(plucker_from_json(p).at(parse_mask_key("3,4", 4)) == Rat(5, 2));
    CHECK_THROWS_AS(plucker_from_json(text(R"({"k":2,"n":4,"coords":{"1":"1"}})")), ParseError);
    CHECK_THROWS_AS(plucker_from_json(text(R"({"k":2,"n":4,"coords":{"2,1":"1"}})")), ParseError);
    CHECK_THROWS_AS(plucker_from_json(text(R"({"k":2,"n":4,"coords":{"1,5":"1"}})")), ParseError);
    CHECK_THROWS_AS(plucker_from_json(text(R"({"k":5,"n":4,"coords":{}})")), ParseError);
    CHECK_THROWS_AS(point_from_json(text(R"({"rows":1,"cols":2,"entries":[["1"]]})")), ParseError);
    CHECK_THROWS_AS(point_from_json(text(R"({"rows":2,"cols":1,"entries":[["1"],["1","2"]]})")), ParseError);
    CHECK(point_from_json(text(R"({"rows":0,"cols":3,"entries":[]})")).matrix.cols() == 3);
}

TEST_CASE("Cartan vectors, responses and conductances round trip") {
    oracle::RatGen g(3);
    CartanVector c;
    c.n = 3;
    for (int size = 0; size <= 3; ++size)
        for (Mask m : k_subsets(3, size)) c.sigma[m] = g.positive();
    const Json cj = cartan_to_json(c);
    CHECK(cj["sigma"].begin().key() == "");
    const CartanVector cb = cartan_from_json(reparse(cj));
    CHECK(cb.n == 3);
    CHECK(cb.sigma == c.sigma);
    CHECK_THROWS_AS(cartan_from_json(text(R"({"n":2,"sigma":{"3":"1"}})")), ParseError);

    const DiskGraph dg = builtin_graph(4);
    Conductances cond;
    for (int e = 0; e < dg.num_edges(); ++e) cond.push_back(g.positive());
    const Mat l = response_matrix({dg, cond});
    const Json lj = response_to_json(l);
    CHECK(lj["n"] == 4);
    CHECK(response_from_json(reparse(lj)) == l);
    CHECK_THROWS_AS(response_from_json(text(R"({"n":2,"entries":[["1","2"]]})")), ParseError);

    const Json kj = conductances_to_json(cond, dg);
    CHECK(conductances_from_json(reparse(kj), dg) == cond);
    CHECK(conductances_to_json(cond, dg).dump() == kj.dump());
    Json extra = kj;
    extra["zz"] = "1";
    CHECK_THROWS_AS(conductances_from_json(extra, dg), ParseError);
    Json short_ = kj;
    short_.erase(short_.begin().key());
    CHECK_THROWS_AS(conductances_from_json(short_, dg), ParseError);
    CHECK_THROWS_AS(conductances_to_json({1}, dg), DimensionMismatch);
}
