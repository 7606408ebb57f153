#include "doctest.h"
#include "elnet/electrical.hpp"
#include "elnet/errors.hpp"
#include "elnet/linalg.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace elnet;

namespace {

Mask key(const char* s, int n) { return parse_mask_key(s, n); }

Conductances random_conductances(oracle::RatGen& g, const DiskGraph& dg, long hi = 1000) {
    Conductances c;
    for (int e = 0; e < dg.num_edges(); ++e) c.push_back(g.positive(hi));
    return c;
}

// Row sums of a matrix times a vector.
std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(static_cast<size_t>(m.rows()), Rat(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[static_cast<size_t>(r)] += m(r, c) * v[static_cast<size_t>(c)];
    return out;
}

std::vector<YDeltaSite> y_sites(const DiskGraph& g) {
    std::vector<YDeltaSite> sites;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.is_boundary(v) && g.rotation_edges(v).size() == 3) sites.push_back(YDeltaSite::at_vertex(g.vertex_id(v)));
    return sites;
}

}  // namespace

TEST_CASE("Laplacian") {
    const Rat a(2), b(3), c(5);
    const Mat l = laplacian({fixture::star(), {a, b, c}});
    CHECK(l == Mat{{a, 0, 0, -a}, {0, b, 0, -b}, {0, 0, c, -c}, {-a, -b, -c, a + b + c}});
    CHECK(laplacian({fixture::single_edge(), {c}}) == Mat{{c, -c}, {-c, c}});
    CHECK(laplacian({fixture::empty(2), {}}) == Mat(2, 2));
    oracle::RatGen g(1);
    for (int n = 2; n <= 5; ++n) {
        const DiskGraph dg = builtin_graph(n);
        const Mat m = laplacian({dg, random_conductances(g, dg)});
        CHECK(m.is_symmetric());
        for (int r = 0; r < m.rows(); ++r) {
            Rat s = 0;
            for (int k = 0; k < m.cols(); ++k) s += m(r, k);
            CHECK(s == 0);
        }
    }
    CHECK_THROWS_AS(laplacian({fixture::star(), {1, 1}}), DimensionMismatch);
    CHECK_THROWS_AS(laplacian({fixture::star(), {1, 0, 1}}), NonPositive);
}

TEST_CASE("harmonic extension") {
    const Network star{fixture::star(), {1, 1, 1}};
    CHECK(harmonic_extension(star, {1, 0, 0}) == std::vector<Rat>{Rat(1, 3)});
    oracle::RatGen g(2);
    for (int n = 3; n <= 5; ++n) {
        const DiskGraph dg = builtin_graph(n);
        const Network net{dg, random_conductances(g, dg)};
        const Rat k = g.any();
        for (const Rat& v : harmonic_extension(net, std::vector<Rat>(static_cast<size_t>(n), k))) CHECK(v == k);
        // current out of the boundary is L applied to the boundary data
        std::vector<Rat> fb;
        for (int i = 0; i < n; ++i) fb.push_back(g.any());
        std::vector<Rat> f = fb;
        for (const Rat& v : harmonic_extension(net, fb)) f.push_back(v);
        const std::vector<Rat> lf = mat_vec(laplacian(net), f);
        const std::vector<Rat> lu = mat_vec(response_matrix(net), fb);
        for (int i = 0; i < n; ++i) CHECK(lu[static_cast<size_t>(i)] == -lf[static_cast<size_t>(i)]);
        for (size_t i = static_cast<size_t>(n); i < lf.size(); ++i) CHECK(lf[i] == 0);
    }
}

TEST_CASE("response matrix") {
    oracle::RatGen g(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Rat a = g.positive(), b = g.positive(), c = g.positive(), s = a + b + c;
        const Mat l = response_matrix({fixture::star(), {a, b, c}});
        CHECK(l == Mat{{-a * (b + c) / s, a * b / s, a * c / s}, {a * b / s, -b * (a + c) / s, b * c / s},
                       {a * c / s, b * c / s, -c * (a + b) / s}});
        CHECK(response_violations(l).empty());
        const YDeltaMove mv = y_delta_graph(fixture::star(), YDeltaSite::at_vertex("u"));
        const Conductances tri = y_delta_conductances({a, b, c}, mv);
        CHECK(response_matrix({mv.after, tri}) == l);
    }
    const Rat c(7, 2);
    CHECK(response_matrix({fixture::single_edge(), {c}}) == Mat{{-c, c}, {c, -c}});
    for (int n = 2; n <= 5; ++n) {
        const DiskGraph dg = builtin_graph(n);
        CHECK(response_violations(response_matrix({dg, random_conductances(g, dg)})).empty());
    }
    CHECK_FALSE(response_violations(Mat{{-1, 2}, {2, -1}}).empty());
    CHECK_FALSE(response_violations(Mat{{1, -1}, {-1, 1}}).empty());
}

TEST_CASE("response matrix is unchanged by Y-Delta moves") {
    oracle::RatGen g(4);
    for (int n = 3; n <= 5; ++n) {
        DiskGraph dg = builtin_graph(n);
        Conductances c = random_conductances(g, dg, 50);
        const Mat l = response_matrix({dg, c});
        for (int step = 0; step < 4; ++step) {
            const std::vector<YDeltaSite> sites = y_sites(dg);
            if (sites.empty()) break;
            const YDeltaMove mv = y_delta_graph(dg, sites[static_cast<size_t>(step) % sites.size()]);
            c = y_delta_conductances(c, mv);
            dg = mv.after;
            CHECK(response_matrix({dg, c}) == l);
            const YDeltaMove back = y_delta_graph(dg, YDeltaSite::at_face(mv.center_after));
            const Conductances undone = y_delta_conductances(c, back);
            CHECK(response_matrix({back.after, undone}) == l);
        }
    }
}

TEST_CASE("star-mesh conductance transform") {
    const YDeltaMove mv = y_delta_graph(fixture::star(), YDeltaSite::at_vertex("u"));
    for (const Rat& v : y_delta_conductances({1, 1, 1}, mv)) CHECK(v == Rat(1, 3));
    oracle::RatGen g(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Conductances c{g.positive(), g.positive(), g.positive()};
        const Conductances tri = y_delta_conductances(c, mv);
        const YDeltaMove back = y_delta_graph(mv.after, YDeltaSite::at_face(mv.center_after));
        const Conductances again = y_delta_conductances(tri, back);
        for (int e = 0; e < 3; ++e) CHECK(again[static_cast<size_t>(back.after.edge_index(fixture::star().edge_id(e)))] == c[static_cast<size_t>(e)]);
        // the triangle edge opposite v_i joins the other two
        for (int i = 0; i < 3; ++i) {
            const int e = mv.after.edge_index(mv.edge_ids[static_cast<size_t>(i)]);
            const Rat& ci = c[static_cast<size_t>(fixture::star().edge_index(mv.edge_ids[static_cast<size_t>((i + 1) % 3)]))];
            const Rat& ck = c[static_cast<size_t>(fixture::star().edge_index(mv.edge_ids[static_cast<size_t>((i + 2) % 3)]))];
            CHECK(tri[static_cast<size_t>(e)] == ci * ck / (c[0] + c[1] + c[2]));
        }
    }
}

TEST_CASE("forward point") {
    oracle::RatGen g(6);
    for (int trial = 0; trial < 5; ++trial) {
        const Rat c = g.positive();
        const PluckerVector p = plucker(forward_point({builtin_graph(2), {c}}));
        CHECK(p.at(key("1,2,3", 4)) == 1);
        CHECK(p.at(key("1,2,4", 4)) == c);
        CHECK(p.at(key("1,3,4", 4)) == 1);
        CHECK(p.at(key("2,3,4", 4)) == c);
        CHECK(p.coords == plucker(lagrangian_from_response(response_matrix({builtin_graph(2), {c}}))).coords);

        const Conductances abc{g.positive(), g.positive(), g.positive()};
        const Network star{fixture::star(), abc};
        const Mat x = forward_point(star);
        const Mat y = lagrangian_from_response(response_matrix(star));
        CHECK(omega_check(y));
        CHECK(proportionality(plucker(x), plucker(y)).has_value());
    }
    for (int n = 1; n <= 5; ++n) {
        const DiskGraph dg = builtin_graph(n);
        const Mat x = forward_point({dg, random_conductances(g, dg)});
        CHECK(x.rows() == n + 1);
        CHECK(omega_check(x));
        CHECK(plucker(x).all_positive());
    }
    CHECK_THROWS_AS(lagrangian_from_response(Mat(4, 4)), UnsupportedN);
}

TEST_CASE("inverting the star response") {
    oracle::RatGen g(7);
    const DiskGraph star = fixture::star();
    for (int trial = 0; trial < 10; ++trial) {
        const Conductances abc{g.positive(), g.positive(), g.positive()};
        const Mat l = response_matrix({star, abc});
        CHECK(invert_response(l, star) == abc);
        const Rat l12 = l(0, 1), l13 = l(0, 2), l23 = l(1, 2);
        const Rat l123 = l12 * l13 + l12 * l23 + l13 * l23;
        CHECK(abc[0] == l123 / l23);
        CHECK(abc[1] == l123 / l13);
        CHECK(abc[2] == l123 / l12);
    }
    CHECK(invert_response(response_matrix({star, {1, 1, 1}}), star) == Conductances{1, 1, 1});
    const Rat c(7, 3);
    CHECK(invert_response(response_matrix({builtin_graph(2), {c}}), builtin_graph(2)) == Conductances{c});
    CHECK(invert_response(Mat(1, 1), builtin_graph(1)).empty());
    CHECK_THROWS_AS(invert_response(Mat(2, 2), star), DimensionMismatch);
}

TEST_CASE("exact recovery on builtin graphs") {
    oracle::RatGen g(8);
    const DiskGraph dg = builtin_graph(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Conductances c = random_conductances(g, dg);
        CHECK(invert_response(response_matrix({dg, c}), dg) == c);
    }
    for (int n = 1; n <= 5; ++n) {
        const DiskGraph gr = builtin_graph(n);
        for (int trial = 0; trial < 3; ++trial) {
            const Conductances c = random_conductances(g, gr);
            CHECK(invert_response(MatrixPoint{forward_point({gr, c}), true}, gr) == c);
        }
    }
}

TEST_CASE("recovery commutes with Y-Delta moves") {
    oracle::RatGen g(9);
    for (int n = 3; n <= 5; ++n) {
        const DiskGraph dg = builtin_graph(n);
        const std::vector<YDeltaSite> sites = y_sites(dg);
        REQUIRE_FALSE(sites.empty());
        const YDeltaMove mv = y_delta_graph(dg, sites.front());
        const Conductances c = random_conductances(g, dg, 30);
        const Mat x = forward_point({dg, c});
        const Conductances here = invert_response(MatrixPoint{x, true}, dg);
        const Conductances there = invert_response(MatrixPoint{x, true}, mv.after);
        CHECK(there == y_delta_conductances(here, mv));
        CHECK(proportionality(plucker(forward_point({mv.after, there})), plucker(x)).has_value());
    }
}
