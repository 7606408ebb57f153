#include <map>

#include "doctest.h"
#include "elnet/errors.hpp"
#include "elnet/linalg.hpp"
#include "elnet/subset.hpp"
#include "oracles.hpp"

using namespace elnet;

TEST_CASE("rat canonical form and parsing") {
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK(Rat::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rat::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rat::parse(""), ParseError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK(Rat(1, 3).decimal(4) == "0.3333");
    CHECK(Rat(2, 3).decimal(2) == "0.67");
    CHECK(Rat(-1, 8).decimal(1) == "-0.1");
    CHECK(Rat(5).decimal(0) == "5");
}

TEST_CASE("rat arithmetic is exact at large magnitudes") {
    Rat big = pow(Rat(10), 40);
    Rat x = Rat(1) / big + Rat(1) / (big + 1);
    CHECK(x * big * (big + 1) == 2 * big + 1);
    CHECK(pow(Rat(2, 3), -2) == Rat(9, 4));
}

TEST_CASE("subset keys") {
    CHECK(mask_key(bit(1) | bit(2) | bit(4)) == "1,2,4");
    CHECK(parse_mask_key("1,3", 4) == (bit(1) | bit(3)));
    CHECK(parse_mask_key("", 4) == 0u);
    CHECK_THROWS_AS(parse_mask_key("3,1", 4), ParseError);
    CHECK_THROWS_AS(parse_mask_key("5", 4), ParseError);
    CHECK(k_subsets(4, 2).size() == 6);
    CHECK(k_subsets(4, 2).front() == (bit(1) | bit(2)));
    CHECK(k_subsets(4, 2).back() == (bit(3) | bit(4)));
    SubsetIndex s(5, {2, 4});
    CHECK(s.complement().key() == "1,3,5");
    CHECK_THROWS_AS(SubsetIndex(3, {2, 2}), DimensionMismatch);
    CHECK(cyc(0, 4) == 4);
    CHECK(cyc(9, 4) == 1);
}

TEST_CASE("pfaffian small cases") {
    CHECK(pfaffian(Mat{{0, 5}, {-5, 0}}) == 5);
    CHECK(pfaffian(Mat(0, 0)) == 1);
    CHECK(pfaffian(Mat(3, 3)) == 0);
    oracle::RatGen g(11);
    Mat a = oracle::random_skew(g, 4);
    CHECK(pfaffian(a) == a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2));
    CHECK_THROWS_AS(pfaffian(Mat{{0, 1}, {1, 0}}), NotSkewSymmetric);
}

TEST_CASE("pfaffian matches matching-sum oracle and squares to the determinant") {
    oracle::RatGen g(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 7;
        Mat a = oracle::random_skew(g, n);
        if (trial % 5 == 0) {
            // force zero pivots so row swaps are exercised
            for (int j = 0; j < n; ++j) { a(0, j) = 0; a(j, 0) = 0; }
            if (n > 2) { a(0, n - 1) = 3; a(n - 1, 0) = -3; }
        }
        const Rat pf = pfaffian(a);
        CHECK(pf == oracle::pfaffian_matchings(a));
        CHECK(pf * pf == determinant(a));
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    oracle::RatGen g(5);
    for (int n = 1; n <= 6; ++n) {
        Mat a = oracle::random_matrix(g, n, n);
        CHECK(determinant(a) == oracle::det_cofactor(a));
    }
    CHECK(determinant(Mat{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("schur complement of the star laplacian") {
    const Rat a(2), b(3), c(5);
    const Rat s = a + b + c;
    Mat lap{{a, 0, 0, -a}, {0, b, 0, -b}, {0, 0, c, -c}, {-a, -b, -c, s}};
    Mat red = schur_complement(lap, SubsetIndex(4, {1, 2, 3}));
    Mat expect{{-a * (b + c) / s, a * b / s, a * c / s},
               {a * b / s, -b * (a + c) / s, b * c / s},
               {a * c / s, b * c / s, -c * (a + b) / s}};
    CHECK(Rat(-1) * red == expect);
    CHECK(red.is_symmetric());

    Mat ones{{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}, {-1, -1, -1, 3}};
    Mat r1 = Rat(-1) * schur_complement(ones, SubsetIndex(4, {1, 2, 3}));
    CHECK(r1 == Rat(1, 3) * Mat{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
}

TEST_CASE("schur complement edge cases") {
    Mat blk{{1, 2, 0}, {2, 7, 0}, {0, 0, 4}};
    CHECK(schur_complement(blk, SubsetIndex(3, {1, 2})) == Mat{{1, 2}, {2, 7}});
    Mat sing{{1, 1}, {1, 0}};
    CHECK_THROWS_AS(schur_complement(sing, SubsetIndex(2, {1})), SingularBlock);
    oracle::RatGen g(77);
    for (int t = 0; t < 10; ++t) {
        Mat x = oracle::random_matrix(g, 5, 5);
        Mat sym = x + x.transpose();
        CHECK(schur_complement(sym, SubsetIndex(5, {1, 3, 4})).is_symmetric());
    }
}

TEST_CASE("rref basics and idempotence") {
    CHECK(rref_solve(Mat::identity(3)).reduced == Mat::identity(3));
    CHECK(rref_solve(Mat::identity(3)).pivots.key() == "1,2,3");
    CHECK(rank(Mat{{1, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 0, 1}}) == 2);
    oracle::RatGen g(3);
    for (int t = 0; t < 10; ++t) {
        Mat m = oracle::random_matrix(g, 3, 5);
        if (t % 2) for (int j = 0; j < 5; ++j) m(2, j) = m(0, j) + m(1, j);
        RrefResult r = rref_solve(m);
        RrefResult again = rref_solve(r.reduced);
        CHECK(again.reduced == r.reduced);
        CHECK(again.pivots == r.pivots);
        Mat ns = null_space(m);
        CHECK(ns.cols() == 5 - r.rank());
        CHECK(m * ns == Mat(3, ns.cols()));
    }
}

TEST_CASE("maximal minors") {
    const Rat a(2), b(3), c(5), d(7);
    Mat x{{1, 0, -c, -d}, {0, 1, b, a}};
    auto mm = maximal_minors(x);
    // compare with cofactor oracle on every column pair
    for (auto [mask, v] : mm) {
        std::vector<int> cols;
        for (int i : mask_members(mask)) cols.push_back(i - 1);
        CHECK(v == oracle::det_cofactor(x.select_cols(cols)));
    }
    Mat id{{1, 0, 0, 0}, {0, 1, 0, 0}};
    auto mi = maximal_minors(id);
    for (auto [mask, v] : mi) CHECK(v == (mask == (bit(1) | bit(2)) ? Rat(1) : Rat(0)));
    oracle::RatGen g(9);
    Mat r = oracle::random_matrix(g, 4, 6);
    for (auto [mask, v] : maximal_minors(r)) {
        std::vector<int> cols;
        for (int i : mask_members(mask)) cols.push_back(i - 1);
        CHECK(v == oracle::det_cofactor(r.select_cols(cols)));
    }
}

TEST_CASE("inverse and solve") {
    Mat a{{2, 1}, {1, 1}};
    CHECK(a * inverse(a) == Mat::identity(2));
    std::vector<Rat> x;
    CHECK(solve_square(a, {3, 2}, x));
    CHECK(x == std::vector<Rat>{1, 1});
    CHECK_FALSE(solve_square(Mat{{1, 1}, {1, 1}}, {1, 2}, x));
}
