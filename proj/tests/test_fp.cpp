#include <doctest.h>

#include "tautilt/fp.hpp"

using namespace tautilt;

TEST_CASE("prime field arithmetic") {
    PrimeField F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.neg(0) == 0);
    CHECK(F.reduce(-1) == 6);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(PrimeField(6), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
    CHECK_THROWS_AS(F.inv(0), InvalidArgument);
}

TEST_CASE("rref, rank and nullspace") {
    PrimeField F(2);
    Mat m(3, 4);
    // rows: (1,1,0,0), (0,1,1,0), (1,0,1,0) -- third is the sum
    m.at(0, 0) = 1; m.at(0, 1) = 1;
    m.at(1, 1) = 1; m.at(1, 2) = 1;
    m.at(2, 0) = 1; m.at(2, 2) = 1;
    CHECK(row_rank(F, m) == 2);

    Mat ns = left_nullspace(F, m);
    CHECK(ns.rows == 1);
    Mat prod = mul(F, ns, m);
    CHECK(prod.is_zero());
}

TEST_CASE("rank plus nullity over pseudo-random matrices") {
    PrimeField F(3);
    std::uint32_t state = 12345;
    auto next = [&] { return state = state * 1103515245u + 12345u; };
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(next() % 5), c = 1 + static_cast<int>(next() % 5);
        Mat m(r, c);
        for (auto& x : m.a) x = next() % 3;
        Mat ns = left_nullspace(F, m);
        CHECK(row_rank(F, m) + ns.rows == r);
        CHECK(mul(F, ns, m).is_zero());
        auto [rn, free_cols] = right_nullspace(F, m);
        CHECK(row_rank(F, m) + rn.rows == c);
        CHECK(mul(F, m, transpose(rn)).is_zero());
        CHECK(static_cast<int>(free_cols.size()) == rn.rows);
    }
}

TEST_CASE("solve_left finds exact solutions") {
    PrimeField F(5);
    Mat a(2, 3);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(0, 2) = 3;
    a.at(1, 0) = 0; a.at(1, 1) = 1; a.at(1, 2) = 4;
    Mat x(2, 2);
    x.at(0, 0) = 2; x.at(0, 1) = 1;
    x.at(1, 0) = 3; x.at(1, 1) = 0;
    Mat b = mul(F, x, a);
    auto sol = solve_left(F, a, b);
    REQUIRE(sol.has_value());
    CHECK(mul(F, *sol, a) == b);

    Mat bad(1, 3);
    bad.at(0, 2) = 1;  // (0,0,1) is not in the row space of a
    CHECK(!solve_left(F, a, bad).has_value());
}

TEST_CASE("row space with reversed elimination order") {
    PrimeField F(2);
    std::vector<int> order{3, 2, 1, 0};
    RowSpace rs(F, 4, order);
    CHECK(rs.insert({0, 1, 0, 1}));
    CHECK(rs.is_pivot(3));  // pivots on the last coordinate first
    CHECK(!rs.insert({0, 1, 0, 1}));
    CHECK(rs.insert({0, 1, 1, 0}));
    CHECK(rs.reduce({0, 0, 1, 1}) == Vec{0, 0, 0, 0});  // sum of the generators
    CHECK(rs.contains({0, 0, 1, 1}));
    CHECK(!rs.contains({1, 0, 0, 0}));
}

TEST_CASE("empty shapes are legal") {
    PrimeField F(2);
    Mat e(0, 3);
    CHECK(row_rank(F, e) == 0);
    CHECK(left_nullspace(F, e).rows == 0);
    Mat m(2, 0);
    CHECK(row_rank(F, m) == 0);
    CHECK(left_nullspace(F, m).rows == 2);
    Mat p = mul(F, m, Mat(0, 4));
    CHECK(p.rows == 2);
    CHECK(p.cols == 4);
    CHECK(p.is_zero());
}
