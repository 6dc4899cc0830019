#include <doctest.h>

#include <stdexcept>

#include "lval/matrix.hpp"

using namespace lval;

namespace {
RatMatrix from_longs(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> v;
        for (long x : row) v.push_back(rat(x));
        r.push_back(v);
    }
    return RatMatrix::from_rows(r);
}
}  // namespace

TEST_CASE("determinant, rank, inverse") {
    const RatMatrix m = from_longs({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(determinant(m) == rat(18));
    CHECK(rank(m) == 3);
    const RatMatrix inv = inverse(m);
    CHECK(m * inv == RatMatrix::identity(3));
    CHECK(inv * m == RatMatrix::identity(3));

    const RatMatrix singular = from_longs({{1, 2}, {2, 4}});
    CHECK(determinant(singular) == 0);
    CHECK(rank(singular) == 1);
    CHECK_THROWS_AS(inverse(singular), std::invalid_argument);
}

TEST_CASE("matrix-vector product and transpose") {
    const RatMatrix m = from_longs({{1, 2}, {3, 4}});
    const std::vector<Rational> v = {rat(5), rat(6)};
    const std::vector<Rational> mv = m * v;
    CHECK(mv == std::vector<Rational>{rat(17), rat(39)});
    CHECK(m.transposed().at(0, 1) == rat(3));
}

TEST_CASE("solve_affine: unique point") {
    const RatMatrix m = from_longs({{1, 1}, {1, -1}});
    const auto sol = solve_affine(m, {rat(3), rat(1)});
    REQUIRE(!sol.empty);
    CHECK(sol.is_unique_point());
    CHECK(sol.particular == std::vector<Rational>{rat(2), rat(1)});
}

TEST_CASE("solve_affine: inconsistent") {
    const RatMatrix m = from_longs({{1, 1}, {2, 2}});
    const auto sol = solve_affine(m, {rat(1), rat(3)});
    CHECK(sol.empty);
}

TEST_CASE("solve_affine: one-dimensional family with pivot-zero particular") {
    // x + y + z = 1 and y - z = 0: solutions (1 - 2t, t, t).
    const RatMatrix m = from_longs({{1, 1, 1}, {0, 1, -1}});
    const auto sol = solve_affine(m, {rat(1), rat(0)});
    REQUIRE(!sol.empty);
    REQUIRE(sol.nullspace_basis.size() == 1);
    // The particular solution vanishes on the free coordinate.
    CHECK(sol.particular == std::vector<Rational>{rat(1), rat(0), rat(0)});
    const auto& dir = sol.nullspace_basis.front();
    // Direction solves the homogeneous system.
    CHECK(Rational(dir[0] + dir[1] + dir[2]) == 0);
    CHECK(Rational(dir[1] - dir[2]) == 0);
    CHECK(dir[1] != 0);
}

TEST_CASE("reduced_row_echelon reports pivot columns") {
    RatMatrix m = from_longs({{0, 2, 4}, {1, 1, 1}});
    const auto pivots = reduced_row_echelon(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(0, 1) == 0);
}
