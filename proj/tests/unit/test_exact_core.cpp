#include "conewb/errors.hpp"
#include "conewb/lattice.hpp"
#include "conewb/linalg.hpp"
#include "conewb/lp.hpp"

#include "../support/oracles.hpp"

#include "doctest.h"

using namespace conewb;

TEST_CASE("rational canonical form") {
    const Rational a(Integer(6), Integer(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational::parse(" -10/4 ") == Rational(Integer(-5), Integer(2)));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    oracle::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = gen.rational(1000, 97);
        const auto b = gen.rational(1000, 97);
        const auto c = gen.rational(1000, 97);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        CHECK(gcd(abs(a).numerator(), a.denominator()) == 1);
        CHECK(a.denominator() > 0);
    }
}

TEST_CASE("solve_linear examples") {
    SUBCASE("identity") {
        const auto s = solve_linear(RatMatrix::identity(2), RatVector{3, 5});
        REQUIRE(s.particular);
        CHECK(*s.particular == RatVector{3, 5});
        CHECK(s.kernel.empty());
    }
    SUBCASE("one equation") {
        const auto s = solve_linear(RatMatrix{{1, 1}}, RatVector{0});
        REQUIRE(s.particular);
        CHECK(*s.particular == RatVector{0, 0});
        REQUIRE(s.kernel.size() == 1);
        CHECK(primitive_integer_ray(s.kernel[0]) == RatVector{-1, 1});
    }
    SUBCASE("inconsistent") {
        const auto s = solve_linear(RatMatrix{{1, 2}, {2, 4}}, RatVector{1, 3});
        CHECK_FALSE(s.particular);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(solve_linear(RatMatrix{{1, 2}}, RatVector{1, 3}), DimensionError);
    }
}

TEST_CASE("solve_linear solutions are exact") {
    oracle::Gen gen(11);
    for (int t = 0; t < 200; ++t) {
        const auto rows = static_cast<std::size_t>(gen.integer(1, 4));
        const auto cols = static_cast<std::size_t>(gen.integer(1, 5));
        RatMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                a(i, j) = gen.rational(5, 3);
            }
        }
        // consistent right-hand side half of the time
        RatVector b = (t % 2 == 0) ? a * gen.rat_vector(cols, 5, 4) : gen.rat_vector(rows, 5, 4);
        const auto s = solve_linear(a, b);
        if (t % 2 == 0) {
            REQUIRE(s.particular);
        }
        if (s.particular) {
            CHECK(a * *s.particular == b);
        }
        for (const auto& k : s.kernel) {
            CHECK(is_zero(a * k));
        }
        CHECK(s.kernel.size() + rank(a) == cols);
    }
}

TEST_CASE("primitive_integer_ray examples") {
    CHECK(primitive_integer_ray(RatVector{Rational(Integer(2), Integer(3)), Rational(Integer(4), Integer(3))}) ==
          RatVector{1, 2});
    CHECK(primitive_integer_ray(RatVector{-5, 0}) == RatVector{-1, 0});
    CHECK(primitive_integer_ray(RatVector{6, 9, 15}) == RatVector{2, 3, 5});
    CHECK_THROWS_AS(primitive_integer_ray(RatVector{0, 0}), InvalidInput);
}

TEST_CASE("primitive_integer_ray is scale invariant") {
    oracle::Gen gen(3);
    for (int t = 0; t < 300; ++t) {
        auto v = gen.rat_vector(static_cast<std::size_t>(gen.integer(1, 5)), 9, 7);
        if (is_zero(v)) {
            continue;
        }
        Rational lambda(Integer(gen.integer(1, 50)), Integer(gen.integer(1, 50)));
        CHECK(primitive_integer_ray(scale(lambda, v)) == primitive_integer_ray(v));
        CHECK(primitive_integer_ray(v) == oracle::primitive(v));
    }
}

TEST_CASE("determinant and inverse agree with the cofactor oracle") {
    oracle::Gen gen(5);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(gen.integer(1, 4));
        RatMatrix a(n, n);
        oracle::Mat m(n, oracle::Vec(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = m[i][j] = gen.rational(4, 3);
            }
        }
        CHECK(determinant(a) == oracle::det(m));
        const auto inv = inverse(a);
        CHECK(inv.has_value() == !determinant(a).is_zero());
        if (inv) {
            CHECK(*inv * a == RatMatrix::identity(n));
        }
    }
}

TEST_CASE("hermite normal form and quotient map") {
    CHECK(hermite_normal_form({RatVector{2, 4}, RatVector{1, 3}}, 2) == std::vector<RatVector>{{1, 1}, {0, 2}});
    const auto p = quotient_map(std::vector<RatVector>{{1, 0}}, 2);
    CHECK(p == RatMatrix{{0, 1}});
    // P is onto Z^(d-k): some integer section exists
    oracle::Gen gen(9);
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = static_cast<std::size_t>(gen.integer(2, 5));
        std::vector<RatVector> w{gen.int_vector(d, 3)};
        if (is_zero(w[0])) {
            continue;
        }
        const auto q = quotient_map(w, d);
        CHECK(q.rows() == d - 1);
        CHECK(q.is_integral());
        CHECK(is_zero(q * w[0]));
        // surjectivity: the gcd of the maximal minors is 1
        Integer g = 0;
        for (std::size_t skip = 0; skip < d; ++skip) {
            oracle::Mat minor;
            for (std::size_t r = 0; r < q.rows(); ++r) {
                oracle::Vec row;
                for (std::size_t c = 0; c < d; ++c) {
                    if (c != skip) {
                        row.push_back(q(r, c));
                    }
                }
                minor.push_back(row);
            }
            g = gcd(g, oracle::det(minor).numerator());
        }
        CHECK(g == 1);
    }
}

TEST_CASE("feasibility LP") {
    FeasibilityProblem p;
    p.num_vars = 2;
    p.ge_rows = {RatVector{1, 0}, RatVector{0, 1}, RatVector{-1, -1}};
    p.ge_rhs = {1, 1, -3};
    const auto x = find_feasible_point(p);
    REQUIRE(x);
    CHECK((*x)[0] >= 1);
    CHECK((*x)[1] >= 1);
    CHECK((*x)[0] + (*x)[1] <= 3);
    p.ge_rhs = {2, 2, -3};
    CHECK_FALSE(find_feasible_point(p));

    CHECK(inequality_implied(std::vector<RatVector>{{1, 0}, {0, 1}}, RatVector{1, 1}));
    CHECK_FALSE(inequality_implied(std::vector<RatVector>{{1, 0}, {0, 1}}, RatVector{1, -1}));

    const auto comb = cone_combination(std::vector<RatVector>{{1, 0}, {1, 1}}, {}, RatVector{3, 1});
    REQUIRE(comb);
    CHECK(comb->generator_coefficients == RatVector{2, 1});
    CHECK_FALSE(cone_combination(std::vector<RatVector>{{1, 0}, {1, 1}}, {}, RatVector{0, 1}));
}
