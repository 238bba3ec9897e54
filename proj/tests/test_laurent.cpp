#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "affgraph/laurent.hpp"
#include "fixtures.hpp"
#include "poly_parse.hpp"

using namespace affgraph;
using testutil::lp;
using testutil::rf;

namespace {

LaurentPoly random_poly(std::mt19937& g, int nvars, int max_terms) {
    std::uniform_int_distribution<int> nterm(0, max_terms);
    std::uniform_int_distribution<int> ex(-2, 2);
    std::uniform_int_distribution<int> co(-5, 5);
    LaurentPoly p(nvars);
    int k = nterm(g);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (int i = 0; i < nvars; ++i) m[i] = ex(g);
        Rational c(co(g), 1 + (t % 3));
        c.canonicalize();
        p.add_term(m, c);
    }
    return p;
}

}  // namespace

TEST_CASE("products and exact division") {
    auto a = lp("z1-z3", 3);
    auto b = lp("z1+z3", 3);
    CHECK(lp_multiply(a, b) == lp("z1*z1-z3*z3", 3));
    auto q = lp_divide_exact(lp("z1^2-z3^2", 3), a);
    REQUIRE(q.has_value());
    CHECK(*q == b);
    CHECK_FALSE(lp_divide_exact(lp("z1+z2", 3), lp("z1-z2", 3)).has_value());
    CHECK_THROWS(lp_divide_exact(a, LaurentPoly(3)));
}

TEST_CASE("Laurent exponents and monomial units") {
    auto p = lp("z1^-2*z2 + 3*z2^-1", 2);
    CHECK(p.min_exponents()[0] == -2);
    CHECK(p.min_exponents()[1] == -1);
    auto q = lp_divide_exact(p, lp("z1^-2", 2));
    REQUIRE(q.has_value());
    CHECK(*q == lp("z2 + 3*z1^2*z2^-1", 2));
    CHECK(p.bar().bar() == p);
    CHECK(lp("z1*z2^-1", 2).bar() == lp("z1^-1*z2", 2));
}

TEST_CASE("printing") {
    CHECK(lp("z1^2*z2^-1 - 1/2", 2).to_string() == "z1^2*z2^-1 - 1/2");
    CHECK(LaurentPoly(2).to_string() == "0");
    CHECK(lp("-z1", 2).to_string({"a", "b"}) == "-a");
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("ring axioms on random sparse input") {
    std::mt19937 g(12345);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(g, 3, 4);
        auto b = random_poly(g, 3, 4);
        auto c = random_poly(g, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b - b == a);
        if (!b.is_zero()) {
            auto q = lp_divide_exact(a * b, b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}

TEST_CASE("rational functions compare by cross multiplication") {
    auto x = rf("2*z2/(z1-z3)", 3);
    auto y = rf("(4*z2*z1)/(2*z1*z1-2*z1*z3)", 3);
    CHECK(x == y);
    CHECK(rf("(z1^2-z3^2)/(z1-z3)", 3).den().is_one());
    CHECK(rf("(z1-z3)/(z1^2-z3^2)", 3).num().is_one());
    CHECK((x - y).is_zero());
    CHECK(rf("1/z1", 3).is_laurent());
    CHECK((rf("z1/(z1+z2)", 3) + rf("z2/(z1+z2)", 3)).is_one());
}

TEST_CASE("matrix inverse of the printed six-vertex path matrix") {
    auto m = testutil::matrix(fixtures::kSixM1, 3);
    auto expected = testutil::matrix(fixtures::kSixM1Inverse, 3);
    auto res = mat_inverse(m);
    REQUIRE(res.invertible);
    CHECK(res.inverse == expected);
    CHECK((m * res.inverse).is_identity());
}

TEST_CASE("identity and singular matrices") {
    auto id = FFMatrix::identity(3, 2);
    auto res = mat_inverse(id);
    REQUIRE(res.invertible);
    CHECK(res.inverse.is_identity());

    auto s = testutil::matrix({{"z1", "z2"}, {"2*z1", "2*z2"}}, 2);
    auto sr = mat_inverse(s);
    REQUIRE_FALSE(sr.invertible);
    REQUIRE(sr.kernel.size() == 2);
    auto r0 = s(0, 0) * sr.kernel[0] + s(0, 1) * sr.kernel[1];
    auto r1 = s(1, 0) * sr.kernel[0] + s(1, 1) * sr.kernel[1];
    CHECK(r0.is_zero());
    CHECK(r1.is_zero());
    CHECK(determinant(s).is_zero());
}

TEST_CASE("inverse round trip on products of elementary matrices") {
    std::mt19937 g(777);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4;
        FFMatrix m = FFMatrix::identity(n, 2);
        for (int step = 0; step < 6; ++step) {
            FFMatrix e = FFMatrix::identity(n, 2);
            int i = static_cast<int>(g() % n);
            int j = static_cast<int>(g() % n);
            if (i == j) {
                e(i, i) = RationalFunction(LaurentPoly::monomial({static_cast<int>(g() % 3) - 1, 1}, 2));
            } else {
                e(i, j) = RationalFunction(random_poly(g, 2, 2));
            }
            m = m * e;
        }
        auto res = mat_inverse(m);
        REQUIRE(res.invertible);
        CHECK((m * res.inverse).is_identity());
        CHECK((res.inverse * m).is_identity());
    }
}

TEST_CASE("general elimination path with rational entries") {
    auto m = testutil::matrix({{"1/(z1+1)", "z2"}, {"1", "z1/(z2+1)"}}, 2);
    auto res = mat_inverse(m);
    REQUIRE(res.invertible);
    CHECK((m * res.inverse).is_identity());
    auto b = std::vector<RationalFunction>{rf("1", 2), rf("z1", 2)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m(0, 0) * (*x)[0] + m(0, 1) * (*x)[1] == b[0]);
    CHECK(m(1, 0) * (*x)[0] + m(1, 1) * (*x)[1] == b[1]);
}

TEST_CASE("minimal polynomials") {
    SUBCASE("zero 1x1") {
        auto mu = minimal_polynomial(FFMatrix(1, 1, 1));
        REQUIRE(mu.size() == 2);
        CHECK(mu[0].is_zero());
        CHECK(mu[1].is_one());
    }
    SUBCASE("printed six-vertex example") {
        auto a = testutil::matrix(fixtures::kSixAdjacency, 3);
        auto mu = minimal_polynomial(a);
        REQUIRE(mu.size() == fixtures::kSixMinimalPolynomial.size());
        for (std::size_t k = 0; k < mu.size(); ++k) CHECK(mu[k] == rf(fixtures::kSixMinimalPolynomial[k], 3));
        CHECK(evaluate_polynomial(mu, a).is_zero());
        // no monic polynomial of lower degree annihilates A: A^d is never in the span of lower powers
        std::vector<FFMatrix> powers{FFMatrix::identity(6, 3)};
        for (int d = 1; d < 6; ++d) powers.push_back(powers.back() * a);
        for (int d = 1; d < 6; ++d) {
            FFMatrix v(36, d, 3);
            std::vector<RationalFunction> target;
            for (int i = 0; i < 36; ++i) {
                for (int k = 0; k < d; ++k) v(i, k) = powers[k](i / 6, i % 6);
                target.push_back(powers[d](i / 6, i % 6));
            }
            CHECK_FALSE(solve(v, target).has_value());
        }
    }
    SUBCASE("two-vertex matrix") {
        auto a = testutil::matrix({{"0", "z1+z2"}, {"1", "0"}}, 2);
        auto mu = minimal_polynomial(a);
        REQUIRE(mu.size() == 3);
        CHECK(mu[0] == rf("-z1-z2", 2));
        CHECK(mu[1].is_zero());
    }
    SUBCASE("scalar matrix has degree one") {
        auto a = testutil::matrix({{"z1", "0"}, {"0", "z1"}}, 1);
        auto mu = minimal_polynomial(a);
        REQUIRE(mu.size() == 2);
        CHECK(mu[0] == rf("-z1", 1));
    }
}
