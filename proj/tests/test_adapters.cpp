#include <doctest.h>

#include "idpd/monomial.hpp"
#include "idpd/semigroup.hpp"

using namespace idpd;

TEST_CASE("semigroup length sets") {
    CHECK(semigroup_length_set(6) == std::set<std::int64_t>{2, 3});
    CHECK(semigroup_length_set(2) == std::set<std::int64_t>{1});
    CHECK(semigroup_length_set(3) == std::set<std::int64_t>{1});
    CHECK(semigroup_length_set(12) == std::set<std::int64_t>{4, 5, 6});
    CHECK_THROWS_AS(semigroup_length_set(1), usage_error);
    CHECK_THROWS_AS(semigroup_length_set(0), usage_error);
}

TEST_CASE("field descriptor parsing") {
    CHECK(parse_quad_ext_descriptor("Q", "Q(sqrt 2)") == 2);
    CHECK(parse_quad_ext_descriptor("Q", "Q(sqrt(-1))") == -1);
    CHECK(parse_quad_ext_descriptor("Q", "Q(sqrt -7)") == -7);
    CHECK_THROWS_AS(parse_quad_ext_descriptor("R", "Q(sqrt 2)"), config_error);
    CHECK_THROWS_AS(parse_quad_ext_descriptor("Q", "R(x)"), config_error);
    CHECK_THROWS_AS(parse_quad_ext_descriptor("Q", "Q(sqrt two)"), config_error);
}

TEST_CASE("quadratic extension arithmetic") {
    QuadExtField K(2);
    KElem a{Rational(1), Rational(1)};             // 1 + sqrt2
    KElem b{Rational(1), Rational(0) - Rational(1)}; // 1 - sqrt2
    KElem prod = K.mul(a, b);
    CHECK(prod.x == Rational(-1)); // 1 - 2
    CHECK(prod.y == Rational(0));
    KElem quot = K.div(a, b);
    // (1+s)/(1-s) = (1+s)^2 / (1-2) = -(3 + 2s)
    CHECK(quot.x == Rational(-3));
    CHECK(quot.y == Rational(-2));
    CHECK(K.in_base_field(prod));
    CHECK_FALSE(K.in_base_field(quot));
    CHECK_THROWS_AS(QuadExtField(4), config_error);
    CHECK_THROWS_AS(QuadExtField(1), config_error);
}

TEST_CASE("monomial fragment pair property") {
    MonomialReport rep = monomial_idpd_check("Q", "Q(sqrt 2)", 4);
    CHECK(rep.all_ok);
    CHECK(rep.radicand == 2);
    bool saw_vacuous = false, saw_witnessed = false;
    for (const auto& c : rep.cases) {
        if (c.vacuous) saw_vacuous = true;
        if (!c.vacuous && c.ok) saw_witnessed = true;
    }
    CHECK(saw_vacuous);
    CHECK(saw_witnessed);

    // degree-0 inputs are outside the fragment
    CHECK_THROWS_AS(monomial_idpd_check("Q", "Q(sqrt 2)", 0), usage_error);

    MonomialReport neg = monomial_idpd_check("Q", "Q(sqrt -1)", 3);
    CHECK(neg.all_ok);
}
