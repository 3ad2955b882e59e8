#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "symres/errors.hpp"
#include "symres/fp.hpp"
#include "symres/poly.hpp"
#include "symres/parser.hpp"
#include "symres/rational.hpp"
#include "symres/tables.hpp"
#include "symres/vartable.hpp"

#include "test_util.hpp"

using namespace symres;
using testutil::random_poly;
using testutil::random_rational;

namespace {
using P = Poly<Rational>;

VarTable::Ptr xy2() {
    return VarTable::make({"x", "y"}, {{"all", {"x", "y"}}});
}
} // namespace

TEST_CASE("rationals stay canonical") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    Rational b(-3, -6);
    CHECK(b.numerator() == 1);
    CHECK(b.denominator() == 2);
    CHECK((a + b) == Rational(2));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), division_by_zero);
    CHECK(Rational::parse("5/2"));
    CHECK(*Rational::parse("-7") == Rational(-7));
    CHECK_FALSE(Rational::parse("1/0"));
    CHECK_FALSE(Rational::parse("a"));
    CHECK_FALSE(Rational::parse("1.5"));
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == 2); // 3 * 5^{-1} = 3*3 = 9 = 2
    CHECK(Fp(-1, 7).value() == 6);
    CHECK(a.pow(6).value() == 1); // Fermat
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), ring_mismatch);
    CHECK_THROWS_AS(Fp(0, 7).inverse(), division_by_zero);
    CHECK_THROWS_AS(Fp(1, 4), ring_mismatch);
    CHECK(is_odd_prime(2147483647)); // largest supported prime
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(9));
}

TEST_CASE("vartable blocks") {
    auto t = VarTable::make({"a", "b", "c"}, {{"left", {"a", "b"}}});
    CHECK(t->size() == 3);
    CHECK(t->index("b") == 1);
    CHECK_FALSE(t->index("z"));
    CHECK_THROWS_AS(t->require("z"), unknown_variable);
    CHECK_THROWS_AS(t->block("nope"), unknown_block);
    CHECK(t->block("left").size() == 2);
    CHECK_THROWS_AS(VarTable::make({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(VarTable::make({"a", "b"}, {{"b1", {"a"}}, {"b2", {"a"}}}),
                    std::invalid_argument);
}

TEST_CASE("polynomial arithmetic basics") {
    auto t = xy2();
    P x = P::variable(t, "x"), y = P::variable(t, "y");

    CHECK((x + y) + (x - y) == x.scale(Rational(2)));
    CHECK((x - y) * (x + y) == x * x - y * y);

    // product of two generic linear forms, expanded
    auto big = VarTable::make({"x01", "x11", "x02", "x12", "X", "Y"});
    P f = (P::variable(big, "x01") * P::variable(big, "X") -
           P::variable(big, "x11") * P::variable(big, "Y")) *
          (P::variable(big, "x02") * P::variable(big, "X") -
           P::variable(big, "x12") * P::variable(big, "Y"));
    P expect = parse_poly(
        "x01*x02*X^2 - (x01*x12 + x11*x02)*X*Y + x11*x12*Y^2", big);
    CHECK(f == expect);
    CHECK(f.term_count() == 4);
}

TEST_CASE("mismatched operands are rejected") {
    auto t1 = xy2();
    auto t2 = VarTable::make({"u", "v"});
    P a = P::variable(t1, "x");
    P b = P::variable(t2, "u");
    CHECK_THROWS_AS(a + b, table_mismatch);

    Poly<Fp> c = Poly<Fp>::variable(x_table(1), "x01", Fp(0, 5));
    Poly<Fp> d = Poly<Fp>::variable(x_table(1), "x01", Fp(0, 7));
    CHECK_THROWS_AS(c + d, ring_mismatch);
}

TEST_CASE("evaluation") {
    auto t = xy2();
    P p = parse_poly("x^2 + y", t);
    CHECK(p.eval({{"x", Rational(2)}, {"y", Rational(3)}}) == Rational(7));

    P c = parse_poly("x^2 - 4", t);
    CHECK(c.eval({{"x", Rational(0)}, {"y", Rational(0)}}) == Rational(-4));

    auto pt = p_table(2);
    P d2 = parse_poly("4*p0*p2 - p1^2", pt);
    CHECK(d2.eval({{"p0", Rational(1)}, {"p1", Rational(-3)}, {"p2", Rational(2)}}) ==
          Rational(-1));

    CHECK_THROWS_AS(p.eval({{"x", Rational(1)}}), unknown_variable);
    CHECK_THROWS_AS(p.eval({{"x", Rational(1)}, {"y", Rational(1)}, {"zz", Rational(1)}}),
                    unknown_variable);
}

TEST_CASE("substitution") {
    auto t = xy2();
    P p = parse_poly("x^2", t);
    auto ab = VarTable::make({"a", "b"});
    std::map<std::string, P> sub{{"x", parse_poly("a + b", ab)},
                                 {"y", parse_poly("a", ab)}};
    CHECK(p.substitute(sub) == parse_poly("a^2 + 2*a*b + b^2", ab));

    // identity substitution leaves the polynomial untouched
    CHECK(p.substitute({}) == p);

    // specialization used for independence: F2 with Y = x01 = x02 = 1
    auto big = VarTable::make({"x01", "x11", "x02", "x12", "X", "Y"});
    P f2 = parse_poly("(x01*X - x11*Y)*(x02*X - x12*Y)", big);
    auto small = VarTable::make({"x11", "x12", "X"});
    std::map<std::string, P> specialization{
        {"Y", P::constant(small, Rational(1))},
        {"x01", P::constant(small, Rational(1))},
        {"x02", P::constant(small, Rational(1))},
        {"x11", P::variable(small, "x11")},
        {"x12", P::variable(small, "x12")},
        {"X", P::variable(small, "X")}};
    CHECK(f2.substitute(specialization) == parse_poly("(X - x11)*(X - x12)", small));
}

TEST_CASE("exact division") {
    auto t = xy2();
    CHECK(exact_divide(parse_poly("x^2 - y^2", t), parse_poly("x - y", t)) ==
          parse_poly("x + y", t));

    auto vt = vw_table(2, 1);
    P v0 = P::variable(vt, "v0");
    P delta = parse_poly("4*v0*v2 - v1^2", vt);
    CHECK(exact_divide(v0 * delta, v0) == delta);

    CHECK_THROWS_AS(exact_divide(parse_poly("x^2 + 1", t), parse_poly("x + 1", t)),
                    inexact_division);
    CHECK_THROWS_AS(exact_divide(parse_poly("x", t), P(t)), division_by_zero);
}

TEST_CASE("derivative") {
    auto vt = VarTable::make({"v0", "v1", "v2", "v3", "Z"});
    P f = parse_poly("v0*Z^2 + v1*Z + v2", vt);
    CHECK(f.derivative("Z") == parse_poly("2*v0*Z + v1", vt));
    CHECK(P::constant(vt, Rational(42)).derivative("Z").is_zero());
    P g = parse_poly("v0*Z^3 + v1*Z^2 + v2*Z + v3", vt);
    CHECK(g.derivative("Z") == parse_poly("3*v0*Z^2 + 2*v1*Z + v2", vt));
    CHECK_THROWS_AS(f.derivative("nope"), unknown_variable);
}

TEST_CASE("multidegree by block") {
    auto vt = vw_table(1, 1);
    P r = parse_poly("v0*w1 - v1*w0", vt);
    REQUIRE(r.degree_in_block("v"));
    CHECK(r.degree_in_block("v")->value() == 1);
    CHECK(r.degree_in_block("w")->value() == 1);

    auto pt = p_table(2);
    P d2 = parse_poly("4*p0*p2 - p1^2", pt);
    CHECK(d2.degree_in_block("p")->value() == 2);

    auto t = xy2();
    CHECK_FALSE(parse_poly("x + y^2", t).degree_in_block("all"));
    CHECK(P(t).degree_in_block("all")->is_minus_infinity());
    CHECK_THROWS_AS(d2.degree_in_block("nope"), unknown_block);
}

TEST_CASE("degree of zero is minus infinity") {
    auto t = xy2();
    CHECK(P(t).total_degree().is_minus_infinity());
    CHECK(P(t).total_degree() != Degree(-1));
    CHECK(Degree::minus_infinity() < Degree(0));
}

TEST_CASE("ring axioms on random samples") {
    auto t = VarTable::make({"a", "b", "c", "d"});
    std::mt19937_64 rng(20240001);
    for (int i = 0; i < 1000; ++i) {
        P x = random_poly(t, 4, 4, rng);
        P y = random_poly(t, 4, 4, rng);
        P z = random_poly(t, 4, 4, rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto t = VarTable::make({"a", "b", "c"});
    std::mt19937_64 rng(20240002);
    for (int i = 0; i < 300; ++i) {
        P x = random_poly(t, 3, 4, rng);
        P y = random_poly(t, 3, 4, rng);
        std::map<std::string, Rational> at{{"a", random_rational(rng)},
                                           {"b", random_rational(rng)},
                                           {"c", random_rational(rng)}};
        CHECK((x * y).eval(at) == x.eval(at) * y.eval(at));
        CHECK((x + y).eval(at) == x.eval(at) + y.eval(at));
    }
}

TEST_CASE("exact_divide inverts multiplication") {
    auto t = VarTable::make({"a", "b", "c"});
    std::mt19937_64 rng(20240003);
    int done = 0;
    while (done < 200) {
        P x = random_poly(t, 3, 4, rng);
        P y = random_poly(t, 3, 4, rng);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(exact_divide(x * y, y) == x);
        ++done;
    }
}

TEST_CASE("canonical form is insertion-order independent") {
    auto t = VarTable::make({"a", "b", "c"});
    std::mt19937_64 rng(20240004);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::pair<Monomial, Rational>> terms;
        P p(t);
        for (int k = 0; k < 6; ++k) {
            auto m = testutil::random_monomial(t, 4, rng);
            auto c = random_rational(rng);
            terms.push_back({m, c});
            p.add_term(m, c);
        }
        std::shuffle(terms.begin(), terms.end(), rng);
        P q(t);
        for (auto& [m, c] : terms) q.add_term(m, c);
        CHECK(p == q);
        CHECK(format_poly(p) == format_poly(q));
        for (auto& [m, c] : p.terms()) CHECK_FALSE(c.is_zero());
    }
}

TEST_CASE("derivative is linear and Leibniz") {
    auto t = VarTable::make({"a", "b"});
    std::mt19937_64 rng(20240005);
    for (int i = 0; i < 300; ++i) {
        P x = random_poly(t, 4, 4, rng);
        P y = random_poly(t, 4, 4, rng);
        CHECK((x + y).derivative("a") == x.derivative("a") + y.derivative("a"));
        CHECK((x * y).derivative("a") ==
              x.derivative("a") * y + x * y.derivative("a"));
    }
}
