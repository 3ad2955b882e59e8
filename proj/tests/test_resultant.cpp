#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>
#include <vector>

#include "symres/errors.hpp"
#include "symres/parser.hpp"
#include "symres/resultant.hpp"
#include "symres/scan.hpp"
#include "symres/tables.hpp"
#include "symres/verify.hpp"

#include "test_util.hpp"

using namespace symres;

namespace {
using P = Poly<Rational>;

BinaryForm<Rational> form(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return BinaryForm<Rational>(std::move(c));
}

BinaryForm<Fp> fp_form(std::vector<long> coeffs, std::uint32_t q) {
    std::vector<Fp> c;
    for (long v : coeffs) c.emplace_back(v, q);
    return BinaryForm<Fp>(std::move(c));
}

BinaryForm<Rational> random_form(unsigned degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> val(-6, 6);
    std::vector<Rational> c;
    for (unsigned k = 0; k <= degree; ++k) c.emplace_back(val(rng));
    return BinaryForm<Rational>(std::move(c));
}

} // namespace

TEST_CASE("sylvester matrix layout") {
    auto s11 = sylvester_symbolic(1, 1);
    auto t11 = vw_table(1, 1);
    CHECK(s11.rows() == 2);
    CHECK(s11.at(0, 0) == P::variable(t11, "v0"));
    CHECK(s11.at(0, 1) == P::variable(t11, "v1"));
    CHECK(s11.at(1, 0) == P::variable(t11, "w0"));
    CHECK(s11.at(1, 1) == P::variable(t11, "w1"));

    auto s21 = sylvester_symbolic(2, 1);
    auto t21 = vw_table(2, 1);
    // [[v0,v1,v2],[w0,w1,0],[0,w0,w1]]
    CHECK(s21.at(0, 2) == P::variable(t21, "v2"));
    CHECK(s21.at(1, 0) == P::variable(t21, "w0"));
    CHECK(s21.at(1, 2).is_zero());
    CHECK(s21.at(2, 0).is_zero());
    CHECK(s21.at(2, 1) == P::variable(t21, "w0"));
    CHECK(s21.at(2, 2) == P::variable(t21, "w1"));

    auto s22 = sylvester_symbolic(2, 2);
    auto t22 = vw_table(2, 2);
    // rows (v0,v1,v2,0),(0,v0,v1,v2),(w0,w1,w2,0),(0,w0,w1,w2)
    CHECK(s22.at(0, 3).is_zero());
    CHECK(s22.at(1, 0).is_zero());
    CHECK(s22.at(1, 1) == P::variable(t22, "v0"));
    CHECK(s22.at(2, 0) == P::variable(t22, "w0"));
    CHECK(s22.at(3, 3) == P::variable(t22, "w2"));

    CHECK_THROWS_AS(sylvester_symbolic(0, 1), guard_exceeded);
    CHECK_THROWS_AS(sylvester_symbolic(7, 1), guard_exceeded);
}

TEST_CASE("resultant fixtures") {
    // common root
    CHECK(resultant(form({1, -1}), form({1, -1})).is_zero());
    // roots {1,2} vs {3,4}: product of differences = 12
    CHECK(resultant(form({1, -3, 2}), form({1, -7, 12})) == Rational(12));
    // symbolic smallest case
    CHECK(resultant_symbolic(1, 1) == parse_poly("v0*w1 - v1*w0", vw_table(1, 1)));
    CHECK(resultant_symbolic(2, 1) ==
          parse_poly("v0*w1^2 - v1*w0*w1 + v2*w0^2", vw_table(2, 1)));

    auto r22 = resultant_symbolic(2, 2);
    CHECK(r22.term_count() == 7);
    CHECK(r22.degree_in_block("v")->value() == 2);
    CHECK(r22.degree_in_block("w")->value() == 2);
    CHECK(r22 == cofactor_det(sylvester_symbolic(2, 2)));

    // degree-0 conventions
    CHECK(resultant(form({5}), form({1, 2, 3})) == Rational(25));
    CHECK(resultant(form({1, 2, 3}), form({5})) == Rational(25));
    CHECK_THROWS_AS(resultant(form({2}), form({3})), dimension_mismatch);
}

TEST_CASE("resultant bidegrees") {
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        auto r = resultant_symbolic(n, m);
        REQUIRE(r.degree_in_block("v"));
        CHECK(r.degree_in_block("v")->value() == static_cast<int>(m));
        CHECK(r.degree_in_block("w")->value() == static_cast<int>(n));
    }
}

TEST_CASE("product form") {
    using arr = std::array<Rational, 2>;
    std::vector<arr> xs{{Rational(1), Rational(1)}, {Rational(1), Rational(2)}};
    std::vector<arr> ys{{Rational(1), Rational(3)}, {Rational(1), Rational(4)}};
    CHECK(res_product_form(std::span<const arr>(xs), std::span<const arr>(ys)) ==
          Rational(12));

    // a shared projective point kills the product
    std::vector<arr> ys2{{Rational(2), Rational(2)}, {Rational(1), Rational(4)}};
    CHECK(res_product_form(std::span<const arr>(xs), std::span<const arr>(ys2)).is_zero());

    CHECK(res_product_form_symbolic(1, 1) ==
          parse_poly("x11*y01 - x01*y11", xy_table(1, 1)));
}

TEST_CASE("product form is multiplicative in the second tuple") {
    using arr = std::array<Rational, 2>;
    std::mt19937_64 rng(20240301);
    std::uniform_int_distribution<long> val(-5, 5);
    auto rnd_tuple = [&](unsigned k) {
        std::vector<arr> v;
        for (unsigned i = 0; i < k; ++i) v.push_back({Rational(val(rng)), Rational(val(rng))});
        return v;
    };
    for (int iter = 0; iter < 100; ++iter) {
        auto xs = rnd_tuple(1 + rng() % 3);
        auto ys = rnd_tuple(1 + rng() % 2);
        auto ys2 = rnd_tuple(1 + rng() % 2);
        auto joined = ys;
        joined.insert(joined.end(), ys2.begin(), ys2.end());
        CHECK(res_product_form(std::span<const arr>(xs), std::span<const arr>(joined)) ==
              res_product_form(std::span<const arr>(xs), std::span<const arr>(ys)) *
                  res_product_form(std::span<const arr>(xs), std::span<const arr>(ys2)));
    }
}

TEST_CASE("discriminant from roots") {
    CHECK(disc_from_roots(RootData<Rational>(Rational(1), {Rational(1), Rational(1)}))
              .is_zero());
    CHECK(disc_from_roots(RootData<Rational>(Rational(1), {Rational(0), Rational(1)})) ==
          Rational(1));
    CHECK(disc_from_roots(RootData<Rational>(Rational(2),
                                             {Rational(1), Rational(2), Rational(3)})) ==
          Rational(64));
    CHECK_THROWS_AS(disc_from_roots(RootData<Rational>(Rational(1), {Rational(1)})),
                    dimension_mismatch);
    CHECK_THROWS_AS(RootData<Rational>(Rational(0), {Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("root data reconstructs its form") {
    RootData<Rational> rd(Rational(2), {Rational(1), Rational(2)});
    // 2(Z-1)(Z-2) = 2Z^2 - 6Z + 4
    CHECK(reconstruct(rd) == form({2, -6, 4}));
}

TEST_CASE("discriminants") {
    CHECK(discriminant_symbolic(2) == parse_poly("4*p0*p2 - p1^2", p_table(2)));
    CHECK(discriminant_symbolic(3) ==
          parse_poly("27*p0^2*p3^2 + 4*p0*p2^3 + 4*p1^3*p3 - p1^2*p2^2 - 18*p0*p1*p2*p3",
                     p_table(3)));
    // double root
    CHECK(discriminant(form({1, -2, 1})).is_zero());
    CHECK(discriminant(form({1, -3, 2})) == Rational(-1)); // 4*1*2 - 9

    auto d4 = discriminant_symbolic(4);
    REQUIRE(d4.degree_in_block("p"));
    CHECK(d4.degree_in_block("p")->value() == 6); // homogeneous of degree 2n-2

    CHECK_THROWS_AS(discriminant(form({0, 1, 1})), leading_coeff_zero);
    CHECK_THROWS_AS(discriminant(form({1, 1})), dimension_mismatch);
    CHECK_THROWS_AS(discriminant_symbolic(6), guard_exceeded);
    CHECK_THROWS_AS(discriminant_symbolic(1), guard_exceeded);
}

TEST_CASE("gcd of binary forms") {
    // equal forms: monic multiple
    auto g1 = gcd_binary_forms(form({2, -6, 4}), form({2, -6, 4}));
    CHECK(g1 == form({1, -3, 2}));

    // shared root 2
    auto g2 = gcd_binary_forms(form({1, -3, 2}), form({1, -5, 6}));
    CHECK(g2 == form({1, -2}));

    // X*Y against X^2: shared factor X, found through the Z-route
    auto g3 = gcd_binary_forms(form({0, 1, 0}), form({1, 0, 0}));
    CHECK(g3 == form({1, 0}));

    // both divisible by Y: shared root at infinity via the Y-power rule
    auto g4 = gcd_binary_forms(form({0, 1, 5}), form({0, 2, 6}));
    CHECK(g4.degree() >= 1);
    CHECK(g4.coeff(0).is_zero());

    // coprime forms
    auto g5 = gcd_binary_forms(form({1, 0, -1}), form({1, 0, 1}));
    CHECK(g5.degree() == 0);

    // one zero form
    auto g6 = gcd_binary_forms(BinaryForm<Rational>({Rational(0), Rational(0)}),
                               form({3, 6}));
    CHECK(g6 == form({1, 2}));
    CHECK_THROWS_AS(gcd_binary_forms(BinaryForm<Rational>({Rational(0)}),
                                     BinaryForm<Rational>({Rational(0)})),
                    std::invalid_argument);
}

TEST_CASE("resultant vanishes exactly on common roots (oracle)") {
    // exhaustive for n, m <= 2 over three primes
    for (std::uint32_t q : {5u, 7u, 11u}) {
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned m = 1; m <= 2; ++m) {
                auto rep = scan_resultant_equiv(q, n, m);
                INFO("q=" << q << " n=" << n << " m=" << m);
                CHECK(rep.violations == 0);
                CHECK(rep.points_scanned ==
                      proj_point_count(q, n) * proj_point_count(q, m));
            }
    }
    // random samples at n = m = 3
    std::mt19937_64 rng(20240302);
    std::uniform_int_distribution<long> val(0, 6);
    for (int iter = 0; iter < 300; ++iter) {
        std::uint32_t q = 7;
        std::vector<long> fc, gc;
        for (int k = 0; k < 4; ++k) fc.push_back(val(rng));
        for (int k = 0; k < 4; ++k) gc.push_back(val(rng));
        auto any = [](const std::vector<long>& v) {
            for (long x : v)
                if (x) return true;
            return false;
        };
        if (!any(fc) || !any(gc)) continue;
        auto f = fp_form(fc, q), g = fp_form(gc, q);
        CHECK(resultant(f, g).is_zero() == (gcd_binary_forms(f, g).degree() >= 1));
    }
}

TEST_CASE("bihomogeneity under scaling") {
    std::mt19937_64 rng(20240303);
    std::uniform_int_distribution<unsigned> deg(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
        unsigned n = deg(rng), m = deg(rng);
        auto f = random_form(n, rng);
        auto g = random_form(m, rng);
        Rational lam = testutil::random_nonzero_rational(rng);
        Rational mu = testutil::random_nonzero_rational(rng);
        std::vector<Rational> fc, gc;
        for (auto& c : f.coeffs()) fc.push_back(c * lam);
        for (auto& c : g.coeffs()) gc.push_back(c * mu);
        CHECK(resultant(BinaryForm<Rational>(fc), BinaryForm<Rational>(gc)) ==
              lam.pow(m) * mu.pow(n) * resultant(f, g));
    }
}

TEST_CASE("swapping the forms flips the sign by degree parity") {
    std::mt19937_64 rng(20240304);
    std::uniform_int_distribution<unsigned> deg(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
        unsigned n = deg(rng), m = deg(rng);
        auto f = random_form(n, rng);
        auto g = random_form(m, rng);
        Rational expected = resultant(f, g);
        if ((n * m) % 2 == 1) expected = -expected;
        CHECK(resultant(g, f) == expected);
    }
}

TEST_CASE("product formula identity suite") {
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
        INFO("n=" << n << " m=" << m);
        auto r = verify_resth(n, m);
        CHECK(r.ok);
        if (!r.ok) INFO(r.detail);
    }
}

TEST_CASE("resultant-discriminant relation") {
    for (unsigned n = 2; n <= 5; ++n) {
        auto r = verify_resdisc(n);
        INFO("n=" << n << " detail=" << r.detail);
        CHECK(r.ok);
    }
}
