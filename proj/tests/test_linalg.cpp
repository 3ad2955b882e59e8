#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "symres/errors.hpp"
#include "symres/matrix.hpp"
#include "symres/parser.hpp"
#include "symres/symprod.hpp"
#include "symres/tables.hpp"

#include "test_util.hpp"

using namespace symres;
using testutil::random_fp_poly;
using testutil::random_poly;

namespace {
using P = Poly<Rational>;

Matrix<P> from_strings(const VarTable::Ptr& t,
                       const std::vector<std::vector<std::string>>& rows) {
    Matrix<P> m(rows.size(), rows.at(0).size(), P(t));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = parse_poly(rows[i][j], t);
    return m;
}

Matrix<Fp> random_fp_matrix(std::size_t n, std::uint32_t q, std::mt19937_64& rng) {
    Matrix<Fp> m(n, n, Fp(0, q));
    std::uniform_int_distribution<long> val(0, q - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Fp(val(rng), q);
    return m;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
    return c;
}

} // namespace

TEST_CASE("determinant fixtures") {
    auto t = vw_table(2, 1);
    CHECK(bareiss_det(Matrix<P>::identity(3, P::constant(t, Rational(1)))) ==
          P::constant(t, Rational(1)));

    auto m2 = from_strings(t, {{"v0", "v1"}, {"w0", "w1"}});
    CHECK(bareiss_det(m2) == parse_poly("v0*w1 - v1*w0", t));
    CHECK(cofactor_det(m2) == parse_poly("v0*w1 - v1*w0", t));

    auto m3 = from_strings(t, {{"v0", "v1", "v2"}, {"2v0", "v1", "0"}, {"0", "2v0", "v1"}});
    P expect = parse_poly("4*v0^2*v2 - v0*v1^2", t);
    CHECK(bareiss_det(m3) == expect);
    CHECK(cofactor_det(m3) == expect);
    CHECK(expect == P::variable(t, "v0") * parse_poly("4*v0*v2 - v1^2", t));

    // repeated row
    auto sing = from_strings(t, {{"v0", "v1"}, {"v0", "v1"}});
    CHECK(bareiss_det(sing).is_zero());
    CHECK(cofactor_det(sing).is_zero());

    CHECK_THROWS_AS(bareiss_det(Matrix<P>(2, 3, P(t))), dimension_mismatch);
    CHECK_THROWS_AS(cofactor_det(Matrix<P>(9, 9, P(t))), guard_exceeded);
}

TEST_CASE("bareiss equals cofactor on random polynomial matrices") {
    auto t = VarTable::make({"a", "b", "c"});
    std::mt19937_64 rng(20240201);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 1 + rng() % 6;
        Matrix<P> m(n, n, P(t));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = random_poly(t, 2, 2, rng, false);
        CHECK(bareiss_det(m) == cofactor_det(m));
    }
}

TEST_CASE("bareiss equals cofactor over a prime field") {
    std::mt19937_64 rng(20240202);
    for (int iter = 0; iter < 50; ++iter) {
        auto m = random_fp_matrix(4, 7, rng);
        CHECK(bareiss_det(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is alternating") {
    auto t = VarTable::make({"a", "b"});
    std::mt19937_64 rng(20240203);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 2 + rng() % 4;
        Matrix<P> m(n, n, P(t));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = random_poly(t, 2, 2, rng, false);
        std::size_t r1 = rng() % n, r2 = rng() % n;
        if (r1 == r2) continue;
        P d = bareiss_det(m);
        m.swap_rows(r1, r2);
        CHECK(bareiss_det(m) == -d);
    }
}

TEST_CASE("determinant is multiplicative over F_p") {
    std::mt19937_64 rng(20240204);
    for (int iter = 0; iter < 60; ++iter) {
        auto a = random_fp_matrix(4, 11, rng);
        auto b = random_fp_matrix(4, 11, rng);
        CHECK(bareiss_det(matmul(a, b)) == bareiss_det(a) * bareiss_det(b));
    }
}

TEST_CASE("jacobian") {
    auto t = VarTable::make({"x", "y"});
    std::vector<P> ps{parse_poly("x^2", t), parse_poly("y", t)};
    std::vector<std::string> vars{"x", "y"};
    auto j = jacobian(std::span<const P>(ps), std::span<const std::string>(vars));
    CHECK(j.at(0, 0) == parse_poly("2*x", t));
    CHECK(j.at(0, 1).is_zero());
    CHECK(j.at(1, 0).is_zero());
    CHECK(j.at(1, 1) == P::constant(t, Rational(1)));

    std::vector<P> cs{P::constant(t, Rational(5))};
    std::vector<std::string> xonly{"x"};
    auto jc = jacobian(std::span<const P>(cs), std::span<const std::string>(xonly));
    CHECK(jc.at(0, 0).is_zero());

    std::vector<std::string> bad{"zz"};
    CHECK_THROWS_AS(jacobian(std::span<const P>(ps), std::span<const std::string>(bad)),
                    unknown_variable);
}

TEST_CASE("jacobian of the symmetric generators has full rank at a point") {
    auto gens = ehsp(2);
    std::vector<std::string> vars{"x01", "x11", "x02", "x12"};
    auto j = jacobian(std::span<const Poly<Rational>>(gens),
                      std::span<const std::string>(vars));
    CHECK(j.rows() == 3);
    CHECK(j.cols() == 4);
    // every entry of the jacobian of bilinear generators is linear
    for (std::size_t i = 0; i < j.rows(); ++i)
        for (std::size_t jj = 0; jj < j.cols(); ++jj)
            if (!j.at(i, jj).is_zero())
                CHECK(j.at(i, jj).total_degree() == Degree(1));

    std::vector<Rational> at{Rational(1), Rational(2), Rational(1), Rational(3)};
    Matrix<Rational> num(3, 4, Rational());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t jj = 0; jj < 4; ++jj)
            num.at(i, jj) = j.at(i, jj).eval_at(at);
    CHECK(rank_over_field(num) == 3);
}

TEST_CASE("rank") {
    CHECK(rank_over_field(Matrix<Rational>::identity(5, Rational(1))) == 5);
    CHECK(rank_over_field(Matrix<Rational>(3, 4, Rational())) == 0);
    Matrix<Fp> m(2, 2, Fp(0, 5));
    m.at(0, 0) = Fp(1, 5);
    m.at(1, 0) = Fp(2, 5);
    CHECK(rank_over_field(m) == 1);
}

TEST_CASE("linear solve") {
    auto id = Matrix<Rational>::identity(3, Rational(1));
    std::vector<Rational> b{Rational(1), Rational(2), Rational(3)};
    auto x = solve_linear(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    Matrix<Rational> inc(2, 1, Rational());
    inc.at(0, 0) = Rational(1);
    inc.at(1, 0) = Rational(1);
    CHECK_FALSE(solve_linear(inc, {Rational(0), Rational(1)}));

    Matrix<Rational> under(1, 2, Rational());
    under.at(0, 0) = Rational(1);
    under.at(0, 1) = Rational(1);
    auto sol = solve_linear(under, {Rational(2)});
    REQUIRE(sol);
    CHECK((*sol)[0] == Rational(2));
    CHECK((*sol)[1] == Rational(0)); // free variables pinned to zero

    CHECK_THROWS_AS(solve_linear(under, {Rational(1), Rational(1)}), dimension_mismatch);

    // solutions are actual solutions on random systems
    std::mt19937_64 rng(20240205);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        Matrix<Rational> a(rows, cols, Rational());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a.at(i, j) = Rational(val(rng));
        std::vector<Rational> rhs;
        for (std::size_t i = 0; i < rows; ++i) rhs.push_back(Rational(val(rng)));
        auto s = solve_linear(a, rhs);
        if (!s) continue;
        for (std::size_t i = 0; i < rows; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < cols; ++j) acc += a.at(i, j) * (*s)[j];
            CHECK(acc == rhs[i]);
        }
    }
}
