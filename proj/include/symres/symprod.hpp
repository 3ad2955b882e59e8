#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/errors.hpp"
#include "symres/matrix.hpp"
#include "symres/poly.hpp"
#include "symres/projective.hpp"
#include "symres/resultant.hpp"
#include "symres/tables.hpp"

namespace symres {

/// Evaluate a rational-coefficient polynomial at coordinates in another
/// exact ring (e.g. F_p), reducing each coefficient into that ring.
template <class R>
R eval_poly_in(const Poly<Rational>& p, std::span<const R> values) {
    if (values.size() != p.table()->size())
        throw dimension_mismatch("evaluation vector length != table size");
    if (values.empty()) throw dimension_mismatch("need at least one coordinate");
    R acc = values[0].zero_like();
    for (const auto& [m, c] : p.terms()) {
        R t = to_ring(c, acc);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (auto e = m.exponent(i); e > 0) t *= values[i].pow(e);
        acc += t;
    }
    return acc;
}

/// Elementary homogeneous symmetric polynomials for an arbitrary list of
/// coordinate pairs over an arbitrary table: p_k is (-1)^k times the k-th
/// coefficient of prod (a_i X - b_i Y).
inline std::vector<Poly<Rational>> ehsp_over(
    const VarTable::Ptr& table,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    using P = Poly<Rational>;
    std::vector<std::array<P, 2>> pts;
    pts.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        pts.push_back({P::variable(table, a), P::variable(table, b)});
    std::vector<P> c = expand_linear_product(std::span<const std::array<P, 2>>(pts));
    for (std::size_t k = 0; k < c.size(); ++k)
        if (k % 2 == 1) c[k] = -c[k];
    return c;
}

inline std::vector<std::pair<std::string, std::string>> x_pairs(unsigned n) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (unsigned i = 1; i <= n; ++i)
        pairs.push_back({"x0" + std::to_string(i), "x1" + std::to_string(i)});
    return pairs;
}

/// p_0 .. p_n in the variables x01, x11, ..., x0n, x1n. Each p_k is
/// multihomogeneous of degree 1 in every pair and fixed by permuting the
/// pairs.
inline std::vector<Poly<Rational>> ehsp(unsigned n) {
    if (n < 1) throw dimension_mismatch("ehsp needs n >= 1");
    return ehsp_over(x_table(n), x_pairs(n));
}

template <class R>
std::vector<std::array<R, 2>> tuple_coords(const PointTuple<R>& pts) {
    std::vector<std::array<R, 2>> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts.points()) raw.push_back({p[0], p[1]});
    return raw;
}

/// The quotient map to projective n-space: evaluate (p0 : ... : pn) at
/// the tuple and normalize. Independent of coordinate representatives and
/// of tuple order.
template <class R>
ProjPoint<R> viete(const PointTuple<R>& pts) {
    if (pts.size() < 1) throw dimension_mismatch("viete needs at least one point");
    auto raw = tuple_coords(pts);
    std::vector<R> c = expand_linear_product(std::span<const std::array<R, 2>>(raw));
    for (std::size_t k = 0; k < c.size(); ++k)
        if (k % 2 == 1) c[k] = -c[k];
    // the product of nonzero linear forms cannot vanish identically
    if (std::all_of(c.begin(), c.end(), [](const R& x) { return x.is_zero(); }))
        throw std::logic_error("viete image degenerated to the zero vector");
    return ProjPoint<R>(std::move(c));
}

/// The binary form vanishing on the tuple: prod (x0i X - x1i Y), i.e. the
/// signed coefficient vector c_k = (-1)^k p_k.
template <class R>
BinaryForm<R> form_of_tuple(const PointTuple<R>& pts) {
    if (pts.size() < 1) throw dimension_mismatch("form of an empty tuple");
    auto raw = tuple_coords(pts);
    return BinaryForm<R>(expand_linear_product(std::span<const std::array<R, 2>>(raw)));
}

template <class R>
BinaryForm<R> form_of_raw_tuple(std::span<const std::array<R, 2>> raw) {
    return BinaryForm<R>(expand_linear_product(raw));
}

/// Bijection of {1..n}, stored 0-based.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (auto i : img_) {
            if (i >= img_.size() || seen[i])
                throw std::invalid_argument("permutation images must be a bijection");
            seen[i] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
        auto p = identity(n);
        std::swap(p.img_.at(i), p.img_.at(j));
        return p;
    }

    /// All n! permutations in lexicographic order of image vectors.
    static std::vector<Permutation> all(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), 0);
        std::vector<Permutation> out;
        do out.push_back(Permutation(v));
        while (std::next_permutation(v.begin(), v.end()));
        return out;
    }

    std::size_t size() const { return img_.size(); }
    std::size_t operator()(std::size_t i) const { return img_.at(i); }

private:
    std::vector<std::size_t> img_;
};

/// Permute tuple slots: slot sigma(i) of the result holds entry i.
template <class R>
PointTuple<R> sn_act(const Permutation& sigma, const PointTuple<R>& pts) {
    if (sigma.size() != pts.size())
        throw dimension_mismatch("permutation size != tuple length");
    std::vector<ProjPoint<R>> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(pts[0]);
    for (std::size_t i = 0; i < pts.size(); ++i) out[sigma(i)] = pts[i];
    return PointTuple<R>(std::move(out));
}

/// Permute the variable pairs (x0i, x1i) -> (x0 sigma(i), x1 sigma(i)) of
/// a polynomial over the x-alphabet.
inline Poly<Rational> sn_act(const Permutation& sigma, const Poly<Rational>& p) {
    const std::size_t n = sigma.size();
    auto expected = x_table(static_cast<unsigned>(n));
    if (!tables_compatible(p.table(), expected))
        throw table_mismatch("polynomial is not over the x-alphabet of this size");
    Poly<Rational> out(p.table(), p.ring());
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e(m.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            e[2 * sigma(i)] = m.exponent(2 * i);
            e[2 * sigma(i) + 1] = m.exponent(2 * i + 1);
        }
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

/// Fixed by all adjacent transpositions, which generate the full
/// symmetric group.
inline bool is_symmetric(const Poly<Rational>& p, unsigned n) {
    auto expected = x_table(n);
    if (!tables_compatible(p.table(), expected))
        throw table_mismatch("polynomial is not over the x-alphabet of this size");
    for (unsigned i = 0; i + 1 < n; ++i)
        if (sn_act(Permutation::transposition(n, i, i + 1), p) != p) return false;
    return true;
}

namespace detail {

/// Multi-indices (a_0..a_n) with sum d, lexicographically.
inline void multi_indices(unsigned slots, unsigned total,
                          std::vector<unsigned>& cur,
                          std::vector<std::vector<unsigned>>& out) {
    if (cur.size() + 1 == slots) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned a = 0; a <= total; ++a) {
        cur.push_back(a);
        multi_indices(slots, total - a, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<unsigned>> multi_indices(unsigned slots, unsigned total) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    multi_indices(slots, total, cur, out);
    return out;
}

} // namespace detail

/// Rewrite a symmetric polynomial, multihomogeneous of one degree d in
/// every coordinate pair, as a degree-d polynomial in the elementary
/// homogeneous symmetric polynomials. The finite multigraded piece makes
/// this a plain linear solve; the representation is unique, which is
/// asserted, and the result is verified by re-expansion.
inline Poly<Rational> express_in_ehsp(const Poly<Rational>& p, unsigned n) {
    auto xt = x_table(n);
    if (!tables_compatible(p.table(), xt))
        throw table_mismatch("polynomial is not over the x-alphabet of this size");

    // the common pair degree d
    std::optional<Degree> d0;
    for (unsigned i = 1; i <= n; ++i) {
        auto di = p.degree_in_block("xpair" + std::to_string(i));
        if (!di) throw std::invalid_argument("input is not multihomogeneous per pair");
        if (i == 1) d0 = di;
        else if (*d0 != *di)
            throw std::invalid_argument("pair degrees differ; not in one multigraded piece");
    }
    if (d0->is_minus_infinity())
        return Poly<Rational>(cap_p_table(n)); // zero rewrites to zero
    const unsigned d = static_cast<unsigned>(d0->value());

    auto gens = ehsp(n);
    auto monos = detail::multi_indices(n + 1, d);

    // expansions of every degree-d monomial in the generators
    std::vector<Poly<Rational>> expanded;
    expanded.reserve(monos.size());
    for (const auto& alpha : monos) {
        Poly<Rational> q = Poly<Rational>::constant(xt, Rational(1));
        for (unsigned k = 0; k <= n; ++k)
            if (alpha[k] > 0) q *= gens[k].pow(alpha[k]);
        expanded.push_back(std::move(q));
    }

    // row index: every x-monomial appearing anywhere
    std::map<Monomial, std::size_t, Monomial::GrlexDesc> row_of;
    auto touch = [&](const Poly<Rational>& q) {
        for (const auto& [m, c] : q.terms()) row_of.emplace(m, 0);
    };
    for (const auto& q : expanded) touch(q);
    touch(p);
    std::size_t r = 0;
    for (auto& [m, idx] : row_of) idx = r++;

    Matrix<Rational> a(row_of.size(), monos.size(), Rational());
    std::vector<Rational> b(row_of.size(), Rational());
    for (std::size_t col = 0; col < expanded.size(); ++col)
        for (const auto& [m, c] : expanded[col].terms())
            a.at(row_of.at(m), col) = c;
    for (const auto& [m, c] : p.terms()) b[row_of.at(m)] = c;

    auto sol = solve_linear_info(std::move(a), std::move(b));
    if (!sol.consistent)
        throw not_expressible("not expressible in the symmetric generators");
    if (sol.rank != monos.size())
        throw std::logic_error("generator monomials are linearly dependent");

    auto pt = cap_p_table(n);
    Poly<Rational> out(pt);
    for (std::size_t col = 0; col < monos.size(); ++col) {
        if (sol.solution[col].is_zero()) continue;
        Monomial m(pt->size());
        for (unsigned k = 0; k <= n; ++k)
            m = m.with_exponent(k, monos[col][k]);
        out.add_term(m, sol.solution[col]);
    }

    // contract: re-expansion reproduces the input exactly
    std::map<std::string, Poly<Rational>> back;
    for (unsigned k = 0; k <= n; ++k) back.insert_or_assign("P" + std::to_string(k), gens[k]);
    if (out.substitute(back) != p)
        throw std::logic_error("re-expansion check failed");
    return out;
}

/// Jacobian-rank certificate of algebraic independence: full rank n+1 at
/// any single rational point suffices in characteristic zero.
inline bool check_independence(unsigned n, unsigned trials, std::uint64_t seed = 1) {
    if (n < 1 || trials < 1)
        throw dimension_mismatch("check_independence needs n >= 1 and trials >= 1");
    auto gens = ehsp(n);
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= n; ++i) {
        vars.push_back("x0" + std::to_string(i));
        vars.push_back("x1" + std::to_string(i));
    }
    auto jac = jacobian(std::span<const Poly<Rational>>(gens),
                        std::span<const std::string>(vars));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<Rational> point;
        point.reserve(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) point.emplace_back(dist(rng));
        Matrix<Rational> num(jac.rows(), jac.cols(), Rational());
        for (std::size_t i = 0; i < jac.rows(); ++i)
            for (std::size_t j = 0; j < jac.cols(); ++j)
                num.at(i, j) = jac.at(i, j).eval_at(point);
        if (rank_over_field(std::move(num)) == n + 1) return true;
    }
    return false;
}

/// Defining polynomial kept as a canonical factor list (with
/// multiplicities) plus on-demand expansion.
struct DefiningProduct {
    VarTable::Ptr table;
    std::vector<std::pair<Poly<Rational>, unsigned>> factors;

    Poly<Rational> expanded() const {
        Poly<Rational> acc = Poly<Rational>::constant(table, Rational(1));
        for (const auto& [f, mult] : factors) acc *= f.pow(mult);
        return acc;
    }
};

/// prod_{i,j} (x0i y1j - x1i y0j): the common-point locus in a product of
/// two tuple spaces.
inline DefiningProduct xnm_defining_poly(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw dimension_mismatch("defining product needs n, m >= 1");
    auto table = xy_table(n, m);
    using P = Poly<Rational>;
    DefiningProduct out{table, {}};
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= m; ++j) {
            P f = P::variable(table, "x0" + std::to_string(i)) *
                      P::variable(table, "y1" + std::to_string(j)) -
                  P::variable(table, "x1" + std::to_string(i)) *
                      P::variable(table, "y0" + std::to_string(j));
            out.factors.push_back({std::move(f), 1});
        }
    return out;
}

/// prod_{i<j} (x1i x0j - x0i x1j)^2: the repeated-point locus in a tuple
/// space. The squares are part of the defining polynomial and are kept.
inline DefiningProduct xn_defining_poly(unsigned n) {
    if (n < 2) throw dimension_mismatch("repeated-point locus needs n >= 2");
    auto table = x_table(n);
    using P = Poly<Rational>;
    DefiningProduct out{table, {}};
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            P f = P::variable(table, "x1" + std::to_string(i)) *
                      P::variable(table, "x0" + std::to_string(j)) -
                  P::variable(table, "x0" + std::to_string(i)) *
                      P::variable(table, "x1" + std::to_string(j));
            out.factors.push_back({std::move(f), 2});
        }
    return out;
}

/// Membership tests evaluate the loci's defining polynomials at the point
/// and test for exact zero; homogeneity makes the answer independent of
/// the chosen representatives.

template <class R>
bool member_xnm(const PointTuple<R>& xs, const PointTuple<R>& ys) {
    if (xs.size() < 1 || ys.size() < 1)
        throw dimension_mismatch("membership needs nonempty tuples");
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            R f = xs[i][0] * ys[j][1] - xs[i][1] * ys[j][0];
            if (f.is_zero()) return true;
        }
    return false;
}

template <class R>
bool member_xn(const PointTuple<R>& xs) {
    if (xs.size() < 2) throw dimension_mismatch("repeated-point test needs n >= 2");
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            R f = xs[i][1] * xs[j][0] - xs[i][0] * xs[j][1];
            if ((f * f).is_zero()) return true;
        }
    return false;
}

template <class R>
bool member_rnm(const ProjPoint<R>& pv, const ProjPoint<R>& pw) {
    const unsigned n = static_cast<unsigned>(pv.dim());
    const unsigned m = static_cast<unsigned>(pw.dim());
    auto rsym = resultant_symbolic(n, m);
    std::vector<R> values = pv.coords();
    values.insert(values.end(), pw.coords().begin(), pw.coords().end());
    return eval_poly_in(rsym, std::span<const R>(values)).is_zero();
}

template <class R>
bool member_dn(const ProjPoint<R>& pp) {
    const unsigned n = static_cast<unsigned>(pp.dim());
    auto dsym = discriminant_symbolic(n);
    return eval_poly_in(dsym, std::span<const R>(pp.coords())).is_zero();
}

} // namespace symres
