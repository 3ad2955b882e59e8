#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "symres/parser.hpp"
#include "symres/poly.hpp"
#include "symres/resultant.hpp"
#include "symres/symprod.hpp"
#include "symres/tables.hpp"

namespace symres {

/// Outcome of one symbolic verification suite. `detail` names the first
/// failed equality; empty on success.
struct VerifyResult {
    bool ok = true;
    std::string detail;

    static VerifyResult pass() { return {}; }
    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

/// Elementary symmetric polynomials e_0..e_k of the named variables.
inline std::vector<Poly<Rational>> elementary_symmetric(
    const VarTable::Ptr& table, const std::vector<std::string>& vars) {
    using P = Poly<Rational>;
    std::vector<P> e{P::constant(table, Rational(1))};
    for (const auto& v : vars) {
        P x = P::variable(table, v);
        std::vector<P> next;
        next.reserve(e.size() + 1);
        for (std::size_t k = 0; k <= e.size(); ++k) {
            P acc(table);
            if (k < e.size()) acc += e[k];
            if (k > 0) acc += e[k - 1] * x;
            next.push_back(std::move(acc));
        }
        e = std::move(next);
    }
    return e;
}

/// Substitution sending the generic coefficient c_k of a form to
/// (-1)^k * lead * e_k(roots).
inline std::map<std::string, Poly<Rational>> coeff_to_roots(
    const VarTable::Ptr& target, const std::string& coeff_prefix, unsigned degree,
    const std::string& lead_name, const std::vector<std::string>& root_names) {
    using P = Poly<Rational>;
    auto es = elementary_symmetric(target, root_names);
    P lead = P::variable(target, lead_name);
    std::map<std::string, P> subst;
    for (unsigned k = 0; k <= degree; ++k) {
        P value = lead * es[k];
        if (k % 2 == 1) value = -value;
        subst.insert_or_assign(coeff_prefix + std::to_string(k), std::move(value));
    }
    return subst;
}

inline std::vector<std::string> numbered(const std::string& prefix, unsigned from,
                                         unsigned to) {
    std::vector<std::string> v;
    for (unsigned i = from; i <= to; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

} // namespace detail

/// Product formula for the resultant, both symbolic routes:
///  (a) substituting v_k = (-1)^k v0 e_k(t), w_l = (-1)^l w0 e_l(u) turns
///      the Sylvester determinant into v0^m w0^n prod (t_i - u_j);
///  (b) substituting v_k = (-1)^k p_k(x), w_l = (-1)^l p_l(y) turns it
///      into prod (x1i y0j - x0i y1j).
inline VerifyResult verify_resth(unsigned n, unsigned m) {
    using P = Poly<Rational>;
    P rsym = resultant_symbolic(n, m);

    // route (a): leading coefficients and roots
    auto rt = pair_root_table(n, m);
    auto ts = detail::numbered("t", 1, n);
    auto us = detail::numbered("u", 1, m);
    auto subst = detail::coeff_to_roots(rt, "v", n, "v0", ts);
    auto wsub = detail::coeff_to_roots(rt, "w", m, "w0", us);
    subst.insert(wsub.begin(), wsub.end());
    P lhs = rsym.substitute(subst);

    P rhs = P::variable(rt, "v0").pow(m) * P::variable(rt, "w0").pow(n);
    for (const auto& t : ts)
        for (const auto& u : us)
            rhs *= P::variable(rt, t) - P::variable(rt, u);
    if (lhs != rhs)
        return VerifyResult::fail("root-product route differs from the Sylvester determinant");

    // route (b): fully symbolic coordinates
    auto xyt = xy_table(n, m);
    auto px = ehsp_over(xyt, x_pairs(n));
    std::vector<std::pair<std::string, std::string>> ypairs;
    for (unsigned j = 1; j <= m; ++j)
        ypairs.push_back({"y0" + std::to_string(j), "y1" + std::to_string(j)});
    auto py = ehsp_over(xyt, ypairs);
    std::map<std::string, P> coord_subst;
    for (unsigned k = 0; k <= n; ++k)
        coord_subst.insert_or_assign("v" + std::to_string(k), k % 2 ? -px[k] : px[k]);
    for (unsigned l = 0; l <= m; ++l)
        coord_subst.insert_or_assign("w" + std::to_string(l), l % 2 ? -py[l] : py[l]);
    if (rsym.substitute(coord_subst) != res_product_form_symbolic(n, m))
        return VerifyResult::fail("coordinate route differs from the Sylvester determinant");

    return VerifyResult::pass();
}

/// Resultant-discriminant relation, symbolic: with the root substitution
/// p_k = (-1)^k p0 e_k(t),
///   Res(f, f') = p0^(2n-1) prod_{i != j} (t_i - t_j)
///              = (-1)^(n(n-1)/2) p0 D,    D = p0^(2n-2) prod_{i<j} (t_i - t_j)^2,
/// and the Sylvester-formula discriminant Res(f, f')/p0 matches D up to
/// the same sign.
inline VerifyResult verify_resdisc(unsigned n) {
    using P = Poly<Rational>;
    auto pt = p_table(n);
    auto f = generic_form(pt, detail::numbered("p", 0, n));
    P res_ff = resultant(f, f.derivative());
    P delta = discriminant_symbolic(n);
    if (res_ff != P::variable(pt, "p0") * delta)
        return VerifyResult::fail("Res(f, f') is not p0 times the discriminant");

    auto rt = root_table(n);
    auto ts = detail::numbered("t", 1, n);
    P lead = P::variable(rt, "p0");
    P res_sub = res_ff.substitute(detail::coeff_to_roots(rt, "p", n, "p0", ts));

    P ordered = P::constant(rt, Rational(1));
    for (unsigned i = 0; i < ts.size(); ++i)
        for (unsigned j = 0; j < ts.size(); ++j)
            if (i != j) ordered *= P::variable(rt, ts[i]) - P::variable(rt, ts[j]);
    if (res_sub != lead.pow(2 * n - 1) * ordered)
        return VerifyResult::fail("Res(f, f') differs from the ordered root product");

    // the root-product discriminant, via the same generic code path used
    // for concrete scalars
    std::vector<P> root_vars;
    for (const auto& t : ts) root_vars.push_back(P::variable(rt, t));
    P d_roots = disc_from_roots(RootData<P>(lead, root_vars));
    const bool sign_neg = (n * (n - 1) / 2) % 2 == 1;
    P signed_d = sign_neg ? -d_roots : d_roots;
    if (res_sub != lead * signed_d)
        return VerifyResult::fail("Res(f, f') differs from the signed root discriminant");

    P delta_sub = delta.substitute(detail::coeff_to_roots(rt, "p", n, "p0", ts));
    if (delta_sub != signed_d)
        return VerifyResult::fail("discriminant differs from the signed root discriminant");

    return VerifyResult::pass();
}

/// Algebraic independence of the elementary homogeneous symmetric
/// polynomials, by Jacobian rank at random rational points.
inline VerifyResult verify_ind(unsigned n, unsigned trials = 3, std::uint64_t seed = 1) {
    if (check_independence(n, trials, seed)) return VerifyResult::pass();
    return VerifyResult::fail("Jacobian never reached full rank");
}

/// Invariant-ring generation: every generator is symmetric, and (for
/// n <= 3) random homogeneous polynomials in the generators survive the
/// expand/re-express round trip unchanged.
inline VerifyResult verify_inv(unsigned n, unsigned samples = 25, std::uint64_t seed = 1) {
    auto gens = ehsp(n);
    for (unsigned k = 0; k < gens.size(); ++k)
        if (!is_symmetric(gens[k], n))
            return VerifyResult::fail("generator p" + std::to_string(k) +
                                      " is not symmetric");
    if (n > 3 || samples == 0) return VerifyResult::pass();

    using P = Poly<Rational>;
    auto pt = cap_p_table(n);
    std::map<std::string, P> expand;
    for (unsigned k = 0; k <= n; ++k) expand.insert_or_assign("P" + std::to_string(k), gens[k]);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> deg_dist(1, 3);
    for (unsigned s = 0; s < samples; ++s) {
        const unsigned d = deg_dist(rng);
        auto monos = detail::multi_indices(n + 1, d);
        P abstract(pt);
        for (const auto& alpha : monos) {
            long c = coeff(rng);
            if (c == 0) continue;
            Monomial mono(pt->size());
            for (unsigned k = 0; k <= n; ++k) mono = mono.with_exponent(k, alpha[k]);
            abstract.add_term(mono, Rational(c));
        }
        if (abstract.is_zero())
            abstract = P::variable(pt, "P0").pow(d);
        P expanded = abstract.substitute(expand);
        if (express_in_ehsp(expanded, n) != abstract)
            return VerifyResult::fail("round trip changed a sample polynomial");
    }
    return VerifyResult::pass();
}

} // namespace symres
