#pragma once

#include <random>
#include <string>
#include <vector>

#include "symres/fp.hpp"
#include "symres/poly.hpp"
#include "symres/rational.hpp"
#include "symres/vartable.hpp"

namespace testutil {

using symres::Fp;
using symres::Monomial;
using symres::Poly;
using symres::Rational;
using symres::VarTable;

inline Rational random_rational(std::mt19937_64& rng, bool with_fractions = true) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, with_fractions ? 3 : 1);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

inline Monomial random_monomial(const VarTable::Ptr& table, unsigned max_deg,
                                std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, table->size() - 1);
    Monomial m(table->size());
    unsigned total = deg(rng);
    for (unsigned i = 0; i < total; ++i) {
        std::size_t v = var(rng);
        m = m.with_exponent(v, m.exponent(v) + 1);
    }
    return m;
}

inline Poly<Rational> random_poly(const VarTable::Ptr& table, unsigned max_deg,
                                  unsigned max_terms, std::mt19937_64& rng,
                                  bool with_fractions = true) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    Poly<Rational> p(table);
    unsigned t = nterms(rng);
    for (unsigned i = 0; i < t; ++i)
        p.add_term(random_monomial(table, max_deg, rng), random_rational(rng, with_fractions));
    return p;
}

inline Poly<Fp> random_fp_poly(const VarTable::Ptr& table, unsigned max_deg,
                               unsigned max_terms, std::uint32_t q,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<long> val(0, q - 1);
    Poly<Fp> p(table, Fp(0, q));
    unsigned t = nterms(rng);
    for (unsigned i = 0; i < t; ++i)
        p.add_term(random_monomial(table, max_deg, rng), Fp(val(rng), q));
    return p;
}

} // namespace testutil
