#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symres/errors.hpp"
#include "symres/vartable.hpp"

namespace symres {

/// Total or block degree. The zero polynomial carries the distinguished
/// minus-infinity value rather than an overloaded -1.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    Degree(int v) : finite_(true), v_(v) {}

    bool is_minus_infinity() const { return !finite_; }
    int value() const {
        if (!finite_) throw std::logic_error("degree of the zero polynomial");
        return v_;
    }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    Degree() : finite_(false), v_(0) {}
    bool finite_;
    int v_;
};

/// Exponent vector indexed by VarTable position.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    Monomial(std::initializer_list<std::uint32_t> e) : e_(e) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t exp = 1) {
        Monomial m(nvars);
        m.e_.at(var) = exp;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    unsigned degree_in(std::span<const std::size_t> vars) const {
        unsigned d = 0;
        for (auto i : vars) d += e_.at(i);
        return d;
    }

    bool is_constant() const {
        return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw table_mismatch("monomial size mismatch");
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw table_mismatch("monomial size mismatch");
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient of exponent vectors; requires divides(o) in the other
    /// direction, i.e. call as numerator.divided_by(denominator).
    Monomial divided_by(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > r.e_[i]) throw inexact_division("monomial does not divide");
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    Monomial with_exponent(std::size_t var, std::uint32_t exp) const {
        Monomial r = *this;
        r.e_.at(var) = exp;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    /// Graded lexicographic: higher total degree first, ties broken by
    /// the leftmost differing exponent (larger wins). Term maps ordered
    /// by this comparator iterate leading-term first, which fixes the
    /// canonical printing order.
    struct GrlexDesc {
        bool operator()(const Monomial& a, const Monomial& b) const {
            unsigned da = a.total_degree(), db = b.total_degree();
            if (da != db) return da > db;
            return std::lexicographical_compare(b.e_.begin(), b.e_.end(),
                                                a.e_.begin(), a.e_.end());
        }
    };

private:
    std::vector<std::uint32_t> e_;
};

/// Sparse multivariate polynomial over an exact coefficient ring R
/// (Rational or Fp). Canonical form: no explicit zero coefficients, terms
/// ordered graded-lexicographically by the table's variable order. Values
/// are immutable in spirit: every operation returns a fresh polynomial.
template <class R>
class Poly {
public:
    using TermMap = std::map<Monomial, R, Monomial::GrlexDesc>;

    explicit Poly(VarTable::Ptr table, R ring = R{})
        : table_(std::move(table)), ring_(std::move(ring)) {
        if (!table_) throw table_mismatch("polynomial requires a variable table");
    }

    static Poly zero(VarTable::Ptr table, R ring = R{}) {
        return Poly(std::move(table), std::move(ring));
    }

    static Poly constant(VarTable::Ptr table, R value) {
        Poly p(std::move(table), value.zero_like());
        if (!value.is_zero()) p.terms_.emplace(Monomial(p.table_->size()), std::move(value));
        return p;
    }

    static Poly variable(VarTable::Ptr table, std::string_view name, R ring = R{}) {
        Poly p(std::move(table), std::move(ring));
        std::size_t i = p.table_->require(name);
        p.terms_.emplace(Monomial::unit(p.table_->size(), i), p.ring_.one_like());
        return p;
    }

    const VarTable::Ptr& table() const { return table_; }
    const R& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    R coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.zero_like() : it->second;
    }

    /// Accumulate a term, keeping canonical form.
    void add_term(const Monomial& m, const R& c) {
        if (m.size() != table_->size()) throw table_mismatch("monomial/table size mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(table_, ring_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.table_, a.ring_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!tables_compatible(a.table_, b.table_) || !ring_same(a.ring_, b.ring_))
            return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scale(const R& c) const {
        Poly r(table_, ring_);
        if (c.is_zero()) return r;
        for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    /// this * (c * m), one distribution step of multiplication.
    Poly times_term(const Monomial& m, const R& c) const {
        Poly r(table_, ring_);
        if (c.is_zero()) return r;
        for (auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(table_, ring_.one_like());
        Poly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Evaluate with every occurring variable assigned. Unknown names and
    /// missing variables are reported by name.
    R eval(const std::map<std::string, R>& assignment) const {
        std::vector<std::optional<R>> vals(table_->size());
        for (auto& [name, v] : assignment) {
            auto i = table_->index(name);
            if (!i) throw unknown_variable(name);
            if (!ring_same(v, ring_)) throw ring_mismatch("assignment value in a different ring");
            vals[*i] = v;
        }
        for (auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m.exponent(i) > 0 && !vals[i])
                    throw unknown_variable(table_->name(i) + " (missing from assignment)");
        R acc = ring_.zero_like();
        for (auto& [m, c] : terms_) {
            R t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (auto e = m.exponent(i); e > 0) t *= vals[i]->pow(e);
            acc += t;
        }
        return acc;
    }

    /// Fast path: values aligned with the table order, all present.
    R eval_at(std::span<const R> values) const {
        if (values.size() != table_->size())
            throw dimension_mismatch("evaluation vector length != table size");
        R acc = ring_.zero_like();
        for (auto& [m, c] : terms_) {
            R t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (auto e = m.exponent(i); e > 0) t *= values[i].pow(e);
            acc += t;
        }
        return acc;
    }

    /// Substitute polynomials for a subset of the variables. All
    /// replacement polynomials must share one table (the same table, or
    /// an extension containing every unsubstituted variable by name).
    Poly substitute(const std::map<std::string, Poly>& subst) const {
        if (subst.empty()) return *this;
        VarTable::Ptr target = subst.begin()->second.table_;
        for (auto& [name, q] : subst) {
            if (!tables_compatible(target, q.table_))
                throw table_mismatch("substitution polynomials over differing tables");
            if (!ring_same(q.ring_, ring_))
                throw ring_mismatch("substitution polynomial in a different ring");
            if (!table_->index(name)) throw unknown_variable(name);
        }
        // per source-variable replacement, as a polynomial over target
        std::vector<const Poly*> repl(table_->size(), nullptr);
        std::vector<Poly> storage;
        storage.reserve(table_->size());
        for (std::size_t i = 0; i < table_->size(); ++i) {
            auto it = subst.find(table_->name(i));
            if (it != subst.end()) {
                repl[i] = &it->second;
            } else {
                storage.push_back(Poly::variable(target, table_->name(i), ring_));
                repl[i] = &storage.back();
            }
        }
        // small per-variable power cache; exponents at desk scale are tiny
        std::vector<std::vector<Poly>> pows(table_->size());
        auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(constant(target, ring_.one_like()));
            while (cache.size() <= e) cache.push_back(cache.back() * *repl[i]);
            return cache[e];
        };
        Poly result(target, ring_);
        for (auto& [m, c] : terms_) {
            Poly t = constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (auto e = m.exponent(i); e > 0) t *= power(i, e);
            result += t;
        }
        return result;
    }

    /// Formal partial derivative.
    Poly derivative(std::string_view var) const {
        std::size_t i = table_->require(var);
        Poly r(table_, ring_);
        for (auto& [m, c] : terms_) {
            auto e = m.exponent(i);
            if (e == 0) continue;
            r.add_term(m.with_exponent(i, e - 1), c * from_int(static_cast<long>(e), ring_));
        }
        return r;
    }

    Degree total_degree() const {
        if (terms_.empty()) return Degree::minus_infinity();
        return Degree(static_cast<int>(terms_.begin()->first.total_degree()));
    }

    Degree degree_in(std::string_view var) const {
        std::size_t i = table_->require(var);
        if (terms_.empty()) return Degree::minus_infinity();
        std::uint32_t d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.exponent(i));
        return Degree(static_cast<int>(d));
    }

    /// Common degree of all terms in the block's variables, or nullopt if
    /// the polynomial is not homogeneous there. The zero polynomial is
    /// homogeneous of degree minus-infinity.
    std::optional<Degree> degree_in_block(std::string_view block) const {
        const auto& idx = table_->block(block);
        if (terms_.empty()) return Degree::minus_infinity();
        std::optional<unsigned> d;
        for (auto& [m, c] : terms_) {
            unsigned td = m.degree_in(idx);
            if (!d) d = td;
            else if (*d != td) return std::nullopt;
        }
        return Degree(static_cast<int>(*d));
    }

    /// The coefficient of var^k, as a polynomial over the same table with
    /// var's exponent cleared.
    Poly coefficient_of(std::string_view var, std::uint32_t k) const {
        std::size_t i = table_->require(var);
        Poly r(table_, ring_);
        for (auto& [m, c] : terms_)
            if (m.exponent(i) == k) r.add_term(m.with_exponent(i, 0), c);
        return r;
    }

    /// The scalar value when the polynomial is constant (or zero).
    std::optional<R> as_constant() const {
        if (terms_.empty()) return ring_.zero_like();
        if (terms_.size() == 1 && terms_.begin()->first.is_constant())
            return terms_.begin()->second;
        return std::nullopt;
    }

    bool is_one() const {
        auto c = as_constant();
        return c && c->is_one();
    }

    Poly zero_like() const { return Poly(table_, ring_); }
    Poly one_like() const { return constant(table_, ring_.one_like()); }

private:
    void check(const Poly& o) const {
        require_compatible(table_, o.table_);
        if (!ring_same(ring_, o.ring_)) throw ring_mismatch("coefficient rings differ");
    }

    VarTable::Ptr table_;
    R ring_; // zero exemplar fixing the coefficient ring
    TermMap terms_;
};

template <class R>
Poly<R> from_int(long v, const Poly<R>& like) {
    return Poly<R>::constant(like.table(), from_int(v, like.ring()));
}

/// Exact quotient a / b; throws inexact_division when b does not divide a.
/// Single-divisor multivariate division: the leading term of a nonzero
/// exact multiple is always reducible, so the first irreducible leading
/// term certifies non-divisibility.
template <class R>
Poly<R> exact_divide(const Poly<R>& a, const Poly<R>& b) {
    require_compatible(a.table(), b.table());
    if (!ring_same(a.ring(), b.ring())) throw ring_mismatch("coefficient rings differ");
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    Poly<R> q(a.table(), a.ring());
    Poly<R> r = a;
    const auto& lb = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& lr = *r.terms().begin();
        if (!lb.first.divides(lr.first))
            throw inexact_division("inexact polynomial division");
        Monomial qm = lr.first.divided_by(lb.first);
        R qc = lr.second / lb.second;
        q.add_term(qm, qc);
        r -= b.times_term(qm, qc);
    }
    return q;
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    return exact_divide(a, b);
}

} // namespace symres
