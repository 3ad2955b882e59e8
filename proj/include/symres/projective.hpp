#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "symres/errors.hpp"
#include "symres/fp.hpp"
#include "symres/rational.hpp"

namespace symres {

/// Canonical representative over Q: clear denominators, divide by the
/// coordinate gcd, then make the first nonzero coordinate positive.
inline void normalize_coords(std::vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& c : v) {
        mpz_class d = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_class n = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    if (g == 0) return; // all-zero vector; caller rejects it
    for (const auto& n : ints)
        if (n != 0) {
            if (n < 0) g = -g;
            break;
        }
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_class quotient = ints[i] / g;
        v[i] = Rational(std::move(quotient));
    }
}

/// Canonical representative over F_p: scale so the first nonzero
/// coordinate equals 1.
inline void normalize_coords(std::vector<Fp>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) {
            Fp inv = c.inverse();
            for (auto& x : v) x *= inv;
            return;
        }
}

/// Point of projective space, stored normalized so that equality of
/// representations is projective equality.
template <class R>
class ProjPoint {
public:
    explicit ProjPoint(std::vector<R> coords) : c_(std::move(coords)) {
        if (c_.empty()) throw dimension_mismatch("projective point needs coordinates");
        if (std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); }))
            throw std::invalid_argument("projective point cannot be the zero vector");
        normalize_coords(c_);
    }
    ProjPoint(std::initializer_list<R> coords) : ProjPoint(std::vector<R>(coords)) {}

    std::size_t dim() const { return c_.size() - 1; }
    const std::vector<R>& coords() const { return c_; }
    const R& operator[](std::size_t i) const { return c_.at(i); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] < b.c_[i]) return true;
            if (b.c_[i] < a.c_[i]) return false;
        }
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ":";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<R> c_;
};

/// Ordered tuple of points of the projective line; the slot order is
/// meaningful (symmetric groups act by permuting it).
template <class R>
class PointTuple {
public:
    explicit PointTuple(std::vector<ProjPoint<R>> pts) : p_(std::move(pts)) {
        for (const auto& pt : p_)
            if (pt.dim() != 1)
                throw dimension_mismatch("tuple entries must be points of the projective line");
    }
    PointTuple(std::initializer_list<ProjPoint<R>> pts)
        : PointTuple(std::vector<ProjPoint<R>>(pts)) {}

    std::size_t size() const { return p_.size(); }
    const ProjPoint<R>& operator[](std::size_t i) const { return p_.at(i); }
    const std::vector<ProjPoint<R>>& points() const { return p_; }

    friend bool operator==(const PointTuple& a, const PointTuple& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PointTuple& a, const PointTuple& b) { return !(a == b); }
    friend bool operator<(const PointTuple& a, const PointTuple& b) { return a.p_ < b.p_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += p_[i].str();
        }
        return s;
    }

private:
    std::vector<ProjPoint<R>> p_;
};

} // namespace symres
