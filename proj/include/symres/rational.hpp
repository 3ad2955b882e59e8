#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "symres/errors.hpp"

namespace symres {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Arithmetic is exact; equality is decidable.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpz_class n) : q_(std::move(n)) {}
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    /// Accepts "123", "-4" and "5/2"; rejects everything else (including
    /// zero denominators).
    static std::optional<Rational> parse(std::string_view text) {
        std::size_t i = 0;
        auto scan_int = [&](bool allow_sign) -> std::optional<std::string> {
            std::string s;
            if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
                if (text[i] == '-') s += '-';
                ++i;
            }
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') s += text[i++];
            if (i == start) return std::nullopt;
            return s;
        };
        auto num = scan_int(true);
        if (!num) return std::nullopt;
        mpz_class n(*num, 10);
        if (i == text.size()) return Rational(std::move(n));
        if (text[i] != '/') return std::nullopt;
        ++i;
        auto den = scan_int(false);
        if (!den || i != text.size()) return std::nullopt;
        mpz_class d(*den, 10);
        if (d == 0) return std::nullopt;
        return Rational(std::move(n), std::move(d));
    }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return q_ < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return q_ < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        return Rational(denominator(), numerator());
    }

    Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        Rational r;
        r.q_ = mpq_class(n, d); // already canonical: num/den coprime
        return r;
    }

    /// "3", "-5/2"; never prints a denominator of 1.
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline bool ring_same(const Rational&, const Rational&) { return true; }
inline Rational from_int(long v, const Rational&) { return Rational(v); }

/// Field division doubles as exact division over the rationals.
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw division_by_zero("exact division by zero");
    return a / b;
}

} // namespace symres
