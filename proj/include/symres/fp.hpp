#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "symres/errors.hpp"
#include "symres/rational.hpp"

namespace symres {

/// Tests for an odd prime in the supported modulus range [3, 2^31).
inline bool is_odd_prime(std::uint32_t q) {
    if (q < 3 || q % 2 == 0 || q >= (1u << 31)) return false;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

/// Element of a prime field F_p, stored as the canonical representative
/// in [0, p). The modulus rides along with the value; mixing moduli is a
/// ring mismatch. p must be odd and below 2^31 so products fit in 64 bits.
class Fp {
public:
    Fp() = default; // unset element; any arithmetic on it throws

    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p < 3 || p % 2 == 0 || p >= (1u << 31))
            throw ring_mismatch("prime-field modulus must be odd and in [3, 2^31)");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp zero_like() const { require_set(); return Fp(0, p_); }
    Fp one_like() const { require_set(); return Fp(1, p_); }

    Fp operator-() const { require_set(); return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& o) {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    /// Ordering within one field; used for canonical set/map keys.
    friend bool operator<(const Fp& a, const Fp& b) {
        return a.p_ != b.p_ ? a.p_ < b.p_ : a.v_ < b.v_;
    }

    Fp inverse() const {
        require_set();
        if (v_ == 0) throw division_by_zero("inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t t = a / b;
            a -= t * b; std::swap(a, b);
            x0 -= t * x1; std::swap(x0, x1);
        }
        return Fp(x0, p_);
    }

    Fp pow(unsigned e) const {
        require_set();
        Fp r(1, p_), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const { return std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

private:
    void require_set() const {
        if (p_ == 0) throw ring_mismatch("use of unset prime-field element");
    }
    void check(const Fp& o) const {
        require_set();
        if (p_ != o.p_) throw ring_mismatch("prime-field modulus mismatch");
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

inline bool ring_same(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }
inline Fp from_int(long v, const Fp& like) { return Fp(v, like.modulus()); }

inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }

/// Reduction Q -> F_p; the denominator must be prime to p.
inline Fp to_fp(const Rational& r, std::uint32_t p) {
    Fp num(static_cast<std::int64_t>(mpz_fdiv_ui(r.numerator().get_mpz_t(), p)), p);
    Fp den(static_cast<std::int64_t>(mpz_fdiv_ui(r.denominator().get_mpz_t(), p)), p);
    return num / den;
}

inline Rational to_ring(const Rational& x, const Rational&) { return x; }
inline Fp to_ring(const Rational& x, const Fp& like) { return to_fp(x, like.modulus()); }

} // namespace symres
