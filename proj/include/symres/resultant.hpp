#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/errors.hpp"
#include "symres/matrix.hpp"
#include "symres/parser.hpp"
#include "symres/poly.hpp"
#include "symres/rational.hpp"
#include "symres/tables.hpp"

namespace symres {

/// Homogeneous form of degree n in (X, Y), stored as the coefficient
/// vector (c0, ..., cn) of c0*X^n + c1*X^(n-1)*Y + ... + cn*Y^n. Under
/// Z = X/Y this is the polynomial c0*Z^n + ... + cn, so c0 is the leading
/// coefficient. Coefficients are exact scalars or polynomials.
template <class T>
class BinaryForm {
public:
    explicit BinaryForm(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw dimension_mismatch("binary form needs at least one coefficient");
    }

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& coeff(std::size_t k) const { return c_.at(k); }
    const T& leading() const { return c_.front(); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    /// d/dZ of the dehomogenized polynomial, as a form of degree n-1.
    BinaryForm derivative() const {
        const unsigned n = degree();
        if (n == 0) throw dimension_mismatch("derivative of a degree-0 form");
        std::vector<T> d;
        d.reserve(n);
        for (unsigned k = 0; k < n; ++k)
            d.push_back(c_[k] * from_int(static_cast<long>(n - k), c_[k]));
        return BinaryForm(std::move(d));
    }

    /// Value at (X, Y) = (xv, yv).
    T eval_homog(const T& xv, const T& yv) const {
        const unsigned n = degree();
        // Horner in X with trailing Y powers
        T acc = c_[0];
        for (unsigned k = 1; k <= n; ++k) acc = acc * xv + c_[k] * yv.pow(k);
        return acc;
    }

private:
    std::vector<T> c_;
};

/// Coefficients of prod_i (a_i X - b_i Y) over any exact ring, computed by
/// convolution. The k-th output is (-1)^k times the k-th elementary
/// homogeneous symmetric polynomial of the pairs.
template <class T>
std::vector<T> expand_linear_product(std::span<const std::array<T, 2>> pts) {
    if (pts.empty()) throw dimension_mismatch("empty linear product");
    T zero = pts[0][0].zero_like();
    std::vector<T> c{pts[0][0].one_like()};
    for (const auto& [a, b] : pts) {
        std::vector<T> next(c.size() + 1, zero);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += a * c[j];
            next[j + 1] -= b * c[j];
        }
        c = std::move(next);
    }
    return c;
}

/// The (n+m) x (n+m) Sylvester matrix: m rows of f's coefficients, each
/// shifted one column right of the previous, then n rows of g's.
template <class T>
Matrix<T> sylvester_matrix(const BinaryForm<T>& f, const BinaryForm<T>& g) {
    const unsigned n = f.degree(), m = g.degree();
    if (n < 1 || m < 1)
        throw dimension_mismatch("Sylvester matrix needs degrees >= 1");
    Matrix<T> s(n + m, n + m, f.coeff(0).zero_like());
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k <= n; ++k)
            s.at(i, i + k) = f.coeff(k);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned l = 0; l <= m; ++l)
            s.at(m + j, j + l) = g.coeff(l);
    return s;
}

/// Resultant of two binary forms. Degrees >= 1 go through the Sylvester
/// determinant; a degree-0 form c against a degree-m form yields c^m so
/// that bihomogeneity and multiplicativity extend to the boundary.
template <class T>
T resultant(const BinaryForm<T>& f, const BinaryForm<T>& g) {
    const unsigned n = f.degree(), m = g.degree();
    if (n == 0 && m == 0)
        throw dimension_mismatch("resultant requires n + m >= 1");
    if (n == 0) return f.coeff(0).pow(m);
    if (m == 0) return g.coeff(0).pow(n);
    return bareiss_det(sylvester_matrix(f, g));
}

/// Generic form of degree n whose coefficients are the variables
/// names[0..n] of the given table.
inline BinaryForm<Poly<Rational>> generic_form(const VarTable::Ptr& table,
                                               const std::vector<std::string>& names) {
    std::vector<Poly<Rational>> c;
    c.reserve(names.size());
    for (const auto& nm : names) c.push_back(Poly<Rational>::variable(table, nm));
    return BinaryForm<Poly<Rational>>(std::move(c));
}

inline Matrix<Poly<Rational>> sylvester_symbolic(unsigned n, unsigned m) {
    if (n < 1 || m < 1 || n > 6 || m > 6)
        throw guard_exceeded("symbolic Sylvester matrix limited to 1 <= n, m <= 6");
    auto table = vw_table(n, m);
    std::vector<std::string> vs, ws;
    for (unsigned k = 0; k <= n; ++k) vs.push_back("v" + std::to_string(k));
    for (unsigned l = 0; l <= m; ++l) ws.push_back("w" + std::to_string(l));
    return sylvester_matrix(generic_form(table, vs), generic_form(table, ws));
}

/// Res as a polynomial in v0..vn, w0..wm; bihomogeneous of degree (m, n).
inline Poly<Rational> resultant_symbolic(unsigned n, unsigned m) {
    return bareiss_det(sylvester_symbolic(n, m));
}

/// The double product prod_{i,j} (x1i*y0j - x0i*y1j) over coordinate
/// pairs; works for scalar coordinates and, with polynomial entries, as
/// the fully symbolic variant.
template <class T>
T res_product_form(std::span<const std::array<T, 2>> xs,
                   std::span<const std::array<T, 2>> ys) {
    if (xs.empty() || ys.empty())
        throw dimension_mismatch("product form needs nonempty tuples");
    T acc = xs[0][0].one_like();
    for (const auto& x : xs)
        for (const auto& y : ys)
            acc *= x[1] * y[0] - x[0] * y[1];
    return acc;
}

/// Symbolic double product over the x/y alphabet.
inline Poly<Rational> res_product_form_symbolic(unsigned n, unsigned m) {
    auto table = xy_table(n, m);
    using P = Poly<Rational>;
    std::vector<std::array<P, 2>> xs, ys;
    for (unsigned i = 1; i <= n; ++i)
        xs.push_back({P::variable(table, "x0" + std::to_string(i)),
                      P::variable(table, "x1" + std::to_string(i))});
    for (unsigned j = 1; j <= m; ++j)
        ys.push_back({P::variable(table, "y0" + std::to_string(j)),
                      P::variable(table, "y1" + std::to_string(j))});
    return res_product_form(std::span<const std::array<P, 2>>(xs),
                            std::span<const std::array<P, 2>>(ys));
}

/// A form presented by its leading coefficient and root list:
/// leading * prod_i (Z - t_i).
template <class T>
struct RootData {
    T leading;
    std::vector<T> roots;

    RootData(T lead, std::vector<T> rts) : leading(std::move(lead)), roots(std::move(rts)) {
        if (leading.is_zero())
            throw std::invalid_argument("root data requires a nonzero leading coefficient");
    }
};

/// Expand leading * prod (Z - t_i) back into a coefficient vector.
template <class T>
BinaryForm<T> reconstruct(const RootData<T>& rd) {
    std::vector<std::array<T, 2>> pts;
    pts.reserve(rd.roots.size());
    for (const auto& t : rd.roots) pts.push_back({rd.leading.one_like(), t});
    std::vector<T> c = rd.roots.empty()
                           ? std::vector<T>{rd.leading.one_like()}
                           : expand_linear_product(std::span<const std::array<T, 2>>(pts));
    for (auto& x : c) x *= rd.leading;
    return BinaryForm<T>(std::move(c));
}

/// Discriminant from roots: leading^(2n-2) * prod_{i<j} (t_i - t_j)^2,
/// which equals the sign-carrying product over ordered pairs.
template <class T>
T disc_from_roots(const RootData<T>& rd) {
    const std::size_t n = rd.roots.size();
    if (n < 2) throw dimension_mismatch("discriminant from roots needs n >= 2");
    T acc = rd.leading.pow(static_cast<unsigned>(2 * n - 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            T d = rd.roots[i] - rd.roots[j];
            acc *= d * d;
        }
    return acc;
}

/// Res(f, f') / c0 computed with the Sylvester determinant and exact
/// division. Specializations with a vanishing leading coefficient are an
/// error: the formula presumes c0 invertible.
template <class T>
T discriminant(const BinaryForm<T>& f) {
    if (f.degree() < 2) throw dimension_mismatch("discriminant needs degree >= 2");
    if (f.leading().is_zero())
        throw leading_coeff_zero("discriminant of a form with zero leading coefficient");
    T res = resultant(f, f.derivative());
    return exact_div(res, f.leading());
}

/// Discriminant of the generic degree-n form, in p0..pn; homogeneous of
/// degree 2n-2.
inline Poly<Rational> discriminant_symbolic(unsigned n) {
    if (n < 2 || n > 5)
        throw guard_exceeded("symbolic discriminant limited to 2 <= n <= 5");
    auto table = p_table(n);
    std::vector<std::string> ps;
    for (unsigned k = 0; k <= n; ++k) ps.push_back("p" + std::to_string(k));
    return discriminant(generic_form(table, ps));
}

/// Homogeneous gcd of two binary forms over a field: common factors of Y
/// (leading-coefficient degeneration) are split off, the dehomogenized
/// parts run through the Euclidean algorithm, and the result is
/// rehomogenized with the shared Y-power. Normalized so the first nonzero
/// coefficient is 1.
template <class R>
BinaryForm<R> gcd_binary_forms(const BinaryForm<R>& f, const BinaryForm<R>& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd of two zero forms");

    auto monic = [](std::vector<R> c) {
        for (const auto& x : c)
            if (!x.is_zero()) {
                R inv = x.inverse();
                for (auto& y : c) y *= inv;
                break;
            }
        return BinaryForm<R>(std::move(c));
    };
    if (f.is_zero()) return monic(g.coeffs());
    if (g.is_zero()) return monic(f.coeffs());

    auto split = [](const BinaryForm<R>& h) {
        std::size_t y = 0;
        while (h.coeff(y).is_zero()) ++y; // not all zero here
        std::vector<R> rest(h.coeffs().begin() + static_cast<std::ptrdiff_t>(y),
                            h.coeffs().end());
        return std::make_pair(y, rest);
    };
    auto [ya, a] = split(f);
    auto [yb, b] = split(g);

    // Euclid on dehomogenized polynomials, leading coefficient first.
    auto trim = [](std::vector<R>& v) {
        std::size_t k = 0;
        while (k < v.size() && v[k].is_zero()) ++k;
        v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    };
    while (!b.empty()) {
        // remainder of a by b
        R lead_inv = b.front().inverse();
        while (a.size() >= b.size()) {
            R q = a.front() * lead_inv;
            for (std::size_t i = 0; i < b.size(); ++i) a[i] -= q * b[i];
            a.front() = a.front().zero_like(); // cancel exactly
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    R inv = a.front().inverse();
    for (auto& x : a) x *= inv;

    std::size_t ycommon = std::min(ya, yb);
    std::vector<R> out(ycommon, a.front().zero_like());
    out.insert(out.end(), a.begin(), a.end());
    return BinaryForm<R>(std::move(out));
}

} // namespace symres
