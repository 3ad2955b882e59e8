#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "symres/poly.hpp"
#include "symres/rational.hpp"

namespace symres {

namespace detail {

/// Recursive-descent parser for the repository-wide polynomial text
/// format:
///
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := rational? ('*'? factor)*
///   factor     := identifier ('^' positive-integer)? | '(' expression ')'
///   rational   := integer ('/' positive-integer)?
///
/// Identifiers are a letter followed by letters/digits; whitespace is
/// insignificant; '*' between factors is optional (juxtaposition).
class PolyParser {
public:
    PolyParser(std::string_view text, VarTable::Ptr table)
        : text_(text), table_(std::move(table)) {}

    Poly<Rational> run() {
        skip_ws();
        Poly<Rational> p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Poly<Rational> expression() {
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        Poly<Rational> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Poly<Rational> t = term();
            if (c == '+') acc += t; else acc -= t;
        }
        return acc;
    }

    Poly<Rational> term() {
        skip_ws();
        Poly<Rational> acc = Poly<Rational>::constant(table_, Rational(1));
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = Poly<Rational>::constant(table_, rational_literal());
            saw_anything = true;
        }
        for (;;) {
            skip_ws();
            std::size_t mark = pos_;
            if (peek() == '*') {
                take();
                skip_ws();
                if (!factor_ahead()) fail("expected a factor after '*'");
            }
            if (!factor_ahead()) {
                pos_ = mark;
                break;
            }
            acc *= factor();
            saw_anything = true;
        }
        if (!saw_anything) fail("expected a term");
        return acc;
    }

    Poly<Rational> factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Poly<Rational> inner = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string id = identifier();
            if (!table_->index(id))
                throw parse_error("unknown identifier '" + id + "'", start);
            Poly<Rational> v = Poly<Rational>::variable(table_, id);
            skip_ws();
            if (peek() == '^') {
                take();
                skip_ws();
                unsigned long e = positive_integer("exponent");
                return v.pow(static_cast<unsigned>(e));
            }
            return v;
        }
        fail("expected an identifier or '('");
    }

    bool factor_ahead() {
        char c = peek();
        return c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    Rational rational_literal() {
        mpz_class num = digits();
        skip_ws();
        if (peek() == '/') {
            std::size_t slash = pos_;
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected digits after '/'");
            mpz_class den = digits();
            if (den == 0) throw parse_error("zero denominator", slash);
            return Rational(num, den);
        }
        return Rational(std::move(num));
    }

    unsigned long positive_integer(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        mpz_class v = digits();
        if (v == 0 || !v.fits_ulong_p())
            fail(std::string("invalid ") + what);
        return v.get_ui();
    }

    mpz_class digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return mpz_class(s, 10);
    }

    std::string identifier() {
        std::string s;
        s += text_[pos_++];
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    std::string_view text_;
    VarTable::Ptr table_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse an expression over a pre-declared table. Unknown identifiers,
/// malformed syntax and zero denominators all raise parse_error with the
/// offending position.
inline Poly<Rational> parse_poly(std::string_view text, VarTable::Ptr table) {
    return detail::PolyParser(text, std::move(table)).run();
}

/// Deterministic canonical rendering: graded-lex term order, " + "/" - "
/// separators with the sign folded into the separator, unit coefficients
/// and unit exponents omitted, variables joined with '*' in table order.
template <class R>
std::string format_poly(const Poly<R>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        R mag = c;
        bool neg = false;
        if constexpr (std::is_same_v<R, Rational>) {
            neg = c.is_negative();
            if (neg) mag = -c;
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (auto e = m.exponent(i); e > 0) {
                if (!vars.empty()) vars += "*";
                vars += p.table()->name(i);
                if (e > 1) vars += "^" + std::to_string(e);
            }
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

} // namespace symres
