#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symres/parser.hpp"
#include "symres/poly.hpp"
#include "symres/projective.hpp"
#include "symres/resultant.hpp"
#include "symres/scan.hpp"
#include "symres/symprod.hpp"
#include "symres/tables.hpp"
#include "symres/verify.hpp"

namespace symres::cli {

namespace detail {

using json = nlohmann::ordered_json;
using P = Poly<Rational>;

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline ProjPoint<Rational> parse_point(const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t.front() == '(' && t.back() == ')')
        t = strip(t.substr(1, t.size() - 2));
    std::vector<Rational> coords;
    for (const auto& part : split_top_level(t, ':')) {
        auto r = Rational::parse(strip(part));
        if (!r) throw std::invalid_argument("bad coordinate '" + strip(part) + "'");
        coords.push_back(*r);
    }
    return ProjPoint<Rational>(std::move(coords));
}

inline PointTuple<Rational> parse_tuple(const std::string& text) {
    std::vector<ProjPoint<Rational>> pts;
    for (const auto& entry : split_top_level(strip(text), ','))
        pts.push_back(parse_point(entry));
    return PointTuple<Rational>(std::move(pts));
}

/// Table for parsing one or two input forms: declared coefficient symbols
/// followed by the form variable(s).
inline VarTable::Ptr form_table(const std::vector<std::string>& symbols, bool homog) {
    auto names = symbols;
    if (homog) {
        names.push_back("X");
        names.push_back("Y");
    } else {
        names.push_back("Z");
    }
    return VarTable::make(std::move(names));
}

/// Read a form from expression text. Dehomogenized input uses the
/// variable Z; --homog switches to homogeneous X, Y input. An explicit
/// degree pads missing leading terms (e.g. treating "Z" as degree 2).
inline BinaryForm<P> read_form(const std::string& text, const VarTable::Ptr& table,
                               std::optional<unsigned> degree, bool homog) {
    P p = parse_poly(text, table);
    std::vector<P> coeffs;
    if (!homog) {
        Degree zd = p.degree_in("Z");
        unsigned inferred = zd.is_minus_infinity() ? 0 : static_cast<unsigned>(zd.value());
        unsigned n = degree.value_or(inferred);
        if (inferred > n)
            throw std::invalid_argument("form has Z-degree " + std::to_string(inferred) +
                                        " but degree " + std::to_string(n) + " was declared");
        for (unsigned k = 0; k <= n; ++k) coeffs.push_back(p.coefficient_of("Z", n - k));
    } else {
        unsigned n;
        if (degree) {
            n = *degree;
        } else {
            Degree dx = p.degree_in("X"), dy = p.degree_in("Y");
            unsigned mx = dx.is_minus_infinity() ? 0 : static_cast<unsigned>(dx.value());
            unsigned my = dy.is_minus_infinity() ? 0 : static_cast<unsigned>(dy.value());
            n = std::max(mx, my);
        }
        P rebuilt(table);
        for (unsigned k = 0; k <= n; ++k) {
            P c = p.coefficient_of("X", n - k).coefficient_of("Y", k);
            rebuilt += c * P::variable(table, "X").pow(n - k) *
                       P::variable(table, "Y").pow(k);
            coeffs.push_back(std::move(c));
        }
        if (rebuilt != p)
            throw std::invalid_argument(
                "form is not homogeneous of degree " + std::to_string(n) + " in X, Y");
    }
    return BinaryForm<P>(std::move(coeffs));
}

inline std::vector<std::string> numbered(const std::string& prefix, unsigned to) {
    std::vector<std::string> v;
    for (unsigned i = 0; i <= to; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

inline void emit_poly(std::ostream& out, bool as_json, const P& p) {
    if (as_json) {
        json j;
        j["result"] = format_poly(p);
        out << j.dump(2) << "\n";
    } else {
        out << format_poly(p) << "\n";
    }
}

} // namespace detail

/// Entry point shared by the installed binary and the test harness.
/// args excludes the program name. Exit codes: 0 success / verified /
/// member true; 1 verification failure or member false; 2 usage error;
/// 3 computational error (zero leading coefficient, inexact division,
/// polynomial outside the invariant ring).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::json;
    using detail::P;

    CLI::App app{"Exact resultants and discriminants of binary forms, with "
                 "symmetric-product quotient verification"};
    app.name("symres");
    app.require_subcommand(1);

    // common option storage
    std::string f_text, g_text, form_text, points_text, poly_text;
    std::string xs_text, ys_text, pv_text, pw_text, pp_text, locus;
    bool symbolic = false, homog = false, as_json = false;
    unsigned n = 0, m = 0;
    std::uint32_t q = 0;
    bool n_set = false, m_set = false;

    auto add_common = [&](CLI::App* cmd, bool with_forms) {
        if (with_forms) cmd->add_flag("--homog", homog, "forms are homogeneous in X and Y");
        cmd->add_flag("--json", as_json, "emit JSON");
    };

    auto* res = app.add_subcommand("res", "resultant of two binary forms");
    res->add_option("--f", f_text, "first form");
    res->add_option("--g", g_text, "second form");
    res->add_flag("--symbolic", symbolic, "use generic coefficients v0..vn, w0..wm");
    res->add_option("--n", n, "degree of the first form")->each([&](const std::string&) { n_set = true; });
    res->add_option("--m", m, "degree of the second form")->each([&](const std::string&) { m_set = true; });
    add_common(res, true);

    auto* disc = app.add_subcommand("disc", "discriminant of a binary form");
    disc->add_option("--form", form_text, "the form");
    disc->add_flag("--symbolic", symbolic, "use generic coefficients p0..pn");
    disc->add_option("--n", n, "degree of the form")->each([&](const std::string&) { n_set = true; });
    add_common(disc, true);

    auto* syl = app.add_subcommand("sylvester", "Sylvester matrix of two binary forms");
    syl->add_option("--f", f_text, "first form");
    syl->add_option("--g", g_text, "second form");
    syl->add_flag("--symbolic", symbolic, "use generic coefficients");
    syl->add_option("--n", n, "degree of the first form")->each([&](const std::string&) { n_set = true; });
    syl->add_option("--m", m, "degree of the second form")->each([&](const std::string&) { m_set = true; });
    add_common(syl, true);

    auto* eh = app.add_subcommand("ehsp", "elementary homogeneous symmetric polynomials");
    eh->add_option("--n", n, "number of coordinate pairs")->required();
    add_common(eh, false);

    auto* vi = app.add_subcommand("viete", "image of a point tuple under the Viete map");
    vi->add_option("--points", points_text, "tuple, e.g. \"(1:1),(1:2)\"")->required();
    add_common(vi, false);

    auto* ex = app.add_subcommand("express",
                                  "rewrite a symmetric polynomial in the generators P0..Pn");
    ex->add_option("--poly", poly_text, "polynomial over x01,x11,...,x0n,x1n")->required();
    ex->add_option("--n", n, "number of coordinate pairs")->required();
    add_common(ex, false);

    auto* mem = app.add_subcommand("member", "locus membership test");
    mem->add_option("--locus", locus, "one of xnm, xn, rnm, dn")
        ->required()
        ->check(CLI::IsMember({"xnm", "xn", "rnm", "dn"}));
    mem->add_option("--xs", xs_text, "x tuple");
    mem->add_option("--ys", ys_text, "y tuple");
    mem->add_option("--pv", pv_text, "coefficient point of the first form");
    mem->add_option("--pw", pw_text, "coefficient point of the second form");
    mem->add_option("--pp", pp_text, "coefficient point of the form");
    add_common(mem, false);

    std::string suite;
    auto* ver = app.add_subcommand("verify", "run a symbolic verification suite");
    ver->add_option("suite", suite, "resth | resdisc | ind | inv")
        ->required()
        ->check(CLI::IsMember({"resth", "resdisc", "ind", "inv"}));
    ver->add_option("--n", n, "degree / tuple size")->required();
    ver->add_option("--m", m, "second degree (resth only)")->each([&](const std::string&) { m_set = true; });
    add_common(ver, false);

    std::string scan_kind;
    auto* sc = app.add_subcommand("scan", "exhaustive finite-field verification");
    sc->add_option("kind", scan_kind, "res | quotient | disc")
        ->required()
        ->check(CLI::IsMember({"res", "quotient", "disc"}));
    sc->add_option("--q", q, "odd prime field size")->required();
    sc->add_option("--n", n, "first degree / tuple size")->required();
    sc->add_option("--m", m, "second degree")->each([&](const std::string&) { m_set = true; });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto opt_deg = [&](bool set, unsigned v) {
        return set ? std::optional<unsigned>(v) : std::nullopt;
    };

    try {
        if (app.got_subcommand(res)) {
            if (symbolic && f_text.empty() && g_text.empty()) {
                if (!n_set || !m_set)
                    throw std::invalid_argument("--symbolic res needs --n and --m");
                detail::emit_poly(out, as_json, resultant_symbolic(n, m));
                return 0;
            }
            if (f_text.empty() || g_text.empty())
                throw std::invalid_argument("res needs --f and --g (or --symbolic --n --m)");
            std::vector<std::string> symbols;
            if (symbolic) {
                if (!n_set || !m_set)
                    throw std::invalid_argument("--symbolic forms need --n and --m");
                symbols = detail::numbered("v", n);
                auto ws = detail::numbered("w", m);
                symbols.insert(symbols.end(), ws.begin(), ws.end());
            }
            auto table = detail::form_table(symbols, homog);
            auto f = detail::read_form(f_text, table, opt_deg(n_set, n), homog);
            auto g = detail::read_form(g_text, table, opt_deg(m_set, m), homog);
            detail::emit_poly(out, as_json, resultant(f, g));
            return 0;
        }

        if (app.got_subcommand(disc)) {
            if (symbolic && form_text.empty()) {
                if (!n_set) throw std::invalid_argument("--symbolic disc needs --n");
                detail::emit_poly(out, as_json, discriminant_symbolic(n));
                return 0;
            }
            if (form_text.empty())
                throw std::invalid_argument("disc needs --form (or --symbolic --n)");
            std::vector<std::string> symbols;
            if (symbolic) {
                if (!n_set) throw std::invalid_argument("--symbolic forms need --n");
                symbols = detail::numbered("p", n);
            }
            auto table = detail::form_table(symbols, homog);
            auto f = detail::read_form(form_text, table, opt_deg(n_set, n), homog);
            detail::emit_poly(out, as_json, discriminant(f));
            return 0;
        }

        if (app.got_subcommand(syl)) {
            Matrix<P> mat(0, 0, P(VarTable::make({"Z"})));
            if (symbolic && f_text.empty() && g_text.empty()) {
                if (!n_set || !m_set)
                    throw std::invalid_argument("--symbolic sylvester needs --n and --m");
                mat = sylvester_symbolic(n, m);
            } else {
                if (f_text.empty() || g_text.empty())
                    throw std::invalid_argument(
                        "sylvester needs --f and --g (or --symbolic --n --m)");
                std::vector<std::string> symbols;
                if (symbolic) {
                    if (!n_set || !m_set)
                        throw std::invalid_argument("--symbolic forms need --n and --m");
                    symbols = detail::numbered("v", n);
                    auto ws = detail::numbered("w", m);
                    symbols.insert(symbols.end(), ws.begin(), ws.end());
                }
                auto table = detail::form_table(symbols, homog);
                auto f = detail::read_form(f_text, table, opt_deg(n_set, n), homog);
                auto g = detail::read_form(g_text, table, opt_deg(m_set, m), homog);
                mat = sylvester_matrix(f, g);
            }
            if (as_json) {
                json rows = json::array();
                for (std::size_t i = 0; i < mat.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < mat.cols(); ++j)
                        row.push_back(format_poly(mat.at(i, j)));
                    rows.push_back(std::move(row));
                }
                json j;
                j["rows"] = std::move(rows);
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < mat.rows(); ++i) {
                    out << "[";
                    for (std::size_t j = 0; j < mat.cols(); ++j) {
                        if (j) out << ", ";
                        out << format_poly(mat.at(i, j));
                    }
                    out << "]\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(eh)) {
            auto gens = ehsp(n);
            if (as_json) {
                json list = json::array();
                for (const auto& g : gens) list.push_back(format_poly(g));
                json j;
                j["p"] = std::move(list);
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t k = 0; k < gens.size(); ++k)
                    out << "p" << k << " = " << format_poly(gens[k]) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(vi)) {
            auto tuple = detail::parse_tuple(points_text);
            auto image = viete(tuple);
            if (as_json) {
                json coords = json::array();
                for (const auto& c : image.coords()) coords.push_back(c.str());
                json j;
                j["point"] = std::move(coords);
                out << j.dump(2) << "\n";
            } else {
                out << image.str() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(ex)) {
            auto p = parse_poly(poly_text, x_table(n));
            detail::emit_poly(out, as_json, express_in_ehsp(p, n));
            return 0;
        }

        if (app.got_subcommand(mem)) {
            bool inside = false;
            if (locus == "xnm") {
                if (xs_text.empty() || ys_text.empty())
                    throw std::invalid_argument("locus xnm needs --xs and --ys");
                inside = member_xnm(detail::parse_tuple(xs_text), detail::parse_tuple(ys_text));
            } else if (locus == "xn") {
                if (xs_text.empty()) throw std::invalid_argument("locus xn needs --xs");
                inside = member_xn(detail::parse_tuple(xs_text));
            } else if (locus == "rnm") {
                if (pv_text.empty() || pw_text.empty())
                    throw std::invalid_argument("locus rnm needs --pv and --pw");
                inside = member_rnm(detail::parse_point(pv_text), detail::parse_point(pw_text));
            } else {
                if (pp_text.empty()) throw std::invalid_argument("locus dn needs --pp");
                inside = member_dn(detail::parse_point(pp_text));
            }
            if (as_json) {
                json j;
                j["member"] = inside;
                out << j.dump(2) << "\n";
            } else {
                out << (inside ? "true" : "false") << "\n";
            }
            return inside ? 0 : 1;
        }

        if (app.got_subcommand(ver)) {
            VerifyResult r;
            if (suite == "resth") {
                if (!m_set) throw std::invalid_argument("verify resth needs --m");
                r = verify_resth(n, m);
            } else if (suite == "resdisc") {
                r = verify_resdisc(n);
            } else if (suite == "ind") {
                r = verify_ind(n);
            } else {
                r = verify_inv(n);
            }
            if (as_json) {
                json j;
                j["ok"] = r.ok;
                j["detail"] = r.detail;
                out << j.dump(2) << "\n";
            } else {
                out << (r.ok ? "OK" : "FAIL: " + r.detail) << "\n";
            }
            return r.ok ? 0 : 1;
        }

        if (app.got_subcommand(sc)) {
            ScanReport rep;
            if (scan_kind == "res") {
                if (!m_set) throw std::invalid_argument("scan res needs --m");
                rep = scan_resultant_equiv(q, n, m);
            } else if (scan_kind == "quotient") {
                if (!m_set) throw std::invalid_argument("scan quotient needs --m");
                rep = scan_quotient(q, n, m);
            } else {
                rep = scan_disc_quotient(q, n);
            }
            out << rep.to_json().dump(2) << "\n";
            return rep.passing() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace symres::cli
