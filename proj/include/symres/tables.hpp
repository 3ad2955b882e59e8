#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symres/vartable.hpp"

namespace symres {

/// Standard variable alphabets used throughout the library. Index suffixes
/// are decimal, so these stay unambiguous within the library's degree
/// guards (n, m <= 6).

/// v0..vn, w0..wm with blocks "v" and "w": coefficient alphabet of a pair
/// of generic binary forms.
inline VarTable::Ptr vw_table(unsigned n, unsigned m) {
    std::vector<std::string> names, vs, ws;
    for (unsigned k = 0; k <= n; ++k) vs.push_back("v" + std::to_string(k));
    for (unsigned l = 0; l <= m; ++l) ws.push_back("w" + std::to_string(l));
    names = vs;
    names.insert(names.end(), ws.begin(), ws.end());
    return VarTable::make(std::move(names), {{"v", vs}, {"w", ws}});
}

/// p0..pn with block "p": coefficient alphabet of one generic binary form.
inline VarTable::Ptr p_table(unsigned n) {
    std::vector<std::string> ps;
    for (unsigned k = 0; k <= n; ++k) ps.push_back("p" + std::to_string(k));
    auto copy = ps;
    return VarTable::make(std::move(copy), {{"p", ps}});
}

/// P0..Pn with block "P": abstract generators for rewriting symmetric
/// polynomials.
inline VarTable::Ptr cap_p_table(unsigned n) {
    std::vector<std::string> ps;
    for (unsigned k = 0; k <= n; ++k) ps.push_back("P" + std::to_string(k));
    auto copy = ps;
    return VarTable::make(std::move(copy), {{"P", ps}});
}

/// x01,x11,...,x0n,x1n: homogeneous coordinates of an n-tuple of points of
/// the projective line, with one block "xpair<i>" per point. Blocks must
/// stay disjoint, so there is no aggregate block; sum the pair degrees
/// for a total.
inline VarTable::Ptr x_table(unsigned n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
    for (unsigned i = 1; i <= n; ++i) {
        std::string a = "x0" + std::to_string(i), b = "x1" + std::to_string(i);
        names.push_back(a);
        names.push_back(b);
        blocks.push_back({"xpair" + std::to_string(i), {a, b}});
    }
    return VarTable::make(std::move(names), std::move(blocks));
}

/// x-pairs for n points followed by y-pairs for m points, one block per
/// pair.
inline VarTable::Ptr xy_table(unsigned n, unsigned m) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
    for (unsigned i = 1; i <= n; ++i) {
        std::string a = "x0" + std::to_string(i), b = "x1" + std::to_string(i);
        names.push_back(a);
        names.push_back(b);
        blocks.push_back({"xpair" + std::to_string(i), {a, b}});
    }
    for (unsigned j = 1; j <= m; ++j) {
        std::string a = "y0" + std::to_string(j), b = "y1" + std::to_string(j);
        names.push_back(a);
        names.push_back(b);
        blocks.push_back({"ypair" + std::to_string(j), {a, b}});
    }
    return VarTable::make(std::move(names), std::move(blocks));
}

/// p0, t1..tn: leading coefficient plus roots, for root-product identities.
inline VarTable::Ptr root_table(unsigned n) {
    std::vector<std::string> names{"p0"};
    for (unsigned i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return VarTable::make(std::move(names));
}

/// v0, t1..tn, w0, u1..um: two leading coefficients plus two root lists.
inline VarTable::Ptr pair_root_table(unsigned n, unsigned m) {
    std::vector<std::string> names{"v0"};
    for (unsigned i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    names.push_back("w0");
    for (unsigned j = 1; j <= m; ++j) names.push_back("u" + std::to_string(j));
    return VarTable::make(std::move(names));
}

} // namespace symres
