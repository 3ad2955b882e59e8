#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "symres/errors.hpp"
#include "symres/fp.hpp"
#include "symres/projective.hpp"
#include "symres/resultant.hpp"
#include "symres/symprod.hpp"

namespace symres {

/// Outcome of one exhaustive finite-field verification run. A passing run
/// has violations == 0 and split_missed == 0. Surjectivity is only
/// checked on the split locus: points whose forms factor into rational
/// linear forms are the ones whose preimages exist without extending the
/// field.
struct ScanReport {
    std::uint32_t q = 0;
    unsigned n = 0;
    unsigned m = 0; // 0 when the scan has a single degree parameter
    std::uint64_t points_scanned = 0;
    std::uint64_t violations = 0;
    std::uint64_t split_covered = 0;
    std::uint64_t split_missed = 0;
    std::uint64_t fiber_count = 0;
    std::map<std::uint64_t, std::uint64_t> orbit_histogram;
    std::uint64_t elapsed_ms = 0;

    bool passing() const { return violations == 0 && split_missed == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["n"] = n;
        j["m"] = m;
        j["points_scanned"] = points_scanned;
        j["violations"] = violations;
        j["split_covered"] = split_covered;
        j["split_missed"] = split_missed;
        j["fiber_count"] = fiber_count;
        nlohmann::ordered_json h = nlohmann::ordered_json::object();
        for (auto& [size, count] : orbit_histogram) h[std::to_string(size)] = count;
        j["orbit_histogram"] = std::move(h);
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

/// The q+1 points of the projective line over F_q in the fixed order
/// (1:0), (1:1), ..., (1:q-1), (0:1).
inline std::vector<ProjPoint<Fp>> enumerate_p1(std::uint32_t q) {
    if (!is_odd_prime(q)) throw guard_exceeded("q must be an odd prime below 2^31");
    std::vector<ProjPoint<Fp>> pts;
    pts.reserve(q + 1);
    for (std::uint32_t a = 0; a < q; ++a)
        pts.push_back(ProjPoint<Fp>({Fp(1, q), Fp(a, q)}));
    pts.push_back(ProjPoint<Fp>({Fp(0, q), Fp(1, q)}));
    return pts;
}

/// All points of projective dim-space over F_q, normalized with the first
/// nonzero coordinate equal to 1; ordered with the leading-1 points first.
inline std::vector<ProjPoint<Fp>> enumerate_proj(std::uint32_t q, unsigned dim) {
    if (!is_odd_prime(q)) throw guard_exceeded("q must be an odd prime below 2^31");
    std::vector<ProjPoint<Fp>> pts;
    for (unsigned lead = 0; lead <= dim; ++lead) {
        const unsigned free = dim - lead;
        std::vector<std::uint32_t> odo(free, 0);
        for (;;) {
            std::vector<Fp> c;
            c.reserve(dim + 1);
            for (unsigned i = 0; i < lead; ++i) c.push_back(Fp(0, q));
            c.push_back(Fp(1, q));
            for (unsigned i = 0; i < free; ++i) c.push_back(Fp(odo[i], q));
            pts.push_back(ProjPoint<Fp>(std::move(c)));
            unsigned i = 0;
            while (i < free && ++odo[i] == q) odo[i++] = 0;
            if (i == free) break;
        }
    }
    return pts;
}

/// Number of points of projective dim-space over F_q, saturating well
/// above any scan budget so guard arithmetic cannot wrap.
inline std::uint64_t proj_point_count(std::uint32_t q, unsigned dim) {
    constexpr std::uint64_t cap = std::uint64_t(1) << 40;
    std::uint64_t total = 0, power = 1;
    for (unsigned i = 0; i <= dim; ++i) {
        total += power;
        if (total > cap || power > cap / q) return cap;
        power *= q;
    }
    return total;
}

inline BinaryForm<Fp> form_from_point(const ProjPoint<Fp>& p) {
    return BinaryForm<Fp>(p.coords());
}

/// Reduce an integer-coefficient polynomial mod q (denominators must be
/// prime to q).
inline Poly<Fp> reduce_mod(const Poly<Rational>& p, std::uint32_t q) {
    Poly<Fp> out(p.table(), Fp(0, q));
    for (const auto& [m, c] : p.terms()) out.add_term(m, to_fp(c, q));
    return out;
}

namespace detail {

/// Whether the linear form of a projective-line point divides f; the
/// point (x0:x1) carries the factor x0*X - x1*Y, which vanishes at
/// (X:Y) = (x1:x0).
inline bool vanishes_at(const BinaryForm<Fp>& f, const ProjPoint<Fp>& pt) {
    return f.eval_homog(pt[1], pt[0]).is_zero();
}

/// Divide out one copy of the point's linear factor. For (1:t) this is
/// synthetic division at the root t; for (0:1) the factor is Y and the
/// coefficient vector shifts.
inline BinaryForm<Fp> divide_point_factor(const BinaryForm<Fp>& f, const ProjPoint<Fp>& pt) {
    const unsigned n = f.degree();
    if (n == 0) throw dimension_mismatch("cannot divide a degree-0 form");
    if (pt[0].is_zero()) {
        if (!f.coeff(0).is_zero()) throw inexact_division("Y does not divide this form");
        std::vector<Fp> rest(f.coeffs().begin() + 1, f.coeffs().end());
        return BinaryForm<Fp>(std::move(rest));
    }
    Fp t = pt[1] / pt[0];
    std::vector<Fp> g;
    g.reserve(n);
    Fp carry = f.coeff(0);
    g.push_back(carry);
    for (unsigned k = 1; k < n; ++k) {
        carry = f.coeff(k) + t * carry;
        g.push_back(carry);
    }
    if (!(f.coeff(n) + t * carry).is_zero())
        throw inexact_division("linear factor does not divide this form");
    return BinaryForm<Fp>(std::move(g));
}

/// A form splits when its projective roots, counted with multiplicity,
/// account for its full degree.
inline bool splits_completely(BinaryForm<Fp> f, const std::vector<ProjPoint<Fp>>& p1) {
    if (f.is_zero()) return false;
    unsigned found = 0;
    const unsigned n = f.degree();
    for (const auto& pt : p1) {
        while (f.degree() > 0 && vanishes_at(f, pt)) {
            f = divide_point_factor(f, pt);
            ++found;
        }
        if (found == n) break;
    }
    return found == n;
}

inline void require_scan_preconditions(std::uint32_t q, unsigned deg_bound) {
    if (!is_odd_prime(q)) throw guard_exceeded("q must be an odd prime below 2^31");
    if (q <= deg_bound)
        throw guard_exceeded("scan requires q > the degrees involved");
}

constexpr std::uint64_t kScanBudget = 10'000'000;

inline std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > kScanBudget) return kScanBudget + 1; // saturate: over budget anyway
        r *= base;
    }
    return r;
}

} // namespace detail

/// Exhaustive check over all pairs of projective coefficient points:
/// the resultant vanishes exactly when the homogeneous gcd is
/// nonconstant. gcd degree is stable under field extension, so this
/// certifies "common root in the algebraic closure".
inline ScanReport scan_resultant_equiv(std::uint32_t q, unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw guard_exceeded("scan needs n, m >= 1");
    detail::require_scan_preconditions(q, std::max(n, m));
    const std::uint64_t cn = proj_point_count(q, n), cm = proj_point_count(q, m);
    if (cn > detail::kScanBudget || cm > detail::kScanBudget ||
        cn * cm > detail::kScanBudget)
        throw guard_exceeded("scan budget exceeded");

    auto start = std::chrono::steady_clock::now();
    ScanReport rep;
    rep.q = q;
    rep.n = n;
    rep.m = m;

    auto pvs = enumerate_proj(q, n);
    auto pws = enumerate_proj(q, m);
    for (const auto& pv : pvs) {
        BinaryForm<Fp> f = form_from_point(pv);
        for (const auto& pw : pws) {
            BinaryForm<Fp> g = form_from_point(pw);
            ++rep.points_scanned;
            bool res_zero = resultant(f, g).is_zero();
            bool common = gcd_binary_forms(f, g).degree() >= 1;
            if (res_zero != common) ++rep.violations;
        }
    }
    rep.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return rep;
}

namespace detail {

/// Shared fiber/orbit bookkeeping for the two quotient scans. Tuples are
/// vectors of indices into the canonical point list, so set operations
/// are cheap and deterministic.
struct FiberAnalysis {
    using TupleKey = std::vector<std::uint16_t>;
    std::map<std::vector<std::uint32_t>, std::set<TupleKey>> fibers;

    static std::vector<std::uint32_t> value_key(std::span<const Fp> coords) {
        std::vector<std::uint32_t> k;
        k.reserve(coords.size());
        for (const auto& c : coords) k.push_back(c.value());
        return k;
    }
};

} // namespace detail

/// Exhaustive verification that the product of Viete maps carries the
/// common-point locus onto the resultant locus with symmetric-group
/// orbits as fibers: forward inclusion for every tuple, surjectivity onto
/// the split locus, and single-orbit fibers with orbit sizes dividing
/// n! * m!.
inline ScanReport scan_quotient(std::uint32_t q, unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw guard_exceeded("scan needs n, m >= 1");
    detail::require_scan_preconditions(q, std::max(n, m));
    const std::uint64_t total = detail::checked_pow(q + 1, n + m);
    if (total > detail::kScanBudget) throw guard_exceeded("scan budget exceeded");

    auto start = std::chrono::steady_clock::now();
    ScanReport rep;
    rep.q = q;
    rep.n = n;
    rep.m = m;

    auto p1 = enumerate_p1(q);
    const std::size_t np = p1.size();
    auto rsym = reduce_mod(resultant_symbolic(n, m), q);

    detail::FiberAnalysis fa;
    std::vector<std::uint16_t> odo(n + m, 0);
    for (;;) {
        ++rep.points_scanned;
        // on the common-point locus iff some x index equals some y index
        bool on_locus = false;
        for (unsigned i = 0; i < n && !on_locus; ++i)
            for (unsigned j = 0; j < m; ++j)
                if (odo[i] == odo[n + j]) {
                    on_locus = true;
                    break;
                }
        if (on_locus) {
            std::vector<ProjPoint<Fp>> xs, ys;
            for (unsigned i = 0; i < n; ++i) xs.push_back(p1[odo[i]]);
            for (unsigned j = 0; j < m; ++j) ys.push_back(p1[odo[n + j]]);
            auto pv = viete(PointTuple<Fp>(std::move(xs)));
            auto pw = viete(PointTuple<Fp>(std::move(ys)));
            std::vector<Fp> values = pv.coords();
            values.insert(values.end(), pw.coords().begin(), pw.coords().end());
            if (!rsym.eval_at(values).is_zero()) ++rep.violations;
            auto key = detail::FiberAnalysis::value_key(values);
            fa.fibers[key].insert(odo);
        }
        std::size_t i = 0;
        while (i < odo.size() && ++odo[i] == np) odo[i++] = 0;
        if (i == odo.size()) break;
    }

    // fibers must be single orbits of the product action
    auto perms_n = Permutation::all(n);
    auto perms_m = Permutation::all(m);
    std::uint64_t group_order =
        static_cast<std::uint64_t>(perms_n.size()) * perms_m.size();
    for (const auto& [key, fiber] : fa.fibers) {
        const auto& rep_tuple = *fiber.begin();
        std::set<detail::FiberAnalysis::TupleKey> orbit;
        for (const auto& sx : perms_n)
            for (const auto& sy : perms_m) {
                detail::FiberAnalysis::TupleKey t(n + m);
                for (unsigned i = 0; i < n; ++i) t[sx(i)] = rep_tuple[i];
                for (unsigned j = 0; j < m; ++j) t[n + sy(j)] = rep_tuple[n + j];
                orbit.insert(std::move(t));
            }
        if (orbit != fiber) ++rep.violations;
        if (group_order % orbit.size() != 0) ++rep.violations;
        ++rep.orbit_histogram[orbit.size()];
    }
    rep.fiber_count = fa.fibers.size();

    // split-locus surjectivity
    auto pvs = enumerate_proj(q, n);
    auto pws = enumerate_proj(q, m);
    std::vector<bool> pv_splits(pvs.size()), pw_splits(pws.size());
    for (std::size_t i = 0; i < pvs.size(); ++i)
        pv_splits[i] = detail::splits_completely(form_from_point(pvs[i]), p1);
    for (std::size_t j = 0; j < pws.size(); ++j)
        pw_splits[j] = detail::splits_completely(form_from_point(pws[j]), p1);
    for (std::size_t i = 0; i < pvs.size(); ++i)
        for (std::size_t j = 0; j < pws.size(); ++j) {
            std::vector<Fp> values = pvs[i].coords();
            values.insert(values.end(), pws[j].coords().begin(), pws[j].coords().end());
            if (!rsym.eval_at(values).is_zero()) continue;
            if (!pv_splits[i] || !pw_splits[j]) continue;
            auto key = detail::FiberAnalysis::value_key(values);
            if (fa.fibers.count(key)) ++rep.split_covered;
            else ++rep.split_missed;
        }

    rep.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return rep;
}

/// Discriminant counterpart of scan_quotient: the repeated-point locus
/// maps onto the discriminant locus, with single symmetric-group orbits
/// as fibers and split surjectivity.
inline ScanReport scan_disc_quotient(std::uint32_t q, unsigned n) {
    if (n < 2) throw guard_exceeded("discriminant scan needs n >= 2");
    detail::require_scan_preconditions(q, n);
    const std::uint64_t total = detail::checked_pow(q + 1, n);
    if (total > detail::kScanBudget) throw guard_exceeded("scan budget exceeded");

    auto start = std::chrono::steady_clock::now();
    ScanReport rep;
    rep.q = q;
    rep.n = n;
    rep.m = 0;

    auto p1 = enumerate_p1(q);
    const std::size_t np = p1.size();
    auto dsym = reduce_mod(discriminant_symbolic(n), q);

    detail::FiberAnalysis fa;
    std::vector<std::uint16_t> odo(n, 0);
    for (;;) {
        ++rep.points_scanned;
        bool on_locus = false;
        for (unsigned i = 0; i < n && !on_locus; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (odo[i] == odo[j]) {
                    on_locus = true;
                    break;
                }
        if (on_locus) {
            std::vector<ProjPoint<Fp>> xs;
            for (unsigned i = 0; i < n; ++i) xs.push_back(p1[odo[i]]);
            auto pp = viete(PointTuple<Fp>(std::move(xs)));
            if (!dsym.eval_at(pp.coords()).is_zero()) ++rep.violations;
            auto key = detail::FiberAnalysis::value_key(pp.coords());
            fa.fibers[key].insert(odo);
        }
        std::size_t i = 0;
        while (i < odo.size() && ++odo[i] == np) odo[i++] = 0;
        if (i == odo.size()) break;
    }

    auto perms = Permutation::all(n);
    for (const auto& [key, fiber] : fa.fibers) {
        const auto& rep_tuple = *fiber.begin();
        std::set<detail::FiberAnalysis::TupleKey> orbit;
        for (const auto& s : perms) {
            detail::FiberAnalysis::TupleKey t(n);
            for (unsigned i = 0; i < n; ++i) t[s(i)] = rep_tuple[i];
            orbit.insert(std::move(t));
        }
        if (orbit != fiber) ++rep.violations;
        if (perms.size() % orbit.size() != 0) ++rep.violations;
        ++rep.orbit_histogram[orbit.size()];
    }
    rep.fiber_count = fa.fibers.size();

    auto pps = enumerate_proj(q, n);
    for (const auto& pp : pps) {
        if (!dsym.eval_at(pp.coords()).is_zero()) continue;
        if (!detail::splits_completely(form_from_point(pp), p1)) continue;
        auto key = detail::FiberAnalysis::value_key(pp.coords());
        if (fa.fibers.count(key)) ++rep.split_covered;
        else ++rep.split_missed;
    }

    rep.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return rep;
}

} // namespace symres
