#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "treewave/error.hpp"
#include "treewave/function.hpp"
#include "treewave/operators.hpp"
#include "treewave/polynomial.hpp"
#include "treewave/wave.hpp"

namespace treewave {

/// Snapshots of (purportedly) one wave at 2 or 3 sorted times starting at 0.
struct SnapshotProblem {
    std::vector<std::int64_t> times;
    std::vector<TreeFunction> snapshots;

    SnapshotProblem(std::vector<std::int64_t> times_, std::vector<TreeFunction> snapshots_)
        : times(std::move(times_)), snapshots(std::move(snapshots_)) {
        require(times.size() == 2 || times.size() == 3, ErrorCode::bad_params,
                "snapshot problems carry two or three snapshots");
        require(times.size() == snapshots.size(), ErrorCode::bad_params,
                "times and snapshots must align");
        require(times[0] == 0, ErrorCode::bad_params, "first snapshot time must be 0");
        for (std::size_t i = 1; i < times.size(); ++i)
            require(times[i] > times[i - 1], ErrorCode::bad_params,
                    "snapshot times must be strictly increasing");
        for (std::size_t i = 1; i < snapshots.size(); ++i) {
            require(snapshots[0].same_ball(snapshots[i]), ErrorCode::mismatched_functions,
                    "snapshots must live on one ball");
            require(snapshots[0].domain_radius() == snapshots[i].domain_radius(),
                    ErrorCode::mismatched_functions, "snapshots must share a domain radius");
        }
    }
};

/**
 * Cauchy data of a wave with f_0 = g and f_k = h, k >= 2. The missing f_1 is
 * any solution of U_{k-1}(mu_1) f_1 = h - U_{k-2}(mu_1) g, produced by the
 * constructive inverse; the free-value policy picks one of the infinitely
 * many solutions. Every choice yields the same snapshots at multiples of k.
 */
inline CauchyData two_snapshot_solve(const TreeFunction& g, const TreeFunction& h,
                                     std::int64_t k,
                                     FreePolicy policy = FreePolicy::equal_distribution) {
    require(k >= 2, ErrorCode::bad_params, "two-snapshot time must be >= 2");
    require(g.same_ball(h) && g.domain_radius() == h.domain_radius(),
            ErrorCode::mismatched_functions, "snapshots must share ball and domain");
    const std::int64_t m = g.domain_radius();
    const std::int64_t need = (m - (k - 2)) + (k - 1); // solve_surjective's output radius
    require(g.ball()->radius() >= need, ErrorCode::insufficient_radius,
            "need ambient radius >= " + std::to_string(need) + ", have " +
                std::to_string(g.ball()->radius()));
    TreeFunction rhs = h + apply_cheb_U(k - 2, g);
    const OperatorExpr u_top = mu1_poly_to_mu_combination(cheb_U(k - 1), g.q());
    TreeFunction f1 = solve_surjective(u_top, rhs, policy);
    return CauchyData(g, f1.restricted(m));
}

struct CompatibilityResult {
    bool compatible;
    TreeFunction residual; // all-zero exactly when compatible
};

/**
 * The consistency identity three snapshots of one wave must satisfy
 * (f at time 0, g at time k, h at time l, 0 < k < l):
 *
 *   U_{l-1}(mu_1)(g + U_{k-2}(mu_1) f) = U_{k-1}(mu_1)(h + U_{l-2}(mu_1) f).
 *
 * Returns the verdict together with the two-sided difference on the largest
 * domain both sides cover.
 */
inline CompatibilityResult compatibility_check(const TreeFunction& f, const TreeFunction& g,
                                               const TreeFunction& h, std::int64_t k,
                                               std::int64_t l) {
    require(0 < k && k < l, ErrorCode::bad_params, "need 0 < k < l");
    TreeFunction lhs = apply_cheb_U(l - 1, g + apply_cheb_U(k - 2, f));
    TreeFunction rhs = apply_cheb_U(k - 1, h + apply_cheb_U(l - 2, f));
    TreeFunction res = lhs - rhs;
    return {res.is_zero(), std::move(res)};
}

/**
 * The sharper condition that is also sufficient when gcd(k,l) = d > 1:
 * with W = U_{k-1}/U_{d-1} and V = U_{l-1}/U_{d-1},
 *
 *   V(mu_1)(g + U_{k-2}(mu_1) f) = W(mu_1)(h + U_{l-2}(mu_1) f).
 *
 * Coincides with compatibility_check when d = 1.
 */
inline CompatibilityResult strong_compatibility_check(const TreeFunction& f,
                                                      const TreeFunction& g,
                                                      const TreeFunction& h, std::int64_t k,
                                                      std::int64_t l) {
    require(0 < k && k < l, ErrorCode::bad_params, "need 0 < k < l");
    const std::int64_t d = std::gcd(k, l);
    const RationalPoly w = poly_div_exact(cheb_U(k - 1), cheb_U(d - 1));
    const RationalPoly v = poly_div_exact(cheb_U(l - 1), cheb_U(d - 1));
    TreeFunction lhs = apply_mu1_poly(v, g + apply_cheb_U(k - 2, f));
    TreeFunction rhs = apply_mu1_poly(w, h + apply_cheb_U(l - 2, f));
    TreeFunction res = lhs - rhs;
    return {res.is_zero(), std::move(res)};
}

/**
 * Cauchy data of a wave with f_0 = f, f_k = g, f_l = h (0 < k < l), when one
 * exists. Writing a = g + U_{k-2}(mu_1) f and b = h + U_{l-2}(mu_1) f, the
 * Bezout pair W Q + V R = 1 gives the intermediate f* = Q(mu_1) a + R(mu_1) b
 * with W(mu_1) f* = a and V(mu_1) f* = b; then f_1 is any preimage of f*
 * under U_{d-1}(mu_1). For coprime k, l the wave is unique and the policy is
 * never consulted. Inputs failing the strong compatibility condition are
 * rejected.
 */
inline CauchyData three_snapshot_solve(const TreeFunction& f, const TreeFunction& g,
                                       const TreeFunction& h, std::int64_t k, std::int64_t l,
                                       FreePolicy policy = FreePolicy::equal_distribution) {
    require(0 < k && k < l, ErrorCode::bad_params, "need 0 < k < l");
    require(f.same_ball(g) && f.same_ball(h), ErrorCode::mismatched_functions,
            "snapshots must live on one ball");
    require(f.domain_radius() == g.domain_radius() && f.domain_radius() == h.domain_radius(),
            ErrorCode::mismatched_functions, "snapshots must share a domain radius");

    const CompatibilityResult strong = strong_compatibility_check(f, g, h, k, l);
    require(strong.compatible, ErrorCode::incompatible_snapshots,
            "snapshot triple fails the compatibility condition (max residual " +
                rational_to_string(strong.residual.max_abs()) + ")");

    const std::int64_t d = std::gcd(k, l);
    const RationalPoly w = poly_div_exact(cheb_U(k - 1), cheb_U(d - 1));
    const RationalPoly v = poly_div_exact(cheb_U(l - 1), cheb_U(d - 1));
    const BezoutResult bez = bezout(w, v);
    require(bez.g == RationalPoly::constant(Rational(1)), ErrorCode::condition_violated,
            "cofactors of the snapshot times are not coprime");

    TreeFunction a = g + apply_cheb_U(k - 2, f);
    TreeFunction b = h + apply_cheb_U(l - 2, f);
    TreeFunction fstar = apply_mu1_poly(bez.q, a) + apply_mu1_poly(bez.r, b);

    TreeFunction f1 = d == 1
                          ? std::move(fstar)
                          : solve_surjective(mu1_poly_to_mu_combination(cheb_U(d - 1), f.q()),
                                             fstar, policy);
    const std::int64_t m = std::min(f.domain_radius(), f1.domain_radius());
    return CauchyData(f.restricted(m), f1.restricted(m));
}

/**
 * The snapshot at time d = gcd(k, l) determined by snapshots at 0, k, l:
 * pick integers r, s with rk + sl = d, reach f_{rk} and f_{sl} through the
 * multiple-time formula, then combine.
 */
inline TreeFunction recover_gcd_snapshot(const TreeFunction& f0, const TreeFunction& fk,
                                         const TreeFunction& fl, std::int64_t k,
                                         std::int64_t l) {
    require(0 < k && k < l, ErrorCode::bad_params, "need 0 < k < l");
    // extended Euclid on (k, l): r*k + s*l = d with small |r|, |s|
    std::int64_t old_r = k, r = l;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_s - quot * s; old_s = s; s = tmp;
        tmp = old_t - quot * t; old_t = t; t = tmp;
    }
    const std::int64_t rr = old_s, ss = old_t; // rr*k + ss*l = gcd(k, l)
    TreeFunction f_rk = snapshot_at_multiple(f0, fk, rr, k);
    TreeFunction f_sl = snapshot_at_multiple(f0, fl, ss, l);
    return combo_snapshot(f0, f_rk, f_sl, rr, k, ss, l);
}

enum class TripleClass { incompatible, compatible_not_snapshot, snapshot };

inline const char* triple_class_name(TripleClass c) {
    switch (c) {
    case TripleClass::incompatible: return "incompatible";
    case TripleClass::compatible_not_snapshot: return "compatible-not-snapshot";
    case TripleClass::snapshot: return "snapshot";
    }
    return "unknown";
}

/// Where a triple of functions sits relative to the wave equation: fails the
/// plain condition, passes it but not the strong one (possible only when
/// gcd(k,l) > 1), or is realized by an actual wave.
inline TripleClass classify_triple(const TreeFunction& f, const TreeFunction& g,
                                   const TreeFunction& h, std::int64_t k, std::int64_t l) {
    if (!compatibility_check(f, g, h, k, l).compatible) return TripleClass::incompatible;
    if (!strong_compatibility_check(f, g, h, k, l).compatible)
        return TripleClass::compatible_not_snapshot;
    return TripleClass::snapshot;
}

} // namespace treewave
