#pragma once

#include <cstdint>
#include <utility>

#include "treewave/error.hpp"
#include "treewave/function.hpp"
#include "treewave/operators.hpp"
#include "treewave/polynomial.hpp"

namespace treewave {

/// Targets of a two-circle problem: find f with mu_k f = g and mu_l f = h.
struct PompeiuInstance {
    std::int64_t k;
    std::int64_t l;
    TreeFunction g;
    TreeFunction h;

    PompeiuInstance(std::int64_t k_, std::int64_t l_, TreeFunction g_, TreeFunction h_)
        : k(k_), l(l_), g(std::move(g_)), h(std::move(h_)) {
        require(k >= 1 && l >= 1 && k != l, ErrorCode::bad_params,
                "two-circle radii must be distinct positive integers");
        require(g.same_ball(h) && g.domain_radius() == h.domain_radius(),
                ErrorCode::mismatched_functions, "targets must share ball and domain");
    }
};

/**
 * Uniqueness condition for the two-circle problem: the radii are distinct,
 * not both odd, and (when q = 2) not both congruent to 4 mod 6. Under this
 * condition a function is determined by its radius-k and radius-l means.
 */
inline bool pompeiu_condition(std::int64_t k, std::int64_t l, std::int64_t q) {
    require(k >= 1 && l >= 1, ErrorCode::bad_params, "two-circle radii must be >= 1");
    require(q >= 1, ErrorCode::bad_params, "branching parameter q must be >= 1");
    if (k == l) return false;
    if (k % 2 == 1 && l % 2 == 1) return false;
    if (q == 2 && k % 6 == 4 && l % 6 == 4) return false;
    return true;
}

struct TwoCircleCheck {
    bool consistent;
    TreeFunction residual; // mu_l g - mu_k h on the common domain
};

/// Necessary condition on the targets: mu_l g = mu_k h.
inline TwoCircleCheck two_circle_check(const TreeFunction& g, const TreeFunction& h,
                                       std::int64_t k, std::int64_t l) {
    require(g.same_ball(h), ErrorCode::mismatched_functions, "targets must share a ball");
    TreeFunction res = mean_value(g, l) - mean_value(h, k);
    return {res.is_zero(), std::move(res)};
}

/// Bezout pair over the sphere-sum polynomials: p_k Q + p_l R = 1. Rejects
/// radii whose polynomials share a factor (then no solver route exists).
inline BezoutResult pompeiu_bezout(std::int64_t k, std::int64_t l, std::int64_t q) {
    const BezoutResult bez = bezout(geronimus_p(k, q), geronimus_p(l, q));
    require(bez.g == RationalPoly::constant(Rational(1)), ErrorCode::condition_violated,
            "sphere-sum polynomials of radii " + std::to_string(k) + ", " + std::to_string(l) +
                " share a factor (two-circle condition violated)");
    return bez;
}

/**
 * Solves mu_k f = g, mu_l f = h with an explicitly supplied Bezout pair
 * p_k Q + p_l R = 1. Scaling the targets to sphere sums (G = sphere_size(k) g,
 * H = sphere_size(l) h turns mu_k f = g into Sigma_k f = G), the solution is
 *
 *   f = Q(Sigma_1) G + R(Sigma_1) H.
 *
 * The result is verified against both targets before it is returned; any
 * valid Bezout pair produces the same f on the common domain.
 */
inline TreeFunction two_circle_solve_with_pair(const TreeFunction& g, const TreeFunction& h,
                                               std::int64_t k, std::int64_t l,
                                               const RationalPoly& bez_q,
                                               const RationalPoly& bez_r) {
    require(k >= 1 && l >= 1 && k != l, ErrorCode::bad_params,
            "two-circle radii must be distinct positive integers");
    require(g.same_ball(h) && g.domain_radius() == h.domain_radius(),
            ErrorCode::mismatched_functions, "targets must share ball and domain");
    const std::int64_t max_deg = std::max(bez_q.operator_degree(), bez_r.operator_degree());
    const std::int64_t budget = std::max(k, l) + max_deg; // solve + exact re-check
    require(g.domain_radius() >= budget, ErrorCode::insufficient_radius,
            "need target domain radius >= " + std::to_string(budget) + ", have " +
                std::to_string(g.domain_radius()));
    const TwoCircleCheck check = two_circle_check(g, h, k, l);
    require(check.consistent, ErrorCode::incompatible_targets,
            "targets violate the necessary condition (max residual " +
                rational_to_string(check.residual.max_abs()) + ")");

    const TreeBall& ball = *g.ball();
    TreeFunction big_g = Rational(ball.sphere_size(k)) * g;
    TreeFunction big_h = Rational(ball.sphere_size(l)) * h;
    TreeFunction f = apply_poly_in_sigma1(bez_q, big_g) + apply_poly_in_sigma1(bez_r, big_h);

    // exact post-verification on the domains the budget allows
    require(equal_on_common_domain(mean_value(f, k), g) &&
                equal_on_common_domain(mean_value(f, l), h),
            ErrorCode::incompatible_targets, "two-circle solution failed post-verification");
    return f;
}

/// As above with the canonical Bezout pair for (k, l, q).
inline TreeFunction two_circle_solve(const TreeFunction& g, const TreeFunction& h,
                                     std::int64_t k, std::int64_t l) {
    const BezoutResult bez = pompeiu_bezout(k, l, g.q());
    return two_circle_solve_with_pair(g, h, k, l, bez.q, bez.r);
}

} // namespace treewave
